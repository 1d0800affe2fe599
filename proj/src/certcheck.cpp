#include "pis/certcheck.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <vector>

#include <nlohmann/json.hpp>

// Everything in this file is deliberately local: the checker accepts or
// rejects certificates using only the graph file, the certificate file and
// the closed-form genus formulas.

namespace pis {

namespace {

using Json = nlohmann::json;

struct Fail {
    std::string message;
};

struct CheckGraph {
    int n = 0;
    std::vector<std::set<int>> adj;

    bool has_edge(int a, int b) const {
        return a >= 0 && a < n && adj[a].count(b) > 0;
    }
};

CheckGraph parse_graph(const std::string& text) {
    Json j = Json::parse(text);
    CheckGraph g;
    g.n = int(j.at("vertices").size());
    g.adj.resize(g.n);
    for (const auto& e : j.at("edges")) {
        int a = e.at(0).get<int>();
        int b = e.at(1).get<int>();
        if (a < 0 || b < 0 || a >= g.n || b >= g.n || a == b)
            throw Fail{"graph file has an invalid edge"};
        g.adj[a].insert(b);
        g.adj[b].insert(a);
    }
    return g;
}

// ---- small self-contained graph routines on explicit edge lists ----

std::vector<std::vector<int>> components_of(const CheckGraph& g,
                                            const std::vector<int>& verts) {
    std::set<int> inset(verts.begin(), verts.end());
    std::set<int> left(verts.begin(), verts.end());
    std::vector<std::vector<int>> comps;
    while (!left.empty()) {
        int s = *left.begin();
        std::vector<int> comp;
        std::deque<int> q{s};
        left.erase(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            comp.push_back(u);
            for (int v : g.adj[u])
                if (inset.count(v) && left.count(v)) {
                    left.erase(v);
                    q.push_back(v);
                }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

int induced_edge_count(const CheckGraph& g, const std::vector<int>& verts) {
    int m = 0;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            m += g.has_edge(verts[i], verts[j]);
    return m;
}

int induced_girth(const CheckGraph& g, const std::vector<int>& verts) {
    std::set<int> inset(verts.begin(), verts.end());
    const int inf = 1 << 29;
    int best = inf;
    for (int s : verts) {
        std::map<int, int> dist, parent;
        dist[s] = 0;
        parent[s] = -1;
        std::deque<int> q{s};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int v : g.adj[u]) {
                if (!inset.count(v)) continue;
                if (!dist.count(v)) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push_back(v);
                } else if (v != parent[u] && dist[v] >= dist[u]) {
                    best = std::min(best, dist[u] + dist[v] + 1);
                }
            }
        }
    }
    return best;
}

bool induced_two_connected(const CheckGraph& g, const std::vector<int>& verts) {
    if (verts.size() < 3) return false;
    if (components_of(g, verts).size() != 1) return false;
    for (int cut : verts) {
        std::vector<int> rest;
        for (int v : verts)
            if (v != cut) rest.push_back(v);
        if (components_of(g, rest).size() != 1) return false;
    }
    return true;
}

// ---- certificate pieces ----

int formula_genus(const std::string& name, const std::vector<std::pair<int, int>>& edges,
                  int nverts) {
    // the checker derives the model genus itself; only complete and
    // complete-bipartite models are accepted
    auto ceil_div = [](long long a, long long b) { return int((a + b - 1) / b); };
    if (name.size() < 2 || name[0] != 'K') throw Fail{"unknown pattern name " + name};
    auto comma = name.find(',');
    if (comma == std::string::npos) {
        int n = std::stoi(name.substr(1));
        if (n != nverts) throw Fail{"pattern vertex count mismatch"};
        // must be the complete graph
        std::set<std::pair<int, int>> want;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) want.insert({a, b});
        std::set<std::pair<int, int>> got;
        for (auto [a, b] : edges) got.insert({std::min(a, b), std::max(a, b)});
        if (got != want) throw Fail{"pattern edges do not form " + name};
        return n <= 4 ? 0 : ceil_div(std::int64_t(n - 3) * (n - 4), 12);
    }
    int m = std::stoi(name.substr(1, comma - 1));
    int n = std::stoi(name.substr(comma + 1));
    if (m + n != nverts) throw Fail{"pattern vertex count mismatch"};
    std::set<std::pair<int, int>> want;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < n; ++b) want.insert({a, m + b});
    std::set<std::pair<int, int>> got;
    for (auto [a, b] : edges) got.insert({std::min(a, b), std::max(a, b)});
    if (got != want) throw Fail{"pattern edges do not form " + name};
    if (m < 2 || n < 2) return 0;
    return ceil_div(std::int64_t(m - 2) * (n - 2), 4);
}

struct PieceInfo {
    int bound = 0;
    std::set<std::pair<int, int>> host_edges; // the subgraph the piece certifies
};

PieceInfo check_subdivision(const CheckGraph& g, const Json& j) {
    const std::string name = j.at("pattern").get<std::string>();
    std::vector<std::pair<int, int>> pedges;
    for (const auto& e : j.at("pattern_edges"))
        pedges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    std::vector<int> branch = j.at("branch_map").get<std::vector<int>>();
    const int pn = int(branch.size());
    const int claimed = j.at("pattern_genus").get<int>();
    const int derived = formula_genus(name, pedges, pn);
    if (derived != claimed)
        throw Fail{"pattern genus claim " + std::to_string(claimed) + " != derived " +
                   std::to_string(derived)};

    std::set<int> branch_set(branch.begin(), branch.end());
    if (int(branch_set.size()) != pn) throw Fail{"branch map is not injective"};
    for (int h : branch)
        if (h < 0 || h >= g.n) throw Fail{"branch vertex out of range"};

    auto paths = j.at("paths").get<std::vector<std::vector<int>>>();
    if (paths.size() != pedges.size()) throw Fail{"one path per pattern edge required"};

    PieceInfo info;
    info.bound = derived;
    std::set<int> interior_seen;
    for (std::size_t e = 0; e < pedges.size(); ++e) {
        const auto& path = paths[e];
        auto [a, b] = pedges[e];
        if (path.size() < 2) throw Fail{"path too short"};
        bool forward = path.front() == branch[a] && path.back() == branch[b];
        bool backward = path.front() == branch[b] && path.back() == branch[a];
        if (!forward && !backward) throw Fail{"path endpoints do not match its edge"};
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            if (!g.has_edge(path[i], path[i + 1]))
                throw Fail{"path uses a non-edge " + std::to_string(path[i]) + "-" +
                           std::to_string(path[i + 1])};
            int x = std::min(path[i], path[i + 1]);
            int y = std::max(path[i], path[i + 1]);
            info.host_edges.insert({x, y});
        }
        for (std::size_t i = 1; i + 1 < path.size(); ++i) {
            int v = path[i];
            if (branch_set.count(v)) throw Fail{"path interior touches a branch vertex"};
            if (interior_seen.count(v)) throw Fail{"two paths share an interior vertex"};
            interior_seen.insert(v);
        }
    }
    return info;
}

PieceInfo check_euler(const CheckGraph& g, const Json& j) {
    std::vector<int> verts = j.at("vertices").get<std::vector<int>>();
    for (int v : verts)
        if (v < 0 || v >= g.n) throw Fail{"euler subgraph vertex out of range"};
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (!induced_two_connected(g, verts))
        throw Fail{"euler certificate subgraph is not 2-connected"};
    const int V = int(verts.size());
    const int E = induced_edge_count(g, verts);
    const int y = induced_girth(g, verts);
    if (y >= (1 << 29)) throw Fail{"euler certificate subgraph has no cycle"};
    const int claimed_girth = j.at("girth").get<int>();
    if (claimed_girth != y)
        throw Fail{"girth claim " + std::to_string(claimed_girth) + " != recomputed " +
                   std::to_string(y)};
    long long num = std::int64_t(E) * (y - 2) - std::int64_t(y) * (V - 2);
    int bound = num <= 0 ? 0 : int((num + 2ll * y - 1) / (2ll * y));
    const int claimed = j.at("bound").get<int>();
    if (claimed > bound)
        throw Fail{"euler bound claim " + std::to_string(claimed) + " exceeds recomputed " +
                   std::to_string(bound)};
    PieceInfo info;
    info.bound = claimed;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j2 = i + 1; j2 < verts.size(); ++j2)
            if (g.has_edge(verts[i], verts[j2]))
                info.host_edges.insert({verts[i], verts[j2]});
    return info;
}

// blocks of the union subgraph: two pieces may not certify inside the same
// block, otherwise their genera would not be additive
void check_block_disjoint(const std::vector<PieceInfo>& pieces) {
    std::set<std::pair<int, int>> all;
    for (const auto& p : pieces) all.insert(p.host_edges.begin(), p.host_edges.end());
    // Hopcroft-Tarjan on the union subgraph
    std::map<int, std::vector<int>> adj;
    for (auto [a, b] : all) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::map<int, int> disc, low;
    std::vector<std::pair<int, int>> stack;
    std::vector<std::set<std::pair<int, int>>> out_blocks;
    int timer = 0;

    struct Rec {
        std::map<int, std::vector<int>>& adj;
        std::map<int, int>& disc;
        std::map<int, int>& low;
        std::vector<std::pair<int, int>>& stack;
        std::vector<std::set<std::pair<int, int>>>& out;
        int& timer;

        void dfs(int u, int parent) {
            disc[u] = low[u] = timer++;
            for (int v : adj[u]) {
                if (!disc.count(v)) {
                    stack.push_back({u, v});
                    dfs(v, u);
                    low[u] = std::min(low[u], low[v]);
                    if (low[v] >= disc[u]) {
                        std::set<std::pair<int, int>> blk;
                        while (true) {
                            auto e = stack.back();
                            stack.pop_back();
                            blk.insert({std::min(e.first, e.second),
                                        std::max(e.first, e.second)});
                            if (e == std::make_pair(u, v)) break;
                        }
                        out.push_back(std::move(blk));
                    }
                } else if (v != parent && disc[v] < disc[u]) {
                    stack.push_back({u, v});
                    low[u] = std::min(low[u], disc[v]);
                }
            }
        }
    } rec{adj, disc, low, stack, out_blocks, timer};

    for (const auto& kv : adj)
        if (!disc.count(kv.first)) rec.dfs(kv.first, -1);

    std::set<int> used_blocks;
    for (const auto& piece : pieces) {
        std::set<int> hit;
        for (std::size_t b = 0; b < out_blocks.size(); ++b)
            for (const auto& e : piece.host_edges)
                if (out_blocks[b].count(e)) {
                    hit.insert(int(b));
                    break;
                }
        if (hit.size() != 1)
            throw Fail{"a block-sum piece spans " + std::to_string(hit.size()) +
                       " blocks of the union subgraph"};
        int b = *hit.begin();
        if (used_blocks.count(b))
            throw Fail{"two block-sum pieces certify the same block"};
        used_blocks.insert(b);
    }
}

int check_lower(const CheckGraph& g, const Json& j) {
    const std::string type = j.at("type").get<std::string>();
    const int bound = j.at("bound").get<int>();
    if (type == "trivial") {
        if (bound != 0) throw Fail{"trivial certificate with nonzero bound"};
        return 0;
    }
    if (type == "euler") {
        PieceInfo p = check_euler(g, j);
        return p.bound;
    }
    if (type == "subdivision") {
        PieceInfo p = check_subdivision(g, j.at("witness"));
        if (bound != p.bound) throw Fail{"subdivision bound mismatch"};
        return p.bound;
    }
    if (type == "block_sum") {
        std::vector<PieceInfo> pieces;
        int total = 0;
        for (const auto& part : j.at("parts")) {
            const std::string pt = part.at("type").get<std::string>();
            PieceInfo p;
            if (pt == "euler") p = check_euler(g, part);
            else if (pt == "subdivision") p = check_subdivision(g, part.at("witness"));
            else throw Fail{"block_sum parts must be euler or subdivision"};
            total += p.bound;
            pieces.push_back(std::move(p));
        }
        check_block_disjoint(pieces);
        if (bound != total) throw Fail{"block_sum bound is not the sum of its parts"};
        return total;
    }
    throw Fail{"unknown lower certificate type " + type};
}

int check_upper(const CheckGraph& g, const Json& j) {
    auto rot = j.at("rotation").get<std::vector<std::vector<int>>>();
    if (int(rot.size()) != g.n) throw Fail{"rotation has wrong vertex count"};
    for (int v = 0; v < g.n; ++v) {
        std::set<int> s(rot[v].begin(), rot[v].end());
        if (s != g.adj[v] || rot[v].size() != g.adj[v].size())
            throw Fail{"rotation at vertex " + std::to_string(v) +
                       " is not a permutation of its neighbours"};
    }
    // trace faces per component, with a plain directed-edge walk
    std::map<std::pair<int, int>, int> next_pos;
    for (int v = 0; v < g.n; ++v)
        for (int i = 0; i < int(rot[v].size()); ++i) next_pos[{v, rot[v][i]}] = i;
    std::set<std::pair<int, int>> seen;
    std::map<int, int> faces_per_comp;
    std::vector<int> all;
    for (int v = 0; v < g.n; ++v) all.push_back(v);
    auto comps = components_of(g, all);
    std::map<int, int> comp_of;
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (int v : comps[c]) comp_of[v] = int(c);

    for (int v = 0; v < g.n; ++v)
        for (int u : rot[v]) {
            if (seen.count({v, u})) continue;
            ++faces_per_comp[comp_of[v]];
            int a = v, b = u;
            while (!seen.count({a, b})) {
                seen.insert({a, b});
                int i = next_pos[{b, a}];
                int w = rot[b][(i + 1) % rot[b].size()];
                a = b;
                b = w;
            }
        }

    int total_genus = 0;
    int total_faces = 0;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        int V = int(comps[c].size());
        int E = induced_edge_count(g, comps[c]);
        int F = E == 0 ? 1 : faces_per_comp[int(c)];
        total_faces += F;
        int euler = 2 - V + E - F;
        if (euler < 0 || euler % 2 != 0)
            throw Fail{"face trace gives an impossible Euler characteristic"};
        total_genus += euler / 2;
    }
    if (j.at("faces").get<int>() != total_faces)
        throw Fail{"face count claim " + std::to_string(j.at("faces").get<int>()) +
                   " != traced " + std::to_string(total_faces)};
    if (j.at("genus").get<int>() != total_genus)
        throw Fail{"genus claim != traced genus"};
    return total_genus;
}

} // namespace

CertificateCheck verify_certificate(const std::string& graph_json,
                                    const std::string& certificate_json) {
    CertificateCheck out;
    try {
        CheckGraph g = parse_graph(graph_json);
        Json cert = Json::parse(certificate_json);
        const int claimed_lower = cert.at("lower").get<int>();
        int lower = check_lower(g, cert.at("lower_certificate"));
        if (lower != claimed_lower)
            throw Fail{"lower claim " + std::to_string(claimed_lower) +
                       " != certified " + std::to_string(lower)};
        out.verified_lower = lower;
        if (!cert.at("upper").is_null()) {
            const int claimed_upper = cert.at("upper").get<int>();
            if (cert.at("upper_certificate").is_null())
                throw Fail{"upper bound claimed without a certificate"};
            int upper = check_upper(g, cert.at("upper_certificate"));
            if (upper != claimed_upper)
                throw Fail{"upper claim != certified genus"};
            if (upper < lower) throw Fail{"certified upper bound below lower bound"};
            out.verified_upper = upper;
        }
        out.ok = true;
        out.message = "certificate verifies: lower " + std::to_string(out.verified_lower) +
                      (out.verified_upper
                           ? ", upper " + std::to_string(*out.verified_upper)
                           : ", upper unknown");
    } catch (const Fail& f) {
        out.ok = false;
        out.message = f.message;
    } catch (const std::exception& e) {
        out.ok = false;
        out.message = std::string("malformed input: ") + e.what();
    }
    return out;
}

} // namespace pis
