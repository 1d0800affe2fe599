#include "pis/subdivision.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "pis/genus.hpp"

namespace pis {

std::vector<int> Pattern::degrees() const {
    std::vector<int> d(n, 0);
    for (auto [a, b] : edges) {
        ++d[a];
        ++d[b];
    }
    return d;
}

Pattern Pattern::clique(int n) {
    Pattern p;
    p.name = "K" + std::to_string(n);
    p.n = n;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) p.edges.emplace_back(a, b);
    p.genus = kn_genus(n);
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    p.interchange_classes = {all};
    return p;
}

Pattern Pattern::biclique(int m, int n) {
    Pattern p;
    p.name = "K" + std::to_string(m) + "," + std::to_string(n);
    p.n = m + n;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < n; ++b) p.edges.emplace_back(a, m + b);
    p.genus = kmn_genus(m, n);
    std::vector<int> left(m), right(n);
    for (int i = 0; i < m; ++i) left[i] = i;
    for (int i = 0; i < n; ++i) right[i] = m + i;
    p.interchange_classes = {left, right};
    return p;
}

namespace {

Pattern combine(const Pattern& a, const Pattern& b, bool share_branch) {
    Pattern p;
    p.name = a.name + (share_branch ? "^" : "+") + b.name;
    const int off = share_branch ? a.n - 1 : a.n;
    auto mb = [&](int v) {
        if (!share_branch) return v + a.n;
        return v == 0 ? 0 : v + off;
    };
    p.n = a.n + b.n - (share_branch ? 1 : 0);
    p.edges = a.edges;
    for (auto [x, y] : b.edges) {
        int u = mb(x), v = mb(y);
        p.edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    p.genus = a.genus + b.genus;
    for (const auto& c : a.interchange_classes) {
        std::vector<int> cc;
        for (int v : c)
            if (!share_branch || v != 0) cc.push_back(v);
        if (cc.size() > 1) p.interchange_classes.push_back(cc);
    }
    for (const auto& c : b.interchange_classes) {
        std::vector<int> cc;
        for (int v : c)
            if (!share_branch || v != 0) cc.push_back(mb(v));
        if (cc.size() > 1) p.interchange_classes.push_back(cc);
    }
    Pattern::Part pa{a.name, a.genus, {}, {}};
    for (int v = 0; v < a.n; ++v) pa.vertices.push_back(v);
    for (int e = 0; e < int(a.edges.size()); ++e) pa.edge_indices.push_back(e);
    Pattern::Part pb{b.name, b.genus, {}, {}};
    for (int v = 0; v < b.n; ++v) pb.vertices.push_back(mb(v));
    for (int e = 0; e < int(b.edges.size()); ++e)
        pb.edge_indices.push_back(int(a.edges.size()) + e);
    p.parts = {std::move(pa), std::move(pb)};
    return p;
}

} // namespace

Pattern Pattern::merged_at_branch(const Pattern& a, const Pattern& b) {
    return combine(a, b, true);
}

Pattern Pattern::disjoint_union(const Pattern& a, const Pattern& b) {
    return combine(a, b, false);
}

std::optional<Pattern> Pattern::by_name(const std::string& name) {
    if (name.size() >= 2 && name[0] == 'K') {
        auto comma = name.find(',');
        try {
            if (comma == std::string::npos) {
                int n = std::stoi(name.substr(1));
                if (n >= 3 && n <= 12) return clique(n);
            } else {
                int m = std::stoi(name.substr(1, comma - 1));
                int n = std::stoi(name.substr(comma + 1));
                if (m >= 2 && n >= 2 && m <= 8 && n <= 8) return biclique(m, n);
            }
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

namespace {

struct SubdivisionSearch {
    const LabeledGraph& host;
    const Pattern& pat;
    BudgetMeter meter;
    const int N;
    std::vector<int> pdeg;
    std::vector<std::vector<int>> padj;
    std::vector<int> branch;    // pattern vertex -> host (-1 unassigned)
    std::vector<int> inv;       // host -> pattern vertex (-1)
    std::vector<char> used;     // host vertex consumed by a path interior
    std::vector<std::pair<std::vector<int>, int>> klass; // (class, my slot) per vertex
    std::vector<std::vector<int>> paths; // per pattern edge
    bool out_of_budget = false;

    // pref[u][h]: try-order position of host h for pattern vertex u. Low
    // degree slots prefer tight-fitting hosts, high degree slots prefer
    // high-degree hosts; symmetry breaking uses the same order, so the
    // increasing-slot constraint never fights the try-order.
    std::vector<std::vector<int>> pref;

    SubdivisionSearch(const LabeledGraph& h, const Pattern& p, const Budget& b)
        : host(h), pat(p), meter(b), N(h.vertex_count()) {
        pdeg = pat.degrees();
        padj.resize(pat.n);
        for (auto [x, y] : pat.edges) {
            padj[x].push_back(y);
            padj[y].push_back(x);
        }
        branch.assign(pat.n, -1);
        inv.assign(N, -1);
        used.assign(N, 0);
        klass.resize(pat.n);
        for (const auto& c : pat.interchange_classes)
            for (std::size_t i = 0; i < c.size(); ++i) klass[c[i]] = {c, int(i)};
        paths.assign(pat.edges.size(), {});
        pref.resize(pat.n);
        for (int u = 0; u < pat.n; ++u) {
            std::vector<int> order(N);
            for (int v = 0; v < N; ++v) order[v] = v;
            const bool tight = pdeg[u] <= 3;
            std::sort(order.begin(), order.end(), [&](int a, int b2) {
                if (host.degree(a) != host.degree(b2))
                    return tight ? host.degree(a) < host.degree(b2)
                                 : host.degree(a) > host.degree(b2);
                return a < b2;
            });
            pref[u].assign(N, 0);
            for (int i = 0; i < N; ++i) pref[u][order[i]] = i;
        }
    }

    bool tick() {
        if (!meter.tick()) {
            out_of_budget = true;
            return false;
        }
        return true;
    }

    bool host_free(int v) const { return inv[v] < 0 && !used[v]; }

    // can h1 reach h2 through currently free host vertices?
    bool connectable(int h1, int h2) {
        if (host.adjacent(h1, h2)) return true;
        std::vector<char> seen(N, 0);
        std::deque<int> q{h1};
        seen[h1] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int v : host.neighbors(u)) {
                if (v == h2) return true;
                if (host_free(v) && !seen[v]) {
                    seen[v] = 1;
                    q.push_back(v);
                }
            }
        }
        return false;
    }

    int pick_next() const {
        int best = -1;
        int best_na = -1, best_deg = -1;
        for (int u = 0; u < pat.n; ++u) {
            if (branch[u] >= 0) continue;
            int na = 0;
            for (int w : padj[u]) na += branch[w] >= 0;
            if (na > best_na || (na == best_na && pdeg[u] > best_deg)) {
                best = u;
                best_na = na;
                best_deg = pdeg[u];
            }
        }
        return best;
    }

    bool class_order_ok(int u, int h) const {
        const auto& [cls, slot] = klass[u];
        const std::vector<int>& p = pref[u]; // uniform across the class
        for (std::size_t j = 0; j < cls.size(); ++j) {
            int w = cls[j];
            if (branch[w] < 0) continue;
            if ((int(j) < slot && p[branch[w]] > p[h]) ||
                (int(j) > slot && p[branch[w]] < p[h]))
                return false;
        }
        return true;
    }

    // Edges are routed as soon as both ends are assigned, so a hopeless
    // branch assignment dies immediately rather than after the whole map
    // is in place. route_list(...) routes elist[k..] and finally resumes
    // the assignment recursion.
    bool route_list(const std::vector<int>& elist, std::size_t k, int next_count) {
        if (k == elist.size()) return assign(next_count);
        if (!tick()) return false;
        const int ei = elist[k];
        const auto [pa, pb] = pat.edges[ei];
        const int ha = branch[pa], hb = branch[pb];
        // BFS distances to hb through free vertices
        std::vector<int> dist(N, -1);
        {
            std::deque<int> q{hb};
            dist[hb] = 0;
            while (!q.empty()) {
                int u = q.front();
                q.pop_front();
                for (int v : host.neighbors(u))
                    if (dist[v] < 0 && (host_free(v) || v == ha)) {
                        dist[v] = dist[u] + 1;
                        q.push_back(v);
                    }
            }
        }
        if (dist[ha] < 0) return false;
        int free_count = 0;
        for (int v = 0; v < N; ++v) free_count += host_free(v);
        const int max_len = free_count + 1;
        std::vector<int> path{ha};
        // enumerate paths of exact length L, shortest first
        for (int L = dist[ha]; L <= max_len; ++L) {
            if (dfs_path(elist, k, next_count, ei, hb, dist, path, L)) return true;
            if (out_of_budget) return false;
        }
        return false;
    }

    bool dfs_path(const std::vector<int>& elist, std::size_t k, int next_count, int ei,
                  int hb, const std::vector<int>& dist, std::vector<int>& path, int L) {
        if (!tick()) return false;
        int u = path.back();
        if (u == hb) {
            if (int(path.size()) - 1 != L) return false;
            for (std::size_t i = 1; i + 1 < path.size(); ++i) used[path[i]] = 1;
            paths[ei] = path;
            if (route_list(elist, k + 1, next_count)) return true;
            for (std::size_t i = 1; i + 1 < path.size(); ++i) used[path[i]] = 0;
            paths[ei].clear();
            return false;
        }
        if (int(path.size()) - 1 >= L) return false;
        for (int v : host.neighbors(u)) {
            if (out_of_budget) return false;
            if (v == hb) {
                if (int(path.size()) == L) {
                    path.push_back(v);
                    if (dfs_path(elist, k, next_count, ei, hb, dist, path, L)) return true;
                    path.pop_back();
                }
            } else if (host_free(v) && dist[v] >= 0 &&
                       dist[v] + int(path.size()) <= L &&
                       std::find(path.begin(), path.end(), v) == path.end()) {
                path.push_back(v);
                if (dfs_path(elist, k, next_count, ei, hb, dist, path, L)) return true;
                path.pop_back();
            }
        }
        return false;
    }

    bool assign(int count) {
        if (!tick()) return false;
        if (count == pat.n) return true; // every edge was routed on the way
        const int u = pick_next();
        // candidates adjacent to every assigned pattern neighbor come first,
        // then by degree rank
        std::vector<int> assigned_nbrs;
        std::vector<int> pending_edges;
        for (std::size_t e = 0; e < pat.edges.size(); ++e) {
            auto [x, y] = pat.edges[e];
            if (x == u && branch[y] >= 0) pending_edges.push_back(int(e));
            else if (y == u && branch[x] >= 0) pending_edges.push_back(int(e));
        }
        for (int w : padj[u])
            if (branch[w] >= 0) assigned_nbrs.push_back(branch[w]);
        std::vector<std::pair<int, int>> cand; // (sort key, host)
        for (int h = 0; h < N; ++h) {
            if (inv[h] >= 0 || used[h] || host.degree(h) < pdeg[u]) continue;
            int nonadj = 0;
            for (int x : assigned_nbrs) nonadj += !host.adjacent(h, x);
            cand.emplace_back(nonadj * (N + 1) + pref[u][h], h);
        }
        std::sort(cand.begin(), cand.end());
        for (auto [key, h] : cand) {
            (void)key;
            if (!tick()) return false;
            if (!class_order_ok(u, h)) continue;
            branch[u] = h;
            inv[h] = u;
            bool feasible = true;
            for (int x : assigned_nbrs)
                if (!connectable(h, x)) {
                    feasible = false;
                    break;
                }
            if (feasible) {
                // direct edges first keeps the path enumeration shallow
                std::vector<int> elist = pending_edges;
                std::stable_sort(elist.begin(), elist.end(), [&](int x, int y) {
                    auto [xa, xb] = pat.edges[x];
                    auto [ya, yb] = pat.edges[y];
                    return host.adjacent(branch[xa], branch[xb]) >
                           host.adjacent(branch[ya], branch[yb]);
                });
                if (route_list(elist, 0, count + 1)) return true;
            }
            branch[u] = -1;
            inv[h] = -1;
            if (out_of_budget) return false;
        }
        return false;
    }
};

} // namespace

SubdivisionResult find_subdivision(const LabeledGraph& host, const Pattern& pattern,
                                   const Budget& budget) {
    SubdivisionResult res;
    if (pattern.n == 0 || pattern.edges.empty())
        throw std::invalid_argument("empty pattern");
    // quick degree feasibility: k-th largest host degree must cover the
    // k-th largest pattern degree
    std::vector<int> hd;
    for (int v = 0; v < host.vertex_count(); ++v) hd.push_back(host.degree(v));
    std::sort(hd.rbegin(), hd.rend());
    std::vector<int> pd = pattern.degrees();
    std::sort(pd.rbegin(), pd.rend());
    if (pd.size() > hd.size()) {
        res.outcome = SearchOutcome::NotFound;
        return res;
    }
    for (std::size_t i = 0; i < pd.size(); ++i)
        if (hd[i] < pd[i]) {
            res.outcome = SearchOutcome::NotFound;
            return res;
        }

    SubdivisionSearch search(host, pattern, budget);
    bool found = search.assign(0);
    res.nodes = search.meter.nodes();
    if (found) {
        SubdivisionWitness w;
        w.pattern_name = pattern.name;
        w.pattern_edges = pattern.edges;
        w.pattern_genus = pattern.genus;
        w.branch_map = search.branch;
        w.paths = search.paths;
        // normalize: every path runs branch[a] -> branch[b]
        for (std::size_t e = 0; e < pattern.edges.size(); ++e) {
            auto [a, b] = pattern.edges[e];
            if (!w.paths[e].empty() && w.paths[e].front() != w.branch_map[a])
                std::reverse(w.paths[e].begin(), w.paths[e].end());
        }
        res.outcome = SearchOutcome::Found;
        res.witness = std::move(w);
    } else if (search.out_of_budget) {
        res.outcome = SearchOutcome::BudgetExhausted;
    } else {
        res.outcome = SearchOutcome::NotFound;
    }
    return res;
}

std::vector<SubdivisionWitness> split_witness(const Pattern& pattern,
                                              const SubdivisionWitness& w) {
    std::vector<SubdivisionWitness> out;
    if (pattern.parts.empty()) return {w};
    for (const auto& part : pattern.parts) {
        SubdivisionWitness pw;
        pw.pattern_name = part.name;
        pw.pattern_genus = part.genus;
        std::vector<int> local(pattern.n, -1);
        for (std::size_t i = 0; i < part.vertices.size(); ++i) {
            local[part.vertices[i]] = int(i);
            pw.branch_map.push_back(w.branch_map[part.vertices[i]]);
        }
        for (int ei : part.edge_indices) {
            auto [a, b] = pattern.edges[ei];
            pw.pattern_edges.emplace_back(local[a], local[b]);
            pw.paths.push_back(w.paths[ei]);
        }
        out.push_back(std::move(pw));
    }
    return out;
}

} // namespace pis
