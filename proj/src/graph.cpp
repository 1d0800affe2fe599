#include "pis/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace pis {

LabeledGraph::LabeledGraph(int n, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)), adj_(n), mat_(std::size_t(n) * n, 0) {
    if (labels_.empty()) {
        labels_.resize(n);
        for (int v = 0; v < n; ++v) labels_[v] = "v" + std::to_string(v);
    }
    if (int(labels_.size()) != n) throw std::invalid_argument("label count mismatch");
}

void LabeledGraph::add_edge(int a, int b) {
    if (a < 0 || b < 0 || a >= n_ || b >= n_) throw std::out_of_range("vertex index");
    if (a == b) throw std::invalid_argument("loops are not allowed");
    if (adjacent(a, b)) return;
    mat_[std::size_t(a) * n_ + b] = mat_[std::size_t(b) * n_ + a] = 1;
    adj_[a].insert(std::lower_bound(adj_[a].begin(), adj_[a].end(), b), b);
    adj_[b].insert(std::lower_bound(adj_[b].begin(), adj_[b].end(), a), a);
    ++m_;
}

std::vector<std::pair<int, int>> LabeledGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int a = 0; a < n_; ++a)
        for (int b : adj_[a])
            if (a < b) out.emplace_back(a, b);
    return out;
}

LabeledGraph build_pis(const RingSystem& sys) {
    const IdealLattice& lat = sys.lattice;
    const int V = std::max(0, lat.size() - 2);
    std::vector<std::string> labels(V);
    for (int v = 0; v < V; ++v) labels[v] = sys.ideal_label(v + 1);
    LabeledGraph g(V, std::move(labels));
    for (int i = 0; i < V; ++i)
        for (int j = i + 1; j < V; ++j)
            if (lat.is_prime[lat.sum[i + 1][j + 1]]) g.add_edge(i, j);
    return g;
}

std::string export_graph(const LabeledGraph& g, GraphFormat format, const std::string& name) {
    if (format == GraphFormat::Json) {
        nlohmann::json j;
        j["version"] = 1;
        if (!name.empty()) j["name"] = name;
        nlohmann::json verts = nlohmann::json::array();
        for (int v = 0; v < g.vertex_count(); ++v) verts.push_back(g.label(v));
        j["vertices"] = std::move(verts);
        nlohmann::json edges = nlohmann::json::array();
        for (auto [a, b] : g.edges()) edges.push_back(nlohmann::json::array({a, b}));
        j["edges"] = std::move(edges);
        return j.dump(2);
    }
    if (format == GraphFormat::Dot) {
        auto quote = [](const std::string& s) {
            std::string out = "\"";
            for (char c : s) {
                if (c == '"' || c == '\\') out += '\\';
                out += c;
            }
            return out + "\"";
        };
        std::string out = "graph " + quote(name.empty() ? "G" : name) + " {\n";
        for (int v = 0; v < g.vertex_count(); ++v)
            out += "  " + quote(g.label(v)) + ";\n";
        for (auto [a, b] : g.edges())
            out += "  " + quote(g.label(a)) + " -- " + quote(g.label(b)) + ";\n";
        out += "}\n";
        return out;
    }
    throw std::invalid_argument("unknown graph format");
}

LabeledGraph import_graph_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("vertices") || !j.contains("edges"))
        throw std::invalid_argument("graph json needs 'vertices' and 'edges'");
    std::vector<std::string> labels;
    for (const auto& v : j["vertices"]) labels.push_back(v.get<std::string>());
    const int nv = int(labels.size());
    LabeledGraph g(nv, std::move(labels));
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("edge entries must be [i,j]");
        g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    return g;
}

LabeledGraph complete_graph(int n) {
    LabeledGraph g(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) g.add_edge(a, b);
    return g;
}

LabeledGraph complete_bipartite(int m, int n) {
    std::vector<std::string> labels;
    for (int i = 0; i < m; ++i) labels.push_back("a" + std::to_string(i));
    for (int i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i));
    LabeledGraph g(m + n, std::move(labels));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < n; ++b) g.add_edge(a, m + b);
    return g;
}

int girth(const LabeledGraph& g) {
    const int n = g.vertex_count();
    int best = kInfiniteGirth;
    std::vector<int> dist(n), parent(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<int> q{s};
        dist[s] = 0;
        parent[s] = -1;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            if (2 * dist[u] >= best) continue;
            for (int v : g.neighbors(u)) {
                if (dist[v] < 0) {
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

std::vector<std::vector<int>> connected_components(const LabeledGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int c = int(out.size());
        out.emplace_back();
        std::deque<int> q{s};
        comp[s] = c;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            out[c].push_back(u);
            for (int v : g.neighbors(u))
                if (comp[v] < 0) {
                    comp[v] = c;
                    q.push_back(v);
                }
        }
        std::sort(out[c].begin(), out[c].end());
    }
    return out;
}

namespace {

struct BlockFinder {
    const LabeledGraph& g;
    std::vector<int> disc, low;
    std::vector<std::pair<int, int>> stack;
    std::vector<Block> out;
    int timer = 0;

    explicit BlockFinder(const LabeledGraph& graph)
        : g(graph), disc(graph.vertex_count(), -1), low(graph.vertex_count(), 0) {}

    void pop_block(std::pair<int, int> until) {
        Block b;
        while (true) {
            auto e = stack.back();
            stack.pop_back();
            b.edges.push_back(e);
            if (e == until) break;
        }
        std::vector<int> verts;
        for (auto [x, y] : b.edges) {
            verts.push_back(x);
            verts.push_back(y);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        b.vertices = std::move(verts);
        out.push_back(std::move(b));
    }

    void run(int root) {
        // iterative DFS, Hopcroft–Tarjan lowpoints
        struct Frame {
            int v, parent;
            std::size_t next = 0;
        };
        std::vector<Frame> st;
        st.push_back({root, -1});
        disc[root] = low[root] = timer++;
        while (!st.empty()) {
            Frame& f = st.back();
            const auto& nbrs = g.neighbors(f.v);
            if (f.next < nbrs.size()) {
                int w = nbrs[f.next++];
                if (disc[w] < 0) {
                    stack.push_back({f.v, w});
                    disc[w] = low[w] = timer++;
                    st.push_back({w, f.v});
                } else if (w != f.parent && disc[w] < disc[f.v]) {
                    stack.push_back({f.v, w});
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                int v = f.v, parent = f.parent;
                st.pop_back();
                if (parent >= 0) {
                    low[parent] = std::min(low[parent], low[v]);
                    if (low[v] >= disc[parent]) pop_block({parent, v});
                }
            }
        }
    }
};

} // namespace

std::vector<Block> blocks(const LabeledGraph& g) {
    BlockFinder bf(g);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (bf.disc[v] < 0 && g.degree(v) > 0) bf.run(v);
    return bf.out;
}

LabeledGraph induced_subgraph(const LabeledGraph& g, const std::vector<int>& verts,
                              std::vector<int>* map_back) {
    std::vector<std::string> labels;
    labels.reserve(verts.size());
    for (int v : verts) labels.push_back(g.label(v));
    LabeledGraph sub(int(verts.size()), std::move(labels));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.adjacent(verts[i], verts[j])) sub.add_edge(int(i), int(j));
    if (map_back) *map_back = verts;
    return sub;
}

} // namespace pis
