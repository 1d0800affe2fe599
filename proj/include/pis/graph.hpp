#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "pis/ideal.hpp"

namespace pis {

// Simple undirected graph with printable vertex labels.
class LabeledGraph {
public:
    LabeledGraph() = default;
    explicit LabeledGraph(int n, std::vector<std::string> labels = {});

    int vertex_count() const { return n_; }
    long edge_count() const { return m_; }
    const std::string& label(int v) const { return labels_[v]; }
    void set_label(int v, std::string s) { labels_[v] = std::move(s); }

    void add_edge(int a, int b);
    bool adjacent(int a, int b) const { return mat_[std::size_t(a) * n_ + b] != 0; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return int(adj_[v].size()); }
    std::vector<std::pair<int, int>> edges() const;

private:
    int n_ = 0;
    long m_ = 0;
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint8_t> mat_;
};

// PIS(R): vertices are the nonzero proper ideals in canonical lattice order,
// {I,J} is an edge iff I != J and I+J is a prime ideal of R.
LabeledGraph build_pis(const RingSystem& sys);
// lattice index of vertex v in the PIS graph (vertices skip the zero ideal)
inline int pis_vertex_to_lattice(int v) { return v + 1; }

enum class GraphFormat { Dot, Json };
std::string export_graph(const LabeledGraph& g, GraphFormat format,
                         const std::string& name = "");
LabeledGraph import_graph_json(const std::string& text);

LabeledGraph complete_graph(int n);
LabeledGraph complete_bipartite(int m, int n);

inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();
// length of the shortest cycle; kInfiniteGirth for forests
int girth(const LabeledGraph& g);

std::vector<std::vector<int>> connected_components(const LabeledGraph& g);

struct Block {
    std::vector<int> vertices;
    std::vector<std::pair<int, int>> edges;
};
// biconnected components; every edge lies in exactly one block,
// cut vertices appear in several
std::vector<Block> blocks(const LabeledGraph& g);

// subgraph induced on `verts`; if map_back is given it receives, per new
// vertex index, the original vertex index
LabeledGraph induced_subgraph(const LabeledGraph& g, const std::vector<int>& verts,
                              std::vector<int>* map_back = nullptr);

} // namespace pis
