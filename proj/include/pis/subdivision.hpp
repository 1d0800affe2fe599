#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pis/budget.hpp"
#include "pis/graph.hpp"

namespace pis {

// Model graph for the subdivision search. `interchange_classes` lists groups
// of mutually interchangeable vertices (used for symmetry breaking: host
// images must increase within a group). `parts` is set for composite
// patterns whose pieces certify genus via block additivity.
struct Pattern {
    std::string name;
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    int genus = 0;
    std::vector<std::vector<int>> interchange_classes;

    struct Part {
        std::string name;
        int genus = 0;
        std::vector<int> vertices;
        std::vector<int> edge_indices;
    };
    std::vector<Part> parts;

    std::vector<int> degrees() const;

    static Pattern clique(int n);
    static Pattern biclique(int m, int n);
    // two patterns sharing one branch vertex (vertex 0 of each is merged)
    static Pattern merged_at_branch(const Pattern& a, const Pattern& b);
    static Pattern disjoint_union(const Pattern& a, const Pattern& b);
    // lookup by name: "K5", "K3,3", "K4,4", "K5,4", "K5,5"
    static std::optional<Pattern> by_name(const std::string& name);
};

struct SubdivisionWitness {
    std::string pattern_name;
    std::vector<std::pair<int, int>> pattern_edges;
    int pattern_genus = 0;
    std::vector<int> branch_map;         // pattern vertex -> host vertex
    std::vector<std::vector<int>> paths; // per pattern edge, full host path
};

struct SubdivisionResult {
    SearchOutcome outcome = SearchOutcome::BudgetExhausted;
    std::optional<SubdivisionWitness> witness;
    std::int64_t nodes = 0;
};

// Backtracking subgraph-homeomorphism search: branch vertices are assigned
// most-constrained-first with candidates ordered adjacent-to-assigned-
// neighbors first, then pattern edges are routed by internally disjoint
// paths, shortest first. NotFound means the whole space was exhausted.
SubdivisionResult find_subdivision(const LabeledGraph& host, const Pattern& pattern,
                                   const Budget& budget);

// split a composite witness into standalone per-part witnesses
std::vector<SubdivisionWitness> split_witness(const Pattern& pattern,
                                              const SubdivisionWitness& w);

} // namespace pis
