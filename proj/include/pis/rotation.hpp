#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pis/budget.hpp"
#include "pis/graph.hpp"

namespace pis {

// Per-vertex cyclic order of the incident edges (as neighbor lists).
using RotationSystem = std::vector<std::vector<int>>;

RotationSystem canonical_rotation(const LabeledGraph& g);
// throws std::invalid_argument when rot is not a permutation of each adjacency list
void check_rotation(const LabeledGraph& g, const RotationSystem& rot);

// number of faces of the orientable embedding described by rot; the next
// directed edge after (u,v) is (v,w) with w the successor of u in the
// rotation at v. A connected edgeless graph has one face.
int trace_faces(const LabeledGraph& g, const RotationSystem& rot);

inline int genus_of_embedding(const LabeledGraph& g, int faces) {
    return int((2 - g.vertex_count() + g.edge_count() - faces) / 2);
}

struct EmbeddingResult {
    SearchOutcome outcome = SearchOutcome::BudgetExhausted;
    std::optional<RotationSystem> rotation;
    int faces = 0;     // of the returned rotation
    int best_faces = 0; // best seen during the search
    std::int64_t nodes = 0;
};

// Finds a rotation with genus <= target for a connected graph.
// Exhausts all rotations when the space is below `exhaustive_threshold`
// (then NotFound is a proof); otherwise annealed local search over
// neighbor reinsertions, deterministic under the seed.
EmbeddingResult search_embedding(const LabeledGraph& g, int target_genus,
                                 const Budget& budget, std::uint64_t seed = 0,
                                 double exhaustive_threshold = 2e6);

} // namespace pis
