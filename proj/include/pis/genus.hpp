#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pis/budget.hpp"
#include "pis/graph.hpp"
#include "pis/rotation.hpp"
#include "pis/subdivision.hpp"

namespace pis {

// Ringel–Youngs closed forms.
int kn_genus(int n);
int kmn_genus(int m, int n);

// Euler-formula bound for a connected graph: with girth y every face has at
// least y edges, so F <= 2E/y and g >= ceil((E(y-2)/y - V + 2)/2).
// Returns 0 for forests. Throws on disconnected input.
int euler_lower_bound(const LabeledGraph& g);

struct LowerCertificate {
    enum class Kind { Trivial, Euler, Subdivision, BlockSum };
    Kind kind = Kind::Trivial;
    int bound = 0;

    // Euler: the (2-connected) subgraph the bound is computed on
    std::vector<int> subgraph_vertices;
    int girth_used = 0;

    // Subdivision
    std::optional<SubdivisionWitness> witness;

    // BlockSum: parts certify vertex-almost-disjoint pieces whose genera add
    std::vector<LowerCertificate> parts;
};

struct UpperCertificate {
    RotationSystem rotation;
    int faces = 0;
    int genus = 0;
};

struct GenusBounds {
    int lower = 0;
    std::optional<int> upper;
    LowerCertificate lower_certificate;
    std::optional<UpperCertificate> upper_certificate;
};

struct GenusOptions {
    Budget budget;                      // lower-certificate search stage
    std::optional<Budget> upper_budget; // per component; defaults to `budget`
    std::uint64_t seed = 0;
    int upper_extra_targets = 3;        // scan upper targets lower..lower+extra
    double exhaustive_threshold = 2e6;
    bool want_upper = true;
    int max_certificate_genus = 3;      // deepest single-block certificate sought
};

// Certified interval for the orientable genus. Lower bounds come from Euler
// bounds and subdivision witnesses per block, summed by block additivity;
// the upper bound is the least target the embedding search reaches.
GenusBounds genus_bounds(const LabeledGraph& g, const GenusOptions& opts = {});

std::string bounds_to_json(const GenusBounds& b);
GenusBounds bounds_from_json(const std::string& text);

} // namespace pis
