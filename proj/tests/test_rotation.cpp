#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "pis/rotation.hpp"

using namespace pis;

namespace {

// test-only exhaustive rotation scan: max face count over all rotations,
// deliberately sharing nothing with search_embedding
int brute_force_max_faces(const LabeledGraph& g) {
    RotationSystem rot = canonical_rotation(g);
    int best = 0;
    while (true) {
        best = std::max(best, trace_faces(g, rot));
        int v = 0;
        while (v < g.vertex_count()) {
            if (g.degree(v) >= 3 &&
                std::next_permutation(rot[v].begin() + 1, rot[v].end()))
                break;
            ++v;
        }
        if (v == g.vertex_count()) break;
    }
    return best;
}

} // namespace

TEST_CASE("triangle has two faces under any rotation") {
    LabeledGraph g = complete_graph(3);
    CHECK(trace_faces(g, canonical_rotation(g)) == 2);
}

TEST_CASE("K4 best rotation is planar: 4 faces") {
    CHECK(brute_force_max_faces(complete_graph(4)) == 4);
}

TEST_CASE("K5 best rotation has 5 faces (genus 1)") {
    LabeledGraph g = complete_graph(5);
    int best = brute_force_max_faces(g);
    CHECK(best == 5);
    CHECK(genus_of_embedding(g, best) == 1);
}

TEST_CASE("K3,3 best rotation has 3 faces (genus 1)") {
    CHECK(brute_force_max_faces(complete_bipartite(3, 3)) == 3);
}

TEST_CASE("single vertex counts one face") {
    LabeledGraph g(1);
    CHECK(trace_faces(g, canonical_rotation(g)) == 1);
    CHECK(genus_of_embedding(g, 1) == 0);
}

TEST_CASE("malformed rotations are rejected") {
    LabeledGraph g = complete_graph(3);
    RotationSystem rot = canonical_rotation(g);
    rot[0] = {1, 1};
    CHECK_THROWS_AS(trace_faces(g, rot), std::invalid_argument);
    rot = canonical_rotation(g);
    rot.pop_back();
    CHECK_THROWS_AS(trace_faces(g, rot), std::invalid_argument);
}

TEST_CASE("face-trace handshake: directed edges partition into faces") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + int(rng() % 8);
        LabeledGraph g(n);
        // random connected graph: spanning tree plus extras
        for (int v = 1; v < n; ++v) g.add_edge(v, int(rng() % v));
        for (int k = 0; k < n; ++k) {
            int a = int(rng() % n), b = int(rng() % n);
            if (a != b) g.add_edge(a, b);
        }
        RotationSystem rot = canonical_rotation(g);
        for (auto& r : rot) std::shuffle(r.begin(), r.end(), rng);
        int F = trace_faces(g, rot);
        int euler = 2 - g.vertex_count() + int(g.edge_count()) - F;
        CHECK(euler >= 0);
        CHECK(euler % 2 == 0);
    }
}

TEST_CASE("embedding search hits known targets") {
    Budget b;
    b.max_nodes = 500'000;
    b.max_ms = 30'000;

    auto r = search_embedding(complete_bipartite(3, 3), 1, b);
    REQUIRE(r.outcome == SearchOutcome::Found);
    CHECK(r.faces == 3);

    r = search_embedding(complete_graph(4), 0, b);
    REQUIRE(r.outcome == SearchOutcome::Found);
    CHECK(r.faces == 4);

    r = search_embedding(complete_graph(6), 1, b);
    REQUIRE(r.outcome == SearchOutcome::Found);
    CHECK(genus_of_embedding(complete_graph(6), r.faces) <= 1);
}

TEST_CASE("exhaustive search proves K5 is not planar") {
    Budget b;
    b.max_nodes = 100'000;
    b.max_ms = 30'000;
    auto r = search_embedding(complete_graph(5), 0, b);
    CHECK(r.outcome == SearchOutcome::NotFound);
}

TEST_CASE("search is deterministic under a fixed seed") {
    Budget b;
    b.max_nodes = 200'000;
    b.max_ms = 30'000;
    RingSystem sys = RingSystem::analyze(parse_ring_spec("Z/8 x Z/4"));
    LabeledGraph g = build_pis(sys);
    auto r1 = search_embedding(g, 1, b, 42);
    auto r2 = search_embedding(g, 1, b, 42);
    REQUIRE(r1.outcome == SearchOutcome::Found);
    REQUIRE(r2.outcome == SearchOutcome::Found);
    CHECK(r1.nodes == r2.nodes);
    CHECK(*r1.rotation == *r2.rotation);
}
