#include "pis/rotation.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace pis {

RotationSystem canonical_rotation(const LabeledGraph& g) {
    RotationSystem rot(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) rot[v] = g.neighbors(v);
    return rot;
}

void check_rotation(const LabeledGraph& g, const RotationSystem& rot) {
    if (int(rot.size()) != g.vertex_count())
        throw std::invalid_argument("rotation size mismatch");
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> a = rot[v];
        std::sort(a.begin(), a.end());
        if (a != g.neighbors(v))
            throw std::invalid_argument("rotation at vertex " + std::to_string(v) +
                                        " is not a permutation of its neighbors");
    }
}

namespace {

// positions of each neighbor inside each rotation, for O(1) successor lookup
struct FaceTracer {
    int V;
    std::vector<std::vector<int>> pos; // pos[v][u] = index of u in rot[v]
    std::vector<char> seen;            // per directed edge slot (v, index)
    std::vector<int> slot_base;

    explicit FaceTracer(const LabeledGraph& g) : V(g.vertex_count()), pos(V) {
        slot_base.resize(V + 1, 0);
        for (int v = 0; v < V; ++v) {
            pos[v].assign(V, -1);
            slot_base[v + 1] = slot_base[v] + g.degree(v);
        }
        seen.resize(slot_base[V]);
    }

    void index(const RotationSystem& rot) {
        for (int v = 0; v < V; ++v)
            for (int i = 0; i < int(rot[v].size()); ++i) pos[v][rot[v][i]] = i;
    }

    int trace(const LabeledGraph& g, const RotationSystem& rot) {
        index(rot);
        std::fill(seen.begin(), seen.end(), 0);
        int faces = 0;
        for (int v = 0; v < V; ++v) {
            const int d = int(rot[v].size());
            for (int i = 0; i < d; ++i) {
                if (seen[slot_base[v] + i]) continue;
                ++faces;
                int a = v, ai = i;
                while (!seen[slot_base[a] + ai]) {
                    seen[slot_base[a] + ai] = 1;
                    int b = rot[a][ai];
                    int j = pos[b][a];
                    ai = (j + 1) % int(rot[b].size());
                    a = b;
                }
            }
        }
        if (g.edge_count() == 0) return 1;
        return faces;
    }
};

} // namespace

int trace_faces(const LabeledGraph& g, const RotationSystem& rot) {
    check_rotation(g, rot);
    FaceTracer tracer(g);
    return tracer.trace(g, rot);
}

namespace {

double rotation_space(const LabeledGraph& g) {
    double total = 1.0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        double f = 1.0;
        for (int k = 2; k < g.degree(v); ++k) f *= k;
        total *= f;
        if (total > 1e18) return 1e18;
    }
    return total;
}

EmbeddingResult exhaustive_search(const LabeledGraph& g, int target_faces,
                                  const Budget& budget) {
    const int V = g.vertex_count();
    EmbeddingResult res;
    BudgetMeter meter(budget);
    FaceTracer tracer(g);
    // fix the first neighbor of each rotation (cyclic symmetry), run the
    // remaining suffixes through next_permutation as one odometer
    RotationSystem rot = canonical_rotation(g);
    auto advance = [&](int v) {
        if (g.degree(v) < 3) return false;
        return std::next_permutation(rot[v].begin() + 1, rot[v].end());
    };
    while (true) {
        if (!meter.tick()) {
            res.outcome = SearchOutcome::BudgetExhausted;
            res.nodes = meter.nodes();
            return res;
        }
        int F = tracer.trace(g, rot);
        res.best_faces = std::max(res.best_faces, F);
        if (F >= target_faces) {
            res.outcome = SearchOutcome::Found;
            res.rotation = rot;
            res.faces = F;
            res.nodes = meter.nodes();
            return res;
        }
        int v = 0;
        while (v < V && !advance(v)) {
            // rotation at v wrapped to canonical order; carry to the next vertex
            ++v;
        }
        if (v == V) break;
    }
    res.outcome = SearchOutcome::NotFound;
    res.nodes = meter.nodes();
    return res;
}

} // namespace

EmbeddingResult search_embedding(const LabeledGraph& g, int target_genus,
                                 const Budget& budget, std::uint64_t seed,
                                 double exhaustive_threshold) {
    const int V = g.vertex_count();
    const long E = g.edge_count();
    EmbeddingResult res;
    if (V == 0) {
        res.outcome = SearchOutcome::NotFound;
        return res;
    }
    const int target_faces = int(E - V + 2 - 2 * target_genus);
    RotationSystem rot = canonical_rotation(g);
    if (target_faces <= 1) {
        // every rotation has at least one face, so any rotation certifies
        FaceTracer tracer(g);
        int F = tracer.trace(g, rot);
        if (F >= target_faces || genus_of_embedding(g, F) <= target_genus) {
            res.outcome = SearchOutcome::Found;
            res.rotation = rot;
            res.faces = F;
            res.best_faces = F;
            return res;
        }
    }
    if (rotation_space(g) <= exhaustive_threshold)
        return exhaustive_search(g, target_faces, budget);

    // annealed local search over single-neighbor reinsertion moves
    BudgetMeter meter(budget);
    std::mt19937_64 rng(seed);
    FaceTracer tracer(g);
    std::vector<int> movable;
    for (int v = 0; v < V; ++v)
        if (g.degree(v) >= 3) movable.push_back(v);
    if (movable.empty()) {
        int F = tracer.trace(g, rot);
        res.best_faces = F;
        if (F >= target_faces) {
            res.outcome = SearchOutcome::Found;
            res.rotation = rot;
            res.faces = F;
        } else {
            res.outcome = SearchOutcome::NotFound;
        }
        res.nodes = meter.nodes();
        return res;
    }

    bool first_restart = true;
    while (!meter.exhausted()) {
        rot = canonical_rotation(g);
        if (!first_restart)
            for (auto& r : rot) std::shuffle(r.begin(), r.end(), rng);
        first_restart = false;
        if (!meter.tick()) break;
        int F = tracer.trace(g, rot);
        res.best_faces = std::max(res.best_faces, F);
        if (F >= target_faces) {
            res.outcome = SearchOutcome::Found;
            res.rotation = rot;
            res.faces = F;
            res.nodes = meter.nodes();
            return res;
        }
        double T = 1.0;
        int stall = 0;
        while (stall < 4000 && meter.tick()) {
            int v = movable[rng() % movable.size()];
            auto& rv = rot[v];
            const int d = int(rv.size());
            int i = int(rng() % d);
            int j = int(rng() % (d - 1));
            int jj = j < i ? j : j + 1; // new position of the moved neighbor
            int u = rv[i];
            rv.erase(rv.begin() + i);
            rv.insert(rv.begin() + jj, u);
            int F2 = tracer.trace(g, rot);
            res.best_faces = std::max(res.best_faces, F2);
            if (F2 >= target_faces) {
                res.outcome = SearchOutcome::Found;
                res.rotation = rot;
                res.faces = F2;
                res.nodes = meter.nodes();
                return res;
            }
            bool accept = F2 >= F;
            if (!accept) {
                double p = std::exp(double(F2 - F) / std::max(T, 1e-9));
                accept = std::uniform_real_distribution<double>(0, 1)(rng) < p;
            }
            if (accept) {
                stall = (F2 > F) ? 0 : stall + 1;
                F = F2;
            } else {
                rv.erase(rv.begin() + jj);
                rv.insert(rv.begin() + i, u);
                ++stall;
            }
            T = std::max(0.05, T * 0.9995);
        }
    }
    res.outcome = SearchOutcome::BudgetExhausted;
    res.nodes = meter.nodes();
    return res;
}

} // namespace pis
