#include "pis/ideal.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include <nlohmann/json.hpp>

namespace pis {

int IdealLattice::find(const ElemSet& members) const {
    for (int i = 0; i < size(); ++i)
        if (ideals[i].members == members) return i;
    return -1;
}

Ideal principal_ideal(const FiniteRing& r, int a) {
    // {ra : r in R}; already closed under addition since r1*a + r2*a = (r1+r2)*a
    Ideal out;
    out.members = ElemSet(r.order());
    for (int x = 0; x < r.order(); ++x) out.members.set(r.mul(x, a));
    out.generators = {a};
    return out;
}

ElemSet ideal_sum_members(const FiniteRing& r, const ElemSet& a, const ElemSet& b) {
    ElemSet out(r.order());
    auto ma = a.members();
    auto mb = b.members();
    for (int x : ma)
        for (int y : mb) out.set(r.add(x, y));
    return out;
}

ElemSet ideal_generated_by(const FiniteRing& r, const std::vector<int>& gens) {
    ElemSet out(r.order());
    out.set(r.zero());
    std::vector<int> members{r.zero()};
    for (int g : gens) {
        for (int x = 0; x < r.order(); ++x) {
            int m = r.mul(x, g);
            if (out.test(m)) continue;
            // add m and close under addition with the existing members
            std::vector<int> frontier{m};
            out.set(m);
            members.push_back(m);
            while (!frontier.empty()) {
                int e = frontier.back();
                frontier.pop_back();
                for (std::size_t i = 0; i < members.size(); ++i) {
                    int s = r.add(e, members[i]);
                    if (!out.test(s)) {
                        out.set(s);
                        members.push_back(s);
                        frontier.push_back(s);
                    }
                }
            }
        }
    }
    return out;
}

ElemSet ideal_product_members(const FiniteRing& r, const Ideal& a, const Ideal& b) {
    std::vector<int> gens;
    for (int g : a.generators)
        for (int h : b.generators) gens.push_back(r.mul(g, h));
    return ideal_generated_by(r, gens);
}

bool is_prime_ideal(const FiniteRing& r, const Ideal& ideal) {
    const int n = r.order();
    if (ideal.members.count() == n) return false;
    std::vector<int> out;
    out.reserve(n - ideal.members.count());
    for (int a = 0; a < n; ++a)
        if (!ideal.members.test(a)) out.push_back(a);
    for (int a : out)
        for (int b : out)
            if (ideal.members.test(r.mul(a, b))) return false;
    return true;
}

IdealLattice enumerate_ideals(const FiniteRing& r) {
    const int n = r.order();
    std::unordered_map<ElemSet, std::vector<int>, ElemSetHash> found; // members -> generators
    for (int a = 0; a < n; ++a) {
        Ideal p = principal_ideal(r, a);
        found.emplace(std::move(p.members), std::move(p.generators));
    }
    // close under pairwise sum until fixpoint; every ideal of a finite ring
    // with unity is a finite sum of principal ideals
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<const ElemSet*> keys;
        std::vector<const std::vector<int>*> gens;
        keys.reserve(found.size());
        for (auto& kv : found) {
            keys.push_back(&kv.first);
            gens.push_back(&kv.second);
        }
        for (std::size_t i = 0; i < keys.size(); ++i)
            for (std::size_t j = i + 1; j < keys.size(); ++j) {
                if (keys[i]->contains(*keys[j]) || keys[j]->contains(*keys[i])) continue;
                ElemSet s = ideal_sum_members(r, *keys[i], *keys[j]);
                if (!found.count(s)) {
                    std::vector<int> g = *gens[i];
                    g.insert(g.end(), gens[j]->begin(), gens[j]->end());
                    found.emplace(std::move(s), std::move(g));
                    changed = true;
                }
            }
    }

    IdealLattice lat;
    lat.ideals.reserve(found.size());
    for (auto& kv : found) {
        Ideal id;
        id.members = kv.first;
        id.generators = kv.second;
        lat.ideals.push_back(std::move(id));
    }
    std::sort(lat.ideals.begin(), lat.ideals.end(),
              [](const Ideal& a, const Ideal& b) { return a.members.canonical_less(b.members); });

    const int L = lat.size();
    // prefer a single-generator witness where one exists
    std::vector<ElemSet> principal_sets(n, ElemSet(0));
    for (int a = 0; a < n; ++a) principal_sets[a] = principal_ideal(r, a).members;
    lat.is_principal.assign(L, false);
    for (int i = 0; i < L; ++i) {
        for (int a = 0; a < n; ++a)
            if (principal_sets[a] == lat.ideals[i].members) {
                lat.ideals[i].generators = {a};
                lat.is_principal[i] = true;
                break;
            }
        if (!lat.is_principal[i]) {
            // shrink the generator witness greedily
            std::vector<int>& g = lat.ideals[i].generators;
            for (std::size_t k = 0; k < g.size();) {
                std::vector<int> trial = g;
                trial.erase(trial.begin() + k);
                if (!trial.empty() &&
                    ideal_generated_by(r, trial) == lat.ideals[i].members)
                    g = std::move(trial);
                else
                    ++k;
            }
            // canonical two-element witness where one exists
            if (g.size() > 1 && lat.ideals[i].members.count() <= 512) {
                auto mem = lat.ideals[i].members.members();
                bool done = false;
                for (std::size_t x = 1; x < mem.size() && !done; ++x)
                    for (std::size_t y = x + 1; y < mem.size() && !done; ++y)
                        if (ideal_generated_by(r, {mem[x], mem[y]}) == lat.ideals[i].members) {
                            g = {mem[x], mem[y]};
                            done = true;
                        }
            }
        }
    }

    lat.sum.assign(L, std::vector<int>(L, 0));
    for (int i = 0; i < L; ++i)
        for (int j = i; j < L; ++j) {
            int k;
            if (lat.ideals[i].members.contains(lat.ideals[j].members))
                k = i;
            else if (lat.ideals[j].members.contains(lat.ideals[i].members))
                k = j;
            else
                k = lat.find(ideal_sum_members(r, lat.ideals[i].members, lat.ideals[j].members));
            if (k < 0) throw std::logic_error("lattice not closed under sums");
            lat.sum[i][j] = lat.sum[j][i] = k;
        }

    lat.prod.assign(L, std::vector<int>(L, 0));
    for (int i = 0; i < L; ++i)
        for (int j = i; j < L; ++j) {
            int k = lat.find(ideal_product_members(r, lat.ideals[i], lat.ideals[j]));
            if (k < 0) throw std::logic_error("lattice not closed under products");
            lat.prod[i][j] = lat.prod[j][i] = k;
        }

    lat.is_prime.assign(L, false);
    for (int i = 0; i < L; ++i) lat.is_prime[i] = is_prime_ideal(r, lat.ideals[i]);

    lat.is_maximal.assign(L, false);
    for (int i = 0; i < L; ++i) {
        if (i == lat.ring_index()) continue;
        bool maximal = true;
        for (int j = 0; j < L; ++j) {
            if (j == i || j == lat.ring_index()) continue;
            if (lat.ideals[j].members.contains(lat.ideals[i].members)) {
                maximal = false;
                break;
            }
        }
        lat.is_maximal[i] = maximal;
    }

    lat.eta.assign(L, std::nullopt);
    for (int i = 0; i < L; ++i) lat.eta[i] = nilpotency_index(lat, i);
    return lat;
}

int ideal_sum(const IdealLattice& lat, int i, int j) { return lat.sum[i][j]; }

bool is_maximal_ideal(const IdealLattice& lat, int i) { return lat.is_maximal[i]; }

std::optional<int> nilpotency_index(const IdealLattice& lat, int i) {
    // powers weakly decrease, so the walk terminates at zero or a fixpoint
    int cur = i;
    int k = 1;
    while (true) {
        if (cur == lat.zero_index()) return k;
        int nxt = lat.prod[cur][i];
        if (nxt == cur) return std::nullopt;
        cur = nxt;
        ++k;
    }
}

bool is_principal_ring(const IdealLattice& lat) {
    for (bool p : lat.is_principal)
        if (!p) return false;
    return true;
}

bool is_local_ring(const IdealLattice& lat) {
    int maximal = 0;
    for (bool m : lat.is_maximal) maximal += m;
    return maximal == 1;
}

// ------------------------------------------------------------- RingSystem

RingSystem RingSystem::analyze(const RingDescriptor& desc, long long order_cap) {
    RingSystem sys;
    sys.desc = desc;
    sys.ring = FiniteRing::build(desc, order_cap);
    sys.lattice = enumerate_ideals(sys.ring);
    for (const auto& f : desc.factors) {
        sys.factor_rings.push_back(FiniteRing::build_local(f));
        sys.factor_lattices.push_back(enumerate_ideals(sys.factor_rings.back()));
    }
    return sys;
}

std::vector<int> RingSystem::factor_ideal_indices(int lattice_index) const {
    const int nf = int(factor_rings.size());
    std::vector<ElemSet> proj;
    proj.reserve(nf);
    for (int i = 0; i < nf; ++i) proj.emplace_back(factor_rings[i].order());
    for (int e : lattice.ideals[lattice_index].members.members()) {
        auto t = ring.factor_projection(e);
        for (int i = 0; i < nf; ++i) proj[i].set(t[i]);
    }
    std::vector<int> out(nf);
    for (int i = 0; i < nf; ++i) {
        out[i] = factor_lattices[i].find(proj[i]);
        if (out[i] < 0) throw std::logic_error("ideal does not project onto factor ideals");
    }
    return out;
}

std::string RingSystem::factor_ideal_name(int factor, int ideal_index) const {
    const IdealLattice& lat = factor_lattices[factor];
    if (ideal_index == lat.zero_index()) return "0";
    if (ideal_index == lat.ring_index()) {
        bool is_field = lat.size() == 2;
        return (is_field ? "F" : "R") + std::to_string(factor + 1);
    }
    const Ideal& id = lat.ideals[ideal_index];
    std::string out = "(";
    for (std::size_t i = 0; i < id.generators.size(); ++i) {
        if (i) out += ",";
        out += factor_rings[factor].label(id.generators[i]);
    }
    out += ")";
    return out;
}

std::string RingSystem::ideal_label(int lattice_index) const {
    auto idx = factor_ideal_indices(lattice_index);
    std::string out;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) out += "x";
        out += factor_ideal_name(int(i), idx[i]);
    }
    return out;
}

std::string lattice_to_json(const RingSystem& sys) {
    nlohmann::json j;
    j["version"] = 1;
    j["ring"] = sys.desc.text();
    j["order"] = sys.ring.order();
    j["local"] = is_local_ring(sys.lattice);
    j["principal"] = is_principal_ring(sys.lattice);
    nlohmann::json ids = nlohmann::json::array();
    for (int i = 0; i < sys.lattice.size(); ++i) {
        const Ideal& id = sys.lattice.ideals[i];
        nlohmann::json e;
        e["label"] = sys.ideal_label(i);
        e["size"] = id.members.count();
        nlohmann::json mem = nlohmann::json::array();
        for (int m : id.members.members()) mem.push_back(sys.ring.label(m));
        e["members"] = std::move(mem);
        nlohmann::json gen = nlohmann::json::array();
        for (int g : id.generators) gen.push_back(sys.ring.label(g));
        e["generators"] = std::move(gen);
        e["prime"] = bool(sys.lattice.is_prime[i]);
        e["maximal"] = bool(sys.lattice.is_maximal[i]);
        e["principal"] = bool(sys.lattice.is_principal[i]);
        if (sys.lattice.eta[i]) e["eta"] = *sys.lattice.eta[i];
        else e["eta"] = nullptr;
        ids.push_back(std::move(e));
    }
    j["ideals"] = std::move(ids);
    return j.dump(2);
}

} // namespace pis
