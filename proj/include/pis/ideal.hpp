#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pis/bitset.hpp"
#include "pis/ring.hpp"

namespace pis {

struct Ideal {
    ElemSet members;
    std::vector<int> generators; // witness list; closure of these equals members
};

// Every ideal of the ring in canonical order (by cardinality, ties by
// smallest member), with sum/product tables and per-ideal flags.
// ideals.front() is the zero ideal and ideals.back() is R.
struct IdealLattice {
    std::vector<Ideal> ideals;
    std::vector<std::vector<int>> sum;
    std::vector<std::vector<int>> prod;
    std::vector<bool> is_prime;
    std::vector<bool> is_maximal;
    std::vector<bool> is_principal;
    std::vector<std::optional<int>> eta;

    int size() const { return int(ideals.size()); }
    int zero_index() const { return 0; }
    int ring_index() const { return size() - 1; }
    int find(const ElemSet& members) const;
};

Ideal principal_ideal(const FiniteRing& r, int a);
bool is_prime_ideal(const FiniteRing& r, const Ideal& ideal);
ElemSet ideal_sum_members(const FiniteRing& r, const ElemSet& a, const ElemSet& b);
ElemSet ideal_product_members(const FiniteRing& r, const Ideal& a, const Ideal& b);
// closure of a generator set: the smallest ideal containing all of them
ElemSet ideal_generated_by(const FiniteRing& r, const std::vector<int>& gens);

IdealLattice enumerate_ideals(const FiniteRing& r);

int ideal_sum(const IdealLattice& lat, int i, int j);
bool is_maximal_ideal(const IdealLattice& lat, int i);
std::optional<int> nilpotency_index(const IdealLattice& lat, int i);
bool is_principal_ring(const IdealLattice& lat);
bool is_local_ring(const IdealLattice& lat);

// Bundle of a ring together with its own lattice and the per-factor
// rings/lattices; carries ideal labelling in product-coordinate form.
struct RingSystem {
    RingDescriptor desc;
    FiniteRing ring;
    IdealLattice lattice;
    std::vector<FiniteRing> factor_rings;
    std::vector<IdealLattice> factor_lattices;

    static RingSystem analyze(const RingDescriptor& desc, long long order_cap = 4096);

    // index of the lattice ideal obtained by projecting to each factor
    std::vector<int> factor_ideal_indices(int lattice_index) const;
    // "(2)x0xF3"-style coordinate label (zero ideal "0", full factor "F3"/"R1")
    std::string ideal_label(int lattice_index) const;
    // name of an ideal within one factor's lattice: "0", "(g)", "(g1,g2)", "F2"/"R2"
    std::string factor_ideal_name(int factor, int ideal_index) const;
};

std::string lattice_to_json(const RingSystem& sys);

} // namespace pis
