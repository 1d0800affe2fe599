#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pis {

enum class LocalFamily {
    ZMod,        // Z/p^k
    GaloisField, // GF(p^k)
    ChainRing,   // GF(q)[t]/t^k
    BiNil,       // GF(q)[x,y]/(x^2,y^2)
    FourNil,     // Z4[x]/(x^2,2x)
};

struct LocalRingSpec {
    LocalFamily family = LocalFamily::ZMod;
    int p = 0; // characteristic prime (ZMod/GaloisField)
    int k = 1; // exponent (ZMod/GaloisField/ChainRing)
    int q = 0; // base field order (ChainRing/BiNil)

    long long order() const;
    std::string text() const; // canonical spec string for this factor
};

struct RingDescriptor {
    std::vector<LocalRingSpec> factors;
    long long order() const;
    std::string text() const; // canonical "A x B x ..." form
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position_(pos) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Grammar (whitespace-insensitive):
//   ring  := local ( "x" local )*
//   local := "Z/" INT | "GF(" INT ")" | "GF(" INT ")[t]/t^" INT
//          | "GF(" INT ")[x,y]/(x2,y2)" | "Z4[x]/(x2,2x)"
RingDescriptor parse_ring_spec(std::string_view text);

// Explicit element-table model of a finite commutative ring with unity.
class FiniteRing {
public:
    int order() const { return n_; }
    int add(int a, int b) const { return add_[std::size_t(a) * n_ + b]; }
    int mul(int a, int b) const { return mul_[std::size_t(a) * n_ + b]; }
    int zero() const { return zero_; }
    int one() const { return one_; }
    int neg(int a) const { return neg_[a]; }
    const std::string& label(int a) const { return labels_[a]; }

    int factor_arity() const { return int(factor_orders_.size()); }
    const std::vector<int>& factor_orders() const { return factor_orders_; }
    // element index -> tuple of factor element indices (mixed radix, factor 0 outermost)
    std::vector<int> factor_projection(int elem) const;
    int factor_component(int elem, int i) const;

    // exhaustive ring-axiom check; O(n^3) terms are sampled above `full_check_limit`
    void validate(int full_check_limit = 256) const;

    static FiniteRing build_local(const LocalRingSpec& spec);
    static FiniteRing build(const RingDescriptor& desc, long long order_cap = 4096);

private:
    int n_ = 0;
    int zero_ = 0, one_ = 0;
    std::vector<std::uint16_t> add_, mul_;
    std::vector<std::uint16_t> neg_;
    std::vector<std::string> labels_;
    std::vector<int> factor_orders_;

    void finish_tables(); // derive zero/one/neg, sanity checks
    friend FiniteRing product_ring(const std::vector<FiniteRing>& factors);
};

bool is_prime_number(long long n);
// decomposes n = p^k; nullopt when n is not a prime power (or n < 2)
std::optional<std::pair<int, int>> prime_power(long long n);

} // namespace pis
