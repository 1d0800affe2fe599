#include "pis/ring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>

namespace pis {

bool is_prime_number(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::optional<std::pair<int, int>> prime_power(long long n) {
    if (n < 2) return std::nullopt;
    long long p = n;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            p = d;
            break;
        }
    int k = 0;
    long long m = n;
    while (m % p == 0) {
        m /= p;
        ++k;
    }
    if (m != 1) return std::nullopt;
    return std::make_pair(int(p), k);
}

long long LocalRingSpec::order() const {
    auto pw = [](long long b, int e) {
        long long r = 1;
        while (e-- > 0) r *= b;
        return r;
    };
    switch (family) {
        case LocalFamily::ZMod: return pw(p, k);
        case LocalFamily::GaloisField: return pw(p, k);
        case LocalFamily::ChainRing: return pw(q, k);
        case LocalFamily::BiNil: return pw(q, 4);
        case LocalFamily::FourNil: return 8;
    }
    return 0;
}

std::string LocalRingSpec::text() const {
    switch (family) {
        case LocalFamily::ZMod: return "Z/" + std::to_string(order());
        case LocalFamily::GaloisField: return "GF(" + std::to_string(order()) + ")";
        case LocalFamily::ChainRing:
            return "GF(" + std::to_string(q) + ")[t]/t^" + std::to_string(k);
        case LocalFamily::BiNil:
            return "GF(" + std::to_string(q) + ")[x,y]/(x2,y2)";
        case LocalFamily::FourNil: return "Z4[x]/(x2,2x)";
    }
    return "";
}

long long RingDescriptor::order() const {
    long long n = 1;
    for (const auto& f : factors) n *= f.order();
    return n;
}

std::string RingDescriptor::text() const {
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += " x ";
        out += factors[i].text();
    }
    return out;
}

// ---------------------------------------------------------------- parsing

namespace {

struct Cursor {
    std::string s;           // whitespace-stripped input
    std::vector<std::size_t> orig; // position in original text per char
    std::size_t i = 0;

    explicit Cursor(std::string_view text) {
        for (std::size_t j = 0; j < text.size(); ++j) {
            if (!std::isspace(static_cast<unsigned char>(text[j]))) {
                s.push_back(text[j]);
                orig.push_back(j);
            }
        }
    }

    std::size_t pos() const { return i < orig.size() ? orig[i] : (orig.empty() ? 0 : orig.back() + 1); }
    bool eof() const { return i >= s.size(); }
    bool lookahead(std::string_view lit) const { return s.compare(i, lit.size(), lit) == 0; }

    void expect(std::string_view lit, const char* what) {
        if (!lookahead(lit))
            throw ParseError(std::string("expected '") + std::string(lit) + "' in " + what, pos());
        i += lit.size();
    }

    long long integer(const char* what) {
        if (eof() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError(std::string("expected integer in ") + what, pos());
        long long v = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            if (v > 1'000'000'000) throw ParseError("integer too large", pos());
            ++i;
        }
        return v;
    }
};

LocalRingSpec parse_local(Cursor& c) {
    LocalRingSpec spec;
    std::size_t start = c.pos();
    if (c.lookahead("Z4[x]/(x2,2x)")) {
        c.i += std::string_view("Z4[x]/(x2,2x)").size();
        spec.family = LocalFamily::FourNil;
        return spec;
    }
    if (c.lookahead("Z/")) {
        c.i += 2;
        long long n = c.integer("Z/ modulus");
        auto pk = prime_power(n);
        if (!pk) throw ParseError(std::to_string(n) + " is not a prime power", start);
        spec.family = LocalFamily::ZMod;
        spec.p = pk->first;
        spec.k = pk->second;
        return spec;
    }
    if (c.lookahead("GF(")) {
        c.i += 3;
        long long q = c.integer("GF order");
        auto pk = prime_power(q);
        if (!pk) throw ParseError(std::to_string(q) + " is not a prime power", start);
        c.expect(")", "GF(...)");
        if (c.lookahead("[t]/t^")) {
            c.i += std::string_view("[t]/t^").size();
            long long k = c.integer("chain length");
            if (k < 1) throw ParseError("chain length must be positive", start);
            spec.family = LocalFamily::ChainRing;
            spec.q = int(q);
            spec.k = int(k);
            return spec;
        }
        if (c.lookahead("[x,y]/(x2,y2)")) {
            c.i += std::string_view("[x,y]/(x2,y2)").size();
            spec.family = LocalFamily::BiNil;
            spec.q = int(q);
            return spec;
        }
        spec.family = LocalFamily::GaloisField;
        spec.p = pk->first;
        spec.k = pk->second;
        return spec;
    }
    throw ParseError("unsupported ring family", start);
}

} // namespace

RingDescriptor parse_ring_spec(std::string_view text) {
    Cursor c(text);
    if (c.eof()) throw ParseError("empty ring spec", 0);
    RingDescriptor d;
    d.factors.push_back(parse_local(c));
    while (!c.eof()) {
        if (c.s[c.i] != 'x')
            throw ParseError("expected 'x' between factors", c.pos());
        ++c.i;
        d.factors.push_back(parse_local(c));
    }
    return d;
}

// ------------------------------------------------------------ construction

namespace {

// smallest-lexicographic monic irreducible polynomials over GF(p),
// coefficients c0..ck (constant term first), k in 2..4, p^k <= 4096
const std::map<std::pair<int, int>, std::vector<int>>& irreducible_table() {
    static const std::map<std::pair<int, int>, std::vector<int>> table = {
        {{2, 2}, {1, 1, 1}},
        {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},
        {{3, 2}, {1, 0, 1}},
        {{3, 3}, {1, 2, 0, 1}},
        {{3, 4}, {2, 1, 0, 0, 1}},
        {{5, 2}, {2, 0, 1}},
        {{5, 3}, {1, 1, 0, 1}},
        {{5, 4}, {2, 0, 0, 0, 1}},
        {{7, 2}, {1, 0, 1}},
        {{7, 3}, {2, 0, 0, 1}},
        {{7, 4}, {1, 1, 0, 0, 1}},
        {{11, 2}, {1, 0, 1}},
        {{11, 3}, {4, 1, 0, 1}},
        {{13, 2}, {2, 0, 1}},
        {{13, 3}, {2, 0, 0, 1}},
        {{17, 2}, {3, 0, 1}},
        {{19, 2}, {1, 0, 1}},
        {{23, 2}, {1, 0, 1}},
        {{29, 2}, {2, 0, 1}},
        {{31, 2}, {1, 0, 1}},
        {{37, 2}, {2, 0, 1}},
        {{41, 2}, {3, 0, 1}},
        {{43, 2}, {1, 0, 1}},
        {{47, 2}, {1, 0, 1}},
        {{53, 2}, {2, 0, 1}},
        {{59, 2}, {1, 0, 1}},
        {{61, 2}, {2, 0, 1}},
    };
    return table;
}

using Table = std::vector<std::uint16_t>;

struct RawRing {
    int n = 0;
    Table add, mul;
    std::vector<std::string> labels;
};

// polynomial helpers over Z/p, coefficients little-endian
std::vector<int> poly_mul_mod(const std::vector<int>& a, const std::vector<int>& b,
                              const std::vector<int>& f, int p) {
    std::vector<int> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    int df = int(f.size()) - 1;
    for (int d = int(r.size()) - 1; d >= df; --d) {
        int c = r[d];
        if (c == 0) continue;
        for (int i = 0; i <= df; ++i)
            r[d - df + i] = ((r[d - df + i] - c * f[i]) % p + p * p) % p;
    }
    r.resize(df, 0);
    return r;
}

RawRing make_zmod(int n) {
    RawRing r;
    r.n = n;
    r.add.resize(std::size_t(n) * n);
    r.mul.resize(std::size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            r.add[std::size_t(a) * n + b] = std::uint16_t((a + b) % n);
            r.mul[std::size_t(a) * n + b] = std::uint16_t((std::int64_t(a) * b) % n);
        }
    r.labels.resize(n);
    for (int a = 0; a < n; ++a) r.labels[a] = std::to_string(a);
    return r;
}

std::string poly_label(const std::vector<int>& e, const char* var) {
    std::string out;
    for (int i = int(e.size()) - 1; i >= 0; --i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(e[i]);
        } else {
            if (e[i] != 1) out += std::to_string(e[i]);
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

RawRing make_gf(int p, int k) {
    if (k == 1) return make_zmod(p);
    auto it = irreducible_table().find({p, k});
    if (it == irreducible_table().end())
        throw std::invalid_argument("GF(" + std::to_string(p) + "^" + std::to_string(k) +
                                    ") is outside the supported field table (k <= 4, order <= 4096)");
    const std::vector<int>& f = it->second;
    int n = 1;
    for (int i = 0; i < k; ++i) n *= p;
    auto decode = [&](int idx) {
        std::vector<int> e(k);
        for (int i = 0; i < k; ++i) {
            e[i] = idx % p;
            idx /= p;
        }
        return e;
    };
    auto encode = [&](const std::vector<int>& e) {
        int idx = 0;
        for (int i = k - 1; i >= 0; --i) idx = idx * p + e[i];
        return idx;
    };
    RawRing r;
    r.n = n;
    r.add.resize(std::size_t(n) * n);
    r.mul.resize(std::size_t(n) * n);
    r.labels.resize(n);
    for (int a = 0; a < n; ++a) {
        auto ea = decode(a);
        r.labels[a] = poly_label(ea, "a");
        for (int b = 0; b < n; ++b) {
            auto eb = decode(b);
            std::vector<int> s(k);
            for (int i = 0; i < k; ++i) s[i] = (ea[i] + eb[i]) % p;
            r.add[std::size_t(a) * n + b] = std::uint16_t(encode(s));
            r.mul[std::size_t(a) * n + b] = std::uint16_t(encode(poly_mul_mod(ea, eb, f, p)));
        }
    }
    return r;
}

RawRing make_chain(int q, int k) {
    RawRing base = make_gf(prime_power(q)->first, prime_power(q)->second);
    if (k == 1) return base;
    int bn = base.n;
    long long n = 1;
    for (int i = 0; i < k; ++i) n *= bn;
    RawRing r;
    r.n = int(n);
    r.add.resize(std::size_t(n) * n);
    r.mul.resize(std::size_t(n) * n);
    r.labels.resize(n);
    auto decode = [&](int idx) {
        std::vector<int> e(k);
        for (int i = 0; i < k; ++i) {
            e[i] = idx % bn;
            idx /= bn;
        }
        return e;
    };
    auto encode = [&](const std::vector<int>& e) {
        long long idx = 0;
        for (int i = k - 1; i >= 0; --i) idx = idx * bn + e[i];
        return int(idx);
    };
    auto badd = [&](int a, int b) { return base.add[std::size_t(a) * bn + b]; };
    auto bmul = [&](int a, int b) { return base.mul[std::size_t(a) * bn + b]; };
    for (int a = 0; a < n; ++a) {
        auto ea = decode(a);
        std::string lab;
        for (int i = k - 1; i >= 0; --i) {
            if (ea[i] == 0) continue; // base zero has index 0 (all-zero coeff vector)
            if (!lab.empty()) lab += "+";
            std::string cl = base.labels[ea[i]];
            if (i == 0) {
                lab += cl;
            } else {
                if (cl != "1") lab += (cl.find('+') == std::string::npos) ? cl : "(" + cl + ")";
                lab += "t";
                if (i > 1) lab += "^" + std::to_string(i);
            }
        }
        r.labels[a] = lab.empty() ? "0" : lab;
        for (int b = 0; b < n; ++b) {
            auto eb = decode(b);
            std::vector<int> s(k), m(k, 0);
            for (int i = 0; i < k; ++i) s[i] = badd(ea[i], eb[i]);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j + i < k; ++j) m[i + j] = badd(m[i + j], bmul(ea[i], eb[j]));
            r.add[std::size_t(a) * n + b] = std::uint16_t(encode(s));
            r.mul[std::size_t(a) * n + b] = std::uint16_t(encode(m));
        }
    }
    return r;
}

RawRing make_binil(int q) {
    auto pk = prime_power(q);
    RawRing base = make_gf(pk->first, pk->second);
    int bn = base.n;
    long long n = std::int64_t(bn) * bn * bn * bn;
    RawRing r;
    r.n = int(n);
    r.add.resize(std::size_t(n) * n);
    r.mul.resize(std::size_t(n) * n);
    r.labels.resize(n);
    auto badd = [&](int a, int b) { return base.add[std::size_t(a) * bn + b]; };
    auto bmul = [&](int a, int b) { return base.mul[std::size_t(a) * bn + b]; };
    auto decode = [&](int idx) {
        std::vector<int> e(4);
        for (int i = 0; i < 4; ++i) {
            e[i] = idx % bn;
            idx /= bn;
        }
        return e; // coefficients of 1, x, y, xy
    };
    auto encode = [&](const std::vector<int>& e) {
        long long idx = 0;
        for (int i = 3; i >= 0; --i) idx = idx * bn + e[i];
        return int(idx);
    };
    static const char* basis[4] = {"", "x", "y", "xy"};
    for (int a = 0; a < n; ++a) {
        auto ea = decode(a);
        std::string lab;
        for (int i = 0; i < 4; ++i) {
            if (ea[i] == 0) continue;
            if (!lab.empty()) lab += "+";
            std::string cl = base.labels[ea[i]];
            if (i == 0) lab += cl;
            else {
                if (cl != "1") lab += (cl.find('+') == std::string::npos) ? cl : "(" + cl + ")";
                lab += basis[i];
            }
        }
        r.labels[a] = lab.empty() ? "0" : lab;
        for (int b = 0; b < n; ++b) {
            auto eb = decode(b);
            std::vector<int> s(4), m(4);
            for (int i = 0; i < 4; ++i) s[i] = badd(ea[i], eb[i]);
            m[0] = bmul(ea[0], eb[0]);
            m[1] = badd(bmul(ea[0], eb[1]), bmul(ea[1], eb[0]));
            m[2] = badd(bmul(ea[0], eb[2]), bmul(ea[2], eb[0]));
            m[3] = badd(badd(bmul(ea[0], eb[3]), bmul(ea[3], eb[0])),
                        badd(bmul(ea[1], eb[2]), bmul(ea[2], eb[1])));
            r.add[std::size_t(a) * n + b] = std::uint16_t(encode(s));
            r.mul[std::size_t(a) * n + b] = std::uint16_t(encode(m));
        }
    }
    return r;
}

RawRing make_fournil() {
    // elements a + b*x with a in Z4, b in Z2; x^2 = 0 and 2x = 0
    RawRing r;
    r.n = 8;
    r.add.resize(64);
    r.mul.resize(64);
    r.labels.resize(8);
    auto enc = [](int a, int b) { return a * 2 + b; };
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 2; ++b) {
            int i = enc(a, b);
            if (b == 0) r.labels[i] = std::to_string(a);
            else r.labels[i] = (a == 0) ? "x" : std::to_string(a) + "+x";
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 2; ++d) {
                    int j = enc(c, d);
                    r.add[std::size_t(i) * 8 + j] = std::uint16_t(enc((a + c) % 4, (b + d) % 2));
                    r.mul[std::size_t(i) * 8 + j] =
                        std::uint16_t(enc((a * c) % 4, (a * d + b * c) % 2));
                }
        }
    return r;
}

RawRing make_raw(const LocalRingSpec& spec) {
    switch (spec.family) {
        case LocalFamily::ZMod: {
            long long n = spec.order();
            if (n > 4096) throw std::invalid_argument("local ring order exceeds 4096");
            return make_zmod(int(n));
        }
        case LocalFamily::GaloisField: return make_gf(spec.p, spec.k);
        case LocalFamily::ChainRing: {
            if (spec.order() > 4096) throw std::invalid_argument("local ring order exceeds 4096");
            return make_chain(spec.q, spec.k);
        }
        case LocalFamily::BiNil: {
            if (spec.order() > 4096) throw std::invalid_argument("local ring order exceeds 4096");
            return make_binil(spec.q);
        }
        case LocalFamily::FourNil: return make_fournil();
    }
    throw std::logic_error("unreachable");
}

} // namespace

void FiniteRing::finish_tables() {
    n_ = int(labels_.size());
    zero_ = -1;
    one_ = -1;
    for (int a = 0; a < n_; ++a) {
        bool isz = true, iso = true;
        for (int b = 0; b < n_; ++b) {
            if (add(a, b) != b) isz = false;
            if (mul(a, b) != b) iso = false;
        }
        if (isz) zero_ = a;
        if (iso) one_ = a;
    }
    if (zero_ < 0 || one_ < 0 || zero_ == one_)
        throw std::logic_error("ring is missing identities");
    neg_.resize(n_);
    for (int a = 0; a < n_; ++a) {
        bool found = false;
        for (int b = 0; b < n_; ++b)
            if (add(a, b) == zero_) {
                neg_[a] = std::uint16_t(b);
                found = true;
                break;
            }
        if (!found) throw std::logic_error("element without additive inverse");
    }
}

FiniteRing FiniteRing::build_local(const LocalRingSpec& spec) {
    RawRing raw = make_raw(spec);
    FiniteRing r;
    r.add_ = std::move(raw.add);
    r.mul_ = std::move(raw.mul);
    r.labels_ = std::move(raw.labels);
    r.factor_orders_ = {raw.n};
    r.finish_tables();
    return r;
}

FiniteRing product_ring(const std::vector<FiniteRing>& factors) {
    long long n = 1;
    for (const auto& f : factors) n *= f.order();
    FiniteRing r;
    r.factor_orders_.reserve(factors.size());
    for (const auto& f : factors) r.factor_orders_.push_back(f.order());
    r.add_.resize(std::size_t(n) * n);
    r.mul_.resize(std::size_t(n) * n);
    r.labels_.resize(n);
    int nf = int(factors.size());
    std::vector<int> da(nf), db(nf), dc(nf);
    auto decode = [&](int idx, std::vector<int>& out) {
        for (int i = nf - 1; i >= 0; --i) {
            out[i] = idx % factors[i].order();
            idx /= factors[i].order();
        }
    };
    auto encode = [&](const std::vector<int>& e) {
        long long idx = 0;
        for (int i = 0; i < nf; ++i) idx = idx * factors[i].order() + e[i];
        return int(idx);
    };
    for (int a = 0; a < n; ++a) {
        decode(a, da);
        if (nf == 1) {
            r.labels_[a] = factors[0].label(da[0]);
        } else {
            std::string lab = "(";
            for (int i = 0; i < nf; ++i) {
                if (i) lab += ",";
                lab += factors[i].label(da[i]);
            }
            lab += ")";
            r.labels_[a] = lab;
        }
        for (int b = 0; b < n; ++b) {
            decode(b, db);
            for (int i = 0; i < nf; ++i) dc[i] = factors[i].add(da[i], db[i]);
            r.add_[std::size_t(a) * n + b] = std::uint16_t(encode(dc));
            for (int i = 0; i < nf; ++i) dc[i] = factors[i].mul(da[i], db[i]);
            r.mul_[std::size_t(a) * n + b] = std::uint16_t(encode(dc));
        }
    }
    r.finish_tables();
    return r;
}

FiniteRing FiniteRing::build(const RingDescriptor& desc, long long order_cap) {
    if (desc.factors.empty()) throw std::invalid_argument("descriptor has no factors");
    if (desc.order() > order_cap)
        throw std::invalid_argument("ring order " + std::to_string(desc.order()) +
                                    " exceeds cap " + std::to_string(order_cap));
    std::vector<FiniteRing> locals;
    locals.reserve(desc.factors.size());
    for (const auto& f : desc.factors) locals.push_back(build_local(f));
    if (locals.size() == 1) return std::move(locals[0]);
    return product_ring(locals);
}

std::vector<int> FiniteRing::factor_projection(int elem) const {
    std::vector<int> out(factor_orders_.size());
    for (int i = int(factor_orders_.size()) - 1; i >= 0; --i) {
        out[i] = elem % factor_orders_[i];
        elem /= factor_orders_[i];
    }
    return out;
}

int FiniteRing::factor_component(int elem, int which) const {
    for (int i = int(factor_orders_.size()) - 1; i > which; --i) elem /= factor_orders_[i];
    return elem % factor_orders_[which];
}

void FiniteRing::validate(int full_check_limit) const {
    const int n = n_;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (add(a, b) != add(b, a)) throw std::logic_error("addition not commutative");
            if (mul(a, b) != mul(b, a)) throw std::logic_error("multiplication not commutative");
        }
    if (add(zero_, zero_) != zero_ || mul(one_, one_) != one_)
        throw std::logic_error("identity table broken");
    auto check_triple = [&](int a, int b, int c) {
        if (add(add(a, b), c) != add(a, add(b, c)))
            throw std::logic_error("addition not associative");
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw std::logic_error("multiplication not associative");
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
            throw std::logic_error("multiplication does not distribute");
    };
    if (n <= full_check_limit) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) check_triple(a, b, c);
    } else {
        std::mt19937_64 rng(0xC0FFEE);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int t = 0; t < 2'000'000; ++t) check_triple(pick(rng), pick(rng), pick(rng));
    }
}

} // namespace pis
