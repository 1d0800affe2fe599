#pragma once

#include <cstdint>
#include <vector>

namespace pis {

// Subset of ring elements, bit-indexed. Capacity fixed at construction.
class ElemSet {
public:
    ElemSet() = default;
    explicit ElemSet(int capacity)
        : n_(capacity), w_((capacity + 63) / 64, 0) {}

    int capacity() const { return n_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    int count() const {
        int c = 0;
        for (auto w : w_) c += __builtin_popcountll(w);
        return c;
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(count());
        for (int i = 0; i < n_; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }

    bool operator==(const ElemSet& o) const { return w_ == o.w_; }
    bool operator!=(const ElemSet& o) const { return w_ != o.w_; }

    bool contains(const ElemSet& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (o.w_[i] & ~w_[i]) return false;
        return true;
    }

    // Canonical order: cardinality, then smallest differing member
    // (the set holding the smaller element sorts first).
    bool canonical_less(const ElemSet& o) const {
        int ca = count(), cb = o.count();
        if (ca != cb) return ca < cb;
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t d = w_[i] ^ o.w_[i];
            if (d) {
                std::uint64_t low = d & (~d + 1);
                return w_[i] & low;
            }
        }
        return false;
    }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ull;
        for (auto w : w_) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return h;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct ElemSetHash {
    std::size_t operator()(const ElemSet& s) const { return s.hash(); }
};

} // namespace pis
