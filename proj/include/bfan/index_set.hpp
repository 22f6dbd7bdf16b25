#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bfan/bits.hpp"
#include "bfan/errors.hpp"

namespace bfan {

/// Subset of [n] as an n-bit mask. Bit j (0-based) stands for index j+1 of [n];
/// all reported indices are 1-based to match that convention.
class IndexSet {
public:
    IndexSet() : mask_(0), n_(0) {}
    IndexSet(uint64_t mask, int n) : mask_(mask), n_(n) {
        if (n < 0 || n > 64) fail(errc::dimension_too_large, "IndexSet supports n <= 64");
        if (n < 64 && (mask >> n) != 0) fail(errc::dimension_mismatch, "mask has bits beyond n");
    }

    /// From 1-based indices.
    static IndexSet of(std::initializer_list<int> indices, int n) {
        uint64_t m = 0;
        for (int i : indices) {
            if (i < 1 || i > n) fail(errc::dimension_mismatch, "index out of [n]");
            m |= 1ULL << (i - 1);
        }
        return IndexSet(m, n);
    }

    static IndexSet full(int n) { return IndexSet(n >= 64 ? ~0ULL : (1ULL << n) - 1, n); }
    static IndexSet empty(int n) { return IndexSet(0, n); }

    uint64_t mask() const { return mask_; }
    int n() const { return n_; }
    int size() const { return popcount64(mask_); }
    bool is_empty() const { return mask_ == 0; }
    bool contains(int index_1based) const {
        return index_1based >= 1 && index_1based <= n_ && ((mask_ >> (index_1based - 1)) & 1);
    }
    bool subset_of(const IndexSet& other) const { return (mask_ & ~other.mask_) == 0; }

    /// Sorted 1-based member indices.
    std::vector<int> indices() const {
        std::vector<int> out;
        for (int j = 0; j < n_; ++j)
            if ((mask_ >> j) & 1) out.push_back(j + 1);
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int i : indices()) {
            if (!first) s += ",";
            s += std::to_string(i);
            first = false;
        }
        return s + "}";
    }

    friend bool operator==(const IndexSet& a, const IndexSet& b) {
        return a.mask_ == b.mask_ && a.n_ == b.n_;
    }

private:
    uint64_t mask_;
    int n_;
};

} // namespace bfan
