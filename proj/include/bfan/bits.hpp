#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "bfan/errors.hpp"

namespace bfan {

inline int popcount64(uint64_t x) { return std::popcount(x); }

/// Next mask with the same popcount (Gosper). Returns 0 past the last one.
inline uint64_t next_same_popcount(uint64_t v) {
    if (v == 0) return 0;
    uint64_t c = v & (~v + 1);
    uint64_t r = v + c;
    if (r == 0) return 0; // would overflow: v was the top run
    return r | (((v ^ r) >> 2) / c);
}

/// First n-bit mask with popcount k, or 0 if k == 0.
inline uint64_t first_mask_of_weight(int k) { return k == 0 ? 0 : (k >= 64 ? ~0ULL : ((1ULL << k) - 1)); }

/// Calls fn(mask) for every k-subset mask of [0,n).
template <class Fn>
void for_each_subset_of_size(int n, int k, Fn&& fn) {
    if (k < 0 || k > n) return;
    if (k == 0) {
        fn(uint64_t{0});
        return;
    }
    uint64_t limit = (n >= 64) ? 0 : (1ULL << n);
    for (uint64_t m = first_mask_of_weight(k); m != 0 && (limit == 0 || m < limit);
         m = next_same_popcount(m)) {
        fn(m);
    }
}

/// Calls fn(s) for every superset s of `base` within the n-bit universe (base included).
template <class Fn>
void for_each_superset(uint64_t base, int n, Fn&& fn) {
    uint64_t universe = (n >= 64) ? ~0ULL : ((1ULL << n) - 1);
    uint64_t free_bits = universe & ~base;
    uint64_t s = 0;
    while (true) {
        fn(base | s);
        if (s == free_bits) break;
        s = (s - free_bits) & free_bits; // enumerate subsets of free_bits
    }
}

/// C(n, k) in uint64; throws on overflow (only small k are used here).
inline uint64_t binomial(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > (unsigned __int128)UINT64_MAX) fail(errc::bad_parameters, "binomial overflow");
    }
    return (uint64_t)r;
}

/// Colex rank of a sorted 0-based k-subset: sum of C(elem[j], j+1).
inline uint64_t colex_rank(const std::vector<int>& sorted_elems) {
    uint64_t r = 0;
    for (size_t j = 0; j < sorted_elems.size(); ++j) r += binomial((uint64_t)sorted_elems[j], j + 1);
    return r;
}

} // namespace bfan
