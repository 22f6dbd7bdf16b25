#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bfan/bits.hpp"
#include "bfan/errors.hpp"
#include "bfan/rng.hpp"

namespace bfan {

/// Family of k-subsets of [n] in which every d-subset of [n] lies in at most
/// one block (equivalently, distinct blocks intersect in at most d-1 points).
/// Blocks hold sorted 0-based positions; serialization is 1-based.
struct Packing {
    int n = 0;
    int k = 0;
    int d = 0;
    uint64_t seed = 0;
    std::vector<std::vector<int>> blocks;

    size_t block_count() const { return blocks.size(); }
};

struct CoverageStats {
    uint64_t covered_d_sets = 0;
    uint64_t total_d_sets = 0;
    uint64_t block_count = 0;
    double coverage_ratio = 0.0;
    double t_over_2k = 0.0; // t * 2^-k, the P2 sanity band
};

struct GreedyOptions {
    /// Attempt budget; defaults to 50 * C(n,d) / C(k,d) random draws.
    std::optional<uint64_t> attempt_budget;
    /// Scan candidate k-sets in lexicographic order instead of sampling.
    /// Only feasible when C(n,k) is small; guarded.
    bool lexicographic = false;
};

/// Seeded random-greedy packing: draw k-sets, accept a block iff all of its
/// C(k,d) d-subsets are still uncovered. The d-set-disjointness invariant
/// holds by construction; coverage is measured, not guaranteed.
Packing greedy_packing(int n, int k, int d, uint64_t seed, const GreedyOptions& opts = {});

CoverageStats coverage_stats(const Packing& p);

/// Exhaustively verifies that no d-set lies in two blocks.
bool packing_valid(const Packing& p);

/// Number of blocks containing `subset` (sorted 0-based positions).
uint64_t blocks_containing(const Packing& p, const std::vector<int>& subset);

std::string packing_to_json(const Packing& p);
Packing packing_from_json(const std::string& text);

} // namespace bfan
