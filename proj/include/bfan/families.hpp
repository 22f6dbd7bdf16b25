#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "bfan/boolean_function.hpp"
#include "bfan/packing.hpp"

namespace bfan {

/// Evaluator over packed +/-1 points (bit i set = x_{i+1} = +1) for functions
/// too wide to tabulate. Deterministic: same point, same value.
struct PointwiseFunction {
    int n = 0;
    std::function<int(const std::vector<uint64_t>&)> eval;

    int operator()(const std::vector<uint64_t>& point) const { return eval(point); }
};

BooleanFunction dictator(int n, int index_1based = 1);
BooleanFunction parity(int n, uint64_t mask);
inline BooleanFunction parity_full(int n) { return parity(n, n >= 64 ? ~0ULL : (1ULL << n) - 1); }
BooleanFunction majority(int n); // n odd
BooleanFunction and_function(int n);
BooleanFunction or_function(int n);

/// Ben-Or-Linial tribes: OR of ANDs over n/w disjoint blocks of width w.
/// +1 plays true; w must divide n.
BooleanFunction tribes(int n, int w);

/// OR-of-ANDs over an arbitrary block family (d-hypertribes and friends).
struct TribeSpec {
    int n = 0;
    int k = 0;          // tribe size
    int d = 0;          // hypertribe order; 0 for plain disjoint tribes
    uint64_t seed = 0;
    bool k_rounded = false; // k(n) formula was not an integer and got rounded
    double k_exact = 0.0;
    Packing packing;
};

PointwiseFunction tribe_evaluator(const TribeSpec& spec);

/// Materializes the OR-of-ANDs as a dense table (n <= cap).
BooleanFunction materialize(const TribeSpec& spec);

/// Tribe size k(n) = round(d * log2(n / log2 n)), clamped to >= d.
int hypertribe_block_size(int n, int d, double* exact = nullptr);

/// Greedy d-set-disjoint packing of k(n)-sets plus its voting function.
TribeSpec hypertribe(int n, int d, uint64_t seed, std::optional<int> k_override = {});

/// Plain tribes expressed as a TribeSpec (disjoint partition, d = 0).
TribeSpec tribes_spec(int n, int w);

} // namespace bfan
