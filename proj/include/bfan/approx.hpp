#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bfan/boolean_function.hpp"
#include "bfan/dyadic.hpp"
#include "bfan/fourier.hpp"
#include "bfan/index_set.hpp"

namespace bfan {

/// Closest degree-<=d Boolean function to f in || . ||_2^2, found by search.
struct ApproxResult {
    BooleanFunction g;
    Dyadic distance_sq;
    bool is_unique = false;
    /// |f-hat(j) - g-hat(j)| for every j with |j| <= d, in mask order.
    std::vector<std::pair<IndexSet, Dyadic>> coeff_deviations;
};

enum class ApproxMethod {
    automatic, // exhaustive when n <= 4, otherwise reject
    exhaustive,
    lattice,
};

/// Minimal ||f - g||_2^2 over degree-<=d Boolean g. Ties resolve toward the
/// lexicographically smallest truth table; is_unique reports whether the
/// minimizer was sole. The exhaustive route filters every function on n <= 4;
/// the lattice route enumerates spectra in Z/2^{d-1} with unit mass (n <= 10)
/// and keeps those that reconstruct to +/-1 tables.
ApproxResult nearest_low_degree(const BooleanFunction& f, int d,
                                ApproxMethod method = ApproxMethod::automatic);

/// Empirical FKN-type report: the smallest admissible alpha for the influence
/// hypothesis at degree d+1, the nearest degree-<=d g, and the per-set ratios
/// |f-hat(j) - g-hat(j)| / (alpha (ln n / n)^{|j|}). No constant is certified.
struct FknRow {
    IndexSet set;
    Dyadic deviation;
    double denom = 0.0;
    double ratio = 0.0;
};

struct FknReport {
    int d = 0;
    IndexSet argmax_set;       // witness of MaxInf_{d+1}
    Dyadic max_influence_d1;   // MaxInf_{d+1}(f)
    double alpha_star = 0.0;   // MaxInf_{d+1}(f) * (n / ln n)^{d+1}
    ApproxResult approx;
    std::vector<FknRow> rows;
};

FknReport fkn_report(const BooleanFunction& f, int d,
                     ApproxMethod method = ApproxMethod::automatic);

} // namespace bfan
