#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bfan/families.hpp"
#include "bfan/sampler.hpp"

namespace bfan {

struct SharpnessOptions {
    uint64_t samples = 100000;       // sign-probability / level-weight draws
    uint64_t jinf_sets = 200;        // sampled d-sets for the JInf maximum
    uint64_t jinf_samples = 2000;    // draws per sampled d-set
    int threads = 1;
    std::optional<bool> force_exact; // override the exact-vs-sampled choice
};

/// One row of the hypertribe sharpness table: the realized packing's shape,
/// outcome probabilities, the max joint influence over d-sets, W^{>=d}, and
/// their ratio against (log2 n / n)^d. Exact at tabulatable sizes, Monte
/// Carlo beyond; stderr columns are 0 for exact entries.
struct SharpnessRow {
    int n = 0, k = 0, d = 0;
    uint64_t seed = 0;
    uint64_t block_count = 0;
    double coverage = 0.0;
    double t_over_2k = 0.0;
    bool exact = false;
    bool degenerate = false; // W^{>=d} = 0: the ratio is 0/0

    double p_plus = 0.0, p_plus_stderr = 0.0;
    double p_minus = 0.0, p_minus_stderr = 0.0;
    double max_jinf = 0.0, max_jinf_stderr = 0.0;
    std::vector<int> max_jinf_set; // 1-based witness
    double w_ge_d = 0.0, w_ge_d_stderr = 0.0;
    double ratio = 0.0, ratio_stderr = 0.0;

    // Harris floor consistency for P(H = -1): floor = (1 - 2^-k)^t, compared
    // one-sided at 3 stderr when the t 2^-k <= 1/4 gate holds.
    bool harris_gate = false;
    double harris_floor = 0.0;
    bool harris_ok = true;

    uint64_t jinf_sets_sampled = 0;
};

SharpnessRow sharpness_report(const TribeSpec& spec, int d, uint64_t sampling_seed,
                              const SharpnessOptions& opts = {});

std::string sharpness_csv_header();
void append_sharpness_csv(std::ostream& os, const SharpnessRow& row);

} // namespace bfan
