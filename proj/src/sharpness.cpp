#include "bfan/sharpness.hpp"

#include <cmath>
#include <limits>
#include <ostream>

#include "bfan/fourier.hpp"
#include "bfan/influence.hpp"

namespace bfan {

namespace {

// Estimator substreams: each quantity reads its own derived seed so the row
// is reproducible and insensitive to evaluation order.
uint64_t derived_seed(uint64_t seed, uint64_t tag) { return CounterRng::mix(seed ^ tag); }

std::vector<int> draw_d_set(int n, int d, CounterRng& rng) {
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i + 1;
    std::vector<int> out(d);
    for (int i = 0; i < d; ++i) {
        uint64_t j = i + rng.below((uint64_t)(n - i));
        std::swap(pool[i], pool[j]);
        out[i] = pool[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool exact_feasible(const TribeSpec& spec, int d) {
    if (spec.n > max_dimension()) return false;
    // Joint influence over all d-sets costs about C(n,d) * 2^n subcube reads.
    long double work = (long double)binomial((uint64_t)spec.n, (uint64_t)d) *
                       (long double)((uint64_t)1 << spec.n);
    return work <= (long double)(1ULL << 28);
}

} // namespace

SharpnessRow sharpness_report(const TribeSpec& spec, int d, uint64_t sampling_seed,
                              const SharpnessOptions& opts) {
    if (d < 1 || d > spec.n) fail(errc::bad_degree, "d must be in [1, n]");
    if (opts.samples < 2 || opts.jinf_samples < 2)
        fail(errc::budget_exhausted, "sample budget must be at least 2");

    SharpnessRow row;
    row.n = spec.n;
    row.k = spec.k;
    row.d = d;
    row.seed = sampling_seed;
    CoverageStats cov = coverage_stats(spec.packing);
    row.block_count = cov.block_count;
    row.coverage = cov.coverage_ratio;
    row.t_over_2k = cov.t_over_2k;

    row.harris_gate = spec.k >= 2 && row.t_over_2k <= 0.25;
    row.harris_floor =
        std::pow(1.0 - std::ldexp(1.0, -spec.k), (double)row.block_count);

    row.exact = opts.force_exact.value_or(exact_feasible(spec, d));
    if (row.exact) {
        BooleanFunction f = materialize(spec);
        FourierTable t = fwht(f);
        uint64_t ones = f.count_ones();
        row.p_plus = std::ldexp((double)ones, -spec.n);
        row.p_minus = 1.0 - row.p_plus;
        row.w_ge_d = weight_at_least(t, d).to_double();

        Dyadic best;
        uint64_t best_mask = 0;
        bool have = false;
        for_each_subset_of_size(spec.n, d, [&](uint64_t m) {
            Dyadic v = joint_influence(f, IndexSet(m, spec.n));
            if (!have || v > best) {
                best = v;
                best_mask = m;
                have = true;
            }
        });
        row.max_jinf = best.to_double();
        row.max_jinf_set = IndexSet(best_mask, spec.n).indices();
        row.jinf_sets_sampled = binomial((uint64_t)spec.n, (uint64_t)d);
        row.harris_ok = row.p_minus >= row.harris_floor - 1e-15;
    } else {
        PointwiseFunction f = tribe_evaluator(spec);
        auto [plus, minus] =
            estimate_sign_probabilities(f, opts.samples, derived_seed(sampling_seed, 1), opts.threads);
        row.p_plus = plus.value;
        row.p_plus_stderr = plus.stderr_;
        row.p_minus = minus.value;
        row.p_minus_stderr = minus.stderr_;
        row.harris_ok = !row.harris_gate || row.p_minus >= row.harris_floor - 3 * minus.stderr_;

        // W^{>=d} = 1 - sum_{r<d} W^{=r}, each level estimated unbiasedly.
        double w = 1.0, var = 0.0;
        for (int r = 0; r < d; ++r) {
            Estimate lw = estimate_level_weight(f, r, opts.samples,
                                                derived_seed(sampling_seed, 2 + (uint64_t)r),
                                                opts.threads);
            w -= lw.value;
            var += lw.stderr_ * lw.stderr_;
        }
        row.w_ge_d = w;
        row.w_ge_d_stderr = std::sqrt(var);

        CounterRng set_rng(derived_seed(sampling_seed, 100));
        double best = -1.0, best_se = 0.0;
        std::vector<int> best_set;
        for (uint64_t s = 0; s < opts.jinf_sets; ++s) {
            std::vector<int> set = draw_d_set(spec.n, d, set_rng);
            Estimate e = estimate_joint_influence(
                f, set, opts.jinf_samples, derived_seed(sampling_seed, 1000 + s), opts.threads);
            if (e.value > best) {
                best = e.value;
                best_se = e.stderr_;
                best_set = set;
            }
        }
        row.max_jinf = best;
        row.max_jinf_stderr = best_se;
        row.max_jinf_set = best_set;
        row.jinf_sets_sampled = opts.jinf_sets;
    }

    double scale = std::pow(std::log2((double)spec.n) / (double)spec.n, d);
    double denom = row.w_ge_d * scale;
    if (row.w_ge_d <= 0.0 && row.max_jinf <= 0.0) {
        row.degenerate = true;
        row.ratio = 0.0;
        row.ratio_stderr = 0.0;
    } else if (denom == 0.0) {
        row.degenerate = true;
        row.ratio = std::numeric_limits<double>::infinity();
    } else {
        row.ratio = row.max_jinf / denom;
        // First-order propagation through x/y.
        row.ratio_stderr = row.max_jinf_stderr / denom +
                           row.max_jinf * row.w_ge_d_stderr / (row.w_ge_d * denom);
    }
    return row;
}

std::string sharpness_csv_header() {
    return "n,k,d,seed,blocks,coverage,t_over_2k,exact,p_plus,p_plus_stderr,p_minus,"
           "p_minus_stderr,max_jinf,max_jinf_stderr,max_jinf_set,w_ge_d,w_ge_d_stderr,"
           "ratio,ratio_stderr,degenerate,harris_gate,harris_floor,harris_ok,jinf_sets";
}

void append_sharpness_csv(std::ostream& os, const SharpnessRow& r) {
    os.precision(17);
    os << r.n << "," << r.k << "," << r.d << "," << r.seed << "," << r.block_count << ","
       << r.coverage << "," << r.t_over_2k << "," << (r.exact ? 1 : 0) << "," << r.p_plus << ","
       << r.p_plus_stderr << "," << r.p_minus << "," << r.p_minus_stderr << "," << r.max_jinf
       << "," << r.max_jinf_stderr << ",";
    for (size_t i = 0; i < r.max_jinf_set.size(); ++i) os << (i ? " " : "") << r.max_jinf_set[i];
    os << "," << r.w_ge_d << "," << r.w_ge_d_stderr << "," << r.ratio << "," << r.ratio_stderr
       << "," << (r.degenerate ? 1 : 0) << "," << (r.harris_gate ? 1 : 0) << "," << r.harris_floor
       << "," << (r.harris_ok ? 1 : 0) << "," << r.jinf_sets_sampled << "\n";
}

} // namespace bfan
