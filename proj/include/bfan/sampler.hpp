#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "bfan/dyadic.hpp"
#include "bfan/errors.hpp"
#include "bfan/families.hpp"
#include "bfan/rng.hpp"

namespace bfan {

struct Estimate {
    double value = 0.0;
    double stderr_ = 0.0; // sample standard deviation / sqrt(samples)
    uint64_t samples = 0;
    uint64_t seed = 0;
};

/// Welford accumulator with exact pairwise merge, so chunked (and threaded)
/// accumulation gives the same bits for any worker count.
struct RunningStat {
    uint64_t count = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        ++count;
        double delta = x - mean;
        mean += delta / (double)count;
        m2 += delta * (x - mean);
    }

    void merge(const RunningStat& other);
    double stderr_() const;
};

/// Drives `per_sample(rng, sample_index) -> double` over `samples` draws.
/// Sample s reads the documented substream `sample_rng(seed, s)`; samples are
/// grouped into fixed chunks of 4096 merged in chunk order, so the result is
/// byte-identical for every thread count.
Estimate run_estimator(uint64_t samples, uint64_t seed, int threads,
                       const std::function<double(CounterRng&, uint64_t)>& per_sample);

/// Validates a sampler index set (1-based, strictly increasing, within [n]).
void check_sampler_set(const PointwiseFunction& f, const std::vector<int>& set, int max_order);

/// Mean of f(x) * chi_set(x) over iid uniform x.
Estimate estimate_coefficient(const PointwiseFunction& f, const std::vector<int>& set,
                              uint64_t samples, uint64_t seed, int threads = 1);

/// Mean of (∂_set f(x))^2, the derivative computed exactly per sample from the
/// 2^|set| signed subcube sum. |set| <= 20.
Estimate estimate_t_influence(const PointwiseFunction& f, const std::vector<int>& set,
                              uint64_t samples, uint64_t seed, int threads = 1);

/// Mean of 1{every member of set is pivotal} over random complement assignments.
Estimate estimate_joint_influence(const PointwiseFunction& f, const std::vector<int>& set,
                                  uint64_t samples, uint64_t seed, int threads = 1);

/// Coupled variant sharing each sample's subcube, so the per-sample dominance
/// 1{all pivotal} >= (∂f)^2 makes joint >= t_influence hold exactly for the
/// returned estimates. Returned as (joint, t_influence).
std::pair<Estimate, Estimate> estimate_joint_and_t_influence(const PointwiseFunction& f,
                                                             const std::vector<int>& set,
                                                             uint64_t samples, uint64_t seed,
                                                             int threads = 1);

/// (P(f = +1), P(f = -1)); the two values sum to 1 exactly.
std::pair<Estimate, Estimate> estimate_sign_probabilities(const PointwiseFunction& f,
                                                          uint64_t samples, uint64_t seed,
                                                          int threads = 1);

/// Unbiased estimate of the level-r Fourier weight W^{=r}(f) from paired
/// samples: E[f(x) f(y) e_r(x∘y)], with e_r the elementary symmetric
/// polynomial of the coordinatewise product.
Estimate estimate_level_weight(const PointwiseFunction& f, int r, uint64_t samples, uint64_t seed,
                               int threads = 1);

/// A tabulated function viewed through the sampler interface.
PointwiseFunction as_pointwise(const BooleanFunction& f);

/// CSV row: estimator,set,value,stderr,samples,seed (set uses spaces).
void append_estimate_csv(std::ostream& os, const std::string& estimator,
                         const std::vector<int>& set, const Estimate& e);
std::string estimate_csv_header();

} // namespace bfan
