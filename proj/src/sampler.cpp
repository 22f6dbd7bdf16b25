#include "bfan/sampler.hpp"

#include <atomic>
#include <cmath>
#include <ostream>
#include <thread>

namespace bfan {

void RunningStat::merge(const RunningStat& other) {
    if (other.count == 0) return;
    if (count == 0) {
        *this = other;
        return;
    }
    double delta = other.mean - mean;
    uint64_t total = count + other.count;
    mean += delta * ((double)other.count / (double)total);
    m2 += other.m2 + delta * delta * ((double)count * (double)other.count / (double)total);
    count = total;
}

double RunningStat::stderr_() const {
    if (count < 2) return 0.0;
    double var = m2 / (double)(count - 1);
    if (var < 0) var = 0;
    return std::sqrt(var / (double)count);
}

namespace {
constexpr uint64_t kChunk = 4096;
} // namespace

Estimate run_estimator(uint64_t samples, uint64_t seed, int threads,
                       const std::function<double(CounterRng&, uint64_t)>& per_sample) {
    if (samples < 2) fail(errc::bad_parameters, "need at least 2 samples");
    const uint64_t chunks = (samples + kChunk - 1) / kChunk;
    std::vector<RunningStat> stats(chunks);

    auto run_chunk = [&](uint64_t c) {
        RunningStat st;
        const uint64_t hi = std::min(samples, (c + 1) * kChunk);
        for (uint64_t s = c * kChunk; s < hi; ++s) {
            CounterRng rng = sample_rng(seed, s);
            st.add(per_sample(rng, s));
        }
        stats[c] = st;
    };

    if (threads <= 1 || chunks == 1) {
        for (uint64_t c = 0; c < chunks; ++c) run_chunk(c);
    } else {
        std::atomic<uint64_t> next{0};
        auto worker = [&] {
            while (true) {
                uint64_t c = next.fetch_add(1);
                if (c >= chunks) break;
                run_chunk(c);
            }
        };
        std::vector<std::thread> pool;
        int nthreads = std::min<int>(threads, (int)chunks);
        pool.reserve(nthreads);
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    RunningStat all;
    for (const auto& st : stats) all.merge(st);
    return Estimate{all.mean, all.stderr_(), samples, seed};
}

void check_sampler_set(const PointwiseFunction& f, const std::vector<int>& set, int max_order) {
    int prev = 0;
    for (int i : set) {
        if (i < 1 || i > f.n) fail(errc::dimension_mismatch, "set index out of [n]");
        if (i <= prev) fail(errc::bad_parameters, "set must be strictly increasing");
        prev = i;
    }
    if ((int)set.size() > max_order)
        fail(errc::subcube_too_large, "|set| exceeds " + std::to_string(max_order));
}

namespace {

int chi_at(const std::vector<uint64_t>& x, const std::vector<int>& set) {
    int minus = 0;
    for (int i : set) {
        int j = i - 1;
        if (((x[j >> 6] >> (j & 63)) & 1) == 0) ++minus;
    }
    return (minus & 1) ? -1 : 1;
}

struct SubcubeSampler {
    SubcubeSampler(const PointwiseFunction& f, const std::vector<int>& set)
        : f_(&f), r_((int)set.size()) {
        for (int i : set) positions_.push_back(i - 1);
        values_.resize(size_t{1} << r_);
    }

    /// Fills values_ with the subfunction over the set's coordinates at a
    /// freshly drawn complement assignment.
    void draw(CounterRng& rng) {
        std::vector<uint64_t> x = rng.next_bits(f_->n);
        for (uint64_t y = 0; y < values_.size(); ++y) {
            for (int j = 0; j < r_; ++j) {
                int p = positions_[j];
                if ((y >> j) & 1)
                    x[p >> 6] |= 1ULL << (p & 63);
                else
                    x[p >> 6] &= ~(1ULL << (p & 63));
            }
            values_[y] = f_->eval(x);
        }
    }

    double derivative() const {
        int64_t acc = 0;
        for (uint64_t y = 0; y < values_.size(); ++y) {
            int sign = ((r_ - popcount64(y)) & 1) ? -1 : 1;
            acc += sign * values_[y];
        }
        return std::ldexp((double)acc, -r_);
    }

    bool all_pivotal() const {
        for (int j = 0; j < r_; ++j) {
            const uint64_t bit = 1ULL << j;
            bool rel = false;
            for (uint64_t y = 0; y < values_.size() && !rel; ++y)
                if (!(y & bit) && values_[y] != values_[y | bit]) rel = true;
            if (!rel) return false;
        }
        return true;
    }

    const PointwiseFunction* f_;
    int r_;
    std::vector<int> positions_;
    std::vector<int> values_;
};

} // namespace

Estimate estimate_coefficient(const PointwiseFunction& f, const std::vector<int>& set,
                              uint64_t samples, uint64_t seed, int threads) {
    check_sampler_set(f, set, f.n);
    return run_estimator(samples, seed, threads, [&](CounterRng& rng, uint64_t) {
        std::vector<uint64_t> x = rng.next_bits(f.n);
        return (double)(f.eval(x) * chi_at(x, set));
    });
}

Estimate estimate_t_influence(const PointwiseFunction& f, const std::vector<int>& set,
                              uint64_t samples, uint64_t seed, int threads) {
    check_sampler_set(f, set, 20);
    if (set.empty()) fail(errc::empty_set, "t-influence estimator needs a nonempty set");
    return run_estimator(samples, seed, threads, [&](CounterRng& rng, uint64_t) {
        SubcubeSampler sub(f, set);
        sub.draw(rng);
        double d = sub.derivative();
        return d * d;
    });
}

Estimate estimate_joint_influence(const PointwiseFunction& f, const std::vector<int>& set,
                                  uint64_t samples, uint64_t seed, int threads) {
    check_sampler_set(f, set, 20);
    if (set.empty()) fail(errc::empty_set, "joint influence estimator needs a nonempty set");
    return run_estimator(samples, seed, threads, [&](CounterRng& rng, uint64_t) {
        SubcubeSampler sub(f, set);
        sub.draw(rng);
        return sub.all_pivotal() ? 1.0 : 0.0;
    });
}

std::pair<Estimate, Estimate> estimate_joint_and_t_influence(const PointwiseFunction& f,
                                                             const std::vector<int>& set,
                                                             uint64_t samples, uint64_t seed,
                                                             int threads) {
    check_sampler_set(f, set, 20);
    if (set.empty()) fail(errc::empty_set, "influence estimators need a nonempty set");
    // Same substream for both estimators: sample s sees one shared subcube.
    Estimate joint = run_estimator(samples, seed, threads, [&](CounterRng& rng, uint64_t) {
        SubcubeSampler sub(f, set);
        sub.draw(rng);
        return sub.all_pivotal() ? 1.0 : 0.0;
    });
    Estimate tinf = run_estimator(samples, seed, threads, [&](CounterRng& rng, uint64_t) {
        SubcubeSampler sub(f, set);
        sub.draw(rng);
        double d = sub.derivative();
        return d * d;
    });
    return {joint, tinf};
}

std::pair<Estimate, Estimate> estimate_sign_probabilities(const PointwiseFunction& f,
                                                          uint64_t samples, uint64_t seed,
                                                          int threads) {
    Estimate plus = run_estimator(samples, seed, threads, [&](CounterRng& rng, uint64_t) {
        std::vector<uint64_t> x = rng.next_bits(f.n);
        return f.eval(x) == 1 ? 1.0 : 0.0;
    });
    Estimate minus = plus;
    minus.value = 1.0 - plus.value;
    return {plus, minus};
}

Estimate estimate_level_weight(const PointwiseFunction& f, int r, uint64_t samples, uint64_t seed,
                               int threads) {
    if (r < 0 || r > f.n) fail(errc::bad_degree, "level must be in [0, n]");
    const int n = f.n;
    return run_estimator(samples, seed, threads, [&, r, n](CounterRng& rng, uint64_t) {
        std::vector<uint64_t> x = rng.next_bits(n);
        std::vector<uint64_t> y = rng.next_bits(n);
        int prod = f.eval(x) * f.eval(y);
        // z = x∘y has +1 exactly where x and y agree; e_r(z) depends only on
        // the number m of +1 coordinates.
        int m = 0;
        for (size_t w = 0; w < x.size(); ++w) {
            uint64_t agree = ~(x[w] ^ y[w]);
            if (w == x.size() - 1 && (n & 63)) agree &= (1ULL << (n & 63)) - 1;
            m += popcount64(agree);
        }
        double e = 0;
        for (int a = std::max(0, r - (n - m)); a <= std::min(r, m); ++a) {
            int b = r - a;
            double term = 1.0;
            for (int t = 0; t < a; ++t) term *= (double)(m - t) / (double)(t + 1);
            for (int t = 0; t < b; ++t) term *= (double)(n - m - t) / (double)(t + 1);
            if (b & 1) term = -term;
            e += term;
        }
        return (double)prod * e;
    });
}

PointwiseFunction as_pointwise(const BooleanFunction& f) {
    BooleanFunction copy = f;
    return PointwiseFunction{f.n(), [copy = std::move(copy)](const std::vector<uint64_t>& x) {
                                 return copy.value(x[0] & ((uint64_t{1} << copy.n()) - 1));
                             }};
}

void append_estimate_csv(std::ostream& os, const std::string& estimator,
                         const std::vector<int>& set, const Estimate& e) {
    os << estimator << ",";
    for (size_t i = 0; i < set.size(); ++i) os << (i ? " " : "") << set[i];
    os.precision(17);
    os << "," << e.value << "," << e.stderr_ << "," << e.samples << "," << e.seed << "\n";
}

std::string estimate_csv_header() { return "estimator,set,value,stderr,samples,seed"; }

} // namespace bfan
