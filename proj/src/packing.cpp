#include "bfan/packing.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace bfan {

namespace {

/// Marks/queries d-subsets of [n] by colex rank.
class CoveredSets {
public:
    CoveredSets(int n, int d) : marks_(binomial((uint64_t)n, (uint64_t)d), false) {}

    /// Visits the colex rank of every d-subset of `block` (sorted).
    template <class Fn>
    static void for_each_d_subset(const std::vector<int>& block, int d, Fn&& fn) {
        std::vector<int> idx(d);
        for (int j = 0; j < d; ++j) idx[j] = j;
        std::vector<int> subset(d);
        while (true) {
            uint64_t rank = 0;
            for (int j = 0; j < d; ++j) rank += binomial((uint64_t)block[idx[j]], (uint64_t)j + 1);
            fn(rank);
            int j = d - 1;
            while (j >= 0 && idx[j] == (int)block.size() - d + j) --j;
            if (j < 0) break;
            ++idx[j];
            for (int l = j + 1; l < d; ++l) idx[l] = idx[l - 1] + 1;
        }
    }

    bool all_free(const std::vector<int>& block, int d) const {
        bool ok = true;
        for_each_d_subset(block, d, [&](uint64_t r) { ok = ok && !marks_[r]; });
        return ok;
    }

    void mark(const std::vector<int>& block, int d) {
        for_each_d_subset(block, d, [&](uint64_t r) { marks_[r] = true; });
    }

    uint64_t marked_count() const {
        uint64_t c = 0;
        for (bool b : marks_)
            if (b) ++c;
        return c;
    }

private:
    std::vector<bool> marks_;
};

std::vector<int> draw_k_set(int n, int k, CounterRng& rng) {
    // Partial Fisher-Yates on [0, n) driven by the documented stream.
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    std::vector<int> out(k);
    for (int i = 0; i < k; ++i) {
        uint64_t j = i + rng.below((uint64_t)(n - i));
        std::swap(pool[i], pool[j]);
        out[i] = pool[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool next_combination(std::vector<int>& c, int n) {
    int k = (int)c.size();
    int j = k - 1;
    while (j >= 0 && c[j] == n - k + j) --j;
    if (j < 0) return false;
    ++c[j];
    for (int l = j + 1; l < k; ++l) c[l] = c[l - 1] + 1;
    return true;
}

} // namespace

Packing greedy_packing(int n, int k, int d, uint64_t seed, const GreedyOptions& opts) {
    if (!(n >= k && k >= d && d >= 1)) fail(errc::bad_parameters, "need n >= k >= d >= 1");
    Packing p;
    p.n = n;
    p.k = k;
    p.d = d;
    p.seed = seed;

    CoveredSets covered(n, d);
    const uint64_t total = binomial((uint64_t)n, (uint64_t)d);
    const uint64_t per_block = binomial((uint64_t)k, (uint64_t)d);
    uint64_t marked = 0;

    if (opts.lexicographic) {
        if (binomial((uint64_t)n, (uint64_t)k) > 20'000'000ULL)
            fail(errc::bad_parameters, "lexicographic scan infeasible at this n, k");
        std::vector<int> cand(k);
        for (int j = 0; j < k; ++j) cand[j] = j;
        do {
            if (covered.all_free(cand, d)) {
                covered.mark(cand, d);
                marked += per_block;
                p.blocks.push_back(cand);
                if (marked >= total) break;
            }
        } while (next_combination(cand, n));
    } else {
        uint64_t budget =
            opts.attempt_budget ? *opts.attempt_budget : 50 * (total / std::max<uint64_t>(per_block, 1));
        for (uint64_t attempt = 0; attempt < budget && marked < total; ++attempt) {
            CounterRng rng = sample_rng(seed, attempt);
            std::vector<int> cand = draw_k_set(n, k, rng);
            if (covered.all_free(cand, d)) {
                covered.mark(cand, d);
                marked += per_block;
                p.blocks.push_back(cand);
            }
        }
        std::sort(p.blocks.begin(), p.blocks.end());
    }
    return p;
}

CoverageStats coverage_stats(const Packing& p) {
    CoverageStats s;
    s.total_d_sets = binomial((uint64_t)p.n, (uint64_t)p.d);
    s.block_count = p.blocks.size();
    CoveredSets covered(p.n, p.d);
    for (const auto& b : p.blocks) covered.mark(b, p.d);
    s.covered_d_sets = covered.marked_count();
    s.coverage_ratio = s.total_d_sets ? (double)s.covered_d_sets / (double)s.total_d_sets : 0.0;
    s.t_over_2k = std::ldexp((double)s.block_count, -p.k);
    return s;
}

bool packing_valid(const Packing& p) {
    CoveredSets covered(p.n, p.d);
    for (const auto& b : p.blocks) {
        if ((int)b.size() != p.k) return false;
        for (int v : b)
            if (v < 0 || v >= p.n) return false;
        if (!covered.all_free(b, p.d)) return false;
        covered.mark(b, p.d);
    }
    return true;
}

uint64_t blocks_containing(const Packing& p, const std::vector<int>& subset) {
    uint64_t count = 0;
    for (const auto& b : p.blocks)
        if (std::includes(b.begin(), b.end(), subset.begin(), subset.end())) ++count;
    return count;
}

std::string packing_to_json(const Packing& p) {
    nlohmann::ordered_json j;
    j["n"] = p.n;
    j["k"] = p.k;
    j["d"] = p.d;
    j["seed"] = p.seed;
    auto blocks = nlohmann::ordered_json::array();
    for (const auto& b : p.blocks) {
        auto arr = nlohmann::ordered_json::array();
        for (int v : b) arr.push_back(v + 1); // 1-based on the wire
        blocks.push_back(std::move(arr));
    }
    j["blocks"] = std::move(blocks);
    return j.dump(2);
}

Packing packing_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(errc::parse_error, e.what());
    }
    Packing p;
    try {
        p.n = j.at("n").get<int>();
        p.k = j.at("k").get<int>();
        p.d = j.at("d").get<int>();
        p.seed = j.at("seed").get<uint64_t>();
        for (const auto& arr : j.at("blocks")) {
            std::vector<int> b;
            for (const auto& v : arr) {
                int idx = v.get<int>();
                if (idx < 1 || idx > p.n) fail(errc::parse_error, "block index out of [n]");
                b.push_back(idx - 1);
            }
            std::sort(b.begin(), b.end());
            p.blocks.push_back(std::move(b));
        }
    } catch (const nlohmann::json::exception& e) {
        fail(errc::parse_error, e.what());
    }
    return p;
}

} // namespace bfan
