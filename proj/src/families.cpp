#include "bfan/families.hpp"

#include <cmath>

namespace bfan {

BooleanFunction dictator(int n, int index_1based) {
    if (index_1based < 1 || index_1based > n) fail(errc::bad_parameters, "index out of [n]");
    TruthTableBuilder b(n);
    for (uint64_t x = 0; x < (uint64_t{1} << n); ++x) b.set(x, (x >> (index_1based - 1)) & 1);
    return b.take();
}

BooleanFunction parity(int n, uint64_t mask) {
    uint64_t universe = n >= 64 ? ~0ULL : (1ULL << n) - 1;
    if ((mask & ~universe) != 0) fail(errc::bad_parameters, "mask outside [n]");
    TruthTableBuilder b(n);
    // chi_mask(x) = (-1)^{#minus-one coordinates inside mask}
    for (uint64_t x = 0; x < (uint64_t{1} << n); ++x)
        b.set(x, (popcount64(mask & ~x) & 1) == 0);
    return b.take();
}

BooleanFunction majority(int n) {
    if (n % 2 == 0) fail(errc::bad_parameters, "majority needs odd n");
    TruthTableBuilder b(n);
    for (uint64_t x = 0; x < (uint64_t{1} << n); ++x) b.set(x, 2 * popcount64(x) > n);
    return b.take();
}

BooleanFunction and_function(int n) {
    TruthTableBuilder b(n);
    const uint64_t all = (uint64_t{1} << n) - 1;
    for (uint64_t x = 0; x <= all; ++x) b.set(x, x == all);
    return b.take();
}

BooleanFunction or_function(int n) {
    TruthTableBuilder b(n);
    const uint64_t all = (uint64_t{1} << n) - 1;
    for (uint64_t x = 0; x <= all; ++x) b.set(x, x != 0);
    return b.take();
}

BooleanFunction tribes(int n, int w) { return materialize(tribes_spec(n, w)); }

TribeSpec tribes_spec(int n, int w) {
    if (w < 1 || n < 1 || n % w != 0) fail(errc::bad_parameters, "tribe width must divide n");
    TribeSpec spec;
    spec.n = n;
    spec.k = w;
    spec.d = 0;
    spec.packing.n = n;
    spec.packing.k = w;
    spec.packing.d = 0;
    for (int start = 0; start < n; start += w) {
        std::vector<int> block(w);
        for (int j = 0; j < w; ++j) block[j] = start + j;
        spec.packing.blocks.push_back(std::move(block));
    }
    return spec;
}

namespace {

/// Per-block bit masks over ceil(n/64) words; a tribe fires iff all its bits are set.
std::vector<std::vector<uint64_t>> block_masks(const TribeSpec& spec) {
    const size_t words = ((size_t)spec.n + 63) / 64;
    std::vector<std::vector<uint64_t>> masks;
    masks.reserve(spec.packing.blocks.size());
    for (const auto& block : spec.packing.blocks) {
        std::vector<uint64_t> m(words, 0);
        for (int v : block) m[v >> 6] |= 1ULL << (v & 63);
        masks.push_back(std::move(m));
    }
    return masks;
}

} // namespace

PointwiseFunction tribe_evaluator(const TribeSpec& spec) {
    auto masks = block_masks(spec);
    const size_t words = ((size_t)spec.n + 63) / 64;
    return PointwiseFunction{
        spec.n, [masks = std::move(masks), words](const std::vector<uint64_t>& x) -> int {
            for (const auto& m : masks) {
                bool all = true;
                for (size_t w = 0; w < words; ++w)
                    if ((x[w] & m[w]) != m[w]) {
                        all = false;
                        break;
                    }
                if (all) return 1;
            }
            return -1;
        }};
}

BooleanFunction materialize(const TribeSpec& spec) {
    const int n = spec.n;
    if (n > max_dimension())
        fail(errc::dimension_too_large, "n=" + std::to_string(n) + " exceeds cap");
    std::vector<uint64_t> masks;
    masks.reserve(spec.packing.blocks.size());
    for (const auto& block : spec.packing.blocks) {
        uint64_t m = 0;
        for (int v : block) m |= 1ULL << v;
        masks.push_back(m);
    }
    TruthTableBuilder b(n);
    for (uint64_t x = 0; x < (uint64_t{1} << n); ++x) {
        bool fired = false;
        for (uint64_t m : masks)
            if ((x & m) == m) {
                fired = true;
                break;
            }
        b.set(x, fired);
    }
    return b.take();
}

int hypertribe_block_size(int n, int d, double* exact) {
    if (n < 2) fail(errc::bad_parameters, "need n >= 2");
    double log2n = std::log2((double)n);
    double kx = d * std::log2((double)n / log2n);
    if (exact) *exact = kx;
    long k = std::lround(kx);
    if (k < d) k = d;
    return (int)k;
}

TribeSpec hypertribe(int n, int d, uint64_t seed, std::optional<int> k_override) {
    if (d < 2) fail(errc::bad_parameters, "hypertribes need d >= 2");
    if (n < d) fail(errc::bad_parameters, "need n >= d");
    TribeSpec spec;
    spec.n = n;
    spec.d = d;
    spec.seed = seed;
    double kx = 0;
    int k = k_override ? *k_override : hypertribe_block_size(n, d, &kx);
    if (k_override) kx = (double)*k_override;
    if (k < d || k > n) fail(errc::bad_parameters, "block size must satisfy d <= k <= n");
    spec.k = k;
    spec.k_exact = kx;
    spec.k_rounded = std::abs(kx - (double)k) > 1e-9;
    spec.packing = greedy_packing(n, k, d, seed);
    return spec;
}

} // namespace bfan
