#pragma once

#include <cstdint>
#include <vector>

namespace bfan {

/// Counter-based SplitMix64 generator. The output stream is fully specified so that
/// seeded results are reproducible across implementations:
///
///   word(seed, ctr) = mix(seed + (ctr + 1) * 0x9E3779B97F4A7C15)
///   mix(z): z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
///           z ^= z >> 27; z *= 0x94D049BB133111EB;
///           z ^= z >> 31; return z
///
/// Bounded draws use rejection sampling on word(); doubles take the top 53 bits.
/// Disjoint counter ranges give independent substreams, so work can be
/// partitioned without changing any drawn value.
class CounterRng {
public:
    explicit CounterRng(uint64_t seed, uint64_t start_counter = 0)
        : seed_(seed), counter_(start_counter) {}

    static uint64_t mix(uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }

    static uint64_t word(uint64_t seed, uint64_t ctr) {
        return mix(seed + (ctr + 1) * 0x9E3779B97F4A7C15ULL);
    }

    uint64_t next_u64() { return word(seed_, counter_++); }

    /// Uniform in [0, bound), bound >= 1; unbiased via rejection.
    uint64_t below(uint64_t bound) {
        uint64_t threshold = (0 - bound) % bound; // 2^64 mod bound
        while (true) {
            uint64_t v = next_u64();
            if (v >= threshold) return v % bound;
        }
    }

    /// Uniform double in [0, 1).
    double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

    /// n uniform random bits, packed little-endian into 64-bit words.
    std::vector<uint64_t> next_bits(int n) {
        std::vector<uint64_t> out((n + 63) / 64);
        for (auto& w : out) w = next_u64();
        int rem = n % 64;
        if (rem != 0) out.back() &= (1ULL << rem) - 1;
        return out;
    }

    uint64_t counter() const { return counter_; }
    uint64_t seed() const { return seed_; }

private:
    uint64_t seed_;
    uint64_t counter_;
};

/// Substream for sample index s: counters [s * 2^20, (s+1) * 2^20). Each sample may
/// consume at most 2^20 words, which rejection sampling never approaches.
inline CounterRng sample_rng(uint64_t seed, uint64_t sample_index) {
    return CounterRng(seed, sample_index << 20);
}

/// Fisher-Yates over [0, n) driven by the counter stream.
template <class T>
void shuffle(std::vector<T>& v, CounterRng& rng) {
    for (size_t i = v.size(); i > 1; --i) {
        size_t j = (size_t)rng.below(i);
        std::swap(v[i - 1], v[j]);
    }
}

} // namespace bfan
