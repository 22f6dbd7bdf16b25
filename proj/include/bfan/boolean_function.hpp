#pragma once

#include <cstdint>
#include <vector>

#include "bfan/errors.hpp"
#include "bfan/index_set.hpp"
#include "bfan/rng.hpp"

namespace bfan {

/// Dimension cap for dense truth tables. Default 20, hard maximum 28;
/// the BFAN_MAX_N environment variable overrides within [1, 28].
int max_dimension();

/// f: {-1,1}^n -> {-1,1} as a dense 2^n-bit table. Bit b set means f = +1 on the
/// input decoded from b by: bit j of b -> x_{j+1} = +1 if set, -1 if clear.
/// Immutable after construction; all operations on it are pure.
class BooleanFunction {
public:
    BooleanFunction() : n_(0), words_(1, 0) {}

    /// bits[b] nonzero means f = +1 at row b. bits.size() must equal 2^n.
    static BooleanFunction from_truth_table(const std::vector<uint8_t>& bits, int n);

    /// Low 2^n bits of `table` for n <= 6 (exhaustive-sweep helper).
    static BooleanFunction from_table_word(uint64_t table, int n);

    static BooleanFunction random(int n, CounterRng& rng);

    int n() const { return n_; }
    uint64_t table_size() const { return 1ULL << n_; }

    /// +1/-1 at row b.
    int value(uint64_t b) const { return ((words_[b >> 6] >> (b & 63)) & 1) ? 1 : -1; }
    bool bit(uint64_t b) const { return (words_[b >> 6] >> (b & 63)) & 1; }

    /// Evaluation at an explicit point; each coordinate must be +1 or -1.
    int evaluate(const std::vector<int>& x) const;

    uint64_t count_ones() const;

    const std::vector<uint64_t>& words() const { return words_; }

    /// Truth table for n <= 6 packed into one word (sweep/tie-break helper).
    uint64_t table_word() const;

    /// Lexicographic comparison of truth tables read from row 0 upward (0 < 1).
    static bool table_less(const BooleanFunction& a, const BooleanFunction& b);

    friend bool operator==(const BooleanFunction& a, const BooleanFunction& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }

    /// Signed table (+1/-1) as int64, the transform's working form.
    std::vector<int64_t> signed_table() const;

private:
    explicit BooleanFunction(int n);
    void set_bit(uint64_t b) { words_[b >> 6] |= 1ULL << (b & 63); }

    int n_;
    std::vector<uint64_t> words_;

    friend class TruthTableBuilder;
};

/// Mutable staging buffer; `take()` freezes it into a BooleanFunction.
class TruthTableBuilder {
public:
    explicit TruthTableBuilder(int n);
    void set(uint64_t b, bool plus_one);
    BooleanFunction take();

private:
    BooleanFunction f_;
};

} // namespace bfan
