#include "bfan/boolean_function.hpp"

#include <cstdlib>

namespace bfan {

int max_dimension() {
    static const int cap = [] {
        int n = 20;
        if (const char* env = std::getenv("BFAN_MAX_N")) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end != env && v >= 1) n = (int)v;
        }
        return n > 28 ? 28 : n;
    }();
    return cap;
}

BooleanFunction::BooleanFunction(int n) : n_(n) {
    if (n < 1) fail(errc::bad_parameters, "dimension must be >= 1");
    if (n > max_dimension())
        fail(errc::dimension_too_large,
             "n=" + std::to_string(n) + " exceeds cap " + std::to_string(max_dimension()));
    words_.assign(((table_size() + 63) >> 6), 0);
}

BooleanFunction BooleanFunction::from_truth_table(const std::vector<uint8_t>& bits, int n) {
    if (n >= 1 && n <= max_dimension() && bits.size() != (size_t{1} << n))
        fail(errc::length_mismatch, "expected 2^n = " + std::to_string(uint64_t{1} << n) +
                                        " rows, got " + std::to_string(bits.size()));
    BooleanFunction f(n);
    for (uint64_t b = 0; b < f.table_size(); ++b)
        if (bits[b]) f.set_bit(b);
    return f;
}

BooleanFunction BooleanFunction::from_table_word(uint64_t table, int n) {
    if (n > 6) fail(errc::bad_parameters, "from_table_word requires n <= 6");
    BooleanFunction f(n);
    uint64_t sz = f.table_size();
    f.words_[0] = (sz >= 64) ? table : (table & ((1ULL << sz) - 1));
    return f;
}

BooleanFunction BooleanFunction::random(int n, CounterRng& rng) {
    BooleanFunction f(n);
    uint64_t sz = f.table_size();
    for (auto& w : f.words_) w = rng.next_u64();
    if (sz < 64) f.words_[0] &= (1ULL << sz) - 1;
    return f;
}

int BooleanFunction::evaluate(const std::vector<int>& x) const {
    if ((int)x.size() != n_) fail(errc::dimension_mismatch, "point has wrong arity");
    uint64_t b = 0;
    for (int j = 0; j < n_; ++j) {
        if (x[j] == 1)
            b |= 1ULL << j;
        else if (x[j] != -1)
            fail(errc::dimension_mismatch, "coordinates must be +1 or -1");
    }
    return value(b);
}

uint64_t BooleanFunction::count_ones() const {
    uint64_t c = 0;
    for (uint64_t w : words_) c += (uint64_t)popcount64(w);
    return c;
}

uint64_t BooleanFunction::table_word() const {
    if (n_ > 6) fail(errc::bad_parameters, "table_word requires n <= 6");
    return words_[0];
}

bool BooleanFunction::table_less(const BooleanFunction& a, const BooleanFunction& b) {
    uint64_t sz = std::min(a.table_size(), b.table_size());
    for (uint64_t r = 0; r < sz; ++r) {
        bool ba = a.bit(r), bb = b.bit(r);
        if (ba != bb) return !ba; // 0 < 1
    }
    return a.table_size() < b.table_size();
}

std::vector<int64_t> BooleanFunction::signed_table() const {
    std::vector<int64_t> t(table_size());
    for (uint64_t b = 0; b < table_size(); ++b) t[b] = value(b);
    return t;
}

TruthTableBuilder::TruthTableBuilder(int n) : f_(n) {}

void TruthTableBuilder::set(uint64_t b, bool plus_one) {
    if (plus_one)
        f_.words_[b >> 6] |= 1ULL << (b & 63);
    else
        f_.words_[b >> 6] &= ~(1ULL << (b & 63));
}

BooleanFunction TruthTableBuilder::take() { return std::move(f_); }

} // namespace bfan
