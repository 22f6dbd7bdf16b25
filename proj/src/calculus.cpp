#include "bfan/calculus.hpp"

#include <cmath>

namespace bfan {

namespace {

bigint int128_to_bigint(unsigned __int128 v) {
    return bigint((uint64_t)(v >> 64)) << 64 | bigint((uint64_t)v);
}

std::vector<int> bit_positions(uint64_t mask) {
    std::vector<int> pos;
    while (mask) {
        pos.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return pos;
}

} // namespace

Dyadic DerivativeTable::norm_sq() const {
    unsigned __int128 acc = 0;
    for (int64_t e : entries_) acc += (unsigned __int128)(e * e);
    return Dyadic::scaled(int128_to_bigint(acc), 2u * (unsigned)order() + (unsigned)n_);
}

Dyadic DerivativeTable::mean() const {
    int64_t acc = 0;
    for (int64_t e : entries_) acc += e;
    return Dyadic::scaled(acc, (unsigned)order() + (unsigned)n_);
}

Dyadic DerivativeTable::nonzero_fraction() const {
    uint64_t count = 0;
    for (int64_t e : entries_)
        if (e != 0) ++count;
    return Dyadic::scaled(bigint(count), (unsigned)n_);
}

bool DerivativeTable::values_in_lattice(int d) const {
    const int64_t bound = int64_t{1} << order();
    int shift = order() - d + 1;
    for (int64_t e : entries_) {
        if (e > bound || e < -bound) return false;
        if (shift > 0 && (e & ((int64_t{1} << shift) - 1)) != 0) return false;
    }
    return true;
}

DerivativeTable derivative_fourier(const FourierTable& t, const IndexSet& i) {
    if (i.n() != t.n()) fail(errc::dimension_mismatch, "set and spectrum n differ");
    const int n = t.n();
    const uint64_t imask = i.mask();
    std::vector<int64_t> d(size_t{1} << n, 0);
    for (uint64_t m = 0; m < d.size(); ++m)
        if ((m & imask) == 0) d[m] = t.raw(m | imask);
    fwht_inverse(d);
    // d[x] now holds 2^n times the derivative value; rescale to 2^order.
    const int shift = n - i.size();
    for (auto& e : d) {
        if (shift > 0 && (e & ((int64_t{1} << shift) - 1)) != 0)
            fail(errc::precondition_violated, "derivative not in the dyadic lattice");
        e >>= shift;
    }
    return DerivativeTable(n, i, std::move(d));
}

DerivativeTable derivative_pointwise(const BooleanFunction& f, const IndexSet& i) {
    if (i.n() != f.n()) fail(errc::dimension_mismatch, "set and function n differ");
    const int n = f.n();
    const uint64_t imask = i.mask();
    const auto pos = bit_positions(imask);
    const int r = (int)pos.size();
    std::vector<int64_t> out(size_t{1} << n, 0);

    // Subcube points scattered onto the coordinates of i, with the sign
    // prod y_j = (-1)^{r - popcount(y)}.
    std::vector<uint64_t> scatter(size_t{1} << r, 0);
    std::vector<int> sign(size_t{1} << r, 0);
    for (uint64_t y = 0; y < scatter.size(); ++y) {
        uint64_t s = 0;
        for (int j = 0; j < r; ++j)
            if ((y >> j) & 1) s |= 1ULL << pos[j];
        scatter[y] = s;
        sign[y] = ((r - popcount64(y)) & 1) ? -1 : 1;
    }

    for (uint64_t b = 0; b < out.size(); ++b) {
        if ((b & imask) != 0) continue; // representative per complement assignment
        int64_t acc = 0;
        for (uint64_t y = 0; y < scatter.size(); ++y)
            acc += sign[y] * (int64_t)f.value(b | scatter[y]);
        for (uint64_t y = 0; y < scatter.size(); ++y) out[b | scatter[y]] = acc;
    }
    return DerivativeTable(n, i, std::move(out));
}

DerivativeTable derivative_of_table(const DerivativeTable& g, int index_1based) {
    if (index_1based < 1 || index_1based > g.n())
        fail(errc::dimension_mismatch, "index out of [n]");
    const uint64_t bit = 1ULL << (index_1based - 1);
    if (g.base_set().mask() & bit)
        fail(errc::bad_parameters, "index already differentiated");
    std::vector<int64_t> out(g.entries().size());
    for (uint64_t b = 0; b < out.size(); ++b)
        out[b] = g.entry(b | bit) - g.entry(b & ~bit);
    return DerivativeTable(g.n(), IndexSet(g.base_set().mask() | bit, g.n()), std::move(out));
}

BooleanFunction restrict_function(const BooleanFunction& f, const Restriction& r) {
    if (r.fixed.n() != f.n()) fail(errc::dimension_mismatch, "restriction n differs");
    const int n = f.n();
    const uint64_t fixed = r.fixed.mask();
    const auto free_pos = bit_positions(~fixed & ((n >= 64) ? ~0ULL : (1ULL << n) - 1));
    const int m = (int)free_pos.size();
    if (m < 1) fail(errc::bad_parameters, "restriction fixes every coordinate");
    TruthTableBuilder builder(m);
    for (uint64_t c = 0; c < (uint64_t{1} << m); ++c) {
        uint64_t b = r.plus_mask;
        for (int j = 0; j < m; ++j)
            if ((c >> j) & 1) b |= 1ULL << free_pos[j];
        builder.set(c, f.bit(b));
    }
    return builder.take();
}

double HeatTable::norm_sq() const {
    double acc = 0;
    for (double c : coeffs_) acc += c * c;
    return acc;
}

HeatTable HeatTable::then(double s) const {
    if (s < 0) fail(errc::negative_time, "time must be >= 0");
    std::vector<double> out(coeffs_.size());
    for (uint64_t m = 0; m < out.size(); ++m)
        out[m] = coeffs_[m] * std::exp(-(double)popcount64(m) * s);
    return HeatTable(n_, t_ + s, std::move(out));
}

HeatTable heat(const FourierTable& t, double time) {
    if (time < 0) fail(errc::negative_time, "time must be >= 0");
    const double scale = std::ldexp(1.0, -t.n());
    std::vector<double> out(t.raw().size());
    for (uint64_t m = 0; m < out.size(); ++m)
        out[m] = std::exp(-(double)popcount64(m) * time) * (double)t.raw(m) * scale;
    return HeatTable(t.n(), time, std::move(out));
}

} // namespace bfan
