#include "bfan/fourier.hpp"

namespace bfan {

Dyadic FourierTable::coefficient(const IndexSet& i) const {
    if (i.n() != n_) fail(errc::dimension_mismatch, "index set is for a different n");
    return coefficient(i.mask());
}

bigint FourierTable::parseval_sum() const {
    unsigned __int128 acc = 0;
    for (int64_t c : raw_) acc += (unsigned __int128)(c * c);
    return bigint((uint64_t)(acc >> 64)) << 64 | bigint((uint64_t)acc);
}

// One pass per coordinate j pairs rows with x_{j+1} = -1 (u) and +1 (v):
// forward emits (u+v, v-u), inverse (p-q, p+q); composing the two scales by 2.
void fwht_forward(std::vector<int64_t>& a) {
    size_t sz = a.size();
    for (size_t half = 1; half < sz; half <<= 1) {
        for (size_t base = 0; base < sz; base += half << 1) {
            for (size_t off = 0; off < half; ++off) {
                int64_t u = a[base + off];
                int64_t v = a[base + off + half];
                a[base + off] = u + v;
                a[base + off + half] = v - u;
            }
        }
    }
}

void fwht_inverse(std::vector<int64_t>& a) {
    size_t sz = a.size();
    for (size_t half = 1; half < sz; half <<= 1) {
        for (size_t base = 0; base < sz; base += half << 1) {
            for (size_t off = 0; off < half; ++off) {
                int64_t p = a[base + off];
                int64_t q = a[base + off + half];
                a[base + off] = p - q;
                a[base + off + half] = p + q;
            }
        }
    }
}

FourierTable fwht(const BooleanFunction& f) {
    std::vector<int64_t> a = f.signed_table();
    fwht_forward(a);
    return FourierTable(f.n(), std::move(a));
}

BooleanFunction inverse_fwht(const FourierTable& t) {
    std::vector<int64_t> a = t.raw();
    fwht_inverse(a);
    const int64_t full = int64_t{1} << t.n();
    TruthTableBuilder builder(t.n());
    for (uint64_t b = 0; b < a.size(); ++b) {
        if (a[b] == full)
            builder.set(b, true);
        else if (a[b] == -full)
            builder.set(b, false);
        else
            fail(errc::not_boolean, "reconstructed value " + std::to_string(a[b]) + "/" +
                                        std::to_string(full) + " at row " + std::to_string(b));
    }
    return builder.take();
}

Dyadic weight_exact(const FourierTable& t, int d) {
    if (d < 0 || d > t.n()) fail(errc::bad_degree, "level must be in [0, n]");
    unsigned __int128 acc = 0;
    for (uint64_t m = 0; m < t.raw().size(); ++m)
        if (popcount64(m) == d) acc += (unsigned __int128)(t.raw(m) * t.raw(m));
    bigint num = bigint((uint64_t)(acc >> 64)) << 64 | bigint((uint64_t)acc);
    return Dyadic::scaled(num, 2u * (unsigned)t.n());
}

Dyadic weight_at_least(const FourierTable& t, int d) {
    if (d < 0 || d > t.n()) fail(errc::bad_degree, "level must be in [0, n]");
    unsigned __int128 acc = 0;
    for (uint64_t m = 0; m < t.raw().size(); ++m)
        if (popcount64(m) >= d) acc += (unsigned __int128)(t.raw(m) * t.raw(m));
    bigint num = bigint((uint64_t)(acc >> 64)) << 64 | bigint((uint64_t)acc);
    return Dyadic::scaled(num, 2u * (unsigned)t.n());
}

int degree(const FourierTable& t) {
    int deg = 0;
    for (uint64_t m = 0; m < t.raw().size(); ++m)
        if (t.raw(m) != 0) deg = std::max(deg, popcount64(m));
    return deg;
}

} // namespace bfan
