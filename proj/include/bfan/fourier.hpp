#pragma once

#include <cstdint>
#include <vector>

#include "bfan/boolean_function.hpp"
#include "bfan/dyadic.hpp"
#include "bfan/index_set.hpp"

namespace bfan {

/// Dense Fourier-Walsh spectrum with the 2^n denominator kept implicit:
/// coefficient at mask i is raw(i) / 2^n. The transform itself is an
/// unnormalized integer butterfly, so everything here is exact.
class FourierTable {
public:
    FourierTable(int n, std::vector<int64_t> raw) : n_(n), raw_(std::move(raw)) {
        if (raw_.size() != (size_t{1} << n_)) fail(errc::length_mismatch, "2^n entries required");
    }

    int n() const { return n_; }
    int64_t raw(uint64_t mask) const { return raw_[mask]; }
    const std::vector<int64_t>& raw() const { return raw_; }

    Dyadic coefficient(const IndexSet& i) const;
    Dyadic coefficient(uint64_t mask) const { return Dyadic::scaled(raw_[mask], (unsigned)n_); }

    /// = coefficient(empty) = f's expectation.
    Dyadic mean() const { return coefficient(uint64_t{0}); }

    /// Sum of raw(i)^2; equals 4^n exactly iff the source table is +/-1-valued.
    bigint parseval_sum() const;
    bool parseval_holds() const { return parseval_sum() == (bigint(1) << (2 * n_)); }

private:
    int n_;
    std::vector<int64_t> raw_;
};

/// In-place butterflies on raw integer tables. forward then inverse multiplies by 2^n.
void fwht_forward(std::vector<int64_t>& a);
void fwht_inverse(std::vector<int64_t>& a);

/// Exact spectrum of f: raw(i) = sum_x f(x) chi_i(x).
FourierTable fwht(const BooleanFunction& f);

/// Exact inverse; every reconstructed value must be +/-2^n or NotBoolean is raised.
BooleanFunction inverse_fwht(const FourierTable& t);

/// W^{=d}(f): exact Fourier weight at level d.
Dyadic weight_exact(const FourierTable& t, int d);

/// W^{>=d}(f): exact Fourier weight at levels >= d.
Dyadic weight_at_least(const FourierTable& t, int d);

/// Max popcount over nonzero coefficients; 0 for constants.
int degree(const FourierTable& t);

} // namespace bfan
