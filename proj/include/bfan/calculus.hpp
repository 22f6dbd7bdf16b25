#pragma once

#include <cstdint>
#include <vector>

#include "bfan/boolean_function.hpp"
#include "bfan/dyadic.hpp"
#include "bfan/fourier.hpp"
#include "bfan/index_set.hpp"

namespace bfan {

/// Discrete partial derivative of f with respect to a set of coordinates,
/// tabulated on the full cube. Entries are integers scaled by 2^order
/// (value at x = entry(x) / 2^order), and are constant along the coordinates
/// of base_set. For Boolean sources every value lies in Z/2^{order-1} ∩ [-1,1].
class DerivativeTable {
public:
    DerivativeTable(int n, IndexSet base_set, std::vector<int64_t> entries)
        : n_(n), base_(base_set), entries_(std::move(entries)) {
        if (entries_.size() != (size_t{1} << n)) fail(errc::length_mismatch, "2^n entries");
    }

    int n() const { return n_; }
    int order() const { return base_.size(); }
    const IndexSet& base_set() const { return base_; }
    int64_t entry(uint64_t b) const { return entries_[b]; }
    const std::vector<int64_t>& entries() const { return entries_; }

    /// Value at x as an exact dyadic.
    Dyadic value(uint64_t b) const { return Dyadic::scaled(entries_[b], (unsigned)order()); }

    /// ||∂f||_2^2, exact.
    Dyadic norm_sq() const;
    /// E[∂f], exact (equals the source's coefficient at base_set).
    Dyadic mean() const;
    /// P(∂f != 0), exact.
    Dyadic nonzero_fraction() const;

    /// True iff every value lies in Z/2^{d-1} ∩ [-1,1].
    bool values_in_lattice(int d) const;

    friend bool operator==(const DerivativeTable& a, const DerivativeTable& b) {
        return a.n_ == b.n_ && a.base_ == b.base_ && a.entries_ == b.entries_;
    }

private:
    int n_;
    IndexSet base_;
    std::vector<int64_t> entries_;
};

/// Spectral route: inverse transform of {f-hat(j) moved to mask j\i : j ⊇ i}.
DerivativeTable derivative_fourier(const FourierTable& t, const IndexSet& i);

/// Pointwise route: signed sum over the subcube of the coordinates in i.
/// Must match derivative_fourier entrywise.
DerivativeTable derivative_pointwise(const BooleanFunction& f, const IndexSet& i);

/// Single-bit derivative of an existing table (for composition checks).
DerivativeTable derivative_of_table(const DerivativeTable& g, int index_1based);

/// A partial assignment: x_j = +1 for j in `plus`, -1 for the rest of `fixed`.
struct Restriction {
    IndexSet fixed;
    uint64_t plus_mask = 0; // subset of fixed.mask()

    Restriction(IndexSet fixed_set, uint64_t plus)
        : fixed(fixed_set), plus_mask(plus) {
        if ((plus & ~fixed.mask()) != 0)
            fail(errc::dimension_mismatch, "assignment outside the fixed set");
    }
};

/// Subfunction on the free coordinates; free coordinates compact to
/// [n - |fixed|] preserving their relative order.
BooleanFunction restrict_function(const BooleanFunction& f, const Restriction& r);

/// Spectrum damped by e^{-|i|t}: the heat semigroup applied to f.
class HeatTable {
public:
    HeatTable(int n, double t, std::vector<double> coeffs)
        : n_(n), t_(t), coeffs_(std::move(coeffs)) {}

    int n() const { return n_; }
    double time() const { return t_; }
    double coefficient(uint64_t mask) const { return coeffs_[mask]; }
    const std::vector<double>& coefficients() const { return coeffs_; }

    /// ||P_t f||_2^2 by Parseval.
    double norm_sq() const;

    /// Further damping: P_s applied on top (semigroup composition).
    HeatTable then(double s) const;

private:
    int n_;
    double t_;
    std::vector<double> coeffs_;
};

HeatTable heat(const FourierTable& t, double time);

} // namespace bfan
