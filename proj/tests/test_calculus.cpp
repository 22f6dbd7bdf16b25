#include <doctest.h>

#include <cmath>

#include "bfan/calculus.hpp"
#include "bfan/families.hpp"
#include "bfan/rng.hpp"

using namespace bfan;

namespace {

// Def-3.1 oracle: iterated single-bit finite differences on a real table.
std::vector<double> naive_derivative(const BooleanFunction& f, uint64_t imask) {
    std::vector<double> v(f.table_size());
    for (uint64_t b = 0; b < v.size(); ++b) v[b] = f.value(b);
    for (int j = 0; j < f.n(); ++j) {
        if (!((imask >> j) & 1)) continue;
        std::vector<double> next(v.size());
        const uint64_t bit = 1ULL << j;
        for (uint64_t b = 0; b < v.size(); ++b) next[b] = (v[b | bit] - v[b & ~bit]) / 2.0;
        v = next;
    }
    return v;
}

void check_matches_naive(const BooleanFunction& f, const IndexSet& i) {
    DerivativeTable d = derivative_pointwise(f, i);
    std::vector<double> naive = naive_derivative(f, i.mask());
    for (uint64_t b = 0; b < f.table_size(); ++b)
        CHECK(d.value(b).to_double() == doctest::Approx(naive[b]).epsilon(1e-12));
}

} // namespace

TEST_CASE("derivatives of the worked examples") {
    // d_1 of the dictator is constant 1.
    DerivativeTable d1 = derivative_pointwise(dictator(1, 1), IndexSet::of({1}, 1));
    CHECK(d1.value(0) == Dyadic(1));
    CHECK(d1.value(1) == Dyadic(1));

    // d_{1,2} of AND2 is constant 1/2.
    DerivativeTable d12 = derivative_pointwise(and_function(2), IndexSet::of({1, 2}, 2));
    for (uint64_t b = 0; b < 4; ++b) CHECK(d12.value(b) == Dyadic::scaled(1, 1));

    // d_1 of Maj3 is (1 - x2 x3)/2, verified against the finite-difference oracle.
    BooleanFunction maj = majority(3);
    check_matches_naive(maj, IndexSet::of({1}, 3));
    DerivativeTable dmaj = derivative_pointwise(maj, IndexSet::of({1}, 3));
    for (uint64_t b = 0; b < 8; ++b) {
        int x2 = (b >> 1) & 1 ? 1 : -1, x3 = (b >> 2) & 1 ? 1 : -1;
        CHECK(dmaj.value(b) == (x2 * x3 == 1 ? Dyadic(0) : Dyadic(1)));
    }

    // d_{1,2,3} of the full parity is constant 1; d_{1,2} of a dictator vanishes.
    DerivativeTable dp = derivative_pointwise(parity_full(3), IndexSet::of({1, 2, 3}, 3));
    for (uint64_t b = 0; b < 8; ++b) CHECK(dp.value(b) == Dyadic(1));
    DerivativeTable dz = derivative_pointwise(dictator(2, 1), IndexSet::of({1, 2}, 2));
    for (uint64_t b = 0; b < 4; ++b) CHECK(dz.value(b) == Dyadic(0));
}

TEST_CASE("spectral and pointwise derivative routes agree") {
    CounterRng rng(11);
    SUBCASE("exhaustive n <= 2") {
        for (int n = 1; n <= 2; ++n) {
            for (uint64_t word = 0; word < (uint64_t{1} << (1 << n)); ++word) {
                BooleanFunction f = BooleanFunction::from_table_word(word, n);
                FourierTable t = fwht(f);
                for (uint64_t m = 1; m < (uint64_t{1} << n); ++m) {
                    IndexSet i(m, n);
                    CHECK(derivative_fourier(t, i) == derivative_pointwise(f, i));
                }
            }
        }
    }
    SUBCASE("sampled n <= 6") {
        for (int trial = 0; trial < 60; ++trial) {
            int n = 1 + (int)rng.below(6);
            BooleanFunction f = BooleanFunction::random(n, rng);
            FourierTable t = fwht(f);
            uint64_t m = 1 + rng.below((uint64_t{1} << n) - 1);
            IndexSet i(m, n);
            CHECK(derivative_fourier(t, i) == derivative_pointwise(f, i));
        }
    }
}

TEST_CASE("derivative composition order does not matter") {
    CounterRng rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        BooleanFunction f = BooleanFunction::random(5, rng);
        DerivativeTable base = derivative_pointwise(f, IndexSet::empty(5));
        DerivativeTable ij = derivative_of_table(derivative_of_table(base, 2), 4);
        DerivativeTable ji = derivative_of_table(derivative_of_table(base, 4), 2);
        CHECK(ij == ji);
        CHECK(ij == derivative_pointwise(f, IndexSet::of({2, 4}, 5)));
    }
}

TEST_CASE("derivative values live in Z/2^{r-1} and E[d f] = f-hat") {
    CounterRng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 1 + (int)rng.below(6);
        BooleanFunction f = BooleanFunction::random(n, rng);
        FourierTable t = fwht(f);
        uint64_t m = 1 + rng.below((uint64_t{1} << n) - 1);
        IndexSet i(m, n);
        DerivativeTable d = derivative_pointwise(f, i);
        CHECK(d.values_in_lattice(i.size()));
        CHECK(d.mean() == t.coefficient(i));
        CHECK(d.norm_sq() <= Dyadic(1));
    }
}

TEST_CASE("restriction relabeling keeps free-coordinate order") {
    BooleanFunction maj = majority(3);
    // x3 -> +1 gives OR(x1, x2); x3 -> -1 gives AND(x1, x2).
    BooleanFunction with_plus =
        restrict_function(maj, Restriction(IndexSet::of({3}, 3), 1ULL << 2));
    BooleanFunction with_minus = restrict_function(maj, Restriction(IndexSet::of({3}, 3), 0));
    CHECK(with_plus == or_function(2));
    CHECK(with_minus == and_function(2));

    // Fixing x2 of Maj3: the result reads (x1, x3) in that order.
    BooleanFunction mid = restrict_function(maj, Restriction(IndexSet::of({2}, 3), 1ULL << 1));
    for (uint64_t c = 0; c < 4; ++c) {
        uint64_t b = (c & 1) | ((c & 2) << 1) | (1ULL << 1);
        CHECK(mid.value(c) == maj.value(b));
    }

    BooleanFunction dict = dictator(2, 1);
    BooleanFunction fixed = restrict_function(dict, Restriction(IndexSet::of({1}, 2), 1ULL << 0));
    CHECK(fixed.value(0) == 1);
    CHECK(fixed.value(1) == 1);

    CHECK_THROWS_AS(Restriction(IndexSet::of({1}, 3), 1ULL << 1), error);
}

TEST_CASE("heat semigroup") {
    BooleanFunction maj = majority(3);
    FourierTable t = fwht(maj);

    HeatTable h0 = heat(t, 0.0);
    for (uint64_t m = 0; m < 8; ++m)
        CHECK(h0.coefficient(m) == doctest::Approx(t.coefficient(m).to_double()));

    HeatTable chi = heat(fwht(dictator(2, 1)), 0.7);
    CHECK(std::sqrt(chi.norm_sq()) == doctest::Approx(std::exp(-0.7)).epsilon(1e-12));

    // Maj3 damped at t = ln 2: spectrum (1/2 at each singleton, -1/2 at the top).
    HeatTable hm = heat(t, std::log(2.0));
    CHECK(hm.norm_sq() == doctest::Approx(0.19140625).epsilon(1e-12));

    HeatTable once = heat(t, 0.4).then(0.9);
    HeatTable direct = heat(t, 1.3);
    for (uint64_t m = 0; m < 8; ++m)
        CHECK(once.coefficient(m) ==
              doctest::Approx(direct.coefficient(m)).epsilon(1e-12));
    CHECK(once.coefficient(0) == doctest::Approx(t.mean().to_double()));

    CHECK_THROWS_AS(heat(t, -0.5), error);
}
