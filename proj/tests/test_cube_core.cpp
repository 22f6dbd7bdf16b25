#include <doctest.h>

#include "bfan/families.hpp"
#include "bfan/fourier.hpp"
#include "bfan/rng.hpp"

using namespace bfan;

namespace {

// Independent spectral oracle: plain inner product over all inputs.
int64_t naive_raw_coefficient(const BooleanFunction& f, uint64_t mask) {
    int64_t acc = 0;
    for (uint64_t b = 0; b < f.table_size(); ++b) {
        // chi(x) = (-1)^{# coordinates of mask at -1}
        int chi = (popcount64(mask & ~b & (f.table_size() - 1)) & 1) ? -1 : 1;
        acc += chi * f.value(b);
    }
    return acc;
}

} // namespace

TEST_CASE("from_truth_table encoding and errors") {
    BooleanFunction dict = BooleanFunction::from_truth_table({0, 1}, 1);
    CHECK(dict.value(0) == -1);
    CHECK(dict.value(1) == 1);
    CHECK(dict.evaluate({-1}) == -1);
    CHECK(dict.evaluate({+1}) == 1);

    try {
        BooleanFunction::from_truth_table({0, 1, 0}, 2);
        FAIL("expected LengthMismatch");
    } catch (const error& e) {
        CHECK(e.code() == errc::length_mismatch);
    }

    BooleanFunction ones = BooleanFunction::from_truth_table(std::vector<uint8_t>(8, 1), 3);
    for (uint64_t b = 0; b < 8; ++b) CHECK(ones.value(b) == 1);

    try {
        BooleanFunction::from_truth_table({}, 25);
        FAIL("expected DimensionTooLarge");
    } catch (const error& e) {
        CHECK(e.code() == errc::dimension_too_large);
    }
}

TEST_CASE("evaluate on named functions") {
    CHECK(parity_full(3).evaluate({-1, 1, 1}) == -1);
    CHECK(majority(3).evaluate({1, 1, -1}) == 1);
    CHECK_THROWS_AS(majority(3).evaluate({1, 1}), error);
    CHECK_THROWS_AS(majority(3).evaluate({1, 1, 2}), error);
}

TEST_CASE("fwht on dictator and parity") {
    FourierTable t = fwht(dictator(1, 1));
    CHECK(t.raw(0) == 0);
    CHECK(t.raw(1) == 2);
    CHECK(t.coefficient(uint64_t{1}) == Dyadic(1));

    FourierTable p = fwht(parity_full(3));
    for (uint64_t m = 0; m < 8; ++m) CHECK(p.raw(m) == (m == 7 ? 8 : 0));
}

TEST_CASE("fwht matches the naive inner-product oracle") {
    // AND2 from the definitions: f = +1 iff x1 = x2 = +1.
    BooleanFunction and2 = and_function(2);
    FourierTable t = fwht(and2);
    for (uint64_t m = 0; m < 4; ++m) CHECK(t.raw(m) == naive_raw_coefficient(and2, m));
    CHECK(t.coefficient(uint64_t{0}) == Dyadic::scaled(-1, 1));
    CHECK(t.coefficient(uint64_t{1}) == Dyadic::scaled(1, 1));
    CHECK(t.coefficient(uint64_t{2}) == Dyadic::scaled(1, 1));
    CHECK(t.coefficient(uint64_t{3}) == Dyadic::scaled(1, 1));

    CounterRng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 1 + (int)rng.below(5);
        BooleanFunction f = BooleanFunction::random(n, rng);
        FourierTable ft = fwht(f);
        for (uint64_t m = 0; m < f.table_size(); ++m)
            CHECK(ft.raw(m) == naive_raw_coefficient(f, m));
    }
}

TEST_CASE("inverse_fwht round trip and NotBoolean") {
    BooleanFunction maj = majority(3);
    CHECK(inverse_fwht(fwht(maj)) == maj);

    // Single coefficient 2^n at {1} is the dictator.
    std::vector<int64_t> raw(8, 0);
    raw[1] = 8;
    CHECK(inverse_fwht(FourierTable(3, raw)) == dictator(3, 1));

    std::vector<int64_t> half(8, 0);
    half[0] = 4; // constant 1/2
    try {
        inverse_fwht(FourierTable(3, half));
        FAIL("expected NotBoolean");
    } catch (const error& e) {
        CHECK(e.code() == errc::not_boolean);
    }
}

TEST_CASE("round trip holds for random and structured tables up to n=12") {
    CounterRng rng(99);
    for (int n : {1, 4, 8, 12}) {
        BooleanFunction f = BooleanFunction::random(n, rng);
        CHECK(inverse_fwht(fwht(f)) == f);
    }
    CHECK(inverse_fwht(fwht(majority(11))) == majority(11));
    CHECK(inverse_fwht(fwht(tribes(12, 3))) == tribes(12, 3));
}

TEST_CASE("weights: majority, parseval, tail identity") {
    FourierTable maj = fwht(majority(3));
    CHECK(weight_at_least(maj, 2) == Dyadic::scaled(1, 2)); // 1/4
    CHECK(weight_at_least(maj, 0) == Dyadic(1));
    CHECK(weight_at_least(fwht(parity_full(3)), 3) == Dyadic(1));
    CHECK_THROWS_AS(weight_at_least(maj, 5), error);
    CHECK_THROWS_AS(weight_exact(maj, -1), error);

    CounterRng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 1 + (int)rng.below(6);
        FourierTable t = fwht(BooleanFunction::random(n, rng));
        CHECK(t.parseval_holds());
        for (int d = 0; d <= n; ++d) {
            Dyadic tail = weight_at_least(t, d);
            Dyadic sum_below;
            for (int r = 0; r < d; ++r) sum_below += weight_exact(t, r);
            CHECK(tail == Dyadic(1) - sum_below);
        }
        for (uint64_t m = 0; m < t.raw().size(); ++m) {
            CHECK(t.coefficient(m).abs() <= Dyadic(1));
        }
    }
}

TEST_CASE("mean equals the empty coefficient") {
    CounterRng rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 1 + (int)rng.below(6);
        BooleanFunction f = BooleanFunction::random(n, rng);
        bigint plus = f.count_ones();
        bigint minus = bigint(f.table_size()) - plus;
        CHECK(fwht(f).mean() == Dyadic::scaled(plus - minus, (unsigned)n));
    }
}

TEST_CASE("degree") {
    CHECK(degree(fwht(and_function(2))) == 2);
    CHECK(degree(fwht(BooleanFunction::from_truth_table({0, 0}, 1))) == 0);
    CHECK(degree(fwht(dictator(4, 2))) == 1);
    CHECK(degree(fwht(parity_full(5))) == 5);
}
