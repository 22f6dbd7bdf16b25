#include <doctest.h>

#include <cmath>
#include <sstream>

#include "bfan/fourier.hpp"
#include "bfan/influence.hpp"
#include "bfan/sampler.hpp"
#include "bfan/sharpness.hpp"

using namespace bfan;

namespace {

// The documented stream, reimplemented from its specification.
uint64_t spec_mix(uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

} // namespace

TEST_CASE("counter rng follows its published specification") {
    CounterRng rng(123);
    for (uint64_t c = 0; c < 8; ++c)
        CHECK(rng.next_u64() == spec_mix(123 + (c + 1) * 0x9E3779B97F4A7C15ULL));

    CounterRng again(123);
    CHECK(again.next_u64() == CounterRng::word(123, 0));

    CounterRng bounded(9);
    for (int i = 0; i < 1000; ++i) CHECK(bounded.below(7) < 7);

    CounterRng bits(5);
    std::vector<uint64_t> x = bits.next_bits(70);
    REQUIRE(x.size() == 2);
    CHECK((x[1] >> 6) == 0); // bits past n are cleared
}

TEST_CASE("welford statistics and merging") {
    RunningStat st;
    for (double v : {1.0, 2.0, 3.0, 4.0}) st.add(v);
    CHECK(st.mean == doctest::Approx(2.5));
    // sample sd = sqrt(5/3): stderr = sqrt(5/3)/2
    CHECK(st.stderr_() == doctest::Approx(std::sqrt(5.0 / 3.0) / 2.0));

    RunningStat a, b;
    for (double v : {1.0, 2.0}) a.add(v);
    for (double v : {3.0, 4.0}) b.add(v);
    a.merge(b);
    CHECK(a.count == 4);
    CHECK(a.mean == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(a.m2 == doctest::Approx(st.m2).epsilon(1e-12));
}

TEST_CASE("estimators hit exact values on degenerate integrands") {
    PointwiseFunction par = as_pointwise(parity_full(3));
    Estimate e = estimate_coefficient(par, {1, 2, 3}, 1000, 4);
    CHECK(e.value == 1.0);
    CHECK(e.stderr_ == 0.0);

    PointwiseFunction dict = as_pointwise(dictator(2, 1));
    Estimate z = estimate_t_influence(dict, {1, 2}, 500, 4);
    CHECK(z.value == 0.0);
    CHECK(z.stderr_ == 0.0);
    CHECK(estimate_t_influence(par, {2}, 500, 4).value == 1.0);
    CHECK(estimate_joint_influence(dict, {1, 2}, 500, 4).value == 0.0);

    BooleanFunction allminus = BooleanFunction::from_truth_table({0, 0, 0, 0}, 2);
    auto [plus, minus] = estimate_sign_probabilities(as_pointwise(allminus), 100, 4);
    CHECK(plus.value == 0.0);
    CHECK(minus.value == 1.0);
    CHECK(plus.value + minus.value == 1.0);
}

TEST_CASE("estimators land near exact values") {
    BooleanFunction maj = majority(3);
    PointwiseFunction f = as_pointwise(maj);

    Estimate ti = estimate_t_influence(f, {1, 2}, 20000, 11);
    CHECK(std::abs(ti.value - 0.25) <= 4 * ti.stderr_ + 1e-12);

    Estimate ji = estimate_joint_influence(f, {1, 2}, 20000, 11);
    CHECK(ji.value == 1.0); // every restriction of Maj3 keeps both pivotal

    BooleanFunction t42 = tribes(4, 2);
    Estimate c = estimate_coefficient(as_pointwise(t42), {}, 40000, 13);
    CHECK(std::abs(c.value - (-0.125)) <= 4 * c.stderr_);

    auto [p, m] = estimate_sign_probabilities(as_pointwise(t42), 40000, 13);
    CHECK(std::abs(p.value - 7.0 / 16.0) <= 4 * p.stderr_);

    // Level weight: W^{=1}(Maj3) = 3/4.
    Estimate w1 = estimate_level_weight(f, 1, 40000, 17);
    CHECK(std::abs(w1.value - 0.75) <= 4 * w1.stderr_);
    Estimate w0 = estimate_level_weight(f, 0, 40000, 17);
    CHECK(std::abs(w0.value) <= 4 * w0.stderr_ + 1e-12);
}

TEST_CASE("coupled estimates keep the pathwise dominance") {
    TribeSpec spec = hypertribe(16, 2, 7);
    PointwiseFunction f = tribe_evaluator(spec);
    auto [joint, tinf] = estimate_joint_and_t_influence(f, {1, 2}, 5000, 21);
    CHECK(joint.value >= tinf.value);

    // And against the exact engine.
    BooleanFunction mat = materialize(spec);
    Dyadic exact_j = joint_influence(mat, IndexSet::of({1, 2}, 16));
    Dyadic exact_t = t_influence(fwht(mat), IndexSet::of({1, 2}, 16));
    CHECK(std::abs(joint.value - exact_j.to_double()) <= 4 * joint.stderr_ + 1e-12);
    CHECK(std::abs(tinf.value - exact_t.to_double()) <= 4 * tinf.stderr_ + 1e-12);
}

TEST_CASE("same seed gives identical estimates, any thread count") {
    PointwiseFunction f = tribe_evaluator(hypertribe(64, 2, 9));
    Estimate a = estimate_coefficient(f, {1, 5}, 9000, 33, 1);
    Estimate b = estimate_coefficient(f, {1, 5}, 9000, 33, 1);
    Estimate c = estimate_coefficient(f, {1, 5}, 9000, 33, 4);
    CHECK(a.value == b.value);
    CHECK(a.stderr_ == b.stderr_);
    CHECK(a.value == c.value);
    CHECK(a.stderr_ == c.stderr_);

    Estimate d = estimate_coefficient(f, {1, 5}, 9000, 34, 1);
    CHECK(a.value != d.value); // different seed, different draw
}

TEST_CASE("sampler input validation") {
    PointwiseFunction f = as_pointwise(majority(3));
    CHECK_THROWS_AS(estimate_coefficient(f, {0}, 100, 1), error);
    CHECK_THROWS_AS(estimate_coefficient(f, {4}, 100, 1), error);
    CHECK_THROWS_AS(estimate_coefficient(f, {2, 2}, 100, 1), error);
    CHECK_THROWS_AS(estimate_t_influence(f, {1}, 1, 1), error);
    CHECK_THROWS_AS(estimate_joint_influence(f, {}, 100, 1), error);

    // Subcubes wider than 20 coordinates are rejected up front.
    PointwiseFunction wide{30, [](const std::vector<uint64_t>&) { return 1; }};
    std::vector<int> big;
    for (int i = 1; i <= 21; ++i) big.push_back(i);
    try {
        estimate_t_influence(wide, big, 100, 1);
        FAIL("expected SubcubeTooLarge");
    } catch (const error& e) {
        CHECK(e.code() == errc::subcube_too_large);
    }
    CHECK_THROWS_AS(estimate_level_weight(f, 9, 100, 1), error);
}

TEST_CASE("estimate CSV rows") {
    std::ostringstream os;
    os << estimate_csv_header() << "\n";
    append_estimate_csv(os, "t_influence", {1, 2}, Estimate{0.25, 0.001, 1000, 7});
    CHECK(os.str() ==
          "estimator,set,value,stderr,samples,seed\nt_influence,1 2,0.25,0.001,1000,7\n");
}
