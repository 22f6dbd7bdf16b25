#include <doctest.h>

#include <cmath>

#include "bfan/families.hpp"
#include "bfan/sharpness.hpp"
#include "bfan/verify.hpp"

using namespace bfan;

TEST_CASE("main theorem check on worked examples") {
    BooleanFunction maj = majority(3);
    CheckResult r = check_main_theorem(maj, 2);
    CHECK(r.passed);
    CHECK(r.rhs.dy == Dyadic::scaled(1, 2)); // MaxInf_2 = 1/4
    // (1/10) * (1/4) * (ln 3 / 3)^2
    double expected = 0.1 * 0.25 * std::pow(std::log(3.0) / 3.0, 2);
    CHECK(r.lhs.approx == doctest::Approx(expected).epsilon(1e-9));

    BooleanFunction ones = BooleanFunction::from_truth_table(std::vector<uint8_t>(8, 1), 3);
    CheckResult c = check_main_theorem(ones, 2);
    CHECK(c.passed);
    CHECK(c.lhs.approx == 0.0); // W^{>=2} = 0

    CheckResult p = check_main_theorem(parity_full(3), 3);
    CHECK(p.passed);
    CHECK(p.rhs.dy == Dyadic(1));

    // n = 1: ln 1 = 0 makes the bound vanish.
    for (uint64_t w = 0; w < 4; ++w)
        CHECK(check_main_theorem(BooleanFunction::from_table_word(w, 1), 1).passed);

    CHECK_THROWS_AS(check_main_theorem(maj, 0), error);
    CHECK_THROWS_AS(check_main_theorem(maj, 4), error);
}

TEST_CASE("influence chain rows for the worked examples") {
    for (const CheckResult& r : check_influence_chain(dictator(2, 1))) CHECK(r.passed);
    for (const CheckResult& r : check_influence_chain(and_function(2))) CHECK(r.passed);
    for (const CheckResult& r : check_influence_chain(majority(3))) CHECK(r.passed);
}

TEST_CASE("kkl integral identity") {
    BooleanFunction maj = majority(3);
    auto r1 = check_integral_identity_kkl(maj, 1);
    REQUIRE(r1.size() == 2);
    CHECK(r1[0].passed); // exact Beta route
    CHECK(r1[0].slack == 0.0);
    CHECK(r1[0].lhs.dy == Dyadic(1)); // W^{>=1}(Maj3) = 1
    CHECK(r1[1].passed);

    auto r2 = check_integral_identity_kkl(maj, 2);
    CHECK(r2[0].lhs.dy == Dyadic::scaled(1, 2));
    CHECK(r2[0].passed);
    CHECK(r2[1].passed);

    BooleanFunction ones = BooleanFunction::from_truth_table(std::vector<uint8_t>(4, 1), 2);
    for (const auto& r : check_integral_identity_kkl(ones, 1)) CHECK(r.passed);

    for (int i = 0; i < 25; ++i) {
        BooleanFunction f = random_function(321, (uint64_t)i, 8);
        for (int d = 1; d <= std::min(3, f.n()); ++d)
            for (const auto& r : check_integral_identity_kkl(f, d)) {
                INFO(r.name, " ", r.instance);
                CHECK(r.passed);
            }
    }
}

TEST_CASE("fkn integral identity") {
    BooleanFunction maj = majority(3);
    auto r = check_integral_identity_fkn(maj, IndexSet::of({1}, 3));
    CHECK(r[0].lhs.dy == Dyadic::scaled(1, 2)); // Inf_{1} - (1/2)^2 = 1/4
    CHECK(r[0].rhs.approx == doctest::Approx(0.25));
    CHECK(r[0].passed);
    CHECK(r[1].passed);

    auto re = check_integral_identity_fkn(dictator(2, 1), IndexSet::empty(2));
    CHECK(re[0].lhs.dy == Dyadic(1)); // 1 - f-hat(empty)^2
    CHECK(re[0].passed);

    // Full-set j: both sides degenerate to zero.
    auto rf = check_integral_identity_fkn(parity_full(3), IndexSet::full(3));
    CHECK(rf[0].lhs.dy == Dyadic(0));
    CHECK(rf[0].passed);
    CHECK(rf[1].passed);

    for (int i = 0; i < 15; ++i) {
        BooleanFunction g = random_function(55, (uint64_t)i, 6);
        for (uint64_t m = 0; m < g.table_size(); ++m) {
            if (popcount64(m) > 2) continue;
            for (const auto& rr : check_integral_identity_fkn(g, IndexSet(m, g.n()))) {
                INFO(rr.name, " ", rr.instance);
                CHECK(rr.passed);
            }
        }
    }
}

TEST_CASE("kklprop2 hypercontractive bound") {
    BooleanFunction maj = majority(3);
    CheckResult r = check_kklprop2_bound(maj, IndexSet::of({1}, 3), 1, 1);
    CHECK(r.passed);
    // Exact integral: sum over k ⊇ {1} of f-hat(k)^2 / (2(|k|-1)+2) = 1/6.
    CHECK(r.lhs.approx == doctest::Approx(1.0 / 6.0).epsilon(1e-8));
    CHECK(r.rhs.approx == doctest::Approx(0.5 / std::log(2.0)).epsilon(1e-12));

    // Inf = 0: both sides zero by the stated convention.
    CheckResult z = check_kklprop2_bound(dictator(2, 1), IndexSet::of({1, 2}, 2), 2, 1);
    CHECK(z.passed);
    CHECK(z.lhs.approx == doctest::Approx(0.0));
    CHECK(z.rhs.approx == 0.0);

    // Inf = 1: the right side is +infinity by convention.
    CheckResult one = check_kklprop2_bound(parity_full(3), IndexSet::of({1}, 3), 1, 1);
    CHECK(one.passed);
    CHECK(std::isinf(one.rhs.approx));

    CHECK_THROWS_AS(check_kklprop2_bound(maj, IndexSet::of({1}, 3), 1, 2), error);
}

TEST_CASE("hypercontractivity check") {
    BooleanFunction chi = dictator(3, 1);
    CheckResult r = check_hypercontractivity(chi, 0.9);
    CHECK(r.passed);
    CHECK(r.lhs.approx == doctest::Approx(std::exp(-0.9)));
    CHECK(r.rhs.approx == doctest::Approx(1.0));

    CheckResult at0 = check_hypercontractivity(majority(3), 0.0);
    CHECK(at0.passed);
    CHECK(at0.slack == doctest::Approx(0.0).epsilon(1e-12));

    BooleanFunction f = random_function(77, 3, 6);
    CHECK(check_hypercontractivity(f, 0.5).passed);
    CHECK_THROWS_AS(check_hypercontractivity(f, -1.0), error);
}

TEST_CASE("log-Sobolev check") {
    // h = indicator of x1 = +1.
    BooleanFunction half = dictator(3, 1);
    CheckResult r = check_log_sobolev(half);
    CHECK(r.passed);
    CHECK(r.rhs.dy == Dyadic::scaled(1, 2)); // TotInf(h) = 1/4
    CHECK(r.lhs.approx == doctest::Approx(0.25 * std::log(2.0)));

    BooleanFunction zero = BooleanFunction::from_truth_table({0, 0, 0, 0}, 2);
    CHECK(check_log_sobolev(zero).passed);
    BooleanFunction one = BooleanFunction::from_truth_table({1, 1, 1, 1}, 2);
    CHECK(check_log_sobolev(one).passed);

    CHECK(check_log_sobolev(std::vector<int>{0, 1, 1, 0}).passed);
    CHECK_THROWS_AS(check_log_sobolev(std::vector<int>{0, 2, 1, 0}), error);
}

TEST_CASE("degree lattice check") {
    auto and2 = check_degree_lattice(and_function(2), 2);
    CHECK(and2[0].passed); // halves lie in Z/2
    CHECK(and2[1].passed); // 4 nonzero <= 4
    CHECK(and2[1].lhs.dy == Dyadic(4));
    CHECK(and2[1].rhs.dy == Dyadic(4));

    auto dict = check_degree_lattice(dictator(3, 2), 1);
    CHECK(dict[0].passed);
    CHECK(dict[1].lhs.dy == Dyadic(1));
    CHECK(dict[1].rhs.dy == Dyadic(1));

    auto maj = check_degree_lattice(majority(3), 3);
    CHECK(maj[0].passed);
    CHECK(maj[1].lhs.dy == Dyadic(4));

    CHECK_THROWS_AS(check_degree_lattice(majority(3), 2), error);
}

TEST_CASE("suite runner") {
    SuiteResult s = run_suite("main-theorem", 2, 1);
    CHECK(s.all_passed());
    CHECK(s.total == 4 + 16 * 2); // n=1: 4 checks; n=2: 16 functions x d in {1,2}
    CHECK(s.summary() == "suite=main-theorem pass=" + std::to_string(s.passed) + "/" +
                             std::to_string(s.total));

    SuiteResult chain = run_suite("chain", 2, 1);
    CHECK(chain.all_passed());

    CHECK_THROWS_AS(run_suite("bogus", 4, 1), error);

    // Determinism of the seeded batteries.
    SuiteResult a = run_suite("hypercontractivity", 4, 9);
    SuiteResult b = run_suite("hypercontractivity", 4, 9);
    CHECK(a.passed == b.passed);
    CHECK(a.total == b.total);
    CHECK(a.all_passed());
}

TEST_CASE("threaded suites match single-threaded ones") {
    SuiteResult one = run_suite("chain", 3, 1, 1);
    SuiteResult four = run_suite("chain", 3, 1, 4);
    CHECK(one.passed == four.passed);
    CHECK(one.total == four.total);
    REQUIRE(one.results.size() == four.results.size());
    for (size_t i = 0; i < one.results.size(); ++i)
        CHECK(one.results[i].instance == four.results[i].instance);
}

TEST_CASE("sharpness report on exact and degenerate specs") {
    TribeSpec spec = hypertribe(16, 2, 7);
    SharpnessRow row = sharpness_report(spec, 2, 7);
    CHECK(row.exact);
    CHECK(row.k == 4);
    CHECK(row.max_jinf > 0.0);
    CHECK(row.w_ge_d > 0.0);
    CHECK(row.ratio > 0.0);
    CHECK(std::isfinite(row.ratio));
    CHECK(row.harris_ok);

    // Zero blocks: H is constant -1, the ratio is flagged, p(-1) = 1.
    TribeSpec degenerate;
    degenerate.n = 16;
    degenerate.k = 4;
    degenerate.d = 2;
    degenerate.packing.n = 16;
    degenerate.packing.k = 4;
    degenerate.packing.d = 2;
    SharpnessRow drow = sharpness_report(degenerate, 2, 7);
    CHECK(drow.degenerate);
    CHECK(drow.p_minus == 1.0);
    CHECK(drow.max_jinf == 0.0);

    CHECK_THROWS_AS(sharpness_report(spec, 0, 7), error);
    SharpnessOptions bad;
    bad.samples = 1;
    CHECK_THROWS_AS(sharpness_report(spec, 2, 7, bad), error);
}
