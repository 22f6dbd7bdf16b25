#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bfan/boolean_function.hpp"
#include "bfan/calculus.hpp"
#include "bfan/dyadic.hpp"
#include "bfan/fourier.hpp"
#include "bfan/influence.hpp"

namespace bfan {

/// One side of a check: exact dyadic when available, float otherwise.
struct CheckValue {
    bool exact = false;
    Dyadic dy;
    double approx = 0.0;

    static CheckValue of(const Dyadic& d) { return CheckValue{true, d, d.to_double()}; }
    static CheckValue of(double v) { return CheckValue{false, Dyadic(), v}; }
};

/// A verified inequality or identity, normalized to lhs <= rhs with
/// slack = rhs - lhs (equality checks use slack = -|rhs - lhs|), so that
/// passed <=> slack >= -tol. Exact sides compare as dyadics when tol is 0.
struct CheckResult {
    std::string name;
    std::string instance;
    CheckValue lhs;
    CheckValue rhs;
    double slack = 0.0;
    double tol = 0.0;
    bool passed = false;
};

CheckResult make_le_check(std::string name, std::string instance, const Dyadic& lhs,
                          const Dyadic& rhs, double tol = 0.0);
CheckResult make_le_check(std::string name, std::string instance, double lhs, double rhs,
                          double tol);
CheckResult make_le_check(std::string name, std::string instance, double lhs, const Dyadic& rhs,
                          double tol);
CheckResult make_eq_check(std::string name, std::string instance, const Dyadic& lhs,
                          const Dyadic& rhs);

/// MaxInf_d(f) >= (1/10) W^{>=d}(f) (ln n / n)^d, with a certified upper bound
/// on the float side and 1e-12 slack. For n = 1 the bound is 0.
CheckResult check_main_theorem(const BooleanFunction& f, int d);

/// The per-set battery: CInf >= JInf >= Inf, the derivative-probability
/// sandwich, the coefficient lower bound, the |i| <= 2 equivalence, and the
/// single-bit agreement of all notions; everything exact.
std::vector<CheckResult> check_influence_chain(const BooleanFunction& f);

/// W^{>=d} identity against the heat-integral representation: one exact
/// record (Beta reduction, zero slack) and one quadrature record (1e-8).
std::vector<CheckResult> check_integral_identity_kkl(const BooleanFunction& f, int d);

/// Inf_j(g) - g-hat(j)^2 identity, same dual-route treatment.
std::vector<CheckResult> check_integral_identity_fkn(const BooleanFunction& g, const IndexSet& j);

/// Hypercontractive integral bound with the stated 0/1-influence conventions.
CheckResult check_kklprop2_bound(const BooleanFunction& f, const IndexSet& i, int d, int l);

/// ||P_t f||_2 <= ||f||_{1+e^{-2t}} + 1e-12.
CheckResult check_hypercontractivity(const BooleanFunction& f, double t);

/// TotInf(h) >= (1/2) E[h] ln(1/E[h]) - 1e-12 for h with values in {0,1};
/// `indicator` encodes h = 1 where the table bit is set.
CheckResult check_log_sobolev(const BooleanFunction& indicator);
/// Same, from explicit values; rejects anything outside {0,1}.
CheckResult check_log_sobolev(const std::vector<int>& values01);

/// Coefficients of a degree-<=d Boolean function lie in Z/2^{d-1} and at most
/// 2^{2d-2} are nonzero. Two exact records.
std::vector<CheckResult> check_degree_lattice(const BooleanFunction& g, int d);

struct SuiteResult {
    std::string name;
    std::vector<CheckResult> results;
    uint64_t passed = 0;
    uint64_t total = 0;

    bool all_passed() const { return passed == total; }
    std::string summary() const;
};

/// suite in {main-theorem, chain, kkl-identity, fkn-identity,
/// hypercontractivity, log-sobolev, lattice, all}.
SuiteResult run_suite(const std::string& suite, int n_max, uint64_t seed, int threads = 1);

/// Seeded instance generator shared by the randomized batteries: function i
/// draws its dimension uniformly from [1, n_max], then its table.
BooleanFunction random_function(uint64_t seed, uint64_t index, int n_max);

} // namespace bfan
