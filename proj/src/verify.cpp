#include "bfan/verify.hpp"

#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <thread>

#include "bfan/bits.hpp"
#include "bfan/quadrature.hpp"
#include "bfan/rng.hpp"

namespace bfan {

namespace {

// Margin for "certified upper bound" float sides: one part in ~10^14 covers
// the handful of roundings that produce them.
constexpr double kCertifiedFactor = 1.0 + 8e-15;

std::string hex_table(const BooleanFunction& f) {
    if (f.n() > 6) return "n=" + std::to_string(f.n());
    std::ostringstream os;
    os << "0x" << std::hex << f.table_word();
    return os.str();
}

std::string instance_str(const BooleanFunction& f, const std::string& extra = "") {
    std::string s = "n=" + std::to_string(f.n()) + " f=" + hex_table(f);
    if (!extra.empty()) s += " " + extra;
    return s;
}

} // namespace

CheckResult make_le_check(std::string name, std::string instance, const Dyadic& lhs,
                          const Dyadic& rhs, double tol) {
    CheckResult r;
    r.name = std::move(name);
    r.instance = std::move(instance);
    r.lhs = CheckValue::of(lhs);
    r.rhs = CheckValue::of(rhs);
    r.slack = (rhs - lhs).to_double();
    r.tol = tol;
    r.passed = tol == 0.0 ? lhs <= rhs : r.slack >= -tol;
    return r;
}

CheckResult make_le_check(std::string name, std::string instance, double lhs, double rhs,
                          double tol) {
    CheckResult r;
    r.name = std::move(name);
    r.instance = std::move(instance);
    r.lhs = CheckValue::of(lhs);
    r.rhs = CheckValue::of(rhs);
    r.slack = rhs - lhs;
    r.tol = tol;
    r.passed = r.slack >= -tol;
    return r;
}

CheckResult make_le_check(std::string name, std::string instance, double lhs, const Dyadic& rhs,
                          double tol) {
    CheckResult r;
    r.name = std::move(name);
    r.instance = std::move(instance);
    r.lhs = CheckValue::of(lhs);
    r.rhs = CheckValue::of(rhs);
    r.slack = rhs.to_double() - lhs;
    r.tol = tol;
    r.passed = r.slack >= -tol;
    return r;
}

CheckResult make_eq_check(std::string name, std::string instance, const Dyadic& lhs,
                          const Dyadic& rhs) {
    CheckResult r;
    r.name = std::move(name);
    r.instance = std::move(instance);
    r.lhs = CheckValue::of(lhs);
    r.rhs = CheckValue::of(rhs);
    r.slack = -std::abs((rhs - lhs).to_double());
    r.tol = 0.0;
    r.passed = lhs == rhs;
    return r;
}

CheckResult check_main_theorem(const BooleanFunction& f, int d) {
    const int n = f.n();
    if (d < 1 || d > n) fail(errc::bad_degree, "d must be in [1, n]");
    FourierTable t = fwht(f);
    auto [set, maxinf] = max_influence(t, d);
    Dyadic w = weight_at_least(t, d);
    // ln 1 = 0 makes the n = 1 bound vanish on its own.
    double bound =
        0.1 * w.to_double() * std::pow(std::log((double)n) / (double)n, d) * kCertifiedFactor;
    CheckResult r = make_le_check(
        "main-theorem", instance_str(f, "d=" + std::to_string(d) + " argmax=" + set.to_string()),
        bound, maxinf, 1e-12);
    return r;
}

std::vector<CheckResult> check_influence_chain(const BooleanFunction& f) {
    const int n = f.n();
    FourierTable t = fwht(f);
    std::vector<CheckResult> out;
    for (uint64_t m = 1; m < (uint64_t{1} << n); ++m) {
        IndexSet i(m, n);
        const int r = i.size();
        InfluenceReport rep = influence_report(f, t, i);
        std::string inst = instance_str(f, "i=" + i.to_string());

        out.push_back(make_le_check("chain/cinf-ge-jinf", inst, rep.joint, rep.coalition));
        out.push_back(make_le_check("chain/jinf-ge-inf", inst, rep.t_influence, rep.joint));
        out.push_back(
            make_le_check("chain/prob-ge-inf", inst, rep.t_influence, rep.nonzero_derivative_prob));
        // Inf >= 2^{-(2r-2)} P(∂f != 0)
        Dyadic scaled_prob = rep.nonzero_derivative_prob * Dyadic::scaled(1, 2u * (unsigned)r - 2);
        out.push_back(make_le_check("chain/inf-ge-prob-scaled", inst, scaled_prob, rep.t_influence));
        // Inf >= |f-hat(i)| / 2^{r-1}
        Dyadic coeff_bound = t.coefficient(i).abs() * Dyadic::scaled(1, (unsigned)r - 1);
        out.push_back(make_le_check("chain/inf-ge-coeff", inst, coeff_bound, rep.t_influence));
        if (r <= 2)
            out.push_back(make_eq_check("chain/jinf-eq-prob-r12", inst, rep.joint,
                                        rep.nonzero_derivative_prob));
        if (r == 1) {
            uint64_t flips = 0;
            const uint64_t bit = m;
            for (uint64_t x = 0; x < f.table_size(); ++x)
                if (f.bit(x) != f.bit(x ^ bit)) ++flips;
            Dyadic flip_prob = Dyadic::scaled(bigint(flips), (unsigned)n);
            bool agree = rep.t_influence == flip_prob && rep.joint == flip_prob &&
                         rep.coalition == flip_prob;
            CheckResult c = make_eq_check("chain/single-bit-agreement", inst, rep.t_influence,
                                          flip_prob);
            c.passed = agree;
            if (!agree) c.slack = -1.0;
            out.push_back(std::move(c));
        }
    }
    return out;
}

namespace {

/// Squared-coefficient mass of levels above a base set: level_mass[j] holds
/// sum of f-hat(k)^2 over k ⊇ i with |k| - |i| = j, summed across `sets`.
std::vector<double> level_mass_above(const FourierTable& t, const std::vector<uint64_t>& sets,
                                     int base_size) {
    std::vector<double> mass((size_t)(t.n() - base_size) + 1, 0.0);
    const double inv4n = std::ldexp(1.0, -2 * t.n());
    for (uint64_t im : sets) {
        for_each_superset(im, t.n(), [&](uint64_t k) {
            double c2 = (double)(t.raw(k) * t.raw(k)) * inv4n;
            mass[(size_t)(popcount64(k) - base_size)] += c2;
        });
    }
    return mass;
}

double integrate_heat_kernel(const std::vector<double>& mass, int l) {
    // u-substituted integrand: (1/2) (1-u)^{l-1} sum_j mass[j] u^j on [0,1].
    auto integrand = [&](double u) {
        double poly = 0.0, up = 1.0;
        for (double m : mass) {
            poly += m * up;
            up *= u;
        }
        return 0.5 * std::pow(1.0 - u, l - 1) * poly;
    };
    return adaptive_simpson(integrand, 0.0, 1.0, 1e-10, 1e-14);
}

} // namespace

std::vector<CheckResult> check_integral_identity_kkl(const BooleanFunction& f, int d) {
    const int n = f.n();
    if (n > 10) fail(errc::dimension_too_large, "identity checks run at n <= 10");
    if (d < 1 || d > n) fail(errc::bad_degree, "d must be in [1, n]");
    FourierTable t = fwht(f);
    Dyadic lhs = weight_at_least(t, d);

    std::vector<uint64_t> sets;
    for_each_subset_of_size(n, d, [&](uint64_t m) { sets.push_back(m); });

    // Exact route: the Beta reduction gives each k ⊇ i the weight
    // 1 / (2d C(|k|, d)); the double sum must collapse to W^{>=d}.
    bigrational acc = 0;
    for (uint64_t im : sets) {
        for_each_superset(im, n, [&](uint64_t k) {
            bigint num = bigint(t.raw(k)) * t.raw(k);
            bigint den = bigint(2 * d) * binomial((uint64_t)popcount64(k), (uint64_t)d);
            acc += bigrational(num, den);
        });
    }
    bigrational rhs_exact = acc * bigrational(bigint(2 * d), bigint(1) << (2 * n));

    std::string inst = instance_str(f, "d=" + std::to_string(d));
    CheckResult exact;
    exact.name = "kkl-identity/beta";
    exact.instance = inst;
    exact.lhs = CheckValue::of(lhs);
    exact.rhs = CheckValue::of(rhs_exact.convert_to<double>());
    exact.tol = 0.0;
    exact.passed = rhs_exact == lhs.to_rational();
    exact.slack = exact.passed ? 0.0 : -std::abs(exact.rhs.approx - exact.lhs.approx);

    double rhs_num = 2.0 * d * integrate_heat_kernel(level_mass_above(t, sets, d), d);
    CheckResult numeric;
    numeric.name = "kkl-identity/quadrature";
    numeric.instance = inst;
    numeric.lhs = CheckValue::of(lhs);
    numeric.rhs = CheckValue::of(rhs_num);
    numeric.tol = 1e-8;
    numeric.slack = -std::abs(rhs_num - lhs.to_double());
    numeric.passed = numeric.slack >= -numeric.tol;

    return {std::move(exact), std::move(numeric)};
}

std::vector<CheckResult> check_integral_identity_fkn(const BooleanFunction& g, const IndexSet& j) {
    const int n = g.n();
    if (n > 10) fail(errc::dimension_too_large, "identity checks run at n <= 10");
    if (j.n() != n) fail(errc::dimension_mismatch, "set and function n differ");
    // |j| = n degenerates to 0 = 0 (no (|j|+1)-supersets exist) and is accepted.
    FourierTable t = fwht(g);
    const int k = j.size();

    Dyadic coeff = t.coefficient(j);
    Dyadic lhs = t_influence(t, j) - coeff * coeff;

    // Sets i of size k+1 containing j.
    std::vector<uint64_t> sets;
    for (int b = 0; b < n; ++b)
        if (!((j.mask() >> b) & 1)) sets.push_back(j.mask() | (1ULL << b));

    // Exact route: int_0^inf e^{-2t} ||P_t ∂_i g||^2 dt weighs each k ⊇ i by
    // 1 / (2 (|k| - |i| + 1)).
    bigrational acc = 0;
    for (uint64_t im : sets) {
        for_each_superset(im, n, [&](uint64_t kk) {
            bigint num = bigint(t.raw(kk)) * t.raw(kk);
            bigint den = bigint(2) * (popcount64(kk) - (k + 1) + 1);
            acc += bigrational(num, den);
        });
    }
    bigrational rhs_exact = acc * bigrational(bigint(2), bigint(1) << (2 * n));

    std::string inst = instance_str(g, "j=" + j.to_string());
    CheckResult exact;
    exact.name = "fkn-identity/beta";
    exact.instance = inst;
    exact.lhs = CheckValue::of(lhs);
    exact.rhs = CheckValue::of(rhs_exact.convert_to<double>());
    exact.tol = 0.0;
    exact.passed = rhs_exact == lhs.to_rational();
    exact.slack = exact.passed ? 0.0 : -std::abs(exact.rhs.approx - exact.lhs.approx);

    double rhs_num = 2.0 * integrate_heat_kernel(level_mass_above(t, sets, k + 1), 1);
    CheckResult numeric;
    numeric.name = "fkn-identity/quadrature";
    numeric.instance = inst;
    numeric.lhs = CheckValue::of(lhs);
    numeric.rhs = CheckValue::of(rhs_num);
    numeric.tol = 1e-8;
    numeric.slack = -std::abs(rhs_num - lhs.to_double());
    numeric.passed = numeric.slack >= -numeric.tol;

    return {std::move(exact), std::move(numeric)};
}

CheckResult check_kklprop2_bound(const BooleanFunction& f, const IndexSet& i, int d, int l) {
    const int n = f.n();
    if (l < 1 || l > d) fail(errc::precondition_violated, "need 1 <= l <= d");
    if (i.n() != n) fail(errc::dimension_mismatch, "set and function n differ");
    DerivativeTable deriv = derivative_pointwise(f, i);
    if (!deriv.values_in_lattice(d))
        fail(errc::precondition_violated, "derivative values leave Z/2^{d-1}");
    FourierTable t = fwht(f);
    Dyadic inf = t_influence(t, i);
    if (inf > Dyadic(1)) fail(errc::precondition_violated, "influence exceeds 1");

    std::string inst =
        instance_str(f, "i=" + i.to_string() + " d=" + std::to_string(d) + " l=" + std::to_string(l));

    double lhs = integrate_heat_kernel(level_mass_above(t, {i.mask()}, i.size()), l);
    double rhs;
    if (inf.is_zero())
        rhs = 0.0; // 0 * (ln 1/0)^{-l} = 0
    else if (inf == Dyadic(1))
        rhs = std::numeric_limits<double>::infinity(); // 1 * (ln 1/1)^{-l} = +inf
    else {
        double fact = 1.0;
        for (int m = 2; m <= l - 1; ++m) fact *= m;
        double x = inf.to_double();
        rhs = fact * std::pow(4.0, d - 1) * x / std::pow(std::log(1.0 / x), l);
    }
    return make_le_check("kklprop2-bound", inst, lhs, rhs, 1e-9);
}

CheckResult check_hypercontractivity(const BooleanFunction& f, double t) {
    if (t < 0) fail(errc::negative_time, "time must be >= 0");
    FourierTable ft = fwht(f);
    double lhs = std::sqrt(heat(ft, t).norm_sq());
    double q = 1.0 + std::exp(-2.0 * t);
    double acc = 0.0;
    for (uint64_t x = 0; x < f.table_size(); ++x)
        acc += std::pow(std::abs((double)f.value(x)), q);
    double rhs = std::pow(acc / (double)f.table_size(), 1.0 / q);
    return make_le_check("hypercontractivity", instance_str(f, "t=" + std::to_string(t)), lhs, rhs,
                         1e-12);
}

CheckResult check_log_sobolev(const BooleanFunction& indicator) {
    FourierTable t = fwht(indicator);
    // h = (f + 1)/2 pointwise, so ∂_i h = ∂_i f / 2 and TotInf(h) = TotInf(f)/4.
    Dyadic totinf_h = total_influence(t) * Dyadic::scaled(1, 2);
    Dyadic eh = Dyadic::scaled(bigint(indicator.count_ones()), (unsigned)indicator.n());
    double e = eh.to_double();
    double bound = (e <= 0.0) ? 0.0 : 0.5 * e * std::log(1.0 / e); // 0 ln(1/0) = 0
    return make_le_check("log-sobolev", instance_str(indicator), bound, totinf_h, 1e-12);
}

CheckResult check_log_sobolev(const std::vector<int>& values01) {
    uint64_t sz = values01.size();
    int n = 0;
    while ((uint64_t{1} << n) < sz) ++n;
    if ((uint64_t{1} << n) != sz) fail(errc::length_mismatch, "table must have 2^n rows");
    std::vector<uint8_t> bits(sz);
    for (uint64_t b = 0; b < sz; ++b) {
        if (values01[b] != 0 && values01[b] != 1)
            fail(errc::range_violation, "values must lie in {0,1}");
        bits[b] = (uint8_t)values01[b];
    }
    return check_log_sobolev(BooleanFunction::from_truth_table(bits, n));
}

std::vector<CheckResult> check_degree_lattice(const BooleanFunction& g, int d) {
    if (d < 1) fail(errc::bad_degree, "d must be >= 1");
    const int n = g.n();
    FourierTable t = fwht(g);
    if (degree(t) > d) fail(errc::degree_too_high, "function degree exceeds d");

    int shift = n - (d - 1);
    bool lattice_ok = true;
    uint64_t nonzero = 0;
    for (uint64_t m = 0; m < t.raw().size(); ++m) {
        int64_t c = t.raw(m);
        if (c != 0) ++nonzero;
        if (shift > 0 && (c & ((int64_t{1} << shift) - 1)) != 0) lattice_ok = false;
    }
    std::string inst = instance_str(g, "d=" + std::to_string(d));

    CheckResult lat;
    lat.name = "lattice/coefficients";
    lat.instance = inst;
    lat.lhs = CheckValue::of(Dyadic(0));
    lat.rhs = CheckValue::of(Dyadic(0));
    lat.tol = 0.0;
    lat.passed = lattice_ok;
    lat.slack = lattice_ok ? 0.0 : -1.0;

    uint64_t cap = uint64_t{1} << (2 * d - 2);
    CheckResult sup = make_le_check("lattice/support", inst, Dyadic((long long)nonzero),
                                    Dyadic((long long)cap));
    return {std::move(lat), std::move(sup)};
}

// ---------------------------------------------------------------------------
// Suites

namespace {

struct Aggregator {
    std::string name;
    std::string instance;
    uint64_t passed = 0;
    uint64_t total = 0;
    std::vector<CheckResult> failures;

    void add(const CheckResult& r) {
        ++total;
        if (r.passed)
            ++passed;
        else if (failures.size() < 10)
            failures.push_back(r);
    }

    void merge(const Aggregator& o) {
        passed += o.passed;
        total += o.total;
        for (const auto& f : o.failures)
            if (failures.size() < 10) failures.push_back(f);
    }

    void emit(SuiteResult& suite) const {
        CheckResult row;
        row.name = name;
        row.instance = instance + " (" + std::to_string(passed) + "/" + std::to_string(total) +
                       " instances)";
        row.lhs = CheckValue::of(Dyadic((long long)total));
        row.rhs = CheckValue::of(Dyadic((long long)passed));
        row.tol = 0.0;
        row.slack = (double)passed - (double)total;
        row.passed = passed == total;
        suite.results.push_back(std::move(row));
        for (const auto& f : failures) suite.results.push_back(f);
        suite.passed += passed;
        suite.total += total;
    }
};

/// Runs body(local, index) over [0, total) in fixed 1024-wide chunks; locals
/// merge in chunk order so any thread count gives identical output.
template <class Local, class Body>
Local run_chunked(uint64_t total, int threads, const Body& body) {
    constexpr uint64_t kChunk = 1024;
    const uint64_t chunks = (total + kChunk - 1) / kChunk;
    std::vector<Local> locals(chunks);
    auto run_one = [&](uint64_t c) {
        const uint64_t hi = std::min(total, (c + 1) * kChunk);
        for (uint64_t i = c * kChunk; i < hi; ++i) body(locals[c], i);
    };
    if (threads <= 1 || chunks <= 1) {
        for (uint64_t c = 0; c < chunks; ++c) run_one(c);
    } else {
        std::atomic<uint64_t> next{0};
        std::vector<std::thread> pool;
        int nthreads = std::min<int>(threads, (int)chunks);
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back([&] {
                while (true) {
                    uint64_t c = next.fetch_add(1);
                    if (c >= chunks) break;
                    run_one(c);
                }
            });
        for (auto& t : pool) t.join();
    }
    Local merged = std::move(locals[0]);
    for (uint64_t c = 1; c < chunks; ++c) merged.merge(locals[c]);
    return merged;
}

struct AggVec {
    std::vector<Aggregator> aggs;
    void merge(const AggVec& o) {
        if (aggs.size() < o.aggs.size()) aggs.resize(o.aggs.size());
        for (size_t i = 0; i < o.aggs.size(); ++i) aggs[i].merge(o.aggs[i]);
    }
};

int clamp_exhaustive_n(int n_max) {
    if (n_max < 1) fail(errc::bad_parameters, "n_max must be >= 1");
    return std::min(n_max, 4);
}

SuiteResult main_theorem_suite(int n_max, int threads) {
    SuiteResult suite;
    suite.name = "main-theorem";
    for (int n = 1; n <= clamp_exhaustive_n(n_max); ++n) {
        const uint64_t tables = uint64_t{1} << (uint64_t{1} << n);
        AggVec merged = run_chunked<AggVec>(tables, threads, [n](AggVec& local, uint64_t word) {
            if (local.aggs.empty()) local.aggs.resize((size_t)n);
            BooleanFunction f = BooleanFunction::from_table_word(word, n);
            for (int d = 1; d <= n; ++d) local.aggs[(size_t)d - 1].add(check_main_theorem(f, d));
        });
        for (int d = 1; d <= n; ++d) {
            Aggregator& a = merged.aggs[(size_t)d - 1];
            a.name = "main-theorem";
            a.instance = "n=" + std::to_string(n) + " d=" + std::to_string(d) + " all functions";
            a.emit(suite);
        }
    }
    return suite;
}

const std::vector<std::string>& chain_check_names() {
    static const std::vector<std::string> names = {
        "chain/cinf-ge-jinf",      "chain/jinf-ge-inf",  "chain/prob-ge-inf",
        "chain/inf-ge-prob-scaled", "chain/inf-ge-coeff", "chain/jinf-eq-prob-r12",
        "chain/single-bit-agreement"};
    return names;
}

SuiteResult chain_suite(int n_max, int threads) {
    SuiteResult suite;
    suite.name = "chain";
    const auto& names = chain_check_names();
    for (int n = 1; n <= clamp_exhaustive_n(n_max); ++n) {
        const uint64_t tables = uint64_t{1} << (uint64_t{1} << n);
        AggVec merged = run_chunked<AggVec>(tables, threads, [&, n](AggVec& local, uint64_t word) {
            if (local.aggs.empty()) local.aggs.resize(names.size());
            BooleanFunction f = BooleanFunction::from_table_word(word, n);
            for (const CheckResult& r : check_influence_chain(f)) {
                for (size_t j = 0; j < names.size(); ++j)
                    if (r.name == names[j]) {
                        local.aggs[j].add(r);
                        break;
                    }
            }
        });
        for (size_t j = 0; j < names.size(); ++j) {
            Aggregator& a = merged.aggs[j];
            if (a.total == 0) continue;
            a.name = names[j];
            a.instance = "n=" + std::to_string(n) + " all functions, all nonempty sets";
            a.emit(suite);
        }
    }
    return suite;
}

SuiteResult kkl_identity_suite(uint64_t seed, int threads) {
    SuiteResult suite;
    suite.name = "kkl-identity";
    AggVec merged = run_chunked<AggVec>(200, threads, [seed](AggVec& local, uint64_t i) {
        if (local.aggs.empty()) local.aggs.resize(2);
        BooleanFunction f = random_function(seed, i, 8);
        for (int d = 1; d <= std::min(3, f.n()); ++d) {
            auto rs = check_integral_identity_kkl(f, d);
            local.aggs[0].add(rs[0]);
            local.aggs[1].add(rs[1]);
        }
    });
    merged.aggs[0].name = "kkl-identity/beta";
    merged.aggs[1].name = "kkl-identity/quadrature";
    for (auto& a : merged.aggs) {
        a.instance = "200 seeded functions, n<=8, d<=3";
        a.emit(suite);
    }
    return suite;
}

SuiteResult fkn_identity_suite(uint64_t seed, int threads) {
    SuiteResult suite;
    suite.name = "fkn-identity";
    AggVec merged = run_chunked<AggVec>(200, threads, [seed](AggVec& local, uint64_t i) {
        if (local.aggs.empty()) local.aggs.resize(2);
        BooleanFunction g = random_function(seed, i, 8);
        const int n = g.n();
        for (uint64_t m = 0; m < (uint64_t{1} << n); ++m) {
            int sz = popcount64(m);
            if (sz > 2 || sz >= n) continue;
            auto rs = check_integral_identity_fkn(g, IndexSet(m, n));
            local.aggs[0].add(rs[0]);
            local.aggs[1].add(rs[1]);
        }
    });
    merged.aggs[0].name = "fkn-identity/beta";
    merged.aggs[1].name = "fkn-identity/quadrature";
    for (auto& a : merged.aggs) {
        a.instance = "200 seeded functions, n<=8, |j|<=2";
        a.emit(suite);
    }
    return suite;
}

SuiteResult hypercontractivity_suite(uint64_t seed, int threads) {
    SuiteResult suite;
    suite.name = "hypercontractivity";
    static const double times[] = {0.05, 0.1, 0.5, 1.0, 2.0, 5.0};
    AggVec merged = run_chunked<AggVec>(1000, threads, [seed](AggVec& local, uint64_t i) {
        if (local.aggs.empty()) local.aggs.resize(6);
        BooleanFunction f = random_function(seed, i, 8);
        for (size_t ti = 0; ti < 6; ++ti)
            local.aggs[ti].add(check_hypercontractivity(f, times[ti]));
    });
    for (size_t ti = 0; ti < 6; ++ti) {
        Aggregator& a = merged.aggs[ti];
        a.name = "hypercontractivity";
        a.instance = "1000 seeded functions, n<=8, t=" + std::to_string(times[ti]);
        a.emit(suite);
    }
    return suite;
}

SuiteResult log_sobolev_suite(int n_max, int threads) {
    SuiteResult suite;
    suite.name = "log-sobolev";
    for (int n = 1; n <= clamp_exhaustive_n(n_max); ++n) {
        const uint64_t tables = uint64_t{1} << (uint64_t{1} << n);
        AggVec merged = run_chunked<AggVec>(tables, threads, [n](AggVec& local, uint64_t word) {
            if (local.aggs.empty()) local.aggs.resize(1);
            local.aggs[0].add(check_log_sobolev(BooleanFunction::from_table_word(word, n)));
        });
        Aggregator& a = merged.aggs[0];
        a.name = "log-sobolev";
        a.instance = "n=" + std::to_string(n) + " all {0,1}-valued functions";
        a.emit(suite);
    }
    return suite;
}

SuiteResult lattice_suite(int n_max, int threads) {
    SuiteResult suite;
    suite.name = "lattice";
    for (int n = 1; n <= clamp_exhaustive_n(n_max); ++n) {
        const uint64_t tables = uint64_t{1} << (uint64_t{1} << n);
        AggVec merged = run_chunked<AggVec>(tables, threads, [n](AggVec& local, uint64_t word) {
            if (local.aggs.empty()) local.aggs.resize(4);
            BooleanFunction f = BooleanFunction::from_table_word(word, n);
            int deg = degree(fwht(f));
            for (int d = 1; d <= 4; ++d) {
                if (deg > d) continue;
                for (const auto& r : check_degree_lattice(f, d))
                    local.aggs[(size_t)d - 1].add(r);
            }
        });
        for (int d = 1; d <= 4; ++d) {
            Aggregator& a = merged.aggs[(size_t)d - 1];
            if (a.total == 0) continue;
            a.name = "lattice";
            a.instance =
                "n=" + std::to_string(n) + " d=" + std::to_string(d) + " all degree-<=d functions";
            a.emit(suite);
        }
    }
    return suite;
}

} // namespace

std::string SuiteResult::summary() const {
    return "suite=" + name + " pass=" + std::to_string(passed) + "/" + std::to_string(total);
}

BooleanFunction random_function(uint64_t seed, uint64_t index, int n_max) {
    CounterRng rng = sample_rng(seed, index);
    int n = 1 + (int)rng.below((uint64_t)n_max);
    return BooleanFunction::random(n, rng);
}

SuiteResult run_suite(const std::string& suite, int n_max, uint64_t seed, int threads) {
    if (suite == "main-theorem") return main_theorem_suite(n_max, threads);
    if (suite == "chain") return chain_suite(n_max, threads);
    if (suite == "kkl-identity") return kkl_identity_suite(seed, threads);
    if (suite == "fkn-identity") return fkn_identity_suite(seed, threads);
    if (suite == "hypercontractivity") return hypercontractivity_suite(seed, threads);
    if (suite == "log-sobolev") return log_sobolev_suite(n_max, threads);
    if (suite == "lattice") return lattice_suite(n_max, threads);
    if (suite == "all") {
        SuiteResult all;
        all.name = "all";
        for (const char* s : {"main-theorem", "chain", "kkl-identity", "fkn-identity",
                              "hypercontractivity", "log-sobolev", "lattice"}) {
            SuiteResult r = run_suite(s, n_max, seed, threads);
            for (auto& row : r.results) all.results.push_back(std::move(row));
            all.passed += r.passed;
            all.total += r.total;
        }
        return all;
    }
    fail(errc::unknown_suite, "no suite named '" + suite + "'");
}

} // namespace bfan
