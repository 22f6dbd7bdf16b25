#include "bfan/report.hpp"

#include <cmath>

namespace bfan {

json finite_or_string(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

json to_json(const Dyadic& d) {
    json j;
    j["num"] = d.num().str();
    j["exp"] = d.exp();
    j["float"] = d.to_double();
    return j;
}

json to_json(const IndexSet& s) {
    json j = json::array();
    for (int i : s.indices()) j.push_back(i);
    return j;
}

json to_json(const CheckValue& v) {
    if (v.exact) return to_json(v.dy);
    return finite_or_string(v.approx);
}

json to_json(const CheckResult& r) {
    json j;
    j["name"] = r.name;
    j["instance"] = r.instance;
    j["lhs"] = to_json(r.lhs);
    j["rhs"] = to_json(r.rhs);
    j["slack"] = finite_or_string(r.slack);
    j["tol"] = r.tol;
    j["passed"] = r.passed;
    return j;
}

json to_json(const SuiteResult& s) {
    json j;
    j["suite"] = s.name;
    j["passed"] = s.passed;
    j["total"] = s.total;
    json rows = json::array();
    for (const auto& r : s.results) rows.push_back(to_json(r));
    j["results"] = std::move(rows);
    return j;
}

json to_json(const InfluenceReport& r) {
    json j;
    j["set"] = to_json(r.set);
    j["t_influence"] = to_json(r.t_influence);
    j["joint"] = to_json(r.joint);
    j["coalition"] = to_json(r.coalition);
    j["nonzero_derivative_prob"] = to_json(r.nonzero_derivative_prob);
    return j;
}

json to_json(const Estimate& e) {
    json j;
    j["value"] = e.value;
    j["stderr"] = e.stderr_;
    j["samples"] = e.samples;
    j["seed"] = e.seed;
    return j;
}

json to_json(const ApproxResult& a) {
    json j;
    j["distance_sq"] = to_json(a.distance_sq);
    j["is_unique"] = a.is_unique;
    std::string table;
    for (uint64_t b = 0; b < a.g.table_size(); ++b) table += a.g.bit(b) ? '1' : '0';
    j["g_table"] = table;
    json devs = json::array();
    for (const auto& [set, dev] : a.coeff_deviations) {
        json row;
        row["set"] = to_json(set);
        row["deviation"] = to_json(dev);
        devs.push_back(std::move(row));
    }
    j["coeff_deviations"] = std::move(devs);
    return j;
}

json to_json(const FknReport& r) {
    json j;
    j["d"] = r.d;
    j["argmax_set"] = to_json(r.argmax_set);
    j["max_influence_d_plus_1"] = to_json(r.max_influence_d1);
    j["alpha_star"] = finite_or_string(r.alpha_star);
    j["approx"] = to_json(r.approx);
    json rows = json::array();
    for (const auto& row : r.rows) {
        json x;
        x["set"] = to_json(row.set);
        x["deviation"] = to_json(row.deviation);
        x["denom"] = finite_or_string(row.denom);
        x["ratio"] = finite_or_string(row.ratio);
        rows.push_back(std::move(x));
    }
    j["ratios"] = std::move(rows);
    return j;
}

json report_envelope(const std::string& command) {
    json j;
    j["schema"] = kSchema;
    j["command"] = command;
    return j;
}

} // namespace bfan
