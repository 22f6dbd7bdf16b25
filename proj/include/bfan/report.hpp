#pragma once

#include <nlohmann/json.hpp>

#include "bfan/approx.hpp"
#include "bfan/dyadic.hpp"
#include "bfan/index_set.hpp"
#include "bfan/influence.hpp"
#include "bfan/sampler.hpp"
#include "bfan/verify.hpp"

namespace bfan {

using json = nlohmann::ordered_json;

/// Report schema identifier ("bfan/1"). Dyadics serialize as
/// {"num": "<decimal>", "exp": e, "float": approx}; index sets as sorted
/// 1-based arrays; non-finite floats as strings.
constexpr const char* kSchema = "bfan/1";

json to_json(const Dyadic& d);
json to_json(const IndexSet& s);
json to_json(const CheckValue& v);
json to_json(const CheckResult& r);
json to_json(const SuiteResult& s);
json to_json(const InfluenceReport& r);
json to_json(const Estimate& e);
json to_json(const ApproxResult& a);
json to_json(const FknReport& r);

json finite_or_string(double v);

/// Shared report envelope: {"schema": "bfan/1", "command": name, ...}.
json report_envelope(const std::string& command);

} // namespace bfan
