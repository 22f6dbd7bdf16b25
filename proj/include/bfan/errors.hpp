#pragma once

#include <stdexcept>
#include <string>

namespace bfan {

enum class errc {
    length_mismatch,
    dimension_too_large,
    dimension_mismatch,
    not_boolean,
    bad_degree,
    negative_time,
    index_not_in_set,
    empty_set,
    bad_parameters,
    precondition_violated,
    range_violation,
    degree_too_high,
    search_space_too_large,
    subcube_too_large,
    budget_exhausted,
    parse_error,
    unknown_suite,
    io_error,
};

const char* errc_name(errc c);

/// Library-wide exception; `code()` distinguishes the failure class.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::length_mismatch: return "LengthMismatch";
    case errc::dimension_too_large: return "DimensionTooLarge";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::not_boolean: return "NotBoolean";
    case errc::bad_degree: return "BadDegree";
    case errc::negative_time: return "NegativeTime";
    case errc::index_not_in_set: return "IndexNotInSet";
    case errc::empty_set: return "EmptySet";
    case errc::bad_parameters: return "BadParameters";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::range_violation: return "RangeViolation";
    case errc::degree_too_high: return "DegreeTooHigh";
    case errc::search_space_too_large: return "SearchSpaceTooLarge";
    case errc::subcube_too_large: return "SubcubeTooLarge";
    case errc::budget_exhausted: return "BudgetExhausted";
    case errc::parse_error: return "ParseError";
    case errc::unknown_suite: return "UnknownSuite";
    case errc::io_error: return "IoError";
    }
    return "Error";
}

} // namespace bfan
