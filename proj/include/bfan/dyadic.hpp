#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <string>

namespace bfan {

using bigint = boost::multiprecision::cpp_int;
using bigrational = boost::multiprecision::cpp_rational;

/// Exact dyadic rational num/2^exp, normalized so num is odd or zero (then exp = 0).
/// Closed under +, -, *; equality and ordering are exact.
class Dyadic {
public:
    Dyadic() : num_(0), exp_(0) {}
    Dyadic(long long v) : num_(v), exp_(0) {}
    Dyadic(const bigint& v) : num_(v), exp_(0) {}

    /// num/2^exp, normalizing.
    static Dyadic scaled(bigint num, unsigned exp);

    const bigint& num() const { return num_; }
    unsigned exp() const { return exp_; }

    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Dyadic operator-() const { return Dyadic::scaled(-num_, exp_); }
    Dyadic abs() const { return num_ < 0 ? -*this : *this; }

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b);

    Dyadic& operator+=(const Dyadic& b) { return *this = *this + b; }
    Dyadic& operator-=(const Dyadic& b) { return *this = *this - b; }
    Dyadic& operator*=(const Dyadic& b) { return *this = *this * b; }

    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.exp_ == b.exp_ && a.num_ == b.num_;
    }
    friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

    double to_double() const;
    bigrational to_rational() const;

    /// "3/8", "-1/2", "5" (integers printed plainly).
    std::string to_string() const;

private:
    bigint num_;
    unsigned exp_;
};

inline Dyadic operator*(long long a, const Dyadic& b) { return Dyadic(a) * b; }

} // namespace bfan
