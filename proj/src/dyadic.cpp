#include "bfan/dyadic.hpp"

#include <cmath>

namespace bfan {

namespace mp = boost::multiprecision;

Dyadic Dyadic::scaled(bigint num, unsigned exp) {
    Dyadic d;
    if (num == 0) return d;
    unsigned tz = (unsigned)mp::lsb(num < 0 ? bigint(-num) : num);
    if (tz > exp) tz = exp;
    d.num_ = num >> tz;
    d.exp_ = exp - tz;
    return d;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    unsigned e = std::max(a.exp_, b.exp_);
    return Dyadic::scaled((a.num_ << (e - a.exp_)) + (b.num_ << (e - b.exp_)), e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) {
    unsigned e = std::max(a.exp_, b.exp_);
    return Dyadic::scaled((a.num_ << (e - a.exp_)) - (b.num_ << (e - b.exp_)), e);
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    return Dyadic::scaled(a.num_ * b.num_, a.exp_ + b.exp_);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
    unsigned e = std::max(a.exp_, b.exp_);
    bigint lhs = a.num_ << (e - a.exp_);
    bigint rhs = b.num_ << (e - b.exp_);
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

double Dyadic::to_double() const {
    return std::ldexp(num_.convert_to<double>(), -(int)exp_);
}

bigrational Dyadic::to_rational() const {
    bigint den = bigint(1) << exp_;
    return bigrational(num_, den);
}

std::string Dyadic::to_string() const {
    if (exp_ == 0) return num_.str();
    return num_.str() + "/" + (bigint(1) << exp_).str();
}

} // namespace bfan
