#include "fixspace/interval.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace fixspace {

IntervalReal::IntervalReal(Rational lower, Rational upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (upper_ < lower_) throw std::invalid_argument("IntervalReal: lower > upper");
}

IntervalReal IntervalReal::rounded_outward(unsigned long bits) const {
    const Integer scale = ipow(Integer(2), bits);
    const auto scaled = [&](const Rational& x) { return Integer(x.num() * scale); };
    Integer lo, hi;
    mpz_fdiv_q(lo.get_mpz_t(), scaled(lower_).get_mpz_t(), lower_.den().get_mpz_t());
    mpz_cdiv_q(hi.get_mpz_t(), scaled(upper_).get_mpz_t(), upper_.den().get_mpz_t());
    return {Rational(lo, scale), Rational(hi, scale)};
}

IntervalReal operator+(const IntervalReal& a, const IntervalReal& b) {
    return {a.lower_ + b.lower_, a.upper_ + b.upper_};
}

IntervalReal operator-(const IntervalReal& a, const IntervalReal& b) {
    return {a.lower_ - b.upper_, a.upper_ - b.lower_};
}

IntervalReal operator*(const IntervalReal& a, const IntervalReal& b) {
    const std::array<Rational, 4> c{a.lower_ * b.lower_, a.lower_ * b.upper_, a.upper_ * b.lower_,
                                    a.upper_ * b.upper_};
    return {*std::min_element(c.begin(), c.end()), *std::max_element(c.begin(), c.end())};
}

IntervalReal operator*(const IntervalReal& a, const Rational& c) {
    return a * IntervalReal::point(c);
}

std::string IntervalReal::str() const {
    return "[" + lower_.str() + ", " + upper_.str() + "]";
}

}  // namespace fixspace
