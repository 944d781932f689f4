#pragma once

#include <string>

#include "fixspace/rational.hpp"

namespace fixspace {

/// Closed interval [lower, upper] with exact rational endpoints, certified to
/// contain some real value.
class IntervalReal {
public:
    IntervalReal(Rational lower, Rational upper);
    static IntervalReal point(const Rational& x) { return {x, x}; }

    [[nodiscard]] const Rational& lower() const { return lower_; }
    [[nodiscard]] const Rational& upper() const { return upper_; }
    [[nodiscard]] Rational width() const { return upper_ - lower_; }
    [[nodiscard]] Rational midpoint() const { return (lower_ + upper_) / 2; }

    [[nodiscard]] bool contains(const Rational& x) const { return lower_ <= x && x <= upper_; }
    [[nodiscard]] bool contains(const IntervalReal& other) const {
        return lower_ <= other.lower_ && other.upper_ <= upper_;
    }
    [[nodiscard]] bool intersects(const IntervalReal& other) const {
        return lower_ <= other.upper_ && other.lower_ <= upper_;
    }

    /// Rounds lower down and upper up to multiples of 2^-bits.
    [[nodiscard]] IntervalReal rounded_outward(unsigned long bits) const;

    friend IntervalReal operator+(const IntervalReal& a, const IntervalReal& b);
    friend IntervalReal operator-(const IntervalReal& a, const IntervalReal& b);
    friend IntervalReal operator*(const IntervalReal& a, const IntervalReal& b);
    friend IntervalReal operator*(const IntervalReal& a, const Rational& c);

    [[nodiscard]] std::string str() const;

private:
    Rational lower_;
    Rational upper_;
};

}  // namespace fixspace
