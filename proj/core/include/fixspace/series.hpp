#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fixspace/rational.hpp"

namespace fixspace {

/// Formal power series in a with exact coefficients, truncated at a fixed
/// degree N. Products and sums of two degree-N series stay at degree N.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t degree);
    TruncatedSeries(std::size_t degree, std::span<const Rational> coefficients);

    static TruncatedSeries constant(std::size_t degree, const Rational& c);
    /// c * a^power (zero series if power > degree).
    static TruncatedSeries monomial(std::size_t degree, std::size_t power, const Rational& c);

    [[nodiscard]] std::size_t degree() const { return coeffs_.size() - 1; }
    [[nodiscard]] const Rational& operator[](std::size_t m) const { return coeffs_.at(m); }
    Rational& operator[](std::size_t m) { return coeffs_.at(m); }
    [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }

    /// Multiplicative inverse; requires a nonzero constant term.
    [[nodiscard]] TruncatedSeries inverse() const;

    /// Multiplies by (1 - a), i.e. forms first differences of the coefficients.
    [[nodiscard]] TruncatedSeries times_one_minus_a() const;

    /// Shift up by one degree (multiply by a), dropping the top coefficient.
    [[nodiscard]] TruncatedSeries times_a() const;

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    TruncatedSeries& operator*=(const TruncatedSeries& rhs);
    TruncatedSeries& operator*=(const Rational& c);

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) { return a *= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    void require_same_degree(const TruncatedSeries& rhs) const;

    std::vector<Rational> coeffs_;
};

}  // namespace fixspace
