#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fixspace {

/// Arbitrary-precision signed integer.
using Integer = mpz_class;

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Division by zero throws std::domain_error.
class Rational {
public:
    Rational() = default;

    template <std::signed_integral T>
    Rational(T value) : v_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

    template <std::unsigned_integral T>
    Rational(T value) : v_(static_cast<unsigned long>(value)) {}  // NOLINT(google-explicit-constructor)

    Rational(const Integer& value) : v_(value) {}  // NOLINT(google-explicit-constructor)

    Rational(const Integer& num, const Integer& den);

    /// Parses "a", "-a" or "a/b" in base 10.
    static Rational parse(std::string_view text);

    [[nodiscard]] Integer num() const { return v_.get_num(); }
    [[nodiscard]] Integer den() const { return v_.get_den(); }

    [[nodiscard]] int sign() const { return sgn(v_); }
    [[nodiscard]] bool is_zero() const { return sign() == 0; }
    [[nodiscard]] bool is_integer() const { return v_.get_den() == 1; }

    [[nodiscard]] Rational inverse() const;
    [[nodiscard]] Rational abs() const;

    /// Integer power; negative exponents invert (and throw on zero).
    [[nodiscard]] Rational pow(long exponent) const;

    [[nodiscard]] std::string str() const;
    [[nodiscard]] double to_double() const { return v_.get_d(); }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator-(const Rational& x);
    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& x);

    [[nodiscard]] const mpq_class& raw() const { return v_; }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}

    mpq_class v_;
};

/// Integer power of an integer, exponent >= 0.
[[nodiscard]] Integer ipow(const Integer& base, unsigned long exponent);

/// Binomial coefficient C(n, 2) as a signed exponent; defined for all n.
[[nodiscard]] constexpr long choose2(long n) { return n * (n - 1) / 2; }

}  // namespace fixspace
