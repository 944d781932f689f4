#include "fixspace/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace fixspace {

Rational::Rational(const Integer& num, const Integer& den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const std::string s(text);
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s, 10));
        return Rational(Integer(s.substr(0, slash), 10), Integer(s.substr(slash + 1), 10));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
    return Rational(std::move(r));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Rational Rational::pow(long exponent) const {
    const unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                         : static_cast<unsigned long>(exponent);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), e);
    Rational r(n, d);
    return exponent < 0 ? r.inverse() : r;
}

std::string Rational::str() const { return v_.get_str(10); }

Rational& Rational::operator+=(const Rational& rhs) {
    v_ += rhs.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    v_ -= rhs.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    v_ *= rhs.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= rhs.v_;
    return *this;
}

Rational operator-(const Rational& x) { return Rational(mpq_class(-x.v_)); }

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

Integer ipow(const Integer& base, unsigned long exponent) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

}  // namespace fixspace
