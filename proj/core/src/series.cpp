#include "fixspace/series.hpp"

#include <stdexcept>

namespace fixspace {

TruncatedSeries::TruncatedSeries(std::size_t degree) : coeffs_(degree + 1) {}

TruncatedSeries::TruncatedSeries(std::size_t degree, std::span<const Rational> coefficients)
    : coeffs_(degree + 1) {
    for (std::size_t m = 0; m < coefficients.size() && m <= degree; ++m) coeffs_[m] = coefficients[m];
}

TruncatedSeries TruncatedSeries::constant(std::size_t degree, const Rational& c) {
    TruncatedSeries s(degree);
    s.coeffs_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(std::size_t degree, std::size_t power, const Rational& c) {
    TruncatedSeries s(degree);
    if (power <= degree) s.coeffs_[power] = c;
    return s;
}

void TruncatedSeries::require_same_degree(const TruncatedSeries& rhs) const {
    if (rhs.degree() != degree())
        throw std::invalid_argument("TruncatedSeries: truncation degrees differ");
}

TruncatedSeries TruncatedSeries::inverse() const {
    if (coeffs_[0].is_zero()) throw std::domain_error("TruncatedSeries: constant term is zero");
    TruncatedSeries r(degree());
    const Rational c0 = coeffs_[0].inverse();
    r.coeffs_[0] = c0;
    for (std::size_t m = 1; m <= degree(); ++m) {
        Rational acc = 0;
        for (std::size_t i = 1; i <= m; ++i) acc += coeffs_[i] * r.coeffs_[m - i];
        r.coeffs_[m] = -acc * c0;
    }
    return r;
}

TruncatedSeries TruncatedSeries::times_one_minus_a() const {
    TruncatedSeries r(*this);
    for (std::size_t m = degree(); m >= 1; --m) r.coeffs_[m] -= coeffs_[m - 1];
    return r;
}

TruncatedSeries TruncatedSeries::times_a() const {
    TruncatedSeries r(degree());
    for (std::size_t m = 1; m <= degree(); ++m) r.coeffs_[m] = coeffs_[m - 1];
    return r;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
    require_same_degree(rhs);
    for (std::size_t m = 0; m < coeffs_.size(); ++m) coeffs_[m] += rhs.coeffs_[m];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
    require_same_degree(rhs);
    for (std::size_t m = 0; m < coeffs_.size(); ++m) coeffs_[m] -= rhs.coeffs_[m];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& rhs) {
    require_same_degree(rhs);
    std::vector<Rational> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

}  // namespace fixspace
