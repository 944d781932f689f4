#include "fixspace/qidentity.hpp"

#include <stdexcept>

#include "fixspace/qseries.hpp"

namespace fixspace {
namespace {

Rational checked_qpoch(const Rational& A, const Rational& q, long n) {
    Rational v = qpoch(A, q, n);
    if (v.is_zero()) throw std::domain_error("vanishing q-Pochhammer denominator");
    return v;
}

}  // namespace

Rational double_sum_term(long n, long k, const Rational& P, const Rational& X, const Rational& Y) {
    if (k > n) return 0;
    if (P.is_zero()) throw std::domain_error("double sum: P must be nonzero");
    Rational inner = 0;
    for (long i = 0; i <= n - k; ++i) inner += P.pow(-i * k) * Y.pow(i) / checked_qpoch(P, P, i);
    return (-X).pow(k) / (P.pow(choose2(k)) * checked_qpoch(P, P, k)) * inner;
}

Rational double_sum_D(const DoubleSumParams& params) {
    Rational total = 0;
    for (long k = 0; k <= params.n; ++k)
        total += double_sum_term(params.n, k, params.P, params.X, params.Y);
    return total;
}

Rational single_sum_D(const DoubleSumParams& params) {
    const auto& [n, P, X, Y] = params;
    if (Y.is_zero()) throw std::domain_error("single sum: Y must be nonzero");
    Rational total = 0;
    for (long J = 0; J <= n; ++J)
        total += qpoch(X * P.pow(1 - J) / Y, P, J) / checked_qpoch(P, P, J) * Y.pow(J);
    return total;
}

IdentityCheck qbinom_theorem_check(long J, const Rational& P, const Rational& Z) {
    checked_qpoch(P, P, J);
    Rational lhs = 0;
    for (long k = 0; k <= J; ++k) lhs += qbinom(J, k, P) * P.pow(choose2(k)) * (-Z).pow(k);
    return {lhs, qpoch(Z, P, J)};
}

IdentityCheck subspace_sum_check(long n, const Rational& P, long j, const Rational& Y) {
    const Rational lhs = double_sum_D({n, P, Y * P.pow(j), Y});
    Rational rhs = 0;
    for (long J = 0; J <= n; ++J) rhs += qbinom(j, J, P) * Y.pow(J);
    return {lhs, rhs};
}

IdentityCheck shifted_sum_check(long n, const Rational& P, const Rational& Y) {
    const Rational lhs = double_sum_D({n, P, Y / P, Y});
    Rational rhs = 0;
    for (long J = 0; J <= n; ++J) rhs += P.pow(-choose2(J + 1)) * (-Y).pow(J);
    return {lhs, rhs};
}

Rational andrews_1(long j, const Rational& q) { return qpoch(q, q * q, j); }

IdentityCheck andrews_check_1(long j, const Rational& q) {
    Rational lhs = 0;
    for (long J = 0; J <= 2 * j; ++J) lhs += qbinom(2 * j, J, q) * Rational(J % 2 ? -1 : 1);
    return {lhs, andrews_1(j, q)};
}

IdentityCheck andrews_23(long n, const Rational& t, HalfPower direction) {
    if (t.is_zero()) throw std::domain_error("andrews_23: t must be nonzero");
    const Rational q = t * t;
    const long sign = direction == HalfPower::Plus ? 1 : -1;
    Rational lhs = 0;
    for (long J = 0; J <= n; ++J) lhs += qbinom(n, J, q) * t.pow(sign * J);
    Rational rhs = qpoch(-t, t, n);
    if (direction == HalfPower::Minus) rhs /= t.pow(n);
    return {lhs, rhs};
}

TruncatedSeries genfun_Fk_lhs(long k, const Rational& X, const Rational& Y, const Rational& P,
                              std::size_t N) {
    TruncatedSeries partial(N);
    for (std::size_t n = static_cast<std::size_t>(k); n <= N; ++n)
        partial[n] = double_sum_term(static_cast<long>(n), k, P, X, Y);
    return partial.times_one_minus_a();
}

TruncatedSeries euler_product_series(const Rational& z, const Rational& p, std::size_t N) {
    TruncatedSeries s(N);
    for (std::size_t m = 0; m <= N; ++m) {
        const long mm = static_cast<long>(m);
        s[m] = p.pow(choose2(mm)) * (-z).pow(mm) / checked_qpoch(p, p, mm);
    }
    return s;
}

TruncatedSeries genfun_Fk_rhs(long k, const Rational& X, const Rational& Y, const Rational& P,
                              std::size_t N) {
    if (P.is_zero()) throw std::domain_error("genfun: P must be nonzero");
    const Rational p = P.inverse();
    const Rational z = Y * p;  // the product runs over (a z; p)

    TruncatedSeries finite = TruncatedSeries::constant(N, 1);
    for (long i = 0; i < k; ++i) {
        TruncatedSeries factor = TruncatedSeries::constant(N, 1);
        if (N >= 1) factor[1] = -z * p.pow(i);
        finite *= factor;
    }
    const Rational lead = X.pow(k) * P.pow(-k * k) / checked_qpoch(p, p, k);
    return euler_product_series(z, p, N) * finite.inverse() *
           TruncatedSeries::monomial(N, static_cast<std::size_t>(k), lead);
}

SeriesCheck qgauss_normalization(const Rational& X, const Rational& P, std::size_t N) {
    TruncatedSeries total(N);
    for (std::size_t k = 0; k <= N; ++k) total += genfun_Fk_rhs(static_cast<long>(k), X, X, P, N);
    return {total, TruncatedSeries::constant(N, 1)};
}

}  // namespace fixspace
