#pragma once

#include <cstddef>

#include "fixspace/rational.hpp"
#include "fixspace/series.hpp"

namespace fixspace {

/// Parameters of the master double sum
///   D_n(P,X,Y) = sum_{k=0}^n (-X)^k / (P^{C(k,2)} (P;P)_k) * sum_{i=0}^{n-k} P^{-ik} Y^i / (P;P)_i.
/// Requires P^i != 1 for 1 <= i <= n.
struct DoubleSumParams {
    long n = 0;
    Rational P;
    Rational X;
    Rational Y;
};

/// Both sides of an exact identity.
struct IdentityCheck {
    Rational lhs;
    Rational rhs;
    [[nodiscard]] bool holds() const { return lhs == rhs; }
};

struct SeriesCheck {
    TruncatedSeries lhs;
    TruncatedSeries rhs;
    [[nodiscard]] bool holds() const { return lhs == rhs; }
};

/// The inner k-th term D_{nk} of the double sum (zero when k > n).
[[nodiscard]] Rational double_sum_term(long n, long k, const Rational& P, const Rational& X,
                                       const Rational& Y);

/// D_n evaluated term by term.
[[nodiscard]] Rational double_sum_D(const DoubleSumParams& params);

/// D_n via the single-sum form sum_J (X P^{1-J}/Y; P)_J / (P;P)_J * Y^J. Requires Y != 0.
[[nodiscard]] Rational single_sum_D(const DoubleSumParams& params);

/// q-binomial theorem: sum_k [J k]_P P^{C(k,2)} (-Z)^k against (Z;P)_J.
[[nodiscard]] IdentityCheck qbinom_theorem_check(long J, const Rational& P, const Rational& Z);

/// D_n(P, Y P^j, Y) against sum_{J<=n} [j J]_P Y^J.
[[nodiscard]] IdentityCheck subspace_sum_check(long n, const Rational& P, long j, const Rational& Y);

/// D_n(P, Y/P, Y) against sum_{J<=n} P^{-C(J+1,2)} (-Y)^J.
[[nodiscard]] IdentityCheck shifted_sum_check(long n, const Rational& P, const Rational& Y);

/// (q;q^2)_j, the closed form of the alternating sum of [2j J]_q.
[[nodiscard]] Rational andrews_1(long j, const Rational& q);
[[nodiscard]] IdentityCheck andrews_check_1(long j, const Rational& q);

enum class HalfPower { Plus, Minus };

/// With q = t^2 and q^{1/2} = t:
///   Plus:  sum_J [n J]_q t^J    = (-t;t)_n
///   Minus: sum_J [n J]_q t^{-J} = (-t;t)_n / t^n
[[nodiscard]] IdentityCheck andrews_23(long n, const Rational& t, HalfPower direction);

/// (1-a) * sum_{n>=k} D_{nk} a^n through degree N, straight from the double sum.
[[nodiscard]] TruncatedSeries genfun_Fk_lhs(long k, const Rational& X, const Rational& Y,
                                            const Rational& P, std::size_t N);

/// Closed form (aY/P; 1/P)_inf (aX)^k P^{-k^2} / ((1/P;1/P)_k (aY/P;1/P)_k) as a formal
/// series in a: Euler's expansion of the infinite product times the inverse of the
/// finite product.
[[nodiscard]] TruncatedSeries genfun_Fk_rhs(long k, const Rational& X, const Rational& Y,
                                            const Rational& P, std::size_t N);

/// sum_{k=0}^N F_k(a,X,X;P) against the constant series 1.
[[nodiscard]] SeriesCheck qgauss_normalization(const Rational& X, const Rational& P, std::size_t N);

/// Euler's expansion of (z a; p)_inf = sum_m p^{C(m,2)} (-z)^m / (p;p)_m a^m.
[[nodiscard]] TruncatedSeries euler_product_series(const Rational& z, const Rational& p,
                                                   std::size_t N);

}  // namespace fixspace
