#pragma once

#include "fixspace/rational.hpp"

namespace fixspace {

/// q-shifted factorial (A;q)_n = (1-A)(1-Aq)...(1-Aq^{n-1}); 1 when n == 0.
[[nodiscard]] Rational qpoch(const Rational& A, const Rational& q, long n);

/// Gaussian binomial [n choose k]_q via the telescoping product
/// prod_{i<k} (q^{n-i}-1)/(q^{i+1}-1). n may be negative; k > n >= 0 yields 0.
/// Throws std::domain_error if some q^i - 1 (1 <= i <= k) vanishes.
[[nodiscard]] Rational qbinom(long n, long k, const Rational& q);

/// Galois number G_j = sum_J [j choose J]_q, evaluated by the q-binomial sum.
[[nodiscard]] Rational galois_by_sum(long j, const Rational& q);

/// Galois number by the Goldman-Rota recurrence G_{j+1} = 2G_j + (q^j-1)G_{j-1}.
[[nodiscard]] Rational galois_by_recurrence(long j, const Rational& q);

}  // namespace fixspace
