#pragma once

#include <cstddef>
#include <cstdint>

#include "fixspace/interval.hpp"
#include "fixspace/qidentity.hpp"
#include "fixspace/rational.hpp"
#include "fixspace/series.hpp"

namespace fixspace {

enum class WeightKind { AlSalamCarlitz, QCharlier };

/// Discrete measure on the points p^{-k}, k = 0, 1, ...
///   Al-Salam-Carlitz: w(k) = (ap;p)_inf p^{k^2} a^k / ((p;p)_k (ap;p)_k)
///   q-Charlier:       w(k) = p^{C(k,2)} a^k / ((-a;p)_inf (p;p)_k)
struct WeightParams {
    Rational a;
    Rational p;
    WeightKind kind = WeightKind::AlSalamCarlitz;
};

/// mass(k) / mass(0) for the Al-Salam-Carlitz weight; the infinite product cancels.
[[nodiscard]] Rational ac_mass_ratio(long k, const WeightParams& params);

/// mass(k) / mass(0) for the q-Charlier weight.
[[nodiscard]] Rational qchar_mass_ratio(long k, const WeightParams& params);

[[nodiscard]] Rational mass_ratio(long k, const WeightParams& params);

/// j-th moment sum_{k<=j} [j k]_{1/p} a^k of the Al-Salam-Carlitz weight.
[[nodiscard]] Rational ac_moment(long j, const WeightParams& params);

/// j-th moment (-a/p; 1/p)_j of the q-Charlier weight.
[[nodiscard]] Rational qchar_moment(long j, const WeightParams& params);

/// Encloses the full mass at p^{-k}. Requires 0 < p < 1 and a > 0 (and ap < 1 for
/// Al-Salam-Carlitz); throws std::domain_error otherwise.
[[nodiscard]] IntervalReal weight_numeric(long k, const WeightParams& params, const Rational& tolerance);

/// Al-Salam-Carlitz mass w(p^{-k}; c a; p) as a formal series in a, built from its
/// own product form (independent of the F_k closed form).
[[nodiscard]] TruncatedSeries ac_weight_series(long k, const Rational& c, const Rational& p, std::size_t N);

enum class RandomizedFamily { GL, U, SpCombined };

/// Checks sum_n P(Z_n = target) a^n (1 - a) == F_k(...) coefficient-wise through a^N,
/// with the left side built from the exact finite-n distributions:
///   GL: P(dim = k) vs F_k(a,1,1;q)
///   U:  P(dim = k) vs F_k(a,-1,-1;-q)
///   SpCombined: P(dim = 2k) + P(dim = 2k+1) vs F_k(a,1/q,q;q^2) + (a/q) F_k(a,q^{-3},1/q;q^2)
struct RandomizedCheck {
    TruncatedSeries from_groups;
    TruncatedSeries closed_form;
    TruncatedSeries weight;  ///< the Al-Salam-Carlitz weight series named by the theorem
    [[nodiscard]] bool holds() const { return from_groups == closed_form && closed_form == weight; }
};

[[nodiscard]] RandomizedCheck randomized_n_check(RandomizedFamily family, std::int64_t q, long k,
                                                 std::size_t N);

}  // namespace fixspace
