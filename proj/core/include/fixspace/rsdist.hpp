#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fixspace/group.hpp"
#include "fixspace/interval.hpp"
#include "fixspace/rational.hpp"

namespace fixspace {

/// Exact law of the fixed-space dimension of a uniform element of one group.
/// probs[k] is the probability that ker(g - 1) has dimension k, for
/// k = 0 .. module_dimension(spec).
struct FixDist {
    GroupSpec spec;
    std::vector<Rational> probs;

    [[nodiscard]] Rational total() const;
    [[nodiscard]] const Rational& at(std::size_t k) const { return probs.at(k); }
    [[nodiscard]] std::size_t max_dim() const { return probs.size() - 1; }
};

enum class OrthogonalSign { Plus, Minus };

[[nodiscard]] FixDist dist_gl(int n, std::int64_t q);
[[nodiscard]] FixDist dist_u(int n, std::int64_t q);
[[nodiscard]] FixDist dist_sp(int n, std::int64_t q);
/// Odd q only.
[[nodiscard]] FixDist dist_o_odd(int n, std::int64_t q);
[[nodiscard]] FixDist dist_o_even(int n, std::int64_t q, OrthogonalSign sign);

/// Dispatches on spec.family.
[[nodiscard]] FixDist distribution(const GroupSpec& spec);

/// Sp(2n,q) distribution moved up one dimension: the fixed-space law of
/// O(2n+1,q) in even characteristic. Indexed 0 .. 2n+1 with probs[0] = 0.
[[nodiscard]] std::vector<Rational> sp_shifted_view(int n, std::int64_t q);

/// The k-dependent exact factor of the limiting probability, normalized so
/// that limit_factor(f, q, 0) == 1. The full limit is this times
/// limit_prefactor(f, q).
[[nodiscard]] Rational limit_factor(Family family, std::int64_t q, long k);

/// Encloses the infinite-product prefactor of the n -> infinity law
/// (the probability of a zero-dimensional fixed space) to within tolerance.
[[nodiscard]] IntervalReal limit_prefactor(Family family, std::int64_t q, const Rational& tolerance);

/// Interval of width <= tolerance containing lim_{n->inf} P(dim fixed space = k).
/// Throws std::invalid_argument if tolerance <= 0.
[[nodiscard]] IntervalReal limit_dist(Family family, std::int64_t q, long k, const Rational& tolerance);

/// Encloses prod_{r>=0} (1 - q^{-(stride r + offset)}) when invert is false, or
/// prod_{r>=0} (1 + q^{-(stride r + offset)})^{-1} when invert is true, to within
/// tolerance. Requires offset >= 1, stride >= 1.
[[nodiscard]] IntervalReal geometric_product(const Rational& q, long stride, long offset,
                                             bool invert, const Rational& tolerance);

}  // namespace fixspace
