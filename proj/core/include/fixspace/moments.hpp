#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fixspace/group.hpp"
#include "fixspace/rational.hpp"

namespace fixspace {

/// E[Z^j] where Z = |fixed vectors| = q^k (q^{2k} for unitary groups),
/// computed from the exact fixed-space distribution.
[[nodiscard]] Rational moment(const GroupSpec& spec, long j);

/// The n -> infinity value of E[Z^j]:
///   GL: Galois number G_j;  U: prod (q^{2i-1}+1);  Sp: prod (q^{i-1}+1);
///   orthogonal: prod (q^i+1).
[[nodiscard]] Rational limit_moment(Family family, std::int64_t q, long j);

/// Smallest rank from which moment == limit_moment is guaranteed:
/// j for GL, Sp, O(2n+1), O+; 2j for U; j+1 for O-.
[[nodiscard]] int stabilization_threshold(Family family, long j);

/// Smallest valid rank for a family (1 for O-, else 0).
[[nodiscard]] int min_rank(Family family);

/// Galois number by the Goldman-Rota recurrence; throws std::logic_error if it
/// disagrees with the q-binomial sum.
[[nodiscard]] Rational galois(long j, const Rational& q);

/// Same as galois(j, q) but from the double sum D_n(q, q^j, 1) with n = j.
[[nodiscard]] Rational galois_by_double_sum(long j, const Rational& q);

struct MomentReport {
    GroupSpec spec;
    long j = 0;
    Rational value;
    Rational limit;
    bool stabilized = false;
};

[[nodiscard]] MomentReport moment_report(const GroupSpec& spec, long j);

struct ScanReport {
    Family family = Family::GL;
    std::int64_t q = 2;
    long j = 0;
    Rational limit;
    std::vector<MomentReport> rows;  ///< one per n = min_rank .. n_max
    /// Smallest n such that every scanned n' >= n equals the limit.
    std::optional<int> minimal_stable_n;
    int threshold = 0;
};

/// Scans n = min_rank(family) .. n_max. Throws if n_max is below the threshold.
[[nodiscard]] ScanReport stabilization_scan(Family family, std::int64_t q, long j, int n_max);

}  // namespace fixspace
