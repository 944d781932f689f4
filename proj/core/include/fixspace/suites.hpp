#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fixspace/group.hpp"
#include "fixspace/sampler.hpp"

namespace fixspace {

struct CheckResult {
    std::string label;
    std::size_t instances = 0;  ///< number of exact comparisons behind this line
    bool passed = true;
    std::string detail;         ///< first failure, if any
};

struct SuiteResult {
    std::string name;
    std::vector<CheckResult> checks;
    [[nodiscard]] bool passed() const;
};

/// q-binomial theorem, double vs single sum, the subspace and shifted
/// specializations of D_n, and the three alternating / half-power evaluations.
/// random_instances pseudo-random double/single-sum comparisons are drawn from seed.
[[nodiscard]] SuiteResult run_identity_suite(std::uint64_t seed, std::size_t random_instances = 200);

/// F_k closed form against its defining series, and sum_k F_k(a,X,X;P) = 1.
[[nodiscard]] SuiteResult run_series_suite(std::size_t degree = 12);

/// Mass ratios and moments of the Al-Salam-Carlitz and q-Charlier weights against
/// the limiting fixed-space laws, plus numeric normalization of the weights.
[[nodiscard]] SuiteResult run_orthopoly_suite();

/// The geometric-rank generating functions for GL, U and combined Sp.
[[nodiscard]] SuiteResult run_randomized_suite(std::size_t degree = 10);

/// Every enumerable group: order, exact distribution and moments j <= 3 against
/// the enumerated group.
[[nodiscard]] SuiteResult run_oracle_suite(std::uint64_t cap = kEnumerationCap);

/// Groups with a matrix model and order <= cap, q in {2,3,4,5,7,8,9}.
[[nodiscard]] std::vector<GroupSpec> enumerable_specs(std::uint64_t cap = kEnumerationCap);

/// Dispatch by name: identities, series, orthopoly, randomized-n, oracle.
/// Throws std::invalid_argument for unknown names.
[[nodiscard]] SuiteResult run_suite(std::string_view name, std::uint64_t seed);

}  // namespace fixspace
