#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "fixspace/rational.hpp"

namespace fixspace {

enum class Family { GL, U, Sp, OOdd, OEvenPlus, OEvenMinus };

/// One finite classical group. The rank parameter n gives a natural module of
/// dimension n (GL, U), 2n (Sp, even orthogonal) or 2n+1 (odd orthogonal);
/// U(n,q) acts over the field of order q^2.
struct GroupSpec {
    Family family = Family::GL;
    int n = 0;
    std::int64_t q = 2;

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Throws std::invalid_argument unless q is a prime power >= 2, n >= 0,
/// O_ODD has odd q, and O_EVEN_MINUS has n >= 1.
void validate(const GroupSpec& spec);

[[nodiscard]] bool is_prime_power(std::int64_t q);

/// (p, m) with q = p^m; throws if q is not a prime power.
struct PrimePower {
    std::int64_t p;
    int m;
};
[[nodiscard]] PrimePower factor_prime_power(std::int64_t q);

[[nodiscard]] int module_dimension(const GroupSpec& spec);

/// Order of the field the natural module lives over (q^2 for unitary groups).
[[nodiscard]] std::int64_t module_field_order(const GroupSpec& spec);

/// Exact group order. Rank 0 groups are trivial except O(1,q) = {1,-1}.
[[nodiscard]] Integer group_order(const GroupSpec& spec);

/// Base substituted into the q-series machinery for this family:
/// q for GL, -q for U, q^2 for Sp and the orthogonal families.
[[nodiscard]] Rational sign_q_variant(const GroupSpec& spec);

[[nodiscard]] std::string_view family_name(Family f);

/// Accepts gl, u, sp, o-odd, o+ (or o-plus), o- (or o-minus); case-insensitive.
[[nodiscard]] Family parse_family(std::string_view name);

[[nodiscard]] std::string describe(const GroupSpec& spec);

}  // namespace fixspace
