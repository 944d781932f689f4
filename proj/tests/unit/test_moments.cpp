#include "doctest.h"

#include <stdexcept>

#include "fixspace/moments.hpp"
#include "fixspace/qseries.hpp"
#include "fixspace/rsdist.hpp"

using namespace fixspace;

TEST_CASE("moment examples") {
    for (std::int64_t q : {2, 3, 7}) CHECK(moment({Family::GL, 1, q}, 1) == 2);
    CHECK(moment({Family::Sp, 1, 2}, 1) == 2);
    CHECK(moment({Family::OOdd, 2, 3}, 0) == 1);
    CHECK(limit_moment(Family::U, 2, 1) == 3);
    CHECK(limit_moment(Family::Sp, 5, 1) == 2);
    CHECK(limit_moment(Family::GL, 2, 2) == 5);
    CHECK(limit_moment(Family::OEvenMinus, 3, 2) == 40);
    CHECK(galois(0, 4) == 1);
    CHECK(galois(1, 4) == 2);
    CHECK(galois(2, 2) == 5);
    CHECK(galois(3, 3) == galois_by_sum(3, 3));
    CHECK(galois_by_double_sum(3, 3) == galois(3, 3));
}

TEST_CASE("unitary moments count vectors over the quadratic extension") {
    const auto d = dist_u(2, 2);
    Rational expected = 0;
    for (std::size_t k = 0; k < d.probs.size(); ++k) expected += d.probs[k] * Rational(4).pow(static_cast<long>(k));
    CHECK(moment({Family::U, 2, 2}, 1) == expected);
}

TEST_CASE("thresholds and stabilization scans") {
    CHECK(stabilization_threshold(Family::GL, 3) == 3);
    CHECK(stabilization_threshold(Family::U, 3) == 6);
    CHECK(stabilization_threshold(Family::OEvenMinus, 3) == 4);
    CHECK(min_rank(Family::OEvenMinus) == 1);

    const auto gl = stabilization_scan(Family::GL, 2, 3, 8);
    for (const auto& row : gl.rows)
        if (row.spec.n >= 3) CHECK(row.stabilized);
    CHECK(gl.minimal_stable_n.has_value());
    CHECK(*gl.minimal_stable_n <= 3);

    const auto u = stabilization_scan(Family::U, 2, 2, 8);
    for (const auto& row : u.rows)
        if (row.spec.n >= 4) CHECK(row.stabilized);
    CHECK_FALSE(u.rows.at(3).stabilized);  // n = 3 = 2j - 1
    CHECK(*u.minimal_stable_n == 4);

    const auto om = stabilization_scan(Family::OEvenMinus, 3, 1, 6);
    CHECK(om.rows.front().spec.n == 1);
    CHECK_FALSE(om.rows.front().stabilized);
    CHECK(*om.minimal_stable_n == 2);

    CHECK_THROWS_AS((void)stabilization_scan(Family::U, 2, 3, 5), std::invalid_argument);
}

TEST_CASE("moment report") {
    const auto r = moment_report({Family::Sp, 3, 3}, 2);
    CHECK(r.value == r.limit);
    CHECK(r.stabilized);
    CHECK(r.limit == 2 * 4);
}
