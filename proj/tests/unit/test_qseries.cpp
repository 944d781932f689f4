#include "doctest.h"

#include <stdexcept>

#include "fixspace/qseries.hpp"
#include "oracles.hpp"

using namespace fixspace;

TEST_CASE("qpoch examples") {
    CHECK(qpoch(Rational(7), Rational(11), 0) == 1);
    CHECK(qpoch(Rational(1, 2), Rational(1, 2), 2) == Rational(3, 8));
    CHECK(qpoch(Rational(2), Rational(2), 2) == 3);
}

TEST_CASE("qbinom examples") {
    for (long j = 0; j <= 6; ++j) CHECK(qbinom(j, 0, Rational(5, 3)) == 1);
    CHECK(qbinom(2, 1, Rational(7)) == 8);
    CHECK(qbinom(4, 2, Rational(2)) == 35);
    CHECK(qbinom(2, 3, Rational(2)) == 0);
    CHECK_THROWS_AS((void)qbinom(3, 2, Rational(1)), std::domain_error);
    CHECK_THROWS_AS((void)qbinom(3, 2, Rational(-1)), std::domain_error);
}

TEST_CASE("qbinom satisfies the q-Pascal recurrence") {
    for (const Rational q : {Rational(2), Rational(3), Rational(-2), Rational(5, 2), Rational(1, 3)})
        for (long n = 1; n <= 8; ++n)
            for (long k = 1; k <= n; ++k)
                CHECK(qbinom(n, k, q) == qbinom(n - 1, k - 1, q) + q.pow(k) * qbinom(n - 1, k, q));
}

TEST_CASE("qbinom counts subspaces") {
    for (int q : {2, 3})
        for (int n = 0; n <= (q == 2 ? 4 : 3); ++n)
            for (int k = 0; k <= n; ++k)
                CHECK(qbinom(n, k, Rational(q)) == Rational(Integer(oracle::count_subspaces(n, k, q))));
}

TEST_CASE("galois numbers agree with each other and with subspace counts") {
    CHECK(galois_by_recurrence(0, 3) == 1);
    CHECK(galois_by_recurrence(1, 3) == 2);
    CHECK(galois_by_recurrence(2, 2) == 5);
    for (int q : {2, 3}) {
        for (int j = 0; j <= 3; ++j) {
            std::uint64_t total = 0;
            for (int k = 0; k <= j; ++k) total += oracle::count_subspaces(j, k, q);
            CHECK(galois_by_sum(j, q) == Rational(Integer(total)));
        }
    }
    for (const Rational q : {Rational(2), Rational(5), Rational(-3), Rational(3, 2)})
        for (long j = 0; j <= 9; ++j) CHECK(galois_by_sum(j, q) == galois_by_recurrence(j, q));
}
