#include "doctest.h"

#include <stdexcept>

#include "fixspace/moments.hpp"
#include "fixspace/orthopoly.hpp"
#include "fixspace/qseries.hpp"
#include "fixspace/rsdist.hpp"

using namespace fixspace;

TEST_CASE("mass ratios") {
    const WeightParams ac{1, Rational(1, 2), WeightKind::AlSalamCarlitz};
    const WeightParams qc{1, Rational(1, 2), WeightKind::QCharlier};
    CHECK(ac_mass_ratio(0, ac) == 1);
    // p / ((1-p)(1-ap)) at a = 1, p = 1/2
    CHECK(ac_mass_ratio(1, ac) == 2);
    CHECK(qchar_mass_ratio(0, qc) == 1);
    CHECK(qchar_mass_ratio(2, qc) == Rational(4, 3));
    CHECK(mass_ratio(2, qc) == qchar_mass_ratio(2, qc));
    for (std::int64_t q : {2, 3})
        for (long k = 0; k <= 4; ++k) {
            const auto lim = limit_dist(Family::GL, q, k, Rational(1, 1000000000));
            const auto lim0 = limit_dist(Family::GL, q, 0, Rational(1, 1000000000));
            const Rational r = ac_mass_ratio(k, {1, Rational(1, q), WeightKind::AlSalamCarlitz});
            CHECK(lim.lower() <= lim0.upper() * r);
            CHECK(lim0.lower() * r <= lim.upper());
        }
    for (std::int64_t q : {2, 3, 5})
        for (long k = 0; k <= 5; ++k)
            CHECK(qchar_mass_ratio(k, {Rational(1, q), Rational(1, q), WeightKind::QCharlier}) ==
                  Rational(1) / (Rational(q).pow((k * k + k) / 2) * qpoch(Rational(1, q), Rational(1, q), k)));
}

TEST_CASE("weight moments") {
    CHECK(ac_moment(0, {3, Rational(1, 5), WeightKind::AlSalamCarlitz}) == 1);
    CHECK(qchar_moment(0, {3, Rational(1, 5), WeightKind::QCharlier}) == 1);
    for (std::int64_t q : {2, 3}) {
        const Rational p(1, q);
        for (long j = 0; j <= 5; ++j) {
            CHECK(ac_moment(j, {1, p, WeightKind::AlSalamCarlitz}) == galois(j, q));
            Rational prod_o = 1, prod_u = 1;
            for (long i = 1; i <= j; ++i) {
                prod_o *= Rational(q).pow(i) + 1;
                prod_u *= Rational(q).pow(2 * i - 1) + 1;
            }
            CHECK(qchar_moment(j, {1, p, WeightKind::QCharlier}) == prod_o);
            CHECK(qchar_moment(j, {p, p * p, WeightKind::QCharlier}) == prod_u);
        }
    }
    // the unitary moment is the even moment of the Al-Salam-Carlitz law at p = -1/q
    CHECK(ac_moment(2, {-1, Rational(-1, 2), WeightKind::AlSalamCarlitz}) == limit_moment(Family::U, 2, 1));
}

TEST_CASE("numeric weights") {
    const Rational tol(1, 1000000);
    IntervalReal total = IntervalReal::point(0);
    for (long k = 0; k <= 40; ++k) {
        const auto m = weight_numeric(k, {1, Rational(1, 2), WeightKind::AlSalamCarlitz}, tol / 64);
        CHECK(m.lower() >= 0);
        total = total + m;
    }
    CHECK(total.lower() >= 1 - tol);
    CHECK(total.upper() <= 1 + tol);
    CHECK(weight_numeric(0, {1, Rational(1, 2), WeightKind::AlSalamCarlitz}, tol)
              .intersects(limit_dist(Family::GL, 2, 0, tol)));
    CHECK_THROWS_AS((void)weight_numeric(0, {1, 2, WeightKind::QCharlier}, tol), std::domain_error);
    CHECK_THROWS_AS((void)weight_numeric(0, {-1, Rational(1, 2), WeightKind::QCharlier}, tol), std::domain_error);
    CHECK_THROWS_AS((void)weight_numeric(0, {3, Rational(1, 2), WeightKind::AlSalamCarlitz}, tol), std::domain_error);
}

TEST_CASE("randomized rank checks") {
    CHECK(randomized_n_check(RandomizedFamily::GL, 2, 0, 10).holds());
    CHECK(randomized_n_check(RandomizedFamily::U, 2, 1, 10).holds());
    const auto sp = randomized_n_check(RandomizedFamily::SpCombined, 3, 0, 8);
    CHECK(sp.holds());
    // left side at degree n is P_n - P_{n-1} for the combined event
    const Rational p2 = dist_sp(2, 3).probs[0] + dist_sp(2, 3).probs[1];
    const Rational p1 = dist_sp(1, 3).probs[0] + dist_sp(1, 3).probs[1];
    CHECK(sp.from_groups[2] == p2 - p1);
}
