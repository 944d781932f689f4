#include "doctest.h"

#include <stdexcept>

#include "fixspace/group.hpp"
#include "oracles.hpp"

using namespace fixspace;

TEST_CASE("validation") {
    CHECK_NOTHROW(validate({Family::GL, 3, 9}));
    CHECK_THROWS_AS((void)validate({Family::GL, 3, 6}), std::invalid_argument);
    CHECK_THROWS_AS((void)validate({Family::GL, 3, 1}), std::invalid_argument);
    CHECK_THROWS_AS((void)validate({Family::GL, -1, 2}), std::invalid_argument);
    CHECK_THROWS_AS((void)validate({Family::OOdd, 1, 4}), std::invalid_argument);
    CHECK_THROWS_AS((void)validate({Family::OEvenMinus, 0, 3}), std::invalid_argument);
    CHECK(is_prime_power(49));
    CHECK(is_prime_power(2));
    CHECK_FALSE(is_prime_power(12));
    CHECK_FALSE(is_prime_power(1));
    CHECK(factor_prime_power(81).p == 3);
    CHECK(factor_prime_power(81).m == 4);
}

TEST_CASE("group orders from the examples") {
    CHECK(group_order({Family::GL, 2, 2}) == 6);
    CHECK(group_order({Family::Sp, 1, 3}) == 24);
    CHECK(group_order({Family::OEvenMinus, 1, 2}) == 6);
    CHECK(group_order({Family::OEvenPlus, 1, 3}) == 4);
    CHECK(group_order({Family::OOdd, 1, 3}) == 48);
    CHECK(group_order({Family::U, 2, 2}) == 18);
    CHECK(group_order({Family::GL, 0, 5}) == 1);
    CHECK(group_order({Family::OOdd, 0, 3}) == 2);
}

TEST_CASE("group orders match brute-force counts") {
    CHECK(group_order({Family::GL, 2, 3}) == oracle::gl(2, 3).order);
    CHECK(group_order({Family::GL, 3, 2}) == oracle::gl(3, 2).order);
    CHECK(group_order({Family::GL, 2, 4}) == oracle::gl(2, 4).order);
    CHECK(group_order({Family::Sp, 2, 2}) == oracle::sp(4, 2).order);
    CHECK(group_order({Family::Sp, 1, 5}) == oracle::sp(2, 5).order);
    CHECK(group_order({Family::U, 1, 2}) == oracle::unitary(1).order);
    CHECK(group_order({Family::U, 2, 2}) == oracle::unitary(2).order);
    // even characteristic, through quadratic forms
    CHECK(group_order({Family::OEvenPlus, 1, 2}) == oracle::orthogonal_quadratic(2, 2, {0, 1, 0, 0}).order);
    CHECK(group_order({Family::OEvenMinus, 1, 2}) == oracle::orthogonal_quadratic(2, 2, {1, 1, 0, 1}).order);
    CHECK(group_order({Family::OEvenPlus, 2, 2}) ==
          oracle::orthogonal_quadratic(2, 4, {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0}).order);
    CHECK(group_order({Family::OEvenMinus, 2, 2}) ==
          oracle::orthogonal_quadratic(2, 4, {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 1}).order);
}

TEST_CASE("family metadata") {
    CHECK(sign_q_variant({Family::GL, 2, 3}) == 3);
    CHECK(sign_q_variant({Family::U, 2, 2}) == -2);
    CHECK(sign_q_variant({Family::Sp, 2, 3}) == 9);
    CHECK(module_dimension({Family::OOdd, 2, 3}) == 5);
    CHECK(module_dimension({Family::Sp, 2, 3}) == 4);
    CHECK(module_field_order({Family::U, 2, 3}) == 9);
    for (Family f : {Family::GL, Family::U, Family::Sp, Family::OOdd, Family::OEvenPlus, Family::OEvenMinus})
        CHECK(parse_family(family_name(f)) == f);
    CHECK(parse_family("O-PLUS") == Family::OEvenPlus);
    CHECK_THROWS_AS((void)parse_family("so"), std::invalid_argument);
    CHECK(describe({Family::Sp, 2, 3}) == "Sp(4,3)");
}
