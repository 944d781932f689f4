#include "doctest.h"

#include <algorithm>
#include <stdexcept>

#include "fixspace/suites.hpp"

using namespace fixspace;

TEST_CASE("suites pass and report their instance counts") {
    const auto ids = run_identity_suite(1, 200);
    CHECK(ids.passed());
    CHECK(ids.checks.at(1).instances == 200);
    CHECK(run_series_suite(6).passed());
    CHECK(run_orthopoly_suite().passed());
    CHECK(run_randomized_suite(6).passed());
    CHECK_THROWS_AS((void)run_suite("nope", 1), std::invalid_argument);
}

TEST_CASE("enumerable specs cover the small groups") {
    const auto specs = enumerable_specs();
    const auto has = [&](GroupSpec s) { return std::find(specs.begin(), specs.end(), s) != specs.end(); };
    CHECK(has({Family::GL, 3, 3}));
    CHECK(has({Family::OEvenMinus, 2, 3}));
    CHECK(has({Family::U, 3, 2}));
    CHECK_FALSE(has({Family::GL, 4, 2}));
    CHECK_FALSE(has({Family::OEvenPlus, 1, 2}));
}
