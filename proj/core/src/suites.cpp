#include "fixspace/suites.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "fixspace/moments.hpp"
#include "fixspace/orthopoly.hpp"
#include "fixspace/qidentity.hpp"
#include "fixspace/qseries.hpp"
#include "fixspace/rng.hpp"
#include "fixspace/rsdist.hpp"

namespace fixspace {
namespace {

const std::vector<Rational>& base_grid() {
    static const std::vector<Rational> grid{2, 3, -2, Rational(5, 2)};
    return grid;
}

const std::vector<Rational>& y_grid() {
    static const std::vector<Rational> grid{1, -1, Rational(1, 3)};
    return grid;
}

/// Accumulates many exact comparisons under one label, keeping the first failure.
class Tally {
public:
    explicit Tally(std::string label) { result_.label = std::move(label); }

    void expect(bool ok, const std::function<std::string()>& describe) {
        ++result_.instances;
        if (!ok && result_.passed) {
            result_.passed = false;
            result_.detail = describe();
        }
    }

    void expect_equal(const Rational& lhs, const Rational& rhs, const std::string& where) {
        expect(lhs == rhs, [&] { return where + ": " + lhs.str() + " != " + rhs.str(); });
    }

    [[nodiscard]] CheckResult done() && { return std::move(result_); }

private:
    CheckResult result_;
};

Rational random_rational(Rng& rng) {
    const long num = static_cast<long>(rng.below(19)) - 9;
    const long den = static_cast<long>(rng.below(5)) + 1;
    return Rational(num, den);
}

std::string show(const Rational& r) { return r.str(); }

std::string series_diff(const TruncatedSeries& a, const TruncatedSeries& b) {
    for (std::size_t m = 0; m <= a.degree(); ++m)
        if (a[m] != b[m]) return "a^" + std::to_string(m) + ": " + a[m].str() + " != " + b[m].str();
    return "equal";
}

}  // namespace

bool SuiteResult::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

SuiteResult run_identity_suite(std::uint64_t seed, std::size_t random_instances) {
    SuiteResult suite{"identities", {}};

    {
        Tally t("q-binomial theorem");
        const std::vector<Rational> zs{5, Rational(7, 3), Rational(-1, 2), 0};
        for (const auto& P : base_grid())
            for (const auto& Z : zs)
                for (long J = 0; J <= 8; ++J) {
                    const auto c = qbinom_theorem_check(J, P, Z);
                    t.expect_equal(c.lhs, c.rhs, "J=" + std::to_string(J) + " P=" + show(P) + " Z=" + show(Z));
                }
        suite.checks.push_back(std::move(t).done());
    }
    {
        Tally t("double sum = single sum (random, seed " + std::to_string(seed) + ")");
        Rng rng(seed);
        std::size_t produced = 0;
        while (produced < random_instances) {
            const long n = static_cast<long>(rng.below(9));
            const Rational P = random_rational(rng);
            const Rational X = random_rational(rng);
            const Rational Y = random_rational(rng);
            if (P.is_zero() || P.abs() == 1 || Y.is_zero()) continue;
            ++produced;
            const DoubleSumParams params{n, P, X, Y};
            t.expect_equal(double_sum_D(params), single_sum_D(params),
                           "n=" + std::to_string(n) + " P=" + show(P) + " X=" + show(X) + " Y=" + show(Y));
        }
        suite.checks.push_back(std::move(t).done());
    }
    {
        Tally t("D_n(P, Y P^j, Y) = sum_J [j J]_P Y^J");
        for (const auto& P : base_grid())
            for (const auto& Y : y_grid())
                for (long j = 0; j <= 6; ++j)
                    for (long n = 0; n <= 10; ++n) {
                        const auto c = subspace_sum_check(n, P, j, Y);
                        t.expect_equal(c.lhs, c.rhs, "n=" + std::to_string(n) + " j=" + std::to_string(j) +
                                                         " P=" + show(P) + " Y=" + show(Y));
                    }
        suite.checks.push_back(std::move(t).done());
    }
    {
        Tally t("D_n(P, Y/P, Y) = sum_J P^{-C(J+1,2)} (-Y)^J");
        for (const auto& P : base_grid())
            for (const auto& Y : y_grid())
                for (long n = 0; n <= 10; ++n) {
                    const auto c = shifted_sum_check(n, P, Y);
                    t.expect_equal(c.lhs, c.rhs, "n=" + std::to_string(n) + " P=" + show(P) + " Y=" + show(Y));
                }
        suite.checks.push_back(std::move(t).done());
    }
    {
        Tally t("sum_J [2j J]_q (-1)^J = (q;q^2)_j");
        const std::vector<Rational> qs{2, 3, -2, -3, Rational(5, 2), Rational(1, 2)};
        for (const auto& q : qs)
            for (long j = 0; j <= 6; ++j) {
                const auto c = andrews_check_1(j, q);
                t.expect_equal(c.lhs, c.rhs, "j=" + std::to_string(j) + " q=" + show(q));
            }
        suite.checks.push_back(std::move(t).done());
    }
    {
        Tally t("half-power sums with q = t^2 (both directions)");
        const std::vector<Rational> ts{2, 3, -2, Rational(3, 2), Rational(1, 3)};
        for (const auto& tt : ts)
            for (long n = 0; n <= 8; ++n)
                for (auto dir : {HalfPower::Plus, HalfPower::Minus}) {
                    const auto c = andrews_23(n, tt, dir);
                    t.expect_equal(c.lhs, c.rhs, "n=" + std::to_string(n) + " t=" + show(tt) +
                                                     (dir == HalfPower::Plus ? " (+)" : " (-)"));
                }
        suite.checks.push_back(std::move(t).done());
    }
    return suite;
}

SuiteResult run_series_suite(std::size_t degree) {
    SuiteResult suite{"series", {}};
    {
        Tally t("F_k series = closed form, k <= 4, degree " + std::to_string(degree));
        for (const auto& P : base_grid())
            for (const auto& X : y_grid())
                for (const auto& Y : y_grid())
                    for (long k = 0; k <= 4; ++k) {
                        const auto lhs = genfun_Fk_lhs(k, X, Y, P, degree);
                        const auto rhs = genfun_Fk_rhs(k, X, Y, P, degree);
                        t.expect(lhs == rhs, [&] {
                            return "k=" + std::to_string(k) + " X=" + show(X) + " Y=" + show(Y) + " P=" +
                                   show(P) + " " + series_diff(lhs, rhs);
                        });
                    }
        suite.checks.push_back(std::move(t).done());
    }
    {
        Tally t("sum_k F_k(a,X,X;P) = 1, degree " + std::to_string(degree));
        std::vector<std::pair<Rational, Rational>> params;  // (X, P)
        for (long q : {2, 3, 4, 5}) {
            params.emplace_back(1, q);    // general linear
            params.emplace_back(-1, -q);  // unitary
        }
        for (const auto& P : base_grid())
            for (const auto& X : y_grid()) params.emplace_back(X, P);
        for (const auto& [X, P] : params) {
            const auto c = qgauss_normalization(X, P, degree);
            t.expect(c.holds(), [&] { return "X=" + show(X) + " P=" + show(P) + " " + series_diff(c.lhs, c.rhs); });
        }
        suite.checks.push_back(std::move(t).done());
    }
    return suite;
}

SuiteResult run_orthopoly_suite() {
    SuiteResult suite{"orthopoly", {}};
    const std::vector<long> qs{2, 3, 5};
    {
        Tally t("limit ratios = weight mass ratios, k <= 5");
        for (long q : qs) {
            const Rational p = Rational(1, q);
            for (long k = 0; k <= 5; ++k) {
                const std::string at = "q=" + std::to_string(q) + " k=" + std::to_string(k);
                t.expect_equal(limit_factor(Family::GL, q, k),
                               ac_mass_ratio(k, {1, p, WeightKind::AlSalamCarlitz}), "GL " + at);
                t.expect_equal(limit_factor(Family::U, q, k),
                               qchar_mass_ratio(k, {p, p * p, WeightKind::QCharlier}), "U (q-Charlier) " + at);
                t.expect_equal(limit_factor(Family::U, q, k),
                               ac_mass_ratio(k, {-1, -p, WeightKind::AlSalamCarlitz}), "U (Al-Salam-Carlitz) " + at);
                t.expect_equal(limit_factor(Family::Sp, q, k),
                               qchar_mass_ratio(k, {p, p, WeightKind::QCharlier}), "Sp " + at);
                for (Family f : {Family::OOdd, Family::OEvenPlus, Family::OEvenMinus}) {
                    if (f == Family::OOdd && q % 2 == 0) continue;
                    t.expect_equal(limit_factor(f, q, k), qchar_mass_ratio(k, {1, p, WeightKind::QCharlier}),
                                   std::string(family_name(f)) + " " + at);
                }
            }
        }
        suite.checks.push_back(std::move(t).done());
    }
    {
        Tally t("weight moments = limiting moments, j <= 6");
        for (long q : qs) {
            const Rational p = Rational(1, q);
            for (long j = 0; j <= 6; ++j) {
                const std::string at = "q=" + std::to_string(q) + " j=" + std::to_string(j);
                t.expect_equal(ac_moment(j, {1, p, WeightKind::AlSalamCarlitz}), limit_moment(Family::GL, q, j), "GL " + at);
                t.expect_equal(ac_moment(j, {1, p, WeightKind::AlSalamCarlitz}), galois(j, q), "Galois " + at);
                t.expect_equal(qchar_moment(j, {p, p * p, WeightKind::QCharlier}), limit_moment(Family::U, q, j), "U " + at);
                t.expect_equal(ac_moment(2 * j, {-1, -p, WeightKind::AlSalamCarlitz}), limit_moment(Family::U, q, j),
                               "U via even Al-Salam-Carlitz moment " + at);
                t.expect_equal(qchar_moment(j, {p, p, WeightKind::QCharlier}), limit_moment(Family::Sp, q, j), "Sp " + at);
                t.expect_equal(qchar_moment(j, {1, p, WeightKind::QCharlier}), limit_moment(Family::OEvenPlus, q, j), "O " + at);
            }
        }
        suite.checks.push_back(std::move(t).done());
    }
    {
        Tally t("weights are nonnegative and total mass is within 1e-6 of 1");
        const Rational tol(1, 1000000);
        std::vector<WeightParams> params{{1, Rational(1, 2), WeightKind::AlSalamCarlitz},
                                         {Rational(1, 2), Rational(1, 3), WeightKind::AlSalamCarlitz},
                                         {1, Rational(1, 2), WeightKind::QCharlier},
                                         {Rational(1, 3), Rational(1, 3), WeightKind::QCharlier}};
        for (long q : qs) {
            const Rational p(1, q);
            params.push_back({1, p, WeightKind::AlSalamCarlitz});
            params.push_back({p, p * p, WeightKind::QCharlier});
            params.push_back({p, p, WeightKind::QCharlier});
            params.push_back({1, p, WeightKind::QCharlier});
        }
        for (const auto& w : params) {
            IntervalReal total = IntervalReal::point(0);
            bool nonneg = true;
            for (long k = 0; k <= 40; ++k) {
                const auto m = weight_numeric(k, w, tol / 64);
                nonneg = nonneg && m.lower().sign() >= 0;
                total = total + m;
            }
            const std::string at = std::string(w.kind == WeightKind::AlSalamCarlitz ? "AC" : "qC") +
                                   " a=" + show(w.a) + " p=" + show(w.p);
            t.expect(nonneg, [&] { return at + ": negative mass"; });
            t.expect(total.lower() >= Rational(1) - tol && total.upper() <= Rational(1) + tol,
                     [&] { return at + ": total mass " + total.str(); });
        }
        suite.checks.push_back(std::move(t).done());
    }
    {
        Tally t("weight at k enclosures meet the limiting probabilities");
        const Rational tol(1, 1000000);
        for (long q : qs) {
            const Rational p(1, q);
            for (long k = 0; k <= 3; ++k) {
                const std::string at = "q=" + std::to_string(q) + " k=" + std::to_string(k);
                const auto meet = [&](Family f, const WeightParams& w, const std::string& what) {
                    const auto a = weight_numeric(k, w, tol);
                    const auto b = limit_dist(f, q, k, tol);
                    t.expect(a.intersects(b), [&] { return what + " " + at + ": " + a.str() + " vs " + b.str(); });
                };
                meet(Family::GL, {1, p, WeightKind::AlSalamCarlitz}, "GL");
                meet(Family::U, {p, p * p, WeightKind::QCharlier}, "U");
                meet(Family::Sp, {p, p, WeightKind::QCharlier}, "Sp");
                meet(Family::OEvenPlus, {1, p, WeightKind::QCharlier}, "O");
            }
        }
        suite.checks.push_back(std::move(t).done());
    }
    return suite;
}

SuiteResult run_randomized_suite(std::size_t degree) {
    SuiteResult suite{"randomized-n", {}};
    const std::pair<RandomizedFamily, const char*> families[] = {
        {RandomizedFamily::GL, "GL"}, {RandomizedFamily::U, "U"}, {RandomizedFamily::SpCombined, "Sp combined"}};
    for (const auto& [family, name] : families) {
        Tally t(std::string(name) + ": (1-a) sum_n P_n a^n = F_k = weight, degree " + std::to_string(degree));
        for (long q : {2, 3})
            for (long k = 0; k <= 3; ++k) {
                const auto c = randomized_n_check(family, q, k, degree);
                t.expect(c.holds(), [&] {
                    return "q=" + std::to_string(q) + " k=" + std::to_string(k) + " groups vs F_k: " +
                           series_diff(c.from_groups, c.closed_form) + "; F_k vs weight: " +
                           series_diff(c.closed_form, c.weight);
                });
            }
        suite.checks.push_back(std::move(t).done());
    }
    return suite;
}

std::vector<GroupSpec> enumerable_specs(std::uint64_t cap) {
    std::vector<GroupSpec> specs;
    const Family families[] = {Family::GL, Family::U, Family::Sp, Family::OOdd, Family::OEvenPlus,
                               Family::OEvenMinus};
    for (Family f : families)
        for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9})
            for (int n = min_rank(f);; ++n) {
                const GroupSpec spec{f, n, q};
                if (!is_enumerable(spec, cap)) break;
                specs.push_back(spec);
            }
    return specs;
}

SuiteResult run_oracle_suite(std::uint64_t cap) {
    SuiteResult suite{"oracle", {}};
    Tally orders("group order = enumerated element count");
    Tally dists("exact distribution = enumerated fixed-space histogram");
    Tally moments("moment(j) = enumerated average of Z^j, j <= 3");
    for (const auto& spec : enumerable_specs(cap)) {
        const std::string name = describe(spec);
        const auto elements = enumerate_group(spec, cap);
        orders.expect(Integer(static_cast<unsigned long>(elements.size())) == group_order(spec),
                      [&] { return name + ": " + std::to_string(elements.size()) + " elements"; });

        std::vector<unsigned long> hist(static_cast<std::size_t>(module_dimension(spec)) + 1, 0);
        for (const auto& g : elements) ++hist[fixed_space_dim(g)];
        const FixDist exact = distribution(spec);
        const Integer order = static_cast<unsigned long>(elements.size());
        for (std::size_t k = 0; k < hist.size(); ++k)
            dists.expect_equal(exact.probs[k], Rational(Integer(hist[k]), order), name + " k=" + std::to_string(k));

        const Integer base = static_cast<long>(module_field_order(spec));
        for (long j = 0; j <= 3; ++j) {
            Integer total = 0;
            for (std::size_t k = 0; k < hist.size(); ++k) total += hist[k] * ipow(base, k * static_cast<unsigned long>(j));
            moments.expect_equal(moment(spec, j), Rational(total, order), name + " j=" + std::to_string(j));
        }
    }
    suite.checks.push_back(std::move(orders).done());
    suite.checks.push_back(std::move(dists).done());
    suite.checks.push_back(std::move(moments).done());
    return suite;
}

SuiteResult run_suite(std::string_view name, std::uint64_t seed) {
    if (name == "identities") return run_identity_suite(seed);
    if (name == "series") return run_series_suite();
    if (name == "orthopoly") return run_orthopoly_suite();
    if (name == "randomized-n") return run_randomized_suite();
    if (name == "oracle") return run_oracle_suite();
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

}  // namespace fixspace
