#include "doctest.h"

#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>

#include "fixspace/forms.hpp"
#include "fixspace/moments.hpp"
#include "fixspace/rsdist.hpp"
#include "fixspace/sampler.hpp"

using namespace fixspace;

TEST_CASE("form preservation examples") {
    const auto F3 = FiniteField::make(3);
    const auto F2 = FiniteField::make(2);
    const auto sp3 = make_form(FormKind::Symplectic, 1, F3);
    const auto sp2 = make_form(FormKind::Symplectic, 1, F2);
    const auto swap3 = FqMatrix::from_integers(F3, {{0, 1}, {1, 0}});
    const auto swap2 = FqMatrix::from_integers(F2, {{0, 1}, {1, 0}});
    CHECK(preserves_form(FqMatrix::identity(F3, 2), sp3));
    CHECK_FALSE(preserves_form(swap3, sp3));
    CHECK(preserves_form(swap2, sp2));
    CHECK_THROWS_AS((void)preserves_form(FqMatrix::identity(F3, 3), sp3), std::invalid_argument);

    // exhaustive count of 2x2 matrices over F_3 preserving the form
    int count = 0;
    FqMatrix g(F3, 2, 2);
    for (int code = 0; code < 81; ++code) {
        int c = code;
        for (std::size_t i = 0; i < 4; ++i, c /= 3) g(i / 2, i % 2) = static_cast<FiniteField::Elem>(c % 3);
        count += preserves_form(g, sp3) ? 1 : 0;
    }
    CHECK(count == 24);
}

TEST_CASE("form construction") {
    const auto F9 = FiniteField::make(9);
    CHECK(make_form(FormKind::Hermitian, 2, F9).gram == FqMatrix::identity(F9, 2));
    CHECK_THROWS((void)make_form(FormKind::Hermitian, 2, FiniteField::make(3)));
    CHECK_THROWS((void)make_form(FormKind::SymmetricPlus, 1, FiniteField::make(4)));
    CHECK_THROWS_AS((void)form_for({Family::OEvenPlus, 1, 2}), std::invalid_argument);
    CHECK(form_for({Family::OOdd, 2, 5}).gram.rows() == 5);
    CHECK(form_for({Family::OEvenMinus, 2, 3}).gram.rows() == 4);
    CHECK(form_for({Family::U, 2, 3}).gram.field()->order() == 9);
    CHECK(hermitian_frobenius_exponent(*F9) == 1);
    CHECK(form_kind_name(FormKind::Symplectic) == "symplectic");
}

TEST_CASE("enumeration examples") {
    CHECK(enumerate_group({Family::GL, 2, 2}).size() == 6);
    CHECK(enumerate_group({Family::Sp, 1, 2}).size() == 6);
    CHECK(enumerate_group({Family::OEvenPlus, 1, 3}).size() == 4);
    CHECK(enumerate_group({Family::GL, 0, 3}).size() == 1);
    CHECK_THROWS_AS((void)enumerate_group({Family::GL, 4, 2}), EnumerationLimitError);
    CHECK_FALSE(is_enumerable({Family::OEvenMinus, 1, 2}));
    CHECK(is_enumerable({Family::OEvenMinus, 2, 3}));
}

TEST_CASE("enumerated elements are distinct members of the group") {
    for (const GroupSpec spec : {GroupSpec{Family::U, 2, 3}, GroupSpec{Family::OOdd, 1, 5},
                                 GroupSpec{Family::OEvenMinus, 2, 3}, GroupSpec{Family::Sp, 2, 2}}) {
        const GroupModel model(spec);
        const auto elements = model.enumerate();
        std::set<std::vector<FiniteField::Elem>> seen;
        for (const auto& g : elements) {
            CHECK(preserves_form(g, model.form()));
            CHECK(kernel_dim(g) == 0);
            seen.insert(g.entries());
        }
        CHECK(seen.size() == elements.size());
        CHECK(Integer(static_cast<unsigned long>(elements.size())) == group_order(spec));
    }
}

TEST_CASE("oracle moments") {
    CHECK(oracle_moment_enumerate({Family::GL, 2, 2}, 1) == moment({Family::GL, 2, 2}, 1));
    CHECK(oracle_moment_enumerate({Family::Sp, 1, 3}, 2) == moment({Family::Sp, 1, 3}, 2));
    for (long j = 0; j <= 3; ++j) CHECK(oracle_moment_enumerate({Family::GL, 0, 5}, j) == 1);
}

TEST_CASE("samplers produce group elements") {
    Rng rng(99);
    const auto F2 = FiniteField::make(2);
    for (int i = 0; i < 20; ++i) CHECK(sample_gl(1, F2, rng) == FqMatrix::identity(F2, 1));
    const auto F7 = FiniteField::make(7);
    for (int i = 0; i < 50; ++i) CHECK(kernel_dim(sample_gl(4, F7, rng)) == 0);
    for (const GroupSpec spec : {GroupSpec{Family::Sp, 3, 5}, GroupSpec{Family::U, 3, 4}, GroupSpec{Family::OOdd, 3, 7},
                                 GroupSpec{Family::OEvenPlus, 3, 9}, GroupSpec{Family::OEvenMinus, 3, 5}}) {
        const GroupModel model(spec);
        for (int i = 0; i < 30; ++i) {
            const auto g = model.sample(rng);
            CHECK(preserves_form(g, model.form()));
            CHECK(kernel_dim(g) == 0);
        }
    }
    CHECK_THROWS_AS((void)GroupModel({Family::OEvenPlus, 2, 4}), std::invalid_argument);
}

TEST_CASE("sampler uniformity on small groups") {
    for (const GroupSpec spec : {GroupSpec{Family::GL, 2, 2}, GroupSpec{Family::Sp, 1, 3}, GroupSpec{Family::U, 2, 2}}) {
        const auto order = static_cast<std::uint64_t>(group_order(spec).get_ui());
        const auto report = sampler_uniformity(spec, 1000 * order, 12345, 2);
        CHECK(report.order == order);
        CHECK(report.passed);
    }
}

TEST_CASE("empirical distributions") {
    CHECK_THROWS_AS((void)empirical_fixdist({Family::GL, 2, 3}, 0, 1), std::invalid_argument);
    const auto one = empirical_fixdist({Family::GL, 2, 3}, 1, 1);
    std::uint64_t total = 0;
    for (auto c : one.counts) total += c;
    CHECK(total == 1);

    const auto a = empirical_fixdist({Family::Sp, 2, 3}, 20000, 5, 3);
    const auto b = empirical_fixdist({Family::Sp, 2, 3}, 20000, 5, 3);
    CHECK(a.counts == b.counts);
    CHECK(a.chi_square == b.chi_square);
    CHECK(a.within_tolerance);
    CHECK(a.exact == dist_sp(2, 3).probs);
    CHECK(a.max_abs_dev < 0.01);
    const auto c = empirical_fixdist({Family::Sp, 2, 3}, 20000, 6, 3);
    CHECK(c.counts != a.counts);
    CHECK_THROWS_AS((void)empirical_fixdist({Family::OEvenMinus, 2, 2}, 10, 1), std::invalid_argument);
}

TEST_CASE("rng streams are deterministic and distinct") {
    Rng a(1), b(1);
    for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
    CHECK(Rng::stream(1, 0).next() != Rng::stream(1, 1).next());
    CHECK(Rng::stream(1, 3).next() == Rng::stream(1, 3).next());
    Rng r(3);
    std::map<std::uint64_t, int> hist;
    for (int i = 0; i < 6000; ++i) ++hist[r.below(6)];
    CHECK(hist.size() == 6);
    for (const auto& [v, n] : hist) CHECK(std::abs(n - 1000) < 5 * 29);
    CHECK(r.below(1) == 0);
}
