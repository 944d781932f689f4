#include "fixspace/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <map>
#include <optional>
#include <string>
#include <thread>

#include "fixspace/rsdist.hpp"

namespace fixspace {
namespace {

using Elem = FiniteField::Elem;
using Vec = std::vector<Elem>;

bool extends_basis(const std::vector<Vec>& prefix, const Vec& v, const FieldPtr& field) {
    FqMatrix m(field, prefix.size() + 1, v.size());
    for (std::size_t r = 0; r < prefix.size(); ++r)
        for (std::size_t c = 0; c < v.size(); ++c) m(r, c) = prefix[r][c];
    for (std::size_t c = 0; c < v.size(); ++c) m(prefix.size(), c) = v[c];
    return rank(m) == prefix.size() + 1;
}

FqMatrix from_columns(const FieldPtr& field, const std::vector<Vec>& columns) {
    const std::size_t d = columns.size();
    FqMatrix g(field, d, d);
    for (std::size_t c = 0; c < d; ++c)
        for (std::size_t r = 0; r < d; ++r) g(r, c) = columns[c][r];
    return g;
}

/// Column-by-column description of the isometries of one form: column i must
/// pair with columns j < i as the Gram matrix says (linear in the new column),
/// have the right self-pairing, and extend the earlier columns to a larger
/// independent set.
class ColumnConstraints {
public:
    explicit ColumnConstraints(const FormSpec& form)
        : form_(form),
          F_(form.gram.F()),
          conj_(form.kind == FormKind::Hermitian ? hermitian_frobenius_exponent(F_) : 0),
          d_(form.gram.rows()) {}

    [[nodiscard]] std::size_t dimension() const { return d_; }

    // sum_{m,l} conj(u_m) G_{ml} v_l
    [[nodiscard]] Elem pairing(const Vec& u, const Vec& v) const {
        Elem s = 0;
        for (std::size_t m = 0; m < d_; ++m) {
            const Elem cu = conj_ ? F_.frobenius(u[m], conj_) : u[m];
            if (cu == 0) continue;
            for (std::size_t l = 0; l < d_; ++l)
                s = F_.add(s, F_.mul(cu, F_.mul(form_.gram(m, l), v[l])));
        }
        return s;
    }

    [[nodiscard]] std::optional<AffineSpace> affine_candidates(const std::vector<Vec>& prefix) const {
        const std::size_t i = prefix.size();
        if (form_.kind == FormKind::None || i == 0) {
            AffineSpace all{Vec(d_, 0), {}};
            for (std::size_t t = 0; t < d_; ++t) {
                Vec e(d_, 0);
                e[t] = 1;
                all.basis.push_back(std::move(e));
            }
            return all;
        }
        FqMatrix A(form_.gram.field(), i, d_);
        Vec b(i);
        for (std::size_t j = 0; j < i; ++j) {
            for (std::size_t l = 0; l < d_; ++l) {
                Elem s = 0;
                for (std::size_t m = 0; m < d_; ++m) {
                    const Elem cu = conj_ ? F_.frobenius(prefix[j][m], conj_) : prefix[j][m];
                    s = F_.add(s, F_.mul(cu, form_.gram(m, l)));
                }
                A(j, l) = s;
            }
            b[j] = form_.gram(j, i);
        }
        return solve_affine(A, b);
    }

    [[nodiscard]] bool admissible(const std::vector<Vec>& prefix, const Vec& v) const {
        const std::size_t i = prefix.size();
        if (form_.kind != FormKind::None && pairing(v, v) != form_.gram(i, i)) return false;
        return extends_basis(prefix, v, form_.gram.field());
    }

    [[nodiscard]] Vec point(const AffineSpace& space, const Vec& coeffs) const {
        Vec v = space.particular;
        for (std::size_t t = 0; t < coeffs.size(); ++t) {
            if (coeffs[t] == 0) continue;
            for (std::size_t l = 0; l < d_; ++l) v[l] = F_.add(v[l], F_.mul(coeffs[t], space.basis[t][l]));
        }
        return v;
    }

    [[nodiscard]] const FiniteField& field() const { return F_; }

private:
    const FormSpec& form_;
    const FiniteField& F_;
    int conj_;
    std::size_t d_;
};

void enumerate_columns(const ColumnConstraints& cc, std::vector<Vec>& prefix, const FieldPtr& field,
                       std::vector<FqMatrix>& out, std::uint64_t cap) {
    if (prefix.size() == cc.dimension()) {
        if (out.size() >= cap) throw EnumerationLimitError("enumeration exceeded cap");
        out.push_back(from_columns(field, prefix));
        return;
    }
    const auto space = cc.affine_candidates(prefix);
    if (!space) return;
    const std::size_t free = space->basis.size();
    const Elem q = cc.field().order();
    Vec coeffs(free, 0);
    for (;;) {
        Vec v = cc.point(*space, coeffs);
        if (cc.admissible(prefix, v)) {
            prefix.push_back(std::move(v));
            enumerate_columns(cc, prefix, field, out, cap);
            prefix.pop_back();
        }
        std::size_t t = 0;
        while (t < free && ++coeffs[t] == q) coeffs[t++] = 0;
        if (t == free) break;
    }
}

}  // namespace

FqMatrix sample_gl(int n, const FieldPtr& field, Rng& rng) {
    if (n < 1) throw std::invalid_argument("sample_gl: n must be >= 1");
    const auto d = static_cast<std::size_t>(n);
    std::vector<Vec> rows;
    while (rows.size() < d) {
        Vec v(d);
        for (auto& x : v) x = static_cast<Elem>(rng.below(field->order()));
        if (extends_basis(rows, v, field)) rows.push_back(std::move(v));
    }
    FqMatrix g(field, d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) g(r, c) = rows[r][c];
    return g;
}

FqMatrix sample_isometry(const FormSpec& form, Rng& rng) {
    const ColumnConstraints cc(form);
    const FieldPtr& field = form.gram.field();
    std::vector<Vec> columns;
    while (columns.size() < cc.dimension()) {
        const auto space = cc.affine_candidates(columns);
        if (!space) throw std::logic_error("sample_isometry: column constraints are inconsistent");
        Vec coeffs(space->basis.size());
        for (;;) {
            for (auto& c : coeffs) c = static_cast<Elem>(rng.below(field->order()));
            Vec v = cc.point(*space, coeffs);
            if (cc.admissible(columns, v)) {
                columns.push_back(std::move(v));
                break;
            }
        }
    }
    return from_columns(field, columns);
}

GroupModel::GroupModel(const GroupSpec& spec) : spec_(spec), form_(form_for(spec)) {}

FqMatrix GroupModel::sample(Rng& rng) const {
    if (dimension() == 0) return FqMatrix(field(), 0, 0);
    if (form_.kind == FormKind::None) return sample_gl(spec_.n, field(), rng);
    return sample_isometry(form_, rng);
}

std::vector<FqMatrix> GroupModel::enumerate(std::uint64_t cap) const {
    const Integer order = group_order(spec_);
    if (order > Integer(static_cast<unsigned long>(cap)))
        throw EnumerationLimitError(describe(spec_) + " has order " + order.get_str() +
                                    ", above the enumeration cap " + std::to_string(cap));
    std::vector<FqMatrix> out;
    std::vector<Vec> prefix;
    const ColumnConstraints cc(form_);
    enumerate_columns(cc, prefix, field(), out, cap);
    return out;
}

std::vector<FqMatrix> enumerate_group(const GroupSpec& spec, std::uint64_t cap) {
    return GroupModel(spec).enumerate(cap);
}

bool is_enumerable(const GroupSpec& spec, std::uint64_t cap) {
    try {
        validate(spec);
    } catch (const std::invalid_argument&) {
        return false;
    }
    const bool orthogonal = spec.family == Family::OOdd || spec.family == Family::OEvenPlus ||
                            spec.family == Family::OEvenMinus;
    if (orthogonal && spec.q % 2 == 0) return false;
    return group_order(spec) <= Integer(static_cast<unsigned long>(cap));
}

std::vector<Rational> enumerated_fixdist(const GroupSpec& spec, std::uint64_t cap) {
    const auto elements = enumerate_group(spec, cap);
    std::vector<std::uint64_t> hist(static_cast<std::size_t>(module_dimension(spec)) + 1, 0);
    for (const auto& g : elements) ++hist[fixed_space_dim(g)];
    std::vector<Rational> probs;
    for (auto c : hist) probs.emplace_back(Integer(static_cast<unsigned long>(c)),
                                           Integer(static_cast<unsigned long>(elements.size())));
    return probs;
}

Rational oracle_moment_enumerate(const GroupSpec& spec, long j, std::uint64_t cap) {
    if (j < 0) throw std::invalid_argument("moment order must be non-negative");
    const auto elements = enumerate_group(spec, cap);
    const Integer base = static_cast<long>(module_field_order(spec));
    Integer total = 0;
    for (const auto& g : elements) {
        const Integer fixed_vectors = ipow(base, fixed_space_dim(g));
        total += ipow(fixed_vectors, static_cast<unsigned long>(j));
    }
    return Rational(total, Integer(static_cast<unsigned long>(elements.size())));
}

double cell_tolerance(double p, std::uint64_t trials) {
    return 5.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

namespace {

/// Between 1 and min(trials, 256).
unsigned effective_workers(unsigned workers, std::uint64_t trials) {
    const auto cap = static_cast<unsigned>(std::min<std::uint64_t>(trials, 256));
    return std::clamp(workers, 1u, std::max(cap, 1u));
}

template <typename Record>
void run_workers(std::uint64_t trials, std::uint64_t seed, unsigned workers, Record record) {
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t share = trials / workers + (w < trials % workers ? 1 : 0);
        threads.emplace_back([=, &record, &errors] {
            try {
                Rng rng = Rng::stream(seed, w);
                record(w, share, rng);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace

SampleReport empirical_fixdist(const GroupSpec& spec, std::uint64_t trials, std::uint64_t seed,
                               unsigned workers) {
    if (trials == 0) throw std::invalid_argument("trials must be at least 1");
    const GroupModel model(spec);
    const std::size_t cells = static_cast<std::size_t>(module_dimension(spec)) + 1;
    workers = effective_workers(workers, trials);
    std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(cells, 0));
    run_workers(trials, seed, workers, [&](unsigned w, std::uint64_t share, Rng& rng) {
        for (std::uint64_t t = 0; t < share; ++t) ++partial[w][fixed_space_dim(model.sample(rng))];
    });

    SampleReport report;
    report.spec = spec;
    report.trials = trials;
    report.seed = seed;
    report.workers = workers;
    report.counts.assign(cells, 0);
    for (const auto& p : partial)
        for (std::size_t k = 0; k < cells; ++k) report.counts[k] += p[k];
    report.exact = distribution(spec).probs;

    const double T = static_cast<double>(trials);
    report.within_tolerance = true;
    int positive = 0;
    for (std::size_t k = 0; k < cells; ++k) {
        const double p = report.exact[k].to_double();
        const double freq = static_cast<double>(report.counts[k]) / T;
        const double dev = std::abs(freq - p);
        report.max_abs_dev = std::max(report.max_abs_dev, dev);
        const double tol = cell_tolerance(p, trials);
        if (tol > 0.0 ? !(dev < tol) : dev != 0.0) report.within_tolerance = false;
        if (p > 0.0) {
            ++positive;
            const double expected = T * p;
            const double diff = static_cast<double>(report.counts[k]) - expected;
            report.chi_square += diff * diff / expected;
        }
    }
    report.degrees_of_freedom = std::max(0, positive - 1);
    return report;
}

UniformityReport sampler_uniformity(const GroupSpec& spec, std::uint64_t trials, std::uint64_t seed,
                                    unsigned workers) {
    if (trials == 0) throw std::invalid_argument("trials must be at least 1");
    const GroupModel model(spec);
    const auto elements = model.enumerate();
    std::map<std::vector<Elem>, std::size_t> index;
    for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i].entries(), i);

    workers = effective_workers(workers, trials);
    std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(elements.size(), 0));
    std::vector<std::uint64_t> strays(workers, 0);
    run_workers(trials, seed, workers, [&](unsigned w, std::uint64_t share, Rng& rng) {
        for (std::uint64_t t = 0; t < share; ++t) {
            const auto it = index.find(model.sample(rng).entries());
            if (it == index.end()) ++strays[w];
            else ++partial[w][it->second];
        }
    });

    UniformityReport report;
    report.spec = spec;
    report.order = elements.size();
    report.trials = trials;
    report.seed = seed;
    report.counts.assign(elements.size(), 0);
    std::uint64_t stray_total = 0;
    for (unsigned w = 0; w < workers; ++w) {
        stray_total += strays[w];
        for (std::size_t i = 0; i < elements.size(); ++i) report.counts[i] += partial[w][i];
    }
    const double T = static_cast<double>(trials);
    const double p = 1.0 / static_cast<double>(elements.size());
    const double expected = T * p;
    const double sigma = std::sqrt(T * p * (1.0 - p));
    for (auto c : report.counts) {
        const double diff = static_cast<double>(c) - expected;
        report.chi_square += diff * diff / expected;
        if (sigma > 0.0) report.max_abs_z = std::max(report.max_abs_z, std::abs(diff) / sigma);
    }
    report.degrees_of_freedom = static_cast<int>(elements.size()) - 1;
    report.chi_square_limit =
        report.degrees_of_freedom + 5.0 * std::sqrt(2.0 * report.degrees_of_freedom);
    report.passed = stray_total == 0 && report.chi_square <= report.chi_square_limit &&
                    report.max_abs_z < 5.0;
    return report;
}

}  // namespace fixspace
