#include "fixspace/moments.hpp"

#include <stdexcept>
#include <string>

#include "fixspace/qidentity.hpp"
#include "fixspace/qseries.hpp"
#include "fixspace/rsdist.hpp"

namespace fixspace {

Rational moment(const GroupSpec& spec, long j) {
    if (j < 0) throw std::invalid_argument("moment order must be non-negative");
    const FixDist d = distribution(spec);
    const Rational per_dim = Rational(module_field_order(spec)).pow(j);
    Rational total = 0;
    Rational weight = 1;
    for (const auto& p : d.probs) {
        total += p * weight;
        weight *= per_dim;
    }
    return total;
}

Rational limit_moment(Family family, std::int64_t q_, long j) {
    if (j < 0) throw std::invalid_argument("moment order must be non-negative");
    if (!is_prime_power(q_)) throw std::invalid_argument("q must be a prime power");
    const Rational q = q_;
    Rational r = 1;
    switch (family) {
    case Family::GL: return galois(j, q);
    case Family::U:
        for (long i = 1; i <= j; ++i) r *= q.pow(2 * i - 1) + 1;
        return r;
    case Family::Sp:
        for (long i = 1; i <= j; ++i) r *= q.pow(i - 1) + 1;
        return r;
    case Family::OOdd:
    case Family::OEvenPlus:
    case Family::OEvenMinus:
        for (long i = 1; i <= j; ++i) r *= q.pow(i) + 1;
        return r;
    }
    throw std::invalid_argument("unknown family");
}

int stabilization_threshold(Family family, long j) {
    switch (family) {
    case Family::U: return static_cast<int>(2 * j);
    case Family::OEvenMinus: return static_cast<int>(j + 1);
    default: return static_cast<int>(j);
    }
}

int min_rank(Family family) { return family == Family::OEvenMinus ? 1 : 0; }

Rational galois(long j, const Rational& q) {
    Rational by_recurrence = galois_by_recurrence(j, q);
    if (by_recurrence != galois_by_sum(j, q))
        throw std::logic_error("Galois number recurrence disagrees with q-binomial sum at j=" +
                               std::to_string(j));
    return by_recurrence;
}

Rational galois_by_double_sum(long j, const Rational& q) {
    return double_sum_D({j, q, q.pow(j), 1});
}

MomentReport moment_report(const GroupSpec& spec, long j) {
    MomentReport r{spec, j, moment(spec, j), limit_moment(spec.family, spec.q, j), false};
    r.stabilized = r.value == r.limit;
    return r;
}

ScanReport stabilization_scan(Family family, std::int64_t q, long j, int n_max) {
    ScanReport report;
    report.family = family;
    report.q = q;
    report.j = j;
    report.threshold = std::max(stabilization_threshold(family, j), min_rank(family));
    if (n_max < report.threshold)
        throw std::invalid_argument("n_max " + std::to_string(n_max) +
                                    " is below the stabilization threshold " +
                                    std::to_string(report.threshold));
    report.limit = limit_moment(family, q, j);
    for (int n = min_rank(family); n <= n_max; ++n)
        report.rows.push_back(moment_report({family, n, q}, j));
    for (auto it = report.rows.rbegin(); it != report.rows.rend() && it->stabilized; ++it)
        report.minimal_stable_n = it->spec.n;
    return report;
}

}  // namespace fixspace
