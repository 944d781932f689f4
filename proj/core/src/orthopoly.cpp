#include "fixspace/orthopoly.hpp"

#include <stdexcept>

#include "fixspace/qseries.hpp"
#include "fixspace/rsdist.hpp"

namespace fixspace {
namespace {

Rational nonzero(Rational v, const char* what) {
    if (v.is_zero()) throw std::domain_error(std::string("vanishing denominator in ") + what);
    return v;
}

}  // namespace

Rational ac_mass_ratio(long k, const WeightParams& params) {
    const auto& [a, p, kind] = params;
    return p.pow(k * k) * a.pow(k) /
           nonzero(qpoch(p, p, k) * qpoch(a * p, p, k), "Al-Salam-Carlitz mass");
}

Rational qchar_mass_ratio(long k, const WeightParams& params) {
    const auto& [a, p, kind] = params;
    return p.pow(choose2(k)) * a.pow(k) / nonzero(qpoch(p, p, k), "q-Charlier mass");
}

Rational mass_ratio(long k, const WeightParams& params) {
    return params.kind == WeightKind::AlSalamCarlitz ? ac_mass_ratio(k, params)
                                                     : qchar_mass_ratio(k, params);
}

Rational ac_moment(long j, const WeightParams& params) {
    const Rational base = nonzero(params.p, "Al-Salam-Carlitz moment").inverse();
    Rational total = 0;
    for (long k = 0; k <= j; ++k) total += qbinom(j, k, base) * params.a.pow(k);
    return total;
}

Rational qchar_moment(long j, const WeightParams& params) {
    const Rational pinv = nonzero(params.p, "q-Charlier moment").inverse();
    return qpoch(-params.a * pinv, pinv, j);
}

IntervalReal weight_numeric(long k, const WeightParams& params, const Rational& tolerance) {
    const auto& [a, p, kind] = params;
    if (tolerance.sign() <= 0) throw std::invalid_argument("tolerance must be positive");
    if (!(p.sign() > 0 && p < 1 && a.sign() > 0))
        throw std::domain_error("weight_numeric requires 0 < p < 1 and a > 0");
    const Rational ratio = mass_ratio(k, params);
    // Both prefactors are enclosed with the tail bound T = c p^{R+1}/(1-p) after R factors.
    const Rational scaled_tol = tolerance / ratio / 2;
    const auto enclose = [&ratio](const Rational& value, const Rational& tail) {
        const Rational lower = tail < 1 ? value * (Rational(1) - tail) : Rational(0);
        return IntervalReal(lower, value) * ratio;
    };
    Rational value = 1;
    if (kind == WeightKind::AlSalamCarlitz) {
        if (a * p >= 1) throw std::domain_error("weight_numeric requires a p < 1");
        // (ap;p)_inf = prod_{r>=0} (1 - a p^{r+1}), in [V (1 - T), V].
        for (long r = 0;; ++r) {
            const Rational tail = a * p.pow(r + 1) / (Rational(1) - p);
            if (tail <= scaled_tol) return enclose(value, tail);
            value *= Rational(1) - a * p.pow(r + 1);
        }
    }
    // 1/(-a;p)_inf = prod_{r>=0} (1 + a p^r)^{-1}, in [V (1 - T), V].
    for (long r = 0;; ++r) {
        const Rational tail = a * p.pow(r) / (Rational(1) - p);
        if (tail <= scaled_tol) return enclose(value, tail);
        value /= Rational(1) + a * p.pow(r);
    }
}

TruncatedSeries ac_weight_series(long k, const Rational& c, const Rational& p, std::size_t N) {
    // w(p^{-k}; A; p) with A = c a:
    //   (A p; p)_inf p^{k^2} A^k / ((p;p)_k (A p; p)_k) = (A p^{k+1}; p)_inf p^{k^2} A^k / (p;p)_k.
    // The infinite product is expanded with Euler's series in A; this is a different
    // route from genfun_Fk_rhs, which inverts the finite product instead.
    const TruncatedSeries tail_product = euler_product_series(c * p.pow(k + 1), p, N);
    const Rational lead = p.pow(k * k) * c.pow(k) / nonzero(qpoch(p, p, k), "Al-Salam-Carlitz weight");
    return tail_product * TruncatedSeries::monomial(N, static_cast<std::size_t>(k), lead);
}

RandomizedCheck randomized_n_check(RandomizedFamily family, std::int64_t q_, long k, std::size_t N) {
    if (k < 0 || static_cast<std::size_t>(k) > N) throw std::invalid_argument("randomized_n_check: need 0 <= k <= N");
    const Rational q = q_;
    TruncatedSeries probs(N);
    for (std::size_t n = 0; n <= N; ++n) {
        const int rank = static_cast<int>(n);
        const auto pick = [](const FixDist& d, long dim) {
            return static_cast<std::size_t>(dim) <= d.max_dim() ? d.at(static_cast<std::size_t>(dim))
                                                                : Rational(0);
        };
        switch (family) {
        case RandomizedFamily::GL: probs[n] = pick(dist_gl(rank, q_), k); break;
        case RandomizedFamily::U: probs[n] = pick(dist_u(rank, q_), k); break;
        case RandomizedFamily::SpCombined: {
            const FixDist d = dist_sp(rank, q_);
            probs[n] = pick(d, 2 * k) + pick(d, 2 * k + 1);
            break;
        }
        }
    }

    RandomizedCheck check{probs.times_one_minus_a(), TruncatedSeries(N), TruncatedSeries(N)};
    switch (family) {
    case RandomizedFamily::GL:
        check.closed_form = genfun_Fk_rhs(k, 1, 1, q, N);
        check.weight = ac_weight_series(k, 1, q.inverse(), N);
        break;
    case RandomizedFamily::U:
        check.closed_form = genfun_Fk_rhs(k, -1, -1, -q, N);
        check.weight = ac_weight_series(k, -1, (-q).inverse(), N);
        break;
    case RandomizedFamily::SpCombined: {
        const Rational P = q * q;
        check.closed_form = genfun_Fk_rhs(k, q.inverse(), q, P, N) +
                            (genfun_Fk_rhs(k, q.pow(-3), q.inverse(), P, N) * q.inverse()).times_a();
        check.weight = ac_weight_series(k, q.inverse(), P.inverse(), N);
        break;
    }
    }
    return check;
}

}  // namespace fixspace
