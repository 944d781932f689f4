#include "fixspace/rsdist.hpp"

#include <stdexcept>

#include "fixspace/qseries.hpp"

namespace fixspace {
namespace {

// |GL(k,Q)| for any rational Q; used with Q = q and Q = q^2.
Rational gl_order(long k, const Rational& Q) {
    Rational order = Q.pow(choose2(k));
    for (long i = 1; i <= k; ++i) order *= Q.pow(i) - 1;
    return order;
}

Rational u_order(long k, const Rational& q) {
    Rational order = q.pow(choose2(k));
    for (long i = 1; i <= k; ++i) order *= q.pow(i) - Rational(i % 2 ? -1 : 1);
    return order;
}

Rational sp_order(long k, const Rational& q) {
    Rational order = q.pow(k * k);
    for (long i = 1; i <= k; ++i) order *= q.pow(2 * i) - 1;
    return order;
}

// (q^{2i}-1)...(q^2-1)
Rational even_factor_product(long i, const Rational& q) {
    Rational r = 1;
    for (long t = 1; t <= i; ++t) r *= q.pow(2 * t) - 1;
    return r;
}

FixDist empty_dist(const GroupSpec& spec) {
    validate(spec);
    return {spec, std::vector<Rational>(static_cast<std::size_t>(module_dimension(spec)) + 1)};
}

Rational sign_of(long e) { return e % 2 ? -1 : 1; }

}  // namespace

Rational FixDist::total() const {
    Rational s = 0;
    for (const auto& p : probs) s += p;
    return s;
}

FixDist dist_gl(int n, std::int64_t q_) {
    FixDist d = empty_dist({Family::GL, n, q_});
    const Rational q = q_;
    for (long k = 0; k <= n; ++k) {
        Rational sum = 0;
        for (long i = 0; i <= n - k; ++i)
            sum += sign_of(i) * q.pow(choose2(i)) / (q.pow(k * i) * gl_order(i, q));
        d.probs[k] = sum / gl_order(k, q);
    }
    return d;
}

FixDist dist_u(int n, std::int64_t q_) {
    FixDist d = empty_dist({Family::U, n, q_});
    const Rational q = q_;
    const Rational Q = -q;
    for (long k = 0; k <= n; ++k) {
        Rational sum = 0;
        for (long i = 0; i <= n - k; ++i)
            sum += sign_of(i) * Q.pow(choose2(i)) / (Q.pow(k * i) * u_order(i, q));
        d.probs[k] = sum / u_order(k, q);
    }
    return d;
}

FixDist dist_sp(int n, std::int64_t q_) {
    FixDist d = empty_dist({Family::Sp, n, q_});
    const Rational q = q_;
    for (long k = 0; k <= n; ++k) {
        Rational sum = 0;
        for (long i = 0; i <= n - k; ++i)
            sum += sign_of(i) * q.pow(i * (i + 1)) / (sp_order(i, q) * q.pow(2 * i * k));
        d.probs[2 * k] = sum / sp_order(k, q);
    }
    for (long k = 0; k < n; ++k) {
        Rational sum = 0;
        for (long i = 0; i <= n - k - 1; ++i)
            sum += sign_of(i) * q.pow(i * (i + 1)) / (sp_order(i, q) * q.pow(2 * i * (k + 1)));
        d.probs[2 * k + 1] = sum / (sp_order(k, q) * q.pow(2 * k + 1));
    }
    return d;
}

FixDist dist_o_odd(int n, std::int64_t q_) {
    FixDist d = empty_dist({Family::OOdd, n, q_});
    const Rational q = q_;
    const Rational r = q.pow(-2);
    const Rational half(1, 2);
    for (long k = 0; k <= n; ++k) {
        Rational even = 0;
        Rational odd = 0;
        for (long i = 0; i <= n - k; ++i) {
            const Rational base = sign_of(i) / qpoch(r, r, i);
            even += base / q.pow(i * i + 2 * i * k);
            odd += base / q.pow(i * i + 2 * i * (k + 1));
        }
        d.probs[2 * k] = half / (q.pow(2 * k * k - k) * qpoch(r, r, k)) * even;
        d.probs[2 * k + 1] = half / (q.pow(2 * k * k + k) * qpoch(r, r, k)) * odd;
    }
    return d;
}

FixDist dist_o_even(int n, std::int64_t q_, OrthogonalSign sign) {
    const Family family = sign == OrthogonalSign::Plus ? Family::OEvenPlus : Family::OEvenMinus;
    FixDist d = empty_dist({family, n, q_});
    const Rational q = q_;
    const Rational q2 = q * q;
    const Rational r = q.pow(-2);
    const Rational eps = sign == OrthogonalSign::Plus ? 1 : -1;
    for (long k = 0; k <= n; ++k) {
        const Rational gl = gl_order(k, q2);
        Rational sum = 0;
        for (long i = 0; i <= n - k; ++i)
            sum += sign_of(i) / (q.pow((2 * k - 1) * i) * even_factor_product(i, q));
        const Rational tail = sign_of(n - k) /
                              (q.pow(2 * k * (n - k)) * gl * even_factor_product(n - k, q));
        d.probs[2 * k] = q.pow(k) / (2 * gl) * sum + eps * Rational(1, 2) * tail;
    }
    for (long k = 0; k < n; ++k) {
        Rational sum = 0;
        for (long i = 0; i <= n - k - 1; ++i)
            sum += sign_of(i) / (q.pow(i * i + 2 * (k + 1) * i) * qpoch(r, r, i));
        d.probs[2 * k + 1] = sum / (2 * q.pow(k) * gl_order(k, q2));
    }
    return d;
}

FixDist distribution(const GroupSpec& spec) {
    switch (spec.family) {
    case Family::GL: return dist_gl(spec.n, spec.q);
    case Family::U: return dist_u(spec.n, spec.q);
    case Family::Sp: return dist_sp(spec.n, spec.q);
    case Family::OOdd: return dist_o_odd(spec.n, spec.q);
    case Family::OEvenPlus: return dist_o_even(spec.n, spec.q, OrthogonalSign::Plus);
    case Family::OEvenMinus: return dist_o_even(spec.n, spec.q, OrthogonalSign::Minus);
    }
    throw std::invalid_argument("unknown family");
}

std::vector<Rational> sp_shifted_view(int n, std::int64_t q) {
    const FixDist sp = dist_sp(n, q);
    std::vector<Rational> shifted(sp.probs.size() + 1);
    for (std::size_t k = 0; k < sp.probs.size(); ++k) shifted[k + 1] = sp.probs[k];
    return shifted;
}

Rational limit_factor(Family family, std::int64_t q_, long k) {
    if (k < 0) throw std::invalid_argument("limit_factor: negative k");
    const Rational q = q_;
    const Rational p = q.inverse();
    switch (family) {
    case Family::GL: {
        const Rational c = qpoch(p, p, k);
        return Rational(1) / (q.pow(k * k) * c * c);
    }
    case Family::U: return Rational(1) / (q.pow(k * k) * qpoch(p * p, p * p, k));
    case Family::Sp: return Rational(1) / (q.pow((k * k + k) / 2) * qpoch(p, p, k));
    case Family::OOdd:
    case Family::OEvenPlus:
    case Family::OEvenMinus: return Rational(1) / (q.pow((k * k - k) / 2) * qpoch(p, p, k));
    }
    throw std::invalid_argument("unknown family");
}

IntervalReal geometric_product(const Rational& q, long stride, long offset, bool invert,
                               const Rational& tolerance) {
    if (tolerance.sign() <= 0) throw std::invalid_argument("tolerance must be positive");
    if (q <= 1 || stride < 1 || offset < 1) throw std::invalid_argument("geometric_product: bad parameters");
    // Tail bound after factors r = 0..R-1: T = q^{-(stride R + offset)} / (1 - q^{-stride}).
    // prod_{tail}(1 - x) >= 1 - T and prod_{tail}(1 + x)^{-1} >= 1 - T, both <= 1.
    const Rational half_tol = tolerance / 2;
    const Rational ratio = Rational(1) / (Rational(1) - q.pow(-stride));
    Rational value = 1;
    long R = 0;
    for (;; ++R) {
        const Rational tail = q.pow(-(stride * R + offset)) * ratio;
        if (tail <= half_tol) {
            const IntervalReal exact(tail < 1 ? value * (Rational(1) - tail) : Rational(0), value);
            // Bits chosen so that outward rounding adds at most tolerance/4 on each side.
            unsigned long bits = 2;
            while (Rational(1, ipow(Integer(2), bits)) > tolerance / 4) ++bits;
            const IntervalReal rounded = exact.rounded_outward(bits);
            return {rounded.lower().sign() < 0 ? Rational(0) : rounded.lower(), rounded.upper()};
        }
        const Rational x = q.pow(-(stride * R + offset));
        value *= invert ? (Rational(1) + x).inverse() : Rational(1) - x;
    }
}

IntervalReal limit_prefactor(Family family, std::int64_t q_, const Rational& tolerance) {
    if (tolerance.sign() <= 0) throw std::invalid_argument("tolerance must be positive");
    if (q_ < 2) throw std::invalid_argument("q must be >= 2");
    const Rational q = q_;
    switch (family) {
    case Family::GL: return geometric_product(q, 1, 1, false, tolerance);
    case Family::U: return geometric_product(q, 2, 1, true, tolerance);
    case Family::Sp: return geometric_product(q, 1, 1, true, tolerance);
    case Family::OOdd:
    case Family::OEvenPlus:
    case Family::OEvenMinus:
        // r = 0 contributes (1 + 1)^{-1}.
        return geometric_product(q, 1, 1, true, tolerance * 2) * Rational(1, 2);
    }
    throw std::invalid_argument("unknown family");
}

IntervalReal limit_dist(Family family, std::int64_t q, long k, const Rational& tolerance) {
    if (tolerance.sign() <= 0) throw std::invalid_argument("tolerance must be positive");
    if (family == Family::OOdd && q % 2 == 0)
        throw std::invalid_argument("O(2n+1,q) requires odd q");
    const Rational factor = limit_factor(family, q, k);
    // The prefactor lies in (0, 1], so scaling its enclosure by factor scales the width.
    return limit_prefactor(family, q, tolerance / factor) * factor;
}

}  // namespace fixspace
