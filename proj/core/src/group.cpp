#include "fixspace/group.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace fixspace {

bool is_prime_power(std::int64_t q) {
    if (q < 2) return false;
    std::int64_t p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) return true;  // q itself is prime
    while (q % p == 0) q /= p;
    return q == 1;
}

PrimePower factor_prime_power(std::int64_t q) {
    if (!is_prime_power(q)) throw std::invalid_argument("not a prime power: " + std::to_string(q));
    std::int64_t p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) return {q, 1};
    int m = 0;
    while (q % p == 0) {
        q /= p;
        ++m;
    }
    return {p, m};
}

void validate(const GroupSpec& spec) {
    if (!is_prime_power(spec.q))
        throw std::invalid_argument("q must be a prime power >= 2, got " + std::to_string(spec.q));
    if (spec.n < 0) throw std::invalid_argument("rank n must be non-negative");
    if (spec.family == Family::OOdd && spec.q % 2 == 0)
        throw std::invalid_argument(
            "O(2n+1,q) requires odd q; in even characteristic it is isomorphic to Sp(2n,q)");
    if (spec.family == Family::OEvenMinus && spec.n < 1)
        throw std::invalid_argument("O-(2n,q) requires n >= 1");
}

int module_dimension(const GroupSpec& spec) {
    switch (spec.family) {
    case Family::GL:
    case Family::U: return spec.n;
    case Family::Sp:
    case Family::OEvenPlus:
    case Family::OEvenMinus: return 2 * spec.n;
    case Family::OOdd: return 2 * spec.n + 1;
    }
    return 0;
}

std::int64_t module_field_order(const GroupSpec& spec) {
    return spec.family == Family::U ? spec.q * spec.q : spec.q;
}

Integer group_order(const GroupSpec& spec) {
    validate(spec);
    const Integer q = static_cast<long>(spec.q);
    const unsigned long n = static_cast<unsigned long>(spec.n);
    Integer order = 1;
    switch (spec.family) {
    case Family::GL:
        order = ipow(q, n * (n - (n > 0)) / 2);
        for (unsigned long i = 1; i <= n; ++i) order *= ipow(q, i) - 1;
        break;
    case Family::U:
        order = ipow(q, n * (n - (n > 0)) / 2);
        for (unsigned long i = 1; i <= n; ++i) order *= ipow(q, i) - (i % 2 ? -1 : 1);
        break;
    case Family::Sp:
        order = ipow(q, n * n);
        for (unsigned long i = 1; i <= n; ++i) order *= ipow(q, 2 * i) - 1;
        break;
    case Family::OOdd:
        order = 2 * ipow(q, n * n);
        for (unsigned long i = 1; i <= n; ++i) order *= ipow(q, 2 * i) - 1;
        break;
    case Family::OEvenPlus:
    case Family::OEvenMinus: {
        if (n == 0) return 1;
        const int eps = spec.family == Family::OEvenPlus ? 1 : -1;
        order = 2 * ipow(q, n * (n - 1)) * (ipow(q, n) - eps);
        for (unsigned long i = 1; i < n; ++i) order *= ipow(q, 2 * i) - 1;
        break;
    }
    }
    return order;
}

Rational sign_q_variant(const GroupSpec& spec) {
    validate(spec);
    const Rational q = spec.q;
    switch (spec.family) {
    case Family::GL: return q;
    case Family::U: return -q;
    default: return q * q;
    }
}

std::string_view family_name(Family f) {
    switch (f) {
    case Family::GL: return "gl";
    case Family::U: return "u";
    case Family::Sp: return "sp";
    case Family::OOdd: return "o-odd";
    case Family::OEvenPlus: return "o+";
    case Family::OEvenMinus: return "o-";
    }
    return "?";
}

Family parse_family(std::string_view name) {
    std::string s(name);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "gl") return Family::GL;
    if (s == "u") return Family::U;
    if (s == "sp") return Family::Sp;
    if (s == "o-odd" || s == "o_odd" || s == "oodd") return Family::OOdd;
    if (s == "o+" || s == "o-plus" || s == "o_even_plus") return Family::OEvenPlus;
    if (s == "o-" || s == "o-minus" || s == "o_even_minus") return Family::OEvenMinus;
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

std::string describe(const GroupSpec& spec) {
    const std::string q = std::to_string(spec.q);
    const std::string n = std::to_string(spec.n);
    switch (spec.family) {
    case Family::GL: return "GL(" + n + "," + q + ")";
    case Family::U: return "U(" + n + "," + q + ")";
    case Family::Sp: return "Sp(" + std::to_string(2 * spec.n) + "," + q + ")";
    case Family::OOdd: return "O(" + std::to_string(2 * spec.n + 1) + "," + q + ")";
    case Family::OEvenPlus: return "O+(" + std::to_string(2 * spec.n) + "," + q + ")";
    case Family::OEvenMinus: return "O-(" + std::to_string(2 * spec.n) + "," + q + ")";
    }
    return "?";
}

}  // namespace fixspace
