#include "fixspace/field.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "fixspace/group.hpp"

namespace fixspace {
namespace {

using Poly = std::vector<int>;  // coefficients low to high, entries in [0, p)

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

long mod(long x, long p) { return ((x % p) + p) % p; }

long inverse_mod(long a, long p) {
    long r = 1;
    for (long e = p - 2, b = a; e > 0; e >>= 1, b = b * b % p)
        if (e & 1) r = r * b % p;
    return r;
}

// Remainder of a divided by monic-or-not b over F_p.
Poly poly_rem(Poly a, const Poly& b, long p) {
    trim(a);
    const long lead_inv = inverse_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const long factor = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = static_cast<int>(mod(a[shift + i] - factor * b[i], p));
        trim(a);
    }
    return a;
}

Poly decode(std::uint32_t x, long p, int m) {
    Poly c(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        c[static_cast<std::size_t>(i)] = static_cast<int>(x % p);
        x /= static_cast<std::uint32_t>(p);
    }
    return c;
}

std::uint32_t encode(const Poly& c, long p) {
    std::uint32_t x = 0;
    for (std::size_t i = c.size(); i-- > 0;) x = x * static_cast<std::uint32_t>(p) + static_cast<std::uint32_t>(c[i]);
    return x;
}

std::vector<int> default_modulus(std::int64_t q, std::int64_t p, int m) {
    if (m == 1) return {0, 1};
    if (q == 4) return {1, 1, 1};
    if (q == 8) return {1, 1, 0, 1};
    if (q == 9) return {1, 0, 1};
    std::uint32_t count = 1;
    for (int i = 0; i < m; ++i) count *= static_cast<std::uint32_t>(p);
    for (std::uint32_t low = 0; low < count; ++low) {
        Poly poly = decode(low, p, m);
        poly.push_back(1);
        if (is_irreducible(p, poly)) return poly;
    }
    throw std::logic_error("no irreducible polynomial found");
}

}  // namespace

bool is_irreducible(std::int64_t p, const std::vector<int>& poly) {
    const int deg = static_cast<int>(poly.size()) - 1;
    if (deg < 1 || poly.back() != 1) return false;
    for (int d = 1; d <= deg / 2; ++d) {
        std::uint32_t count = 1;
        for (int i = 0; i < d; ++i) count *= static_cast<std::uint32_t>(p);
        for (std::uint32_t low = 0; low < count; ++low) {
            Poly divisor = decode(low, p, d);
            divisor.push_back(1);
            if (poly_rem(poly, divisor, p).empty()) return false;
        }
    }
    return true;
}

std::shared_ptr<const FiniteField> FiniteField::make(std::int64_t q) {
    static std::mutex mutex;
    static std::map<std::int64_t, std::shared_ptr<const FiniteField>> cache;
    const std::lock_guard lock(mutex);
    auto& slot = cache[q];
    if (!slot) {
        const auto [p, m] = factor_prime_power(q);
        slot = make(p, default_modulus(q, p, m));
    }
    return slot;
}

std::shared_ptr<const FiniteField> FiniteField::make(std::int64_t p, std::vector<int> modulus) {
    if (!is_prime_power(p) || factor_prime_power(p).m != 1)
        throw std::invalid_argument("characteristic must be prime");
    for (auto& c : modulus) {
        if (c < 0 || c >= p) throw std::invalid_argument("modulus coefficient out of range");
    }
    if (!is_irreducible(p, modulus)) throw std::invalid_argument("modulus is not monic irreducible");
    return std::shared_ptr<const FiniteField>(new FiniteField(p, std::move(modulus)));
}

FiniteField::FiniteField(std::int64_t p, std::vector<int> modulus)
    : p_(p), m_(static_cast<int>(modulus.size()) - 1), q_(1), modulus_(std::move(modulus)) {
    for (int i = 0; i < m_; ++i) {
        q_ *= static_cast<std::uint32_t>(p_);
        if (q_ > 256) throw std::invalid_argument("field order above 256 is not supported");
    }
    add_.resize(std::size_t{q_} * q_);
    mul_.resize(std::size_t{q_} * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    std::vector<Poly> digits(q_);
    for (std::uint32_t x = 0; x < q_; ++x) digits[x] = decode(x, p_, m_);
    for (std::uint32_t a = 0; a < q_; ++a) {
        Poly n(static_cast<std::size_t>(m_));
        for (int i = 0; i < m_; ++i) n[i] = static_cast<int>(mod(-digits[a][i], p_));
        neg_[a] = encode(n, p_);
        for (std::uint32_t b = 0; b < q_; ++b) {
            Poly s(static_cast<std::size_t>(m_));
            for (int i = 0; i < m_; ++i) s[i] = static_cast<int>((digits[a][i] + digits[b][i]) % p_);
            add_[a * q_ + b] = encode(s, p_);

            Poly prod(static_cast<std::size_t>(2 * m_), 0);
            for (int i = 0; i < m_; ++i)
                for (int j = 0; j < m_; ++j)
                    prod[i + j] = static_cast<int>((prod[i + j] + 1L * digits[a][i] * digits[b][j]) % p_);
            Poly r = poly_rem(prod, modulus_, p_);
            r.resize(static_cast<std::size_t>(m_), 0);
            mul_[a * q_ + b] = encode(r, p_);
        }
    }
    for (std::uint32_t a = 1; a < q_; ++a)
        for (std::uint32_t b = 1; b < q_; ++b)
            if (mul_[a * q_ + b] == 1) inv_[a] = b;
}

FiniteField::Elem FiniteField::from_int(long value) const {
    return static_cast<Elem>(mod(value, p_));
}

FiniteField::Elem FiniteField::inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero in finite field");
    return inv_[a];
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    for (Elem b = a; e > 0; e >>= 1, b = mul(b, b))
        if (e & 1) r = mul(r, b);
    return r;
}

FiniteField::Elem FiniteField::frobenius(Elem x, int e) const {
    for (int i = 0; i < e; ++i) x = pow(x, static_cast<std::uint64_t>(p_));
    return x;
}

bool FiniteField::is_square(Elem a) const {
    if (a == 0) return true;
    for (Elem x = 1; x < q_; ++x)
        if (mul(x, x) == a) return true;
    return false;
}

FiniteField::Elem FiniteField::smallest_nonsquare() const {
    for (Elem a = 1; a < q_; ++a)
        if (!is_square(a)) return a;
    throw std::domain_error("every element is a square (characteristic 2)");
}

std::string FiniteField::format(Elem a) const {
    if (m_ == 1) return std::to_string(a);
    const Poly c = decode(a, p_, m_);
    std::string out;
    for (int i = m_ - 1; i >= 0; --i) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += "+";
        const std::string coeff = (c[i] == 1 && i > 0) ? "" : std::to_string(c[i]);
        out += coeff;
        if (i >= 1) out += "t";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

}  // namespace fixspace
