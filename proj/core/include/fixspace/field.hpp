#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace fixspace {

/// Finite field F_q, q = p^m, realized as F_p[t]/(modulus). An element is
/// encoded as the integer sum_i c_i p^i of its coefficient vector
/// (c_0 + c_1 t + ... + c_{m-1} t^{m-1}); in a prime field this is the usual
/// residue. Arithmetic is table driven, so q is capped at 256.
class FiniteField {
public:
    using Elem = std::uint32_t;

    /// Shared field of order q with the default modulus: t^2+t+1 (F_4), t^3+t+1 (F_8),
    /// t^2+1 (F_9), otherwise the smallest monic irreducible by encoding.
    static std::shared_ptr<const FiniteField> make(std::int64_t q);

    /// Field F_p[t]/(modulus); modulus lists coefficients from t^0 up to the
    /// leading 1. Throws std::invalid_argument if the modulus is not monic
    /// irreducible of degree >= 1.
    static std::shared_ptr<const FiniteField> make(std::int64_t p, std::vector<int> modulus);

    [[nodiscard]] std::int64_t characteristic() const { return p_; }
    [[nodiscard]] int degree() const { return m_; }
    [[nodiscard]] std::uint32_t order() const { return q_; }
    [[nodiscard]] const std::vector<int>& modulus() const { return modulus_; }

    [[nodiscard]] Elem zero() const { return 0; }
    [[nodiscard]] Elem one() const { return 1; }
    /// Image of an integer in the prime subfield.
    [[nodiscard]] Elem from_int(long value) const;

    [[nodiscard]] Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
    [[nodiscard]] Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
    [[nodiscard]] Elem neg(Elem a) const { return neg_[a]; }
    [[nodiscard]] Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
    /// Throws std::domain_error on zero.
    [[nodiscard]] Elem inv(Elem a) const;
    [[nodiscard]] Elem pow(Elem a, std::uint64_t e) const;
    /// x -> x^{p^e}.
    [[nodiscard]] Elem frobenius(Elem x, int e) const;

    [[nodiscard]] bool is_square(Elem a) const;
    /// Smallest non-square by encoding; odd characteristic only.
    [[nodiscard]] Elem smallest_nonsquare() const;

    [[nodiscard]] std::string format(Elem a) const;

private:
    FiniteField(std::int64_t p, std::vector<int> modulus);

    std::int64_t p_;
    int m_;
    std::uint32_t q_;
    std::vector<int> modulus_;
    std::vector<Elem> add_;
    std::vector<Elem> mul_;
    std::vector<Elem> neg_;
    std::vector<Elem> inv_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

/// True iff the monic polynomial (coefficients low to high) has no monic factor of
/// degree 1 .. deg/2 over F_p (trial division).
[[nodiscard]] bool is_irreducible(std::int64_t p, const std::vector<int>& poly);

}  // namespace fixspace
