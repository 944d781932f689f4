#pragma once

#include <string_view>

#include "fixspace/group.hpp"
#include "fixspace/matrix.hpp"

namespace fixspace {

enum class FormKind { None, Symplectic, Hermitian, SymmetricPlus, SymmetricMinus, SymmetricOdd };

/// A nondegenerate form given by its Gram matrix. Basis order pairs hyperbolic
/// vectors as (e_1, f_1, e_2, f_2, ...):
///   Symplectic      blocks [[0,1],[-1,0]], dimension 2n
///   Hermitian       identity over F_{q^2}, conjugation x -> x^q, dimension n
///   SymmetricPlus   blocks [[0,1],[1,0]], dimension 2n
///   SymmetricMinus  n-1 hyperbolic blocks then [[1,0],[0,-d]], d the smallest non-square
///   SymmetricOdd    n hyperbolic blocks then [1], dimension 2n+1
/// Symmetric kinds require odd characteristic.
struct FormSpec {
    FormKind kind = FormKind::None;
    FqMatrix gram;
};

/// Builds the form of the given kind and rank over field. For Hermitian the field
/// must have even degree (it is F_{q^2}).
[[nodiscard]] FormSpec make_form(FormKind kind, int n, const FieldPtr& field);

/// The form whose isometry group realizes spec (None for GL). Throws
/// std::invalid_argument for even-characteristic orthogonal groups, which need
/// quadratic forms rather than symmetric bilinear ones.
[[nodiscard]] FormSpec form_for(const GroupSpec& spec);

/// Exponent e with conjugation x -> x^{p^e} for a Hermitian form (m/2).
[[nodiscard]] int hermitian_frobenius_exponent(const FiniteField& field);

/// g^T G g == G, with g^T replaced by the conjugate transpose for Hermitian forms.
/// None accepts every invertible g. Throws std::invalid_argument on dimension mismatch.
[[nodiscard]] bool preserves_form(const FqMatrix& g, const FormSpec& form);

[[nodiscard]] std::string_view form_kind_name(FormKind kind);

}  // namespace fixspace
