#include "fixspace/forms.hpp"

#include <stdexcept>

namespace fixspace {
namespace {

void place_block(FqMatrix& gram, std::size_t at, long a, long b, long c, long d) {
    const FiniteField& F = gram.F();
    gram(at, at) = F.from_int(a);
    gram(at, at + 1) = F.from_int(b);
    gram(at + 1, at) = F.from_int(c);
    gram(at + 1, at + 1) = F.from_int(d);
}

void require_odd(const FiniteField& F) {
    if (F.characteristic() == 2)
        throw std::invalid_argument(
            "symmetric bilinear forms are only supported in odd characteristic; "
            "even-characteristic orthogonal groups need quadratic forms, which are out of scope");
}

}  // namespace

int hermitian_frobenius_exponent(const FiniteField& field) {
    if (field.degree() % 2 != 0) throw std::invalid_argument("Hermitian form needs a field of order q^2");
    return field.degree() / 2;
}

FormSpec make_form(FormKind kind, int n, const FieldPtr& field) {
    if (n < 0) throw std::invalid_argument("make_form: negative rank");
    const auto un = static_cast<std::size_t>(n);
    switch (kind) {
    case FormKind::None: return {kind, FqMatrix::identity(field, un)};
    case FormKind::Symplectic: {
        FqMatrix gram(field, 2 * un, 2 * un);
        for (std::size_t i = 0; i < un; ++i) place_block(gram, 2 * i, 0, 1, -1, 0);
        return {kind, gram};
    }
    case FormKind::Hermitian:
        (void)hermitian_frobenius_exponent(*field);
        return {kind, FqMatrix::identity(field, un)};
    case FormKind::SymmetricPlus: {
        require_odd(*field);
        FqMatrix gram(field, 2 * un, 2 * un);
        for (std::size_t i = 0; i < un; ++i) place_block(gram, 2 * i, 0, 1, 1, 0);
        return {kind, gram};
    }
    case FormKind::SymmetricMinus: {
        require_odd(*field);
        if (n < 1) throw std::invalid_argument("minus-type form needs n >= 1");
        FqMatrix gram(field, 2 * un, 2 * un);
        for (std::size_t i = 0; i + 1 < un; ++i) place_block(gram, 2 * i, 0, 1, 1, 0);
        const std::size_t at = 2 * (un - 1);
        gram(at, at) = 1;
        gram(at + 1, at + 1) = field->neg(field->smallest_nonsquare());
        return {kind, gram};
    }
    case FormKind::SymmetricOdd: {
        require_odd(*field);
        FqMatrix gram(field, 2 * un + 1, 2 * un + 1);
        for (std::size_t i = 0; i < un; ++i) place_block(gram, 2 * i, 0, 1, 1, 0);
        gram(2 * un, 2 * un) = 1;
        return {kind, gram};
    }
    }
    throw std::invalid_argument("unknown form kind");
}

FormSpec form_for(const GroupSpec& spec) {
    validate(spec);
    switch (spec.family) {
    case Family::GL: return make_form(FormKind::None, spec.n, FiniteField::make(spec.q));
    case Family::U: return make_form(FormKind::Hermitian, spec.n, FiniteField::make(spec.q * spec.q));
    case Family::Sp: return make_form(FormKind::Symplectic, spec.n, FiniteField::make(spec.q));
    case Family::OOdd: return make_form(FormKind::SymmetricOdd, spec.n, FiniteField::make(spec.q));
    case Family::OEvenPlus: return make_form(FormKind::SymmetricPlus, spec.n, FiniteField::make(spec.q));
    case Family::OEvenMinus: return make_form(FormKind::SymmetricMinus, spec.n, FiniteField::make(spec.q));
    }
    throw std::invalid_argument("unknown family");
}

bool preserves_form(const FqMatrix& g, const FormSpec& form) {
    if (!g.is_square() || g.rows() != form.gram.rows() || g.field() != form.gram.field())
        throw std::invalid_argument("preserves_form: dimension or field mismatch");
    if (form.kind == FormKind::None) return rank(g) == g.rows();
    const FqMatrix left = form.kind == FormKind::Hermitian
                              ? g.frobenius(hermitian_frobenius_exponent(g.F())).transpose()
                              : g.transpose();
    return left * form.gram * g == form.gram;
}

std::string_view form_kind_name(FormKind kind) {
    switch (kind) {
    case FormKind::None: return "none";
    case FormKind::Symplectic: return "symplectic";
    case FormKind::Hermitian: return "hermitian";
    case FormKind::SymmetricPlus: return "symmetric-plus";
    case FormKind::SymmetricMinus: return "symmetric-minus";
    case FormKind::SymmetricOdd: return "symmetric-odd";
    }
    return "?";
}

}  // namespace fixspace
