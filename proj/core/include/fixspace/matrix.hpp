#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fixspace/field.hpp"

namespace fixspace {

/// Dense row-major matrix over a finite field.
class FqMatrix {
public:
    using Elem = FiniteField::Elem;

    FqMatrix(FieldPtr field, std::size_t rows, std::size_t cols);
    /// entries are raw field encodings, row-major; each must be < field order.
    FqMatrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

    static FqMatrix identity(FieldPtr field, std::size_t n);
    /// Rows of integers mapped into the prime subfield (so -1 means p - 1).
    static FqMatrix from_integers(FieldPtr field, const std::vector<std::vector<long>>& rows);

    [[nodiscard]] const FieldPtr& field() const { return field_; }
    [[nodiscard]] const FiniteField& F() const { return *field_; }
    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool is_square() const { return rows_ == cols_; }
    [[nodiscard]] const std::vector<Elem>& entries() const { return entries_; }

    [[nodiscard]] Elem operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Elem& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    [[nodiscard]] FqMatrix transpose() const;
    /// Applies x -> x^{p^e} to every entry.
    [[nodiscard]] FqMatrix frobenius(int e) const;

    friend FqMatrix operator+(const FqMatrix& a, const FqMatrix& b);
    friend FqMatrix operator-(const FqMatrix& a, const FqMatrix& b);
    friend FqMatrix operator*(const FqMatrix& a, const FqMatrix& b);
    friend bool operator==(const FqMatrix& a, const FqMatrix& b);

    [[nodiscard]] std::string str() const;

private:
    FieldPtr field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> entries_;
};

/// Brings m to reduced row echelon form in place, pivoting left to right on the
/// first nonzero entry of each column. Returns the pivot columns.
std::vector<std::size_t> row_reduce(FqMatrix& m);

[[nodiscard]] std::size_t rank(const FqMatrix& m);

/// Dimension of {v : m v = 0}. Throws std::invalid_argument if m is not square.
[[nodiscard]] std::size_t kernel_dim(const FqMatrix& m);

/// kernel_dim(g - 1).
[[nodiscard]] std::size_t fixed_space_dim(const FqMatrix& g);

/// Throws std::domain_error if m is singular.
[[nodiscard]] FqMatrix inverse(const FqMatrix& m);

/// Solutions of A v = b as particular + span(basis); nullopt if inconsistent.
struct AffineSpace {
    std::vector<FiniteField::Elem> particular;
    std::vector<std::vector<FiniteField::Elem>> basis;
};
[[nodiscard]] std::optional<AffineSpace> solve_affine(const FqMatrix& A,
                                                      const std::vector<FiniteField::Elem>& b);

}  // namespace fixspace
