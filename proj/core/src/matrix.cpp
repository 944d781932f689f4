#include "fixspace/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace fixspace {

FqMatrix::FqMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, 0) {
    if (!field_) throw std::invalid_argument("FqMatrix: null field");
}

FqMatrix::FqMatrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (!field_) throw std::invalid_argument("FqMatrix: null field");
    if (entries_.size() != rows * cols) throw std::invalid_argument("FqMatrix: entry count mismatch");
    for (auto e : entries_)
        if (e >= field_->order()) throw std::invalid_argument("FqMatrix: entry is not a field element");
}

FqMatrix FqMatrix::identity(FieldPtr field, std::size_t n) {
    FqMatrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

FqMatrix FqMatrix::from_integers(FieldPtr field, const std::vector<std::vector<long>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.front().size() : 0;
    FqMatrix m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("FqMatrix: ragged rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = field->from_int(rows[i][j]);
    }
    return m;
}

FqMatrix FqMatrix::transpose() const {
    FqMatrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

FqMatrix FqMatrix::frobenius(int e) const {
    FqMatrix r(*this);
    for (auto& x : r.entries_) x = field_->frobenius(x, e);
    return r;
}

namespace {

void require_same_shape(const FqMatrix& a, const FqMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.field() != b.field())
        throw std::invalid_argument("FqMatrix: shape or field mismatch");
}

}  // namespace

FqMatrix operator+(const FqMatrix& a, const FqMatrix& b) {
    require_same_shape(a, b);
    FqMatrix r(a);
    for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] = a.F().add(a.entries_[i], b.entries_[i]);
    return r;
}

FqMatrix operator-(const FqMatrix& a, const FqMatrix& b) {
    require_same_shape(a, b);
    FqMatrix r(a);
    for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] = a.F().sub(a.entries_[i], b.entries_[i]);
    return r;
}

FqMatrix operator*(const FqMatrix& a, const FqMatrix& b) {
    if (a.cols_ != b.rows_ || a.field_ != b.field_)
        throw std::invalid_argument("FqMatrix: product shape or field mismatch");
    const FiniteField& F = a.F();
    FqMatrix r(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) = F.add(r(i, j), F.mul(x, b(k, j)));
        }
    return r;
}

bool operator==(const FqMatrix& a, const FqMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::string FqMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << field_->format((*this)(i, j));
        os << "]";
    }
    os << "]";
    return os.str();
}

std::vector<std::size_t> row_reduce(FqMatrix& m) {
    const FiniteField& F = m.F();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
        const auto scale = F.inv(m(row, col));
        for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) = F.mul(m(row, j), scale);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            const auto factor = m(i, col);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = F.sub(m(i, j), F.mul(factor, m(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(const FqMatrix& m) {
    FqMatrix copy(m);
    return row_reduce(copy).size();
}

std::size_t kernel_dim(const FqMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("kernel_dim: matrix is not square");
    return m.cols() - rank(m);
}

std::size_t fixed_space_dim(const FqMatrix& g) {
    if (!g.is_square()) throw std::invalid_argument("fixed_space_dim: matrix is not square");
    return kernel_dim(g - FqMatrix::identity(g.field(), g.rows()));
}

FqMatrix inverse(const FqMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse: matrix is not square");
    const std::size_t n = m.rows();
    FqMatrix aug(m.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    const auto pivots = row_reduce(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::domain_error("inverse: singular matrix");
    FqMatrix inv(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

std::optional<AffineSpace> solve_affine(const FqMatrix& A, const std::vector<FiniteField::Elem>& b) {
    if (b.size() != A.rows()) throw std::invalid_argument("solve_affine: right-hand side size mismatch");
    const FiniteField& F = A.F();
    const std::size_t n = A.cols();
    FqMatrix aug(A.field(), A.rows(), n + 1);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = A(i, j);
        aug(i, n) = b[i];
    }
    const auto pivots = row_reduce(aug);
    if (!pivots.empty() && pivots.back() == n) return std::nullopt;

    AffineSpace space;
    space.particular.assign(n, 0);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        is_pivot[pivots[r]] = true;
        space.particular[pivots[r]] = aug(r, n);
    }
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<FiniteField::Elem> v(n, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(aug(r, free));
        space.basis.push_back(std::move(v));
    }
    return space;
}

}  // namespace fixspace
