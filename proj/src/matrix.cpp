#include "cepd/matrix.hpp"

#include <cmath>
#include <utility>

namespace cepd {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonFiniteEntry: return "NonFiniteEntry";
    case ErrorKind::InvalidTolerance: return "InvalidTolerance";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::ZeroMatrix: return "ZeroMatrix";
    case ErrorKind::IndexTooLarge: return "IndexTooLarge";
    case ErrorKind::DefiningEquationsViolated: return "DefiningEquationsViolated";
    case ErrorKind::InfeasibleSpec: return "InfeasibleSpec";
    case ErrorKind::NotCepd: return "NotCepd";
    case ErrorKind::NotPartialIsometry: return "NotPartialIsometry";
    case ErrorKind::RightSideNotInRange: return "RightSideNotInRange";
    case ErrorKind::ConsistencyViolated: return "ConsistencyViolated";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "UnknownError";
}

namespace {

void require_finite(std::span<const cx> entries) {
    for (const cx& e : entries)
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag()))
            throw Error(ErrorKind::NonFiniteEntry, "matrix entries must be finite");
}

void require_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorKind::DimensionMismatch, "matrix shapes differ");
}

} // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<cx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw Error(ErrorKind::DimensionMismatch, "entry count does not match rows*cols");
    require_finite(entries_);
}

Matrix::Matrix(std::initializer_list<std::initializer_list<cx>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw Error(ErrorKind::DimensionMismatch, "ragged initializer rows");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
    require_finite(entries_);
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::diagonal(std::span<const double> values) {
    Matrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

Matrix Matrix::block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const {
    if (row0 + nrows > rows_ || col0 + ncols > cols_)
        throw Error(ErrorKind::DimensionMismatch, "block exceeds matrix bounds");
    Matrix b(nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j)
            b(i, j) = (*this)(row0 + i, col0 + j);
    return b;
}

void Matrix::set_block(std::size_t row0, std::size_t col0, const Matrix& b) {
    if (row0 + b.rows() > rows_ || col0 + b.cols() > cols_)
        throw Error(ErrorKind::DimensionMismatch, "block exceeds matrix bounds");
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            (*this)(row0 + i, col0 + j) = b(i, j);
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    require_same_shape(*this, rhs);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    require_same_shape(*this, rhs);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
    return *this;
}

Matrix& Matrix::operator*=(cx scalar) {
    for (cx& e : entries_) e *= scalar;
    return *this;
}

Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }

Matrix operator-(const Matrix& m) {
    Matrix r = m;
    return r *= cx(-1.0, 0.0);
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.cols() != rhs.rows())
        throw Error(ErrorKind::DimensionMismatch, "inner dimensions differ in product");
    Matrix r(lhs.rows(), rhs.cols());
    for (std::size_t i = 0; i < lhs.rows(); ++i) {
        for (std::size_t k = 0; k < lhs.cols(); ++k) {
            const cx a = lhs(i, k);
            if (a == cx(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < rhs.cols(); ++j) r(i, j) += a * rhs(k, j);
        }
    }
    return r;
}

Matrix operator*(cx scalar, Matrix m) { return m *= scalar; }
Matrix operator*(Matrix m, cx scalar) { return m *= scalar; }

Matrix conj_transpose(const Matrix& a) {
    Matrix r(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r(j, i) = std::conj(a(i, j));
    return r;
}

Matrix matrix_power(const Matrix& a, unsigned p) {
    if (!a.is_square())
        throw Error(ErrorKind::NonSquare, "matrix power needs a square matrix");
    Matrix result = Matrix::identity(a.rows());
    Matrix base = a;
    while (p > 0) {
        if (p & 1u) result = result * base;
        p >>= 1u;
        if (p > 0) base = base * base;
    }
    return result;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows() + b.rows(), a.cols() + b.cols());
    r.set_block(0, 0, a);
    r.set_block(a.rows(), a.cols(), b);
    return r;
}

double fro_norm(const Matrix& a) {
    double s = 0.0;
    for (const cx& e : a.entries()) s += std::norm(e);
    return std::sqrt(s);
}

double rel_residual(const Matrix& x, const Matrix& y) {
    require_same_shape(x, y);
    double scale = std::max(1.0, std::max(fro_norm(x), fro_norm(y)));
    return fro_norm(x - y) / scale;
}

bool approx_eq(const Matrix& x, const Matrix& y, const Tolerance& tol) {
    return rel_residual(x, y) <= tol.eq_atol;
}

} // namespace cepd
