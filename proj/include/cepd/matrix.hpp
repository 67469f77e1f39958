#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "cepd/errors.hpp"

namespace cepd {

using cx = std::complex<double>;

/// Thresholds governing every approximate decision in the toolkit.
///
/// rank_rtol: singular values sigma_i count toward the rank iff
///            sigma_i > rank_rtol * max(m, n) * sigma_max.
/// eq_atol:   matrices compare equal iff the Frobenius distance, normalized
///            by max(1, |x|_F, |y|_F), stays below eq_atol.
struct Tolerance {
    double rank_rtol = 1e-10;
    double eq_atol = 1e-9;

    Tolerance() = default;
    Tolerance(double rank_rtol_, double eq_atol_) : rank_rtol(rank_rtol_), eq_atol(eq_atol_) {
        if (!(rank_rtol > 0.0 && rank_rtol < 1.0) || !(eq_atol > 0.0 && eq_atol < 1.0))
            throw Error(ErrorKind::InvalidTolerance, "thresholds must lie strictly in (0, 1)");
    }

    double rank_threshold(double sigma_max, std::size_t rows, std::size_t cols) const {
        return rank_rtol * static_cast<double>(rows > cols ? rows : cols) * sigma_max;
    }
};

/// Dense complex matrix, row-major, value semantics. The single carrier type
/// for inputs, right-hand sides and every computed inverse.
///
/// Construction rejects NaN/Inf entries; all other operations assume finite
/// input. Dimensions may be zero only for internally produced blocks (an
/// r x 0 part of a decomposition); parsed matrices are always non-empty.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, cx(0.0, 0.0)) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<cx> entries);
    Matrix(std::initializer_list<std::initializer_list<cx>> rows);

    static Matrix identity(std::size_t n);
    static Matrix diagonal(std::span<const double> values);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool is_empty() const noexcept { return entries_.empty(); }

    cx& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const cx& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::span<const cx> entries() const noexcept { return entries_; }

    Matrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
    void set_block(std::size_t row0, std::size_t col0, const Matrix& b);

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(cx scalar);

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cx> entries_;
};

Matrix operator+(Matrix lhs, const Matrix& rhs);
Matrix operator-(Matrix lhs, const Matrix& rhs);
Matrix operator-(const Matrix& m);
Matrix operator*(const Matrix& lhs, const Matrix& rhs);
Matrix operator*(cx scalar, Matrix m);
Matrix operator*(Matrix m, cx scalar);

Matrix conj_transpose(const Matrix& a);

/// a^p by binary exponentiation; a^0 is the identity.
Matrix matrix_power(const Matrix& a, unsigned p);

/// blockdiag(a, b).
Matrix direct_sum(const Matrix& a, const Matrix& b);

double fro_norm(const Matrix& a);

/// |x - y|_F / max(1, |x|_F, |y|_F); the residual used by every identity
/// check and report in the toolkit.
double rel_residual(const Matrix& x, const Matrix& y);

bool approx_eq(const Matrix& x, const Matrix& y, const Tolerance& tol);

/// Numerical rank: number of singular values above the relative threshold.
unsigned rank(const Matrix& a, const Tolerance& tol);

} // namespace cepd
