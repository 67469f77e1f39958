#include "cepd/decomp.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>

#include "cepd/inverses.hpp"

namespace cepd {

namespace {

Eigen::MatrixXcd to_eigen(const Matrix& a) {
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(a.rows()), static_cast<Eigen::Index>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a(i, j);
    return m;
}

Matrix from_eigen(const Eigen::MatrixXcd& m) {
    Matrix r(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            r(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = m(i, j);
    return r;
}

} // namespace

SvdResult svd(const Matrix& a) {
    if (a.is_empty())
        throw Error(ErrorKind::DimensionMismatch, "svd of an empty matrix");
    Eigen::JacobiSVD<Eigen::MatrixXcd> dec(to_eigen(a), Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (dec.info() != Eigen::Success)
        throw Error(ErrorKind::ConvergenceFailure, "SVD iteration budget exceeded");
    SvdResult result;
    result.u = from_eigen(dec.matrixU());
    result.v = from_eigen(dec.matrixV());
    const auto& sv = dec.singularValues();
    result.sigma.assign(sv.data(), sv.data() + sv.size());
    return result;
}

std::vector<double> singular_values(const Matrix& a) {
    if (a.is_empty()) return {};
    Eigen::JacobiSVD<Eigen::MatrixXcd> dec(to_eigen(a));
    if (dec.info() != Eigen::Success)
        throw Error(ErrorKind::ConvergenceFailure, "SVD iteration budget exceeded");
    const auto& sv = dec.singularValues();
    return std::vector<double>(sv.data(), sv.data() + sv.size());
}

unsigned rank(const Matrix& a, const Tolerance& tol) {
    if (a.is_empty()) return 0;
    std::vector<double> sigma = singular_values(a);
    if (sigma.empty() || sigma.front() == 0.0) return 0;
    const double threshold = tol.rank_threshold(sigma.front(), a.rows(), a.cols());
    unsigned r = 0;
    for (double s : sigma)
        if (s > threshold) ++r;
    return r;
}

Matrix HsDecomposition::sigma() const {
    std::vector<double> diag;
    diag.reserve(r);
    for (const SigmaBlock& b : sigma_blocks)
        diag.insert(diag.end(), b.multiplicity, b.value);
    return Matrix::diagonal(diag);
}

Matrix HsDecomposition::sigma_k() const { return sigma() * k_block; }

Matrix HsDecomposition::sigma_l() const { return sigma() * l_block; }

Matrix HsDecomposition::reconstruct() const {
    const std::size_t n = u.rows();
    Matrix inner(n, n);
    inner.set_block(0, 0, sigma_k());
    inner.set_block(0, r, sigma_l());
    return u * inner * conj_transpose(u);
}

HsDecomposition hs_decompose(const Matrix& a, const Tolerance& tol) {
    if (!a.is_square())
        throw Error(ErrorKind::NonSquare, "HS decomposition needs a square matrix");
    const std::size_t n = a.rows();
    SvdResult dec = svd(a);
    const double threshold = tol.rank_threshold(dec.sigma.empty() ? 0.0 : dec.sigma.front(), n, n);
    std::size_t r = 0;
    while (r < dec.sigma.size() && dec.sigma[r] > threshold) ++r;
    if (r == 0)
        throw Error(ErrorKind::ZeroMatrix, "HS decomposition requires rank > 0");

    HsDecomposition hs;
    hs.r = r;
    hs.u = dec.u;

    // Group the retained singular values into strictly decreasing blocks; a
    // relative gap below 10 * rank_rtol reads as a repeated value.
    std::size_t start = 0;
    for (std::size_t j = 1; j <= r; ++j) {
        bool close = j < r && dec.sigma[start] / dec.sigma[j] - 1.0 <= 10.0 * tol.rank_rtol;
        if (!close) {
            double sum = 0.0;
            for (std::size_t i = start; i < j; ++i) sum += dec.sigma[i];
            hs.sigma_blocks.push_back({sum / static_cast<double>(j - start), j - start});
            start = j;
        }
    }

    // [K L] = top r rows of V^* U; then A = U [SK SL; 0 0] U^* and the rows,
    // being rows of a unitary, give K K^* + L L^* = I_r.
    Matrix t = conj_transpose(dec.v) * dec.u;
    hs.k_block = t.block(0, 0, r, r);
    hs.l_block = t.block(0, r, r, n - r);

    // Entries of [K L] are inner products of computed unit vectors; anything
    // at machine-noise scale is structurally zero. Without the clamp a true
    // zero SK block would turn into junk whose pseudoinverse explodes.
    const double floor = 64.0 * static_cast<double>(n) * std::numeric_limits<double>::epsilon();
    auto clamp = [floor](Matrix& m) {
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                cx& e = m(i, j);
                if (std::abs(e) <= floor) e = cx(0.0, 0.0);
            }
    };
    clamp(hs.k_block);
    clamp(hs.l_block);
    return hs;
}

CoreNilpotentParts core_nilpotent(const Matrix& a, const Tolerance& tol) {
    if (!a.is_square())
        throw Error(ErrorKind::NonSquare, "core-nilpotent split needs a square matrix");
    Matrix ad = drazin(a, tol);
    CoreNilpotentParts parts;
    parts.core = a * ad * a;
    parts.nilpotent = a - parts.core;
    // Either part can be zero up to roundoff (invertible or nilpotent input);
    // collapse it so the index of the part is well defined.
    std::vector<double> sv = singular_values(a);
    const double floor = tol.rank_rtol * static_cast<double>(a.rows()) *
                         (sv.empty() ? 0.0 : sv.front());
    if (fro_norm(parts.core) <= floor) parts.core = Matrix(a.rows(), a.cols());
    if (fro_norm(parts.nilpotent) <= floor) parts.nilpotent = Matrix(a.rows(), a.cols());
    parts.index_of_nilpotent = index(parts.nilpotent, tol);
    return parts;
}

} // namespace cepd
