#pragma once

#include <vector>

#include "cepd/matrix.hpp"

namespace cepd {

/// Full SVD a = u * diag(sigma) * v^*, with u (m x m) and v (n x n) unitary
/// and sigma the min(m, n) singular values in non-increasing order.
struct SvdResult {
    Matrix u;
    std::vector<double> sigma;
    Matrix v;
};

SvdResult svd(const Matrix& a);

/// Singular values only, non-increasing.
std::vector<double> singular_values(const Matrix& a);

struct SigmaBlock {
    double value = 0.0;
    std::size_t multiplicity = 0;
};

/// Hartwig-Spindelbock form a = u * [SK SL; 0 0] * u^* with u unitary,
/// S the r x r positive diagonal of singular values grouped into strictly
/// decreasing blocks, and k_block/l_block satisfying K K^* + L L^* = I_r.
struct HsDecomposition {
    Matrix u;
    std::vector<SigmaBlock> sigma_blocks;
    Matrix k_block; // r x r
    Matrix l_block; // r x (n-r)
    std::size_t r = 0;

    Matrix sigma() const;   // r x r diagonal rebuilt from the blocks
    Matrix sigma_k() const; // sigma() * k_block
    Matrix sigma_l() const; // sigma() * l_block
    Matrix reconstruct() const;
};

HsDecomposition hs_decompose(const Matrix& a, const Tolerance& tol);

/// a = core + nilpotent with core = a * a^D * a, ind(core) <= 1,
/// nilpotent^index_of_nilpotent = 0 and core * nilpotent = nilpotent * core = 0.
struct CoreNilpotentParts {
    Matrix core;
    Matrix nilpotent;
    unsigned index_of_nilpotent = 0;
};

CoreNilpotentParts core_nilpotent(const Matrix& a, const Tolerance& tol);

} // namespace cepd
