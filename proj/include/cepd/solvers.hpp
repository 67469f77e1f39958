#pragma once

#include <string>

#include "cepd/matrix.hpp"

namespace cepd {

/// Outcome of the generalized-inverse solvers. particular is the n x 1
/// solution; homogeneous_projector is the factor in front of the free vector
/// for the parametric families (zero when the solution is unique in its
/// space); residual is the normalized value of the solver's defining
/// equation at particular.
struct SolveResult {
    Matrix particular;
    Matrix homogeneous_projector;
    double residual = 0.0;
    std::string solution_space_note;
};

/// CEPD system A (x - A^coreEP b) = 0; general solution
/// x = A^cmp b + (I - A^+ A) y.
SolveResult solve_cmp_system(const Matrix& a, const Matrix& b, const Tolerance& tol);

/// CEPD system A^D (A x - b) = 0; general solution x = A^D b + (I - A^D A) y.
SolveResult solve_drazin_system(const Matrix& a, const Matrix& b, const Tolerance& tol);

/// A x = b for CEPD A: unique solution x = A^coreEP b in the range of
/// A^coreEP; ConsistencyViolated when b is not reachable.
SolveResult solve_in_corange(const Matrix& a, const Matrix& b, const Tolerance& tol);

/// A x = b for a partial isometry and b in range(A): x = A^* b.
SolveResult solve_pi(const Matrix& a, const Matrix& b, const Tolerance& tol);

/// A x = b for a partial isometry and b in range(A A^D): unique solution
/// x = A^{D,*} b in the range of A^k.
SolveResult solve_drazin_star(const Matrix& a, const Matrix& b, const Tolerance& tol);

} // namespace cepd
