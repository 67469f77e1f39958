#include "cepd/solvers.hpp"

#include <algorithm>

#include "cepd/inverses.hpp"

namespace cepd {

namespace {

void check_system_shapes(const Matrix& a, const Matrix& b) {
    if (!a.is_square()) throw Error(ErrorKind::NonSquare, "coefficient matrix must be square");
    if (b.rows() != a.rows() || b.cols() != 1)
        throw Error(ErrorKind::DimensionMismatch, "right-hand side must be n x 1");
}

void require_cepd(const Matrix& a, const Tolerance& tol) {
    if (rel_residual(core_ep(a, tol), drazin(a, tol)) > tol.eq_atol)
        throw Error(ErrorKind::NotCepd, "coefficient matrix is not CEPD");
}

void require_partial_isometry(const Matrix& a, const Tolerance& tol) {
    if (rel_residual(a * conj_transpose(a) * a, a) > tol.eq_atol)
        throw Error(ErrorKind::NotPartialIsometry, "coefficient matrix is not a partial isometry");
}

double range_residual(const Matrix& x, const Matrix& b) {
    return fro_norm(x - b) / std::max(1.0, fro_norm(b));
}

} // namespace

SolveResult solve_cmp_system(const Matrix& a, const Matrix& b, const Tolerance& tol) {
    check_system_shapes(a, b);
    require_cepd(a, tol);
    SolveResult result;
    result.particular = cmp(a, tol) * b;
    result.homogeneous_projector = Matrix::identity(a.rows()) - moore_penrose(a, tol) * a;
    Matrix defect = a * (result.particular - core_ep(a, tol) * b);
    result.residual = rel_residual(defect, Matrix(defect.rows(), defect.cols()));
    result.solution_space_note = "general solution: particular + projector * y, y arbitrary";
    return result;
}

SolveResult solve_drazin_system(const Matrix& a, const Matrix& b, const Tolerance& tol) {
    check_system_shapes(a, b);
    require_cepd(a, tol);
    Matrix d = drazin(a, tol);
    SolveResult result;
    result.particular = d * b;
    result.homogeneous_projector = Matrix::identity(a.rows()) - d * a;
    Matrix defect = d * (a * result.particular - b);
    result.residual = rel_residual(defect, Matrix(defect.rows(), defect.cols()));
    result.solution_space_note = "general solution: particular + projector * y, y arbitrary";
    return result;
}

SolveResult solve_in_corange(const Matrix& a, const Matrix& b, const Tolerance& tol) {
    check_system_shapes(a, b);
    require_cepd(a, tol);
    Matrix c = core_ep(a, tol);
    SolveResult result;
    result.particular = c * b;
    result.homogeneous_projector = Matrix(a.rows(), a.cols());
    result.residual = range_residual(a * result.particular, b);
    if (result.residual > tol.eq_atol)
        throw Error(ErrorKind::ConsistencyViolated,
                    "A x = b is not consistent for a solution in the core EP range");
    result.solution_space_note = "unique solution in range(A^coreEP)";
    return result;
}

SolveResult solve_pi(const Matrix& a, const Matrix& b, const Tolerance& tol) {
    check_system_shapes(a, b);
    require_partial_isometry(a, tol);
    if (range_residual(a * moore_penrose(a, tol) * b, b) > tol.eq_atol)
        throw Error(ErrorKind::RightSideNotInRange, "b does not lie in range(A)");
    SolveResult result;
    result.particular = conj_transpose(a) * b;
    result.homogeneous_projector = Matrix(a.rows(), a.cols());
    result.residual = range_residual(a * result.particular, b);
    result.solution_space_note = "x = A^* b solves A x = b";
    return result;
}

SolveResult solve_drazin_star(const Matrix& a, const Matrix& b, const Tolerance& tol) {
    check_system_shapes(a, b);
    require_partial_isometry(a, tol);
    Matrix d = drazin(a, tol);
    // A A^D is the projector onto range(A^k); membership is a projector test.
    if (range_residual(a * d * b, b) > tol.eq_atol)
        throw Error(ErrorKind::RightSideNotInRange, "b does not lie in range(A A^D)");
    SolveResult result;
    result.particular = d * a * conj_transpose(a) * b;
    result.homogeneous_projector = Matrix(a.rows(), a.cols());
    result.residual = range_residual(a * result.particular, b);
    result.solution_space_note = "unique solution in range(A^k)";
    return result;
}

} // namespace cepd
