#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cepd/matrix.hpp"

namespace cepd {

/// Smallest k in [0, n] with rank(a^k) = rank(a^(k+1)).
unsigned index(const Matrix& a, const Tolerance& tol);

/// a^p with true-zero detection: when every singular value of the computed
/// power sits below rank_rtol * n * sigma_max(a)^p the power is the zero
/// matrix up to roundoff and is returned as exactly zero. Keeps later
/// pseudoinverses from amplifying noise into signal on nilpotent chains.
Matrix denoised_power(const Matrix& a, unsigned p, const Tolerance& tol);

/// Moore-Penrose inverse via SVD with thresholded inversion of the spectrum.
Matrix moore_penrose(const Matrix& a, const Tolerance& tol);

/// Drazin inverse a^l (a^(2l+1))^+ a^l with l = index(a). The three defining
/// equations are re-checked after the computation; a residual above
/// 100 * eq_atol signals a rank misclassification and raises
/// DefiningEquationsViolated.
Matrix drazin(const Matrix& a, const Tolerance& tol);

/// Drazin inverse restricted to index(a) <= 1; IndexTooLarge otherwise.
Matrix group_inverse(const Matrix& a, const Tolerance& tol);

/// Core EP inverse a^k (a^(k+1))^+ with k = index(a), post-checked like drazin.
Matrix core_ep(const Matrix& a, const Tolerance& tol);

/// DMP inverse a^D a a^+.
Matrix dmp(const Matrix& a, const Tolerance& tol);

/// MPD inverse a^+ a a^D.
Matrix mpd(const Matrix& a, const Tolerance& tol);

/// CMP inverse a^+ a a^D a a^+.
Matrix cmp(const Matrix& a, const Tolerance& tol);

/// Drazin-star matrix a^D a a^*.
Matrix drazin_star(const Matrix& a, const Tolerance& tol);

/// All the generalized inverses of one matrix; group is present iff ind <= 1.
struct InverseBundle {
    Matrix mp;
    Matrix drazin;
    Matrix core_ep;
    Matrix dmp;
    Matrix mpd;
    Matrix cmp;
    Matrix drazin_star;
    std::optional<Matrix> group;
    unsigned index = 0;
};

InverseBundle inverse_bundle(const Matrix& a, const Tolerance& tol);

/// One evaluated identity: both sides, their normalized Frobenius distance,
/// and whether it passed. Rows that cannot be evaluated (undefined
/// decomposition, unmet hypothesis) carry evaluated = false and a note.
struct IdentityRow {
    std::string label;
    Matrix lhs;
    Matrix rhs;
    double residual = 0.0;
    bool evaluated = true;
    bool pass = false;
    std::string note;
};

struct IdentityReport {
    std::vector<IdentityRow> rows;

    bool all_passed() const {
        for (const IdentityRow& row : rows)
            if (row.evaluated && !row.pass) return false;
        return true;
    }
};

/// Residual check of the identity suite relating the generalized inverses:
/// the DMP/MPD/CMP composition formulas and consequences, the core EP
/// characterizations (alternative routes, EP-ness, projector identities),
/// and the block formulas through the HS decomposition.
IdentityReport verify_identities(const Matrix& a, const Tolerance& tol);

} // namespace cepd
