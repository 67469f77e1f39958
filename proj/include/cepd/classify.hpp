#pragma once

#include <string>
#include <vector>

#include "cepd/inverses.hpp"
#include "cepd/matrix.hpp"

namespace cepd {

/// A predicate decided by a residual: holds iff residual <= eq_atol.
struct ClassFlag {
    bool holds = false;
    double residual = 0.0;
};

/// The matrix-class predicates, each with the residual it was decided on,
/// plus the intermediate inverses the decisions used.
struct ClassificationReport {
    unsigned index = 0;
    ClassFlag hermitian;        // A = A^*
    ClassFlag normal;           // A A^* = A^* A
    ClassFlag ep;               // A A^+ = A^+ A
    ClassFlag k_ep;             // A^k A^+ = A^+ A^k
    ClassFlag core_ep_matrix;   // A^+ A_1 = A_1 A^+
    ClassFlag sd;               // A^* A^+ = A^+ A^*
    ClassFlag partial_isometry; // A A^* A = A
    ClassFlag cepd;             // A^coreEP = A^D

    Matrix mp;
    Matrix drazin;
    Matrix core_ep_inverse;
    Matrix core_part;
};

ClassificationReport classify(const Matrix& a, const Tolerance& tol);

/// Canonical CEPD test: A^coreEP = A^D (a single absolute comparison among
/// the equivalent conditions).
bool is_cepd(const Matrix& a, const Tolerance& tol);

struct CepdCondition {
    std::string label;
    bool holds = false;
    double residual = 0.0;
    bool evaluated = true;
    std::string note;
};

/// All ten equivalent CEPD conditions evaluated independently. The theorem
/// says the booleans agree for every matrix; all_agree records whether the
/// evaluated ones did. Conditions through the HS decomposition are skipped
/// with a marker on the zero matrix.
struct CepdEquivalenceReport {
    std::vector<CepdCondition> conditions;
    bool all_agree = false;
    bool is_cepd = false; // condition (vi)
};

CepdEquivalenceReport cepd_equivalences(const Matrix& a, const Tolerance& tol);

/// Hypothesis-gated residual rows for the partial-isometry theorems
/// (Drazin-star identities, P.I.-ness of A^D / A^coreEP, the CEPD + P.I.
/// power identities, and the Hermitian-power CEPD condition). Rows whose
/// hypotheses fail are marked, never failed.
IdentityReport check_pi_theorems(const Matrix& a, const Tolerance& tol);

} // namespace cepd
