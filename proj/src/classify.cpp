#include "cepd/classify.hpp"

#include <algorithm>

#include "cepd/decomp.hpp"

namespace cepd {

namespace {

void require_square(const Matrix& a, const char* what) {
    if (!a.is_square()) throw Error(ErrorKind::NonSquare, what);
}

ClassFlag flag_from(const Matrix& lhs, const Matrix& rhs, const Tolerance& tol) {
    double res = rel_residual(lhs, rhs);
    return {res <= tol.eq_atol, res};
}

bool partial_isometry(const Matrix& m, const Tolerance& tol) {
    return rel_residual(m * conj_transpose(m) * m, m) <= tol.eq_atol;
}

bool hermitian(const Matrix& m, const Tolerance& tol) {
    return rel_residual(m, conj_transpose(m)) <= tol.eq_atol;
}

} // namespace

ClassificationReport classify(const Matrix& a, const Tolerance& tol) {
    require_square(a, "classification needs a square matrix");
    ClassificationReport rep;
    rep.index = index(a, tol);
    rep.mp = moore_penrose(a, tol);
    rep.drazin = drazin(a, tol);
    rep.core_ep_inverse = core_ep(a, tol);
    rep.core_part = a * rep.drazin * a;

    Matrix astar = conj_transpose(a);
    Matrix ak = denoised_power(a, rep.index, tol);
    rep.hermitian = flag_from(a, astar, tol);
    rep.normal = flag_from(a * astar, astar * a, tol);
    rep.ep = flag_from(a * rep.mp, rep.mp * a, tol);
    rep.k_ep = flag_from(ak * rep.mp, rep.mp * ak, tol);
    rep.core_ep_matrix = flag_from(rep.mp * rep.core_part, rep.core_part * rep.mp, tol);
    rep.sd = flag_from(astar * rep.mp, rep.mp * astar, tol);
    rep.partial_isometry = flag_from(a * astar * a, a, tol);
    rep.cepd = flag_from(rep.core_ep_inverse, rep.drazin, tol);
    return rep;
}

bool is_cepd(const Matrix& a, const Tolerance& tol) {
    require_square(a, "CEPD test needs a square matrix");
    return rel_residual(core_ep(a, tol), drazin(a, tol)) <= tol.eq_atol;
}

CepdEquivalenceReport cepd_equivalences(const Matrix& a, const Tolerance& tol) {
    require_square(a, "CEPD equivalence report needs a square matrix");
    CepdEquivalenceReport rep;

    const unsigned k = index(a, tol);
    const Matrix d = drazin(a, tol);
    const Matrix c = core_ep(a, tol);
    const Matrix core = a * d * a;
    const Matrix ak = denoised_power(a, k, tol);
    const Matrix ak1 = denoised_power(a, k + 1, tol);
    const Matrix ak_mp = moore_penrose(ak, tol);
    const Matrix t1 = ak1 * ak_mp; // A^{k+1} (A^k)^+

    auto add = [&](const std::string& label, double residual) {
        rep.conditions.push_back({label, residual <= tol.eq_atol, residual, true, ""});
    };

    add("(i) cep A^D = A^D cep", rel_residual(c * d, d * c));
    add("(ii) A_1 cep = cep A_1", rel_residual(core * c, c * core));
    add("(iii) A^D T = T A^D, T = A^{k+1}(A^k)^+", rel_residual(d * t1, t1 * d));
    add("(iv) A_1 T = T A_1", rel_residual(core * t1, t1 * core));
    add("(v) A^{k+2}(A^k)^+ = A A_1", rel_residual(denoised_power(a, k + 2, tol) * ak_mp, a * core));
    add("(vi) cep = A^D", rel_residual(c, d));
    add("(vii) cep^2 = (A^D)^2", rel_residual(c * c, d * d));
    add("(viii) cep^3 = (A^D)^3", rel_residual(c * c * c, d * d * d));

    if (rank(a, tol) == 0) {
        const char* note = "HS decomposition undefined for the zero matrix";
        rep.conditions.push_back({"(ix) SK CEPD and (SK)^{k-1} SL = 0", false, 0.0, false, note});
        rep.conditions.push_back({"(x) cep = dmp and (SK)^{k-1} SL = 0", false, 0.0, false, note});
    } else {
        HsDecomposition hs = hs_decompose(a, tol);
        Matrix sk = hs.sigma_k();
        Matrix sl = hs.sigma_l();
        Matrix tail = matrix_power(sk, k >= 1 ? k - 1 : 0) * sl;
        double tail_res = tail.is_empty() ? 0.0 : rel_residual(tail, Matrix(tail.rows(), tail.cols()));
        double sk_cepd_res = rel_residual(core_ep(sk, tol), drazin(sk, tol));
        add("(ix) SK CEPD and (SK)^{k-1} SL = 0", std::max(sk_cepd_res, tail_res));
        double dmp_res = rel_residual(c, dmp(a, tol));
        add("(x) cep = dmp and (SK)^{k-1} SL = 0", std::max(dmp_res, tail_res));
    }

    rep.is_cepd = rep.conditions[5].holds;
    rep.all_agree = true;
    for (const CepdCondition& cond : rep.conditions)
        if (cond.evaluated && cond.holds != rep.is_cepd) rep.all_agree = false;
    return rep;
}

IdentityReport check_pi_theorems(const Matrix& a, const Tolerance& tol) {
    require_square(a, "partial-isometry theorem suite needs a square matrix");
    IdentityReport report;

    auto add = [&](const std::string& label, bool hypothesis, const std::string& hyp_note,
                   const Matrix& lhs, const Matrix& rhs) {
        IdentityRow row;
        row.label = label;
        if (!hypothesis) {
            row.evaluated = false;
            row.note = "hypothesis not met: " + hyp_note;
        } else {
            row.lhs = lhs;
            row.rhs = rhs;
            row.residual = rel_residual(lhs, rhs);
            row.pass = row.residual <= tol.eq_atol;
        }
        report.rows.push_back(std::move(row));
    };

    const unsigned k = index(a, tol);
    const Matrix astar = conj_transpose(a);
    const Matrix d = drazin(a, tol);
    const Matrix c = core_ep(a, tol);
    const Matrix core = a * d * a;
    const Matrix ak = denoised_power(a, k, tol);
    const Matrix ak1 = denoised_power(a, k + 1, tol);
    const Matrix dstar = d * a * astar;

    const bool a_pi = partial_isometry(a, tol);
    const bool ak_pi = partial_isometry(ak, tol);
    const bool ak1_pi = partial_isometry(ak1, tol);
    const bool cepd = rel_residual(c, d) <= tol.eq_atol;

    add("pi drazin-star: A A^* (A^{D,*})^2 A = A^D", a_pi, "A is not a partial isometry",
        a * astar * dstar * dstar * a, d);
    add("pi drazin-star: A^D A^* A = A^D", a_pi, "A is not a partial isometry", d * astar * a, d);
    add("pi drazin-star: A^k A^D A^* A^2 = A^k", a_pi, "A is not a partial isometry",
        ak * d * astar * a * a, ak);
    add("pi drazin-star: A^k A^* A^2 = A^{k+1}", a_pi, "A is not a partial isometry", ak * astar * a * a, ak1);

    // (A^+)^D = (A^D)^+ iff A^D is a partial isometry; the row passes when
    // the two sides of the iff agree.
    if (!a_pi) {
        add("pi drazin: A^D partial isometry iff (A^+)^D = (A^D)^+", false, "A is not a partial isometry", a, a);
    } else {
        Matrix lhs = drazin(moore_penrose(a, tol), tol);
        Matrix rhs = moore_penrose(d, tol);
        IdentityRow row;
        row.label = "pi drazin: A^D partial isometry iff (A^+)^D = (A^D)^+";
        row.lhs = lhs;
        row.rhs = rhs;
        row.residual = rel_residual(lhs, rhs);
        bool equality = row.residual <= tol.eq_atol;
        row.pass = partial_isometry(d, tol) == equality;
        row.note = equality ? "sides equal" : "sides differ";
        report.rows.push_back(std::move(row));
    }

    add("pi powers: cep is a partial isometry", ak_pi && ak1_pi,
        "A^k and A^{k+1} are not both partial isometries", moore_penrose(c, tol),
        conj_transpose(c));

    const bool t48 = cepd && ak_pi && ak1_pi;
    const char* t48_note = "A is not CEPD with A^k, A^{k+1} partial isometries";
    add("cepd pi powers: A^D cep^* cep = cep^2 A^{k+1} (A^k)^+", t48, t48_note,
        d * conj_transpose(c) * c, c * c * ak1 * moore_penrose(ak, tol));
    // cep^* A^k = A^D A^k is sometimes claimed alongside this identity, but
    // it is false (diag(i, 0) is a counterexample); what the hypotheses give
    // is cep^* = (cep)^D = A_1.
    add("cepd pi powers: cep^* A^k = A_1 A^k", t48, t48_note, conj_transpose(c) * ak, core * ak);

    const bool t49 = a_pi && ((hermitian(ak, tol) && ak_pi) || (hermitian(ak1, tol) && ak1_pi));
    add("pi hermitian power: A is CEPD", t49,
        "A is not a partial isometry with a Hermitian partial-isometry power", c, d);

    return report;
}

} // namespace cepd
