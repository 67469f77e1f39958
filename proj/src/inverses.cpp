#include "cepd/inverses.hpp"

#include <algorithm>
#include <cmath>

#include "cepd/decomp.hpp"

namespace cepd {

namespace {

void require_square(const Matrix& a, const char* what) {
    if (!a.is_square()) throw Error(ErrorKind::NonSquare, what);
}

unsigned count_above(const std::vector<double>& sigma, double threshold) {
    unsigned r = 0;
    for (double s : sigma)
        if (s > threshold) ++r;
    return r;
}

} // namespace

unsigned index(const Matrix& a, const Tolerance& tol) {
    require_square(a, "index needs a square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 0;

    std::vector<double> sv = singular_values(a);
    const double smax = sv.front();
    if (smax == 0.0) return 1; // zero matrix

    // Rank the powers of a / sigma_max against a flat threshold. Relative
    // per-power thresholds are not usable here: once a nilpotent part dies,
    // the computed power is pure roundoff and must rank as zero.
    Matrix ahat = a * cx(1.0 / smax, 0.0);
    const double threshold = tol.rank_rtol * static_cast<double>(n);

    unsigned prev = static_cast<unsigned>(n); // rank of a^0
    Matrix power = Matrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        power = power * ahat;
        unsigned rk = count_above(singular_values(power), threshold);
        if (rk == prev) return static_cast<unsigned>(k - 1);
        prev = rk;
    }
    return static_cast<unsigned>(n);
}

Matrix denoised_power(const Matrix& a, unsigned p, const Tolerance& tol) {
    require_square(a, "matrix power needs a square matrix");
    if (p == 0) return Matrix::identity(a.rows());
    Matrix result = matrix_power(a, p);
    std::vector<double> sv = singular_values(a);
    const double scale = std::pow(sv.empty() ? 0.0 : sv.front(), static_cast<double>(p));
    if (fro_norm(result) <= tol.rank_rtol * static_cast<double>(a.rows()) * scale)
        return Matrix(a.rows(), a.cols());
    return result;
}

Matrix moore_penrose(const Matrix& a, const Tolerance& tol) {
    SvdResult dec = svd(a);
    const double smax = dec.sigma.empty() ? 0.0 : dec.sigma.front();
    const double threshold = tol.rank_threshold(smax, a.rows(), a.cols());
    // X = V diag(1/sigma_i or 0) U^*
    Matrix x(a.cols(), a.rows());
    for (std::size_t i = 0; i < dec.sigma.size(); ++i) {
        if (dec.sigma[i] <= threshold) continue;
        const double inv = 1.0 / dec.sigma[i];
        for (std::size_t p = 0; p < a.cols(); ++p) {
            const cx vi = dec.v(p, i) * inv;
            if (vi == cx(0.0, 0.0)) continue;
            for (std::size_t q = 0; q < a.rows(); ++q)
                x(p, q) += vi * std::conj(dec.u(q, i));
        }
    }
    return x;
}

Matrix drazin(const Matrix& a, const Tolerance& tol) {
    require_square(a, "drazin needs a square matrix");
    const unsigned l = index(a, tol);
    Matrix al = denoised_power(a, l, tol);
    if (l > 0 && fro_norm(al) == 0.0) return Matrix(a.rows(), a.cols()); // nilpotent
    Matrix x = al * moore_penrose(matrix_power(a, 2 * l + 1), tol) * al;

    double res = rel_residual(a * x, x * a);
    res = std::max(res, rel_residual(x * a * x, x));
    res = std::max(res, rel_residual(x * matrix_power(a, l + 1), al));
    if (res > 100.0 * tol.eq_atol)
        throw Error(ErrorKind::DefiningEquationsViolated,
                    "Drazin defining equations violated; rank threshold likely misclassified");
    return x;
}

Matrix group_inverse(const Matrix& a, const Tolerance& tol) {
    require_square(a, "group inverse needs a square matrix");
    if (index(a, tol) > 1)
        throw Error(ErrorKind::IndexTooLarge, "group inverse exists only for index <= 1");
    return drazin(a, tol);
}

Matrix core_ep(const Matrix& a, const Tolerance& tol) {
    require_square(a, "core EP inverse needs a square matrix");
    const unsigned k = index(a, tol);
    Matrix ak = denoised_power(a, k, tol);
    if (k > 0 && fro_norm(ak) == 0.0) return Matrix(a.rows(), a.cols()); // nilpotent
    Matrix x = ak * moore_penrose(matrix_power(a, k + 1), tol);

    Matrix x_mp = moore_penrose(x, tol);
    Matrix range_proj = ak * moore_penrose(ak, tol);
    double res = rel_residual(x * a * x, x);
    res = std::max(res, rel_residual(x * x_mp, range_proj));
    res = std::max(res, rel_residual(x_mp * x, range_proj));
    if (res > 100.0 * tol.eq_atol)
        throw Error(ErrorKind::DefiningEquationsViolated,
                    "core EP defining conditions violated; rank threshold likely misclassified");
    return x;
}

Matrix dmp(const Matrix& a, const Tolerance& tol) {
    require_square(a, "DMP inverse needs a square matrix");
    return drazin(a, tol) * a * moore_penrose(a, tol);
}

Matrix mpd(const Matrix& a, const Tolerance& tol) {
    require_square(a, "MPD inverse needs a square matrix");
    return moore_penrose(a, tol) * a * drazin(a, tol);
}

Matrix cmp(const Matrix& a, const Tolerance& tol) {
    require_square(a, "CMP inverse needs a square matrix");
    Matrix mp = moore_penrose(a, tol);
    return mp * a * drazin(a, tol) * a * mp;
}

Matrix drazin_star(const Matrix& a, const Tolerance& tol) {
    require_square(a, "Drazin-star needs a square matrix");
    return drazin(a, tol) * a * conj_transpose(a);
}

InverseBundle inverse_bundle(const Matrix& a, const Tolerance& tol) {
    require_square(a, "inverse bundle needs a square matrix");
    InverseBundle bundle;
    bundle.index = index(a, tol);
    bundle.mp = moore_penrose(a, tol);
    bundle.drazin = drazin(a, tol);
    bundle.core_ep = core_ep(a, tol);
    bundle.dmp = bundle.drazin * a * bundle.mp;
    bundle.mpd = bundle.mp * a * bundle.drazin;
    bundle.cmp = bundle.mp * a * bundle.drazin * a * bundle.mp;
    bundle.drazin_star = bundle.drazin * a * conj_transpose(a);
    if (bundle.index <= 1) bundle.group = bundle.drazin;
    return bundle;
}

IdentityReport verify_identities(const Matrix& a, const Tolerance& tol) {
    require_square(a, "identity suite needs a square matrix");
    const Tolerance& t = tol;
    IdentityReport report;

    auto add = [&](const std::string& label, const Matrix& lhs, const Matrix& rhs) {
        IdentityRow row;
        row.label = label;
        row.lhs = lhs;
        row.rhs = rhs;
        row.residual = rel_residual(lhs, rhs);
        row.pass = row.residual <= t.eq_atol;
        report.rows.push_back(std::move(row));
    };
    auto skip = [&](const std::string& label, const std::string& note) {
        IdentityRow row;
        row.label = label;
        row.evaluated = false;
        row.note = note;
        report.rows.push_back(std::move(row));
    };

    const unsigned k = index(a, t);
    const Matrix p = moore_penrose(a, t);
    const Matrix d = drazin(a, t);
    const Matrix c = core_ep(a, t);
    const Matrix core = a * d * a;
    const Matrix ak = denoised_power(a, k, t);
    const Matrix ak1 = denoised_power(a, k + 1, t);

    // DMP / MPD / CMP composition formulas and their consequences.
    add("dmp = A^D A A^+", dmp(a, t), d * a * p);
    add("mpd = A^+ A A^D", mpd(a, t), p * a * d);
    add("A^+ A A^D A A^+ = cmp", p * a * d * a * p, cmp(a, t));
    add("dmp A^D = (A^D)^2", d * a * p * d, d * d);
    add("dmp A = A A^D", d * a * p * a, a * d);
    add("(A^D)# = A^2 A^D", group_inverse(d, t), a * a * d);
    add("A^2 A^D = core(A)", a * a * d, core);

    // Core EP characterizations.
    add("cep A^{k+1} = A^k", c * ak1, ak);
    add("A cep Hermitian", a * c, conj_transpose(a * c));
    add("cep = A^D A^m (A^m)^+, m=k", c, d * ak * moore_penrose(ak, t));
    add("cep = A^D A^m (A^m)^+, m=k+1", c, d * ak1 * moore_penrose(ak1, t));
    add("cep = A^k (A^{k+1})^+", c, ak * moore_penrose(ak1, t));
    add("cep A^k = A^D A^k", c * ak, d * ak);
    add("cep = (A^{k+1} (A^k)^+)^+", c, moore_penrose(ak1 * moore_penrose(ak, t), t));
    {
        Matrix c_mp = moore_penrose(c, t);
        add("cep is EP", c * c_mp, c_mp * c);
    }
    add("A cep^2 = cep", a * c * c, c);
    add("A cep = A^k (A^k)^+", a * c, ak * moore_penrose(ak, t));
    add("A^D cep = cep^2", d * c, c * c);

    // Block formulas through the HS decomposition.
    if (rank(a, t) == 0) {
        const char* note = "HS decomposition undefined for the zero matrix";
        skip("A^D block form", note);
        skip("cep block form", note);
        skip("dmp block form", note);
        skip("drazin-star block form", note);
    } else {
        HsDecomposition hs = hs_decompose(a, t);
        const std::size_t n = a.rows();
        const std::size_t r = hs.r;
        Matrix sk = hs.sigma_k();
        Matrix sl = hs.sigma_l();
        Matrix skd = drazin(sk, t);
        Matrix uh = conj_transpose(hs.u);
        auto embed = [&](const Matrix& top_left, const Matrix& top_right) {
            Matrix inner(n, n);
            inner.set_block(0, 0, top_left);
            inner.set_block(0, r, top_right);
            return hs.u * inner * uh;
        };
        Matrix zero_tr(r, n - r);
        add("A^D block form", d, embed(skd, skd * skd * sl));
        add("cep block form", c, embed(core_ep(sk, t), zero_tr));
        add("dmp block form", dmp(a, t), embed(skd, zero_tr));
        Matrix s = hs.sigma();
        add("drazin-star block form", drazin_star(a, t), embed(skd * s * s, zero_tr));
    }

    return report;
}

} // namespace cepd
