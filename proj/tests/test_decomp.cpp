#include <doctest.h>

#include "cepd/decomp.hpp"
#include "cepd/inverses.hpp"
#include "cepd/randgen.hpp"
#include "golden_matrices.hpp"

using namespace cepd;
using golden::max_abs_diff;

namespace {

const Tolerance tol;

void check_svd_invariants(const Matrix& a) {
    SvdResult dec = svd(a);
    REQUIRE(dec.sigma.size() == std::min(a.rows(), a.cols()));
    for (std::size_t i = 0; i + 1 < dec.sigma.size(); ++i) {
        CHECK(dec.sigma[i] >= dec.sigma[i + 1]);
        CHECK(dec.sigma[i + 1] >= 0.0);
    }
    CHECK(approx_eq(conj_transpose(dec.u) * dec.u, Matrix::identity(a.rows()), tol));
    CHECK(approx_eq(conj_transpose(dec.v) * dec.v, Matrix::identity(a.cols()), tol));
    Matrix sigma(a.rows(), a.cols());
    for (std::size_t i = 0; i < dec.sigma.size(); ++i) sigma(i, i) = dec.sigma[i];
    CHECK(fro_norm(dec.u * sigma * conj_transpose(dec.v) - a) <= tol.eq_atol * fro_norm(a));
}

void check_hs_invariants(const Matrix& a, const HsDecomposition& hs) {
    std::size_t total = 0;
    double prev = 0.0;
    for (std::size_t i = 0; i < hs.sigma_blocks.size(); ++i) {
        CHECK(hs.sigma_blocks[i].value > 0.0);
        if (i > 0) CHECK(hs.sigma_blocks[i].value < prev);
        prev = hs.sigma_blocks[i].value;
        total += hs.sigma_blocks[i].multiplicity;
    }
    CHECK(total == hs.r);
    Matrix kk_ll = hs.k_block * conj_transpose(hs.k_block) +
                   hs.l_block * conj_transpose(hs.l_block);
    CHECK(approx_eq(kk_ll, Matrix::identity(hs.r), tol));
    CHECK(approx_eq(hs.reconstruct(), a, tol));
}

} // namespace

TEST_CASE("svd on small known matrices") {
    SvdResult d1 = svd(Matrix({{3, 0}, {0, 2}}));
    CHECK(d1.sigma[0] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(d1.sigma[1] == doctest::Approx(2.0).epsilon(1e-12));

    SvdResult d2 = svd(Matrix(2, 2));
    CHECK(d2.sigma[0] == 0.0);
    CHECK(d2.sigma[1] == 0.0);

    SvdResult d3 = svd(Matrix({{0, 1}, {0, 0}}));
    CHECK(d3.sigma[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(d3.sigma[1] == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("svd invariants on random shapes") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Xoshiro256 rng(3100 + seed);
        std::size_t m = 1 + rng.next() % 8;
        std::size_t n = 1 + rng.next() % 8;
        Matrix a(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j)
                a(i, j) = rng.cgaussian();
        check_svd_invariants(a);
    }
    check_svd_invariants(golden::b6());
    check_svd_invariants(golden::pi_rt2_6());
}

TEST_CASE("hs decomposition of a diagonal matrix") {
    HsDecomposition hs = hs_decompose(Matrix({{2, 0}, {0, 0}}), tol);
    CHECK(hs.r == 1);
    REQUIRE(hs.sigma_blocks.size() == 1);
    CHECK(hs.sigma_blocks[0].value == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(hs.sigma_blocks[0].multiplicity == 1);
    check_hs_invariants(Matrix({{2, 0}, {0, 0}}), hs);
}

TEST_CASE("hs decomposition invariants on golden matrices") {
    for (const Matrix& a : {golden::triangular3(), golden::nilpotent3(), golden::b6(), golden::pi_rt2_6()})
        check_hs_invariants(a, hs_decompose(a, tol));
}

TEST_CASE("hs decomposition rejects zero and non-square input") {
    CHECK_THROWS_AS(hs_decompose(Matrix(3, 3), tol), Error);
    try {
        hs_decompose(Matrix(3, 3), tol);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ZeroMatrix);
    }
    CHECK_THROWS_AS(hs_decompose(Matrix(2, 3), tol), Error);
}

TEST_CASE("repeated singular values group into one block") {
    Xoshiro256 rng(42);
    Matrix a = gen_partial_isometry(GenSpec(6, 4, 0, 131));
    HsDecomposition hs = hs_decompose(a, tol);
    CHECK(hs.r == 4);
    REQUIRE(hs.sigma_blocks.size() == 1);
    CHECK(hs.sigma_blocks[0].multiplicity == 4);
    CHECK(hs.sigma_blocks[0].value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hs invariants and ind(SK) = ind(A) - 1 on generated matrices") {
    std::uint64_t seed = 0;
    for (int i = 0; i < 200; ++i) {
        Xoshiro256 pick(7000 + seed);
        std::size_t n = 2 + pick.next() % 7;
        std::size_t k = 1 + pick.next() % std::min<std::size_t>(3, n);
        std::size_t r = (n - k == 0) ? 0 : pick.next() % (n - k + 1);
        GenSpec spec(n, r, k, 100 + seed);
        Matrix a = (i % 2 == 0) ? gen_with_index(spec) : gen_cepd(spec);
        ++seed;
        if (rank(a, tol) == 0) continue; // r = 0, k = 1 gives the zero matrix
        HsDecomposition hs = hs_decompose(a, tol);
        check_hs_invariants(a, hs);
        unsigned ka = index(a, tol);
        if (ka >= 1) CHECK(index(hs.sigma_k(), tol) == ka - 1);
    }
}

TEST_CASE("core-nilpotent split of known matrices") {
    Matrix nil = golden::nilpotent3();
    CoreNilpotentParts parts = core_nilpotent(nil, tol);
    CHECK(fro_norm(parts.core) <= tol.eq_atol);
    CHECK(approx_eq(parts.nilpotent, nil, tol));

    Matrix inv = {{2, 1, 0}, {0, 1, 3}, {1, 0, 1}};
    parts = core_nilpotent(inv, tol);
    CHECK(approx_eq(parts.core, inv, tol));
    CHECK(fro_norm(parts.nilpotent) <= tol.eq_atol);

    parts = core_nilpotent(golden::triangular3(), tol);
    CHECK(max_abs_diff(parts.core, golden::triangular3_core_part()) <= 1e-9);
    CHECK(max_abs_diff(parts.nilpotent, golden::triangular3_nilpotent_part()) <= 1e-9);
    CHECK(parts.index_of_nilpotent == 2);
}

TEST_CASE("core-nilpotent invariants on generated matrices") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Xoshiro256 pick(1300 + seed);
        std::size_t n = 2 + pick.next() % 7;
        std::size_t k = 1 + pick.next() % std::min<std::size_t>(3, n);
        std::size_t r = (n - k == 0) ? 0 : pick.next() % (n - k + 1);
        Matrix a = gen_with_index(GenSpec(n, r, k, 400 + seed));
        CoreNilpotentParts parts = core_nilpotent(a, tol);
        Matrix zero(n, n);
        CHECK(approx_eq(parts.core + parts.nilpotent, a, tol));
        CHECK(rel_residual(parts.core * parts.nilpotent, zero) <= tol.eq_atol);
        CHECK(rel_residual(parts.nilpotent * parts.core, zero) <= tol.eq_atol);
        unsigned ka = index(a, tol);
        CHECK(rel_residual(matrix_power(parts.nilpotent, std::max(ka, 1u)), zero) <= tol.eq_atol);
        CHECK(index(parts.core, tol) <= 1);
        CHECK(parts.index_of_nilpotent == std::max(ka, 1u));
    }
}
