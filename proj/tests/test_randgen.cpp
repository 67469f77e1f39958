#include <doctest.h>

#include "cepd/classify.hpp"
#include "cepd/decomp.hpp"
#include "cepd/inverses.hpp"
#include "cepd/randgen.hpp"
#include "golden_matrices.hpp"

using namespace cepd;

namespace {
const Tolerance tol;
}

TEST_CASE("generators are deterministic in the spec") {
    GenSpec spec(6, 3, 2, 42);
    Matrix a = gen_with_index(spec);
    Matrix b = gen_with_index(spec);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            CHECK(a(i, j) == b(i, j)); // bit-identical

    Matrix c = gen_with_index(GenSpec(6, 3, 2, 43));
    CHECK(fro_norm(a - c) > 1e-6);

    Matrix p1 = gen_partial_isometry(spec);
    Matrix p2 = gen_partial_isometry(spec);
    CHECK(golden::max_abs_diff(p1, p2) == 0.0);
    Matrix u1 = gen_cepd(spec);
    Matrix u2 = gen_cepd(spec);
    CHECK(golden::max_abs_diff(u1, u2) == 0.0);
}

TEST_CASE("random unitary is unitary") {
    Xoshiro256 rng(7);
    for (std::size_t n : {1u, 3u, 8u}) {
        Matrix u = random_unitary(n, rng);
        CHECK(approx_eq(conj_transpose(u) * u, Matrix::identity(n), tol));
    }
}

TEST_CASE("gen_with_index hits the requested index") {
    Matrix a = gen_with_index(GenSpec(4, 4, 0, 5));
    CHECK(index(a, tol) == 0);
    CHECK(rank(a, tol) == 4);

    a = gen_with_index(GenSpec(6, 3, 2, 42));
    CHECK(index(a, tol) == 2);

    a = gen_with_index(GenSpec(3, 0, 1, 9));
    CHECK(fro_norm(a) <= 1e-12); // zero-similar
    CHECK(index(a, tol) == 1);
}

TEST_CASE("gen_with_index rank chain decreases strictly up to the index") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Xoshiro256 pick(seed);
        std::size_t n = 3 + pick.next() % 6;
        std::size_t k = 1 + pick.next() % 3;
        if (k + 1 > n) k = n - 1;
        std::size_t r = 1 + pick.next() % (n - k); // keep a nonzero core block
        Matrix a = gen_with_index(GenSpec(n, r, k, 600 + seed));
        unsigned prev = rank(Matrix::identity(n), tol);
        for (std::size_t j = 1; j <= k + 1; ++j) {
            unsigned rj = rank(denoised_power(a, static_cast<unsigned>(j), tol), tol);
            if (j <= k) CHECK(rj < prev);
            else CHECK(rj == prev);
            prev = rj;
        }
    }

    // pure nilpotent: the k-th power is zero up to roundoff
    Matrix nil = gen_with_index(GenSpec(5, 0, 3, 606));
    CHECK(index(nil, tol) == 3);
    CHECK(fro_norm(denoised_power(nil, 3, tol)) == 0.0);
    CHECK(rank(matrix_power(nil, 2), tol) == 1);
}

TEST_CASE("gen_with_index rejects infeasible specs") {
    CHECK_THROWS_AS(gen_with_index(GenSpec(4, 2, 3, 1)), Error); // k > n - r
    CHECK_THROWS_AS(gen_with_index(GenSpec(4, 2, 0, 1)), Error); // k = 0 needs r = n
    CHECK_THROWS_AS(gen_with_index(GenSpec(4, 5, 0, 1)), Error); // r > n
    try {
        gen_with_index(GenSpec(4, 2, 3, 1));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InfeasibleSpec);
    }
}

TEST_CASE("gen_partial_isometry satisfies the defining equation") {
    Matrix u = gen_partial_isometry(GenSpec(5, 5, 0, 3));
    CHECK(approx_eq(conj_transpose(u) * u, Matrix::identity(5), tol)); // r = n: unitary

    Matrix z = gen_partial_isometry(GenSpec(4, 0, 0, 3));
    CHECK(fro_norm(z) == 0.0);

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Xoshiro256 pick(seed);
        std::size_t n = 1 + pick.next() % 8;
        std::size_t r = pick.next() % (n + 1);
        Matrix a = gen_partial_isometry(GenSpec(n, r, 0, 800 + seed));
        CHECK(rank(a, tol) == r);
        CHECK(rel_residual(a * conj_transpose(a) * a, a) <= tol.eq_atol);
        // A^+ = A^*
        CHECK(rel_residual(moore_penrose(a, tol), conj_transpose(a)) <= tol.eq_atol);
    }
}

TEST_CASE("gen_cepd output is CEPD") {
    Matrix inv = gen_cepd(GenSpec(4, 4, 0, 2));
    CHECK(is_cepd(inv, tol));

    Matrix mid = gen_cepd(GenSpec(6, 3, 2, 11));
    CHECK(is_cepd(mid, tol));

    Matrix nil = gen_cepd(GenSpec(3, 0, 2, 8));
    CHECK(index(nil, tol) == 2);
    CHECK(is_cepd(nil, tol));

    CepdEquivalenceReport rep = cepd_equivalences(mid, tol);
    CHECK(rep.is_cepd);
    CHECK(rep.all_agree);
    for (const CepdCondition& cond : rep.conditions)
        if (cond.evaluated) CHECK(cond.holds);
}
