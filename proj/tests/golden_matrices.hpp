#pragma once

// Hand-worked golden matrices for the generalized-inverse constructors.
// Every expected value here was frozen from an exact rational-arithmetic
// computation (fractions over Q, and over Q(sqrt 2) / Q(sqrt 3) for the
// radical entries), so the tests compare against exact answers, not against
// a second floating-point route.

#include <cmath>

#include "cepd/matrix.hpp"

namespace golden {

using cepd::Matrix;

inline double rt2() { return std::sqrt(2.0); }
inline double rt3() { return std::sqrt(3.0); }

/// Entrywise max |x - y|; golden comparisons are entrywise by contract.
inline double max_abs_diff(const Matrix& x, const Matrix& y) {
    double worst = 0.0;
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            worst = std::max(worst, std::abs(x(i, j) - y(i, j)));
    return worst;
}

// --- 3x3 nilpotent with index 3 (A^3 = 0) -------------------------------

inline Matrix nilpotent3() {
    return {{1, 1, 3}, {5, 2, 6}, {-2, -1, -3}};
}

// --- the 6x6 matrix B: index 3, 3-EP, not CEPD ---------------------------

inline Matrix b6() {
    return {{-1, 1, 0, 0, 1, 0},  {1, -1, 0, 0, -1, 0}, {0, 0, 0, 1, -1, 1},
            {-1, -1, 0, 0, 1, -1}, {1, -1, 0, 0, 1, -1}, {1, -1, 0, 0, 0, 0}};
}

inline constexpr unsigned b6_rank = 5;  // exact Gaussian elimination over Q
inline constexpr unsigned b6_index = 3; // rank chain 6,5,4,3,3,...

/// Exact rational Drazin inverse of B (frozen from the rational oracle).
inline Matrix b6_drazin_exact() {
    return {{0, 0, 0, 0, 0, 0.5},     {0, 0, 0, 0, 0, -0.5},   {0, 0, 0, 0, 0, 0},
            {0, 0, 0, 0, 1, -1},      {0.5, -0.5, 0, 0, 0, 1}, {0.5, -0.5, 0, 0, -1, 2}};
}

/// A 4-digit decimal rendering of B^D that circulates with this worked
/// example; it was rounded off an inexact computation and deviates from the
/// exact value by up to 4e-4. The golden check pins the exact matrix and
/// records the deviation.
inline Matrix b6_drazin_rounded() {
    return {{0, 0, 0, 0, 1e-4, 0.4999},      {0, 0, 0, 0, -1e-4, -0.4999},
            {0, 0, 0, 0, 0, 0},              {0, 0, 0, 0, 1, -1},
            {0.5, -0.5, 0, 0, 3e-4, 0.9996}, {0.5, -0.5, 0, 0, -0.9997, 1.9996}};
}

inline Matrix b6_core_ep() {
    Matrix m = {{0, 0, 0, -1, 1, 2},  {0, 0, 0, 1, -1, -2}, {0, 0, 0, 0, 0, 0},
                {0, 0, 0, 4, 2, -2},  {3, -3, 0, -2, 2, 4}, {3, -3, 0, -6, 0, 6}};
    return m * cepd::cx(1.0 / 6.0, 0.0);
}

// --- the non-partial-isometry 3x3 with index 2 ---------------------------

inline Matrix nonpi3() {
    return {{2, 0, 0}, {-1, 1, 1}, {-1, -1, -1}};
}

inline Matrix nonpi3_drazin() {
    return {{0.5, 0, 0}, {-0.5, 0, 0}, {0, 0, 0}};
}

inline Matrix nonpi3_drazin_conj_a() { // A^D A^* A
    return {{3, 0, 0}, {-3, 0, 0}, {0, 0, 0}};
}

inline Matrix nonpi3_drazin_star() { // A^D A A^* (rational oracle)
    return {{2, -1, -1}, {-2, 1, 1}, {0, 0, 0}};
}

// --- the partial isometry with sqrt(3), index 1 ---------------------------

inline Matrix pi_rt3() {
    return {{1, 0, 0}, {0, rt3() / 2.0, 0}, {0, 0.5, 0}};
}

inline Matrix pi_rt3_drazin() {
    return {{1, 0, 0}, {0, 2.0 * rt3() / 3.0, 0}, {0, 2.0 / 3.0, 0}};
}

inline Matrix pi_rt3_drazin_mp() { // (A^D)^+
    return {{1, 0, 0}, {0, 3.0 * rt3() / 8.0, 3.0 / 8.0}, {0, 0, 0}};
}

inline Matrix pi_rt3_dmp() {
    return {{1, 0, 0}, {0, rt3() / 2.0, 0.5}, {0, 0.5, rt3() / 6.0}};
}

inline Matrix pi_rt3_mpd() {
    return {{1, 0, 0}, {0, 2.0 * rt3() / 3.0, 0}, {0, 0, 0}};
}

inline Matrix pi_rt3_core_ep() { // equal to the DMP inverse here
    return pi_rt3_dmp();
}

inline Matrix pi_rt3_cmp() { // rational oracle: equals A^*
    return {{1, 0, 0}, {0, rt3() / 2.0, 0.5}, {0, 0, 0}};
}

// --- the non-normal 4x4 whose Drazin inverse is a partial isometry --------

inline Matrix swap_shift4() {
    return {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}};
}

inline Matrix swap_shift4_drazin() {
    return {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}};
}

// --- the 3x3 with index 2 used for the (A^+)^D != (A^D)^+ example ---------

inline Matrix triangular3() {
    return {{0, 1, 1}, {0, 0, 0}, {0, 0, 1}};
}

inline Matrix triangular3_mp() {
    return {{0, 0, 0}, {1, 0, -1}, {0, 0, 1}};
}

inline Matrix triangular3_drazin() {
    return {{0, 0, 1}, {0, 0, 0}, {0, 0, 1}};
}

inline Matrix triangular3_drazin_mp() { // (A^D)^+
    return {{0, 0, 0}, {0, 0, 0}, {0.5, 0, 0.5}};
}

inline Matrix triangular3_mp_drazin() { // (A^+)^D
    return {{0, 0, 0}, {0, 0, -1}, {0, 0, 1}};
}

inline Matrix triangular3_core_ep() {
    return {{0.5, 0, 0.5}, {0, 0, 0}, {0.5, 0, 0.5}};
}

inline Matrix triangular3_core_part() {
    return {{0, 0, 1}, {0, 0, 0}, {0, 0, 1}};
}

inline Matrix triangular3_nilpotent_part() {
    return {{0, 1, 0}, {0, 0, 0}, {0, 0, 0}};
}

inline Matrix triangular3_square_mp() { // (A^2)^+ = (A^3)^+
    return {{0, 0, 0}, {0, 0, 0}, {0.5, 0, 0.5}};
}

// --- the 2-EP block matrix: [[1,2],[2,1]] ⊕ J2, index 2, CEPD -------------

inline Matrix block4() {
    return {{1, 2, 0, 0}, {2, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}};
}

inline Matrix block4_square_mp() {
    Matrix m = {{5, -4, 0, 0}, {-4, 5, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}};
    return m * cepd::cx(1.0 / 9.0, 0.0);
}

inline Matrix block4_cube_mp() {
    Matrix m = {{-13, 14, 0, 0}, {14, -13, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}};
    return m * cepd::cx(1.0 / 27.0, 0.0);
}

// --- the final 6x6 partial isometry with sqrt(2), index 2, not CEPD -------

inline Matrix pi_rt2_6() {
    double s = rt2() / 2.0;
    return {{0, 0, 0, 0, 0, 0}, {s, -s, 0, 0, 0, 0},   {0.5, 0.5, 0, 0, 0, 0},
            {0.5, 0.5, 0, 0, 0, 0}, {0, 0, 0, 0, 0, s}, {0, 0, 0, 0, 0, s}};
}

inline Matrix pi_rt2_6_drazin() {
    double s = rt2();
    return {{0, 0, 0, 0, 0, 0}, {s, -s, 0, 0, 0, 0},  {-1, 1, 0, 0, 0, 0},
            {-1, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 0, s},  {0, 0, 0, 0, 0, s}};
}

inline Matrix pi_rt2_6_core_ep() {
    double s = rt2();
    Matrix m = {{0, 0, 0, 0, 0, 0},  {0, -2 * s, 2, 2, 0, 0},   {0, 2, -s, -s, 0, 0},
                {0, 2, -s, -s, 0, 0}, {0, 0, 0, 0, 2 * s, 2 * s}, {0, 0, 0, 0, 2 * s, 2 * s}};
    return m * cepd::cx(0.25, 0.0);
}

inline Matrix pi_rt2_6_square_mp() {
    double s = rt2();
    Matrix m = {{0, -2, s, s, 0, 0}, {0, 2, -s, -s, 0, 0}, {0, 0, 0, 0, 0, 0},
                {0, 0, 0, 0, 0, 0},  {0, 0, 0, 0, 0, 0},   {0, 0, 0, 0, 4, 4}};
    return m * cepd::cx(0.25, 0.0);
}

inline Matrix pi_rt2_6_cube_mp() {
    double s = rt2();
    Matrix m = {{0, s, -1, -1, 0, 0}, {0, -s, 1, 1, 0, 0}, {0, 0, 0, 0, 0, 0},
                {0, 0, 0, 0, 0, 0},   {0, 0, 0, 0, 0, 0},  {0, 0, 0, 0, 2 * s, 2 * s}};
    return m * cepd::cx(0.5, 0.0);
}

} // namespace golden
