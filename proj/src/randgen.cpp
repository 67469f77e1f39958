#include "cepd/randgen.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace cepd {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

} // namespace

Xoshiro256::Xoshiro256(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& word : state_) word = splitmix64(s);
}

std::uint64_t Xoshiro256::next() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double Xoshiro256::uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double Xoshiro256::gaussian() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    // u1 in (0,1] keeps the log finite.
    double u1 = static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
    double u2 = uniform();
    double radius = std::sqrt(-2.0 * std::log(u1));
    double angle = 2.0 * std::numbers::pi * u2;
    cached_ = radius * std::sin(angle);
    has_cached_ = true;
    return radius * std::cos(angle);
}

cx Xoshiro256::cgaussian() {
    double re = gaussian();
    double im = gaussian();
    return cx(re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0);
}

Matrix random_unitary(std::size_t n, Xoshiro256& rng) {
    Matrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            g(i, j) = rng.cgaussian();

    // Modified Gram-Schmidt with a second pass; Gaussian columns are far from
    // dependent, so no pivoting is needed at these sizes.
    Matrix q(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<cx> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = g(i, j);
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t c = 0; c < j; ++c) {
                cx proj(0.0, 0.0);
                for (std::size_t i = 0; i < n; ++i) proj += std::conj(q(i, c)) * v[i];
                for (std::size_t i = 0; i < n; ++i) v[i] -= proj * q(i, c);
            }
        }
        double norm = 0.0;
        for (const cx& e : v) norm += std::norm(e);
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < n; ++i) q(i, j) = v[i] / norm;
    }
    return q;
}

namespace {

// Random invertible with singular values in [floor, 1]; returns the factor
// and its analytically exact inverse so similarity transforms stay accurate.
struct InvertiblePair {
    Matrix m;
    Matrix inv;
};

InvertiblePair random_invertible(std::size_t n, Xoshiro256& rng, double floor) {
    Matrix u = random_unitary(n, rng);
    Matrix v = random_unitary(n, rng);
    std::vector<double> d(n), dinv(n);
    for (std::size_t i = 0; i < n; ++i) {
        d[i] = floor + (1.0 - floor) * rng.uniform();
        dinv[i] = 1.0 / d[i];
    }
    Matrix vh = conj_transpose(v);
    InvertiblePair pair;
    pair.m = u * Matrix::diagonal(d) * vh;
    pair.inv = v * Matrix::diagonal(dinv) * conj_transpose(u);
    return pair;
}

// Nilpotent block of index exactly k on an m-dimensional space: a k x k
// shift block padded with zeros. k = 1 gives the zero matrix.
Matrix nilpotent_block(std::size_t m, std::size_t k) {
    Matrix n(m, m);
    for (std::size_t i = 0; i + 1 < k; ++i) n(i, i + 1) = 1.0;
    return n;
}

void validate_block_spec(const GenSpec& spec) {
    if (spec.r > spec.n || spec.k > spec.n)
        throw Error(ErrorKind::InfeasibleSpec, "rank and index cannot exceed the dimension");
    if (spec.k == 0 && spec.r != spec.n)
        throw Error(ErrorKind::InfeasibleSpec, "index 0 requires an invertible matrix (r = n)");
    if (spec.k >= 1 && spec.k > spec.n - spec.r)
        throw Error(ErrorKind::InfeasibleSpec,
                    "nilpotent block of index " + std::to_string(spec.k) + " does not fit in " +
                        std::to_string(spec.n - spec.r) + " dimensions");
    if (!(spec.spectrum_floor > 0.0 && spec.spectrum_floor < 1.0))
        throw Error(ErrorKind::InfeasibleSpec, "spectrum_floor must lie in (0, 1)");
}

Matrix block_form(const GenSpec& spec, Xoshiro256& rng) {
    Matrix j(spec.n, spec.n);
    if (spec.r > 0) {
        j.set_block(0, 0, random_invertible(spec.r, rng, spec.spectrum_floor).m);
    }
    if (spec.n > spec.r) {
        j.set_block(spec.r, spec.r, nilpotent_block(spec.n - spec.r, spec.k));
    }
    return j;
}

} // namespace

Matrix gen_with_index(const GenSpec& spec) {
    validate_block_spec(spec);
    Xoshiro256 rng(spec.seed);
    Matrix j = block_form(spec, rng);
    // kappa(S) <= 10/7: keeps retained singular values of high powers far
    // above the rank threshold (the 1e3 cap would not).
    InvertiblePair s = random_invertible(spec.n, rng, 0.7);
    return s.m * j * s.inv;
}

Matrix gen_partial_isometry(const GenSpec& spec) {
    if (spec.r > spec.n)
        throw Error(ErrorKind::InfeasibleSpec, "rank cannot exceed the dimension");
    Xoshiro256 rng(spec.seed);
    Matrix u = random_unitary(spec.n, rng);
    Matrix v = random_unitary(spec.n, rng);
    Matrix p(spec.n, spec.n);
    for (std::size_t i = 0; i < spec.r; ++i) p(i, i) = 1.0;
    return u * p * conj_transpose(v);
}

Matrix gen_cepd(const GenSpec& spec) {
    validate_block_spec(spec);
    Xoshiro256 rng(spec.seed);
    Matrix j = block_form(spec, rng);
    Matrix u = random_unitary(spec.n, rng);
    return u * j * conj_transpose(u);
}

} // namespace cepd
