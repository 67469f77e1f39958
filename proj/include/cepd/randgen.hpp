#pragma once

#include <cstdint>

#include "cepd/matrix.hpp"

namespace cepd {

/// xoshiro256++ with splitmix64 seeding. The algorithm is part of the public
/// contract: a GenSpec seed always maps to the same matrix, so property
/// suites and golden files stay reproducible across versions.
class Xoshiro256 {
  public:
    explicit Xoshiro256(std::uint64_t seed);

    std::uint64_t next();

    /// Uniform double in [0, 1), 53 mantissa bits.
    double uniform();

    /// Standard normal via Box-Muller on (0,1] x [0,1) uniforms.
    double gaussian();

    /// Standard complex normal: (g1 + i g2) / sqrt(2).
    cx cgaussian();

  private:
    std::uint64_t state_[4];
    bool has_cached_ = false;
    double cached_ = 0.0;
};

/// Shape request for the structured generators. Identical specs yield
/// bit-identical matrices.
struct GenSpec {
    std::size_t n = 0;     // dimension
    std::size_t r = 0;     // rank of the invertible block (gen_partial_isometry: rank)
    std::size_t k = 0;     // target index
    std::uint64_t seed = 0;
    double spectrum_floor = 0.1; // minimum retained singular value of random blocks

    GenSpec(std::size_t n_, std::size_t r_, std::size_t k_, std::uint64_t seed_,
            double spectrum_floor_ = 0.1)
        : n(n_), r(r_), k(k_), seed(seed_), spectrum_floor(spectrum_floor_) {}
};

/// Haar-ish random unitary: QR of a complex Gaussian matrix, positive
/// diagonal of R.
Matrix random_unitary(std::size_t n, Xoshiro256& rng);

/// S blockdiag(M, N) S^{-1} with M random invertible r x r, N a nilpotent
/// block of index exactly k and S a well-conditioned random similarity.
/// index(result) = k; rank(result) = r + max(k, 1) - 1.
Matrix gen_with_index(const GenSpec& spec);

/// U diag(I_r, 0) V^* with independent random unitaries: A A^* A = A, rank r.
Matrix gen_partial_isometry(const GenSpec& spec);

/// U blockdiag(M, N) U^* with U unitary: unitary similarity preserves both
/// the Drazin and the core EP inverse of the block form, so the output
/// satisfies A^coreEP = A^D by construction.
Matrix gen_cepd(const GenSpec& spec);

} // namespace cepd
