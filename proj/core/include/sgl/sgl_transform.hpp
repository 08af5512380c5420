#pragma once

#include <cstddef>
#include <filesystem>
#include <span>

#include "sgl/quadrature.hpp"
#include "sgl/spherical_transform.hpp"
#include "sgl/types.hpp"

namespace sgl {

/// SGL Fourier coefficients f_hat_nlm for |m| <= l < n <= B, stored in
/// omega-order; length B(B+1)(2B+1)/6.
struct SglCoefficients {
    int bandlimit = 0;
    cvector values;
};

/// Function samples f(r_i, theta_j, phi_k) on the 2B x 2B x 2B product grid,
/// stored in psi-order; length 8B^3.
struct SampleGrid {
    int bandlimit = 0;
    cvector values;
};

/// Immutable bundle of everything the transforms need at a fixed bandlimit:
/// the half-range Hermite rule of order 2B, the spherical plan of order B,
/// and a few precomputed per-node and per-order constants.
struct TransformPlan {
    int bandlimit = 0;
    RadialRule radial;           // order 2B
    SftPlan sphere;              // order B
    std::vector<double> exp_neg_r2;  // e^{-r_i^2} per radial node
    std::vector<double> cos_theta;   // cos(theta_j), the transformed polar angles
    std::vector<double> seed_norm;   // sqrt(2/Gamma(l+3/2)) per l < B
    std::vector<double> m_norm;      // M_lm per nu(l, m), sign-folded for m < 0

    /// Generates all tables in place. The radial rule generation runs in
    /// extended precision and dominates the cost for large B.
    static TransformPlan compute(int B);

    /// Builds the plan from tables persisted by precompute_all().
    static TransformPlan from_tables(const std::filesystem::path& dir, int B);

    /// Validates cross-consistency of the bundled tables.
    static TransformPlan assemble(int B, RadialRule radial, SphericalRule sphere,
                                  LegendreDctTable table);
};

/// Naive discrete SGL Fourier transform: evaluates the sampling-theorem
/// triple sum coefficient by coefficient, with every basis value freshly
/// produced by the three-term recurrences. O(B^7).
SglCoefficients dsglft_naive(const SampleGrid& grid, const TransformPlan& plan,
                             unsigned threads = 1);

/// Naive inverse: synthesizes sum f_hat_nlm H_nlm at every node. O(B^7).
SampleGrid idsglft_naive(const SglCoefficients& coeffs, const TransformPlan& plan,
                         unsigned threads = 1);

/// Separation of variables without fast subtransforms: per-shell naive
/// spherical analysis, then naive radial matrix products. O(B^6); serves as
/// the middle rung of the oracle chain.
SglCoefficients dsglft_separated(const SampleGrid& grid, const TransformPlan& plan,
                                 unsigned threads = 1);
SampleGrid idsglft_separated(const SglCoefficients& coeffs, const TransformPlan& plan,
                             unsigned threads = 1);

/// Fast SGL Fourier transform: seminaive spherical transform per shell, then
/// the discrete R transform per (m, l). O(B^4).
SglCoefficients fsglft(const SampleGrid& grid, const TransformPlan& plan, unsigned threads = 1);

/// Fast inverse: inverse DRT per (m, l), then the seminaive inverse
/// spherical transform per shell. O(B^4).
SampleGrid ifsglft(const SglCoefficients& coeffs, const TransformPlan& plan,
                   unsigned threads = 1);

struct RoundtripError {
    double max_abs = 0.0;
    double max_rel = 0.0;
    std::size_t skipped_zero = 0;  // reference entries with |f_hat| = 0, excluded from max_rel
};

/// Max absolute and relative deviation between a reference coefficient
/// vector and a reconstructed one.
RoundtripError roundtrip_error(std::span<const cplx> reference, std::span<const cplx> actual);

/// Samples H_nlm on the plan's grid (psi-order). Test and diagnostic aid.
SampleGrid sample_sgl_basis(int n, int l, int m, const TransformPlan& plan);

}  // namespace sgl
