#pragma once

#include <span>
#include <vector>

#include "sgl/kernels.hpp"
#include "sgl/quadrature.hpp"
#include "sgl/types.hpp"

namespace sgl {

/// Spherical Fourier coefficients of order L: values[nu(l, m)] holds
/// <g, Y_lm> for |m| <= l < L.
struct SphericalCoefficients {
    int order = 0;
    cvector values;
};

/// Cosine/sine-transformed Legendre vectors for the seminaive transform.
///
/// Row nu(l, m) stores the leading l+1 entries of T (M_lm P_lm(cos theta_j)),
/// where T is the orthogonal cosine transform for even m and the sine
/// transform for odd m; the remaining entries vanish because P_lm(cos theta)
/// is a trigonometric polynomial of degree l. The normalization M_lm is
/// folded in. The rows do not depend on the transform input and are shared
/// by the forward and inverse paths.
struct LegendreDctTable {
    int order = 0;
    std::vector<std::vector<double>> rows;

    static LegendreDctTable build(int L);
};

/// Everything the seminaive spherical transform needs at a fixed order.
struct SftPlan {
    int order = 0;
    SphericalRule rule;
    LegendreDctTable table;
    kernels::DctPlan cosine;
    kernels::DctPlan sine;
    kernels::DftPlan azimuth;
    // Order m -> row in the block work matrix (even-m block first, so each
    // block feeds one batched cosine/sine transform).
    std::vector<int> block_row;
    int even_rows = 0;

    static SftPlan build(int L);
    static SftPlan assemble(SphericalRule rule, LegendreDctTable table);
};

/// Direct quadrature forward transform: coefficients <g, Y_lm> from samples
/// on the 2L x 2L equiangular grid (mu-order), using the calibrated weights.
/// Exact for spherical polynomials of degree < L.
SphericalCoefficients sft_naive_forward(std::span<const cplx> samples, int L,
                                        const SphericalRule& rule);

/// Direct synthesis g(theta_j, phi_k) = sum coeff * Y_lm at the grid nodes.
cvector sft_naive_inverse(const SphericalCoefficients& coeffs, const SphericalRule& rule);

/// Seminaive discrete Legendre transform for a fixed order m: given t_j
/// (already carrying the b_cal weighting), returns
/// M_lm sum_j P_lm(cos theta_j) t_j for l = |m| .. L-1 as truncated inner
/// products in transformed space. out must have length L - |m|.
void dlt_seminaive(int m, std::span<const cplx> t, const SftPlan& plan, std::span<cplx> out);

/// Seminaive forward transform: azimuthal DFT per ring, then the truncated
/// DLT per order m. Matches sft_naive_forward.
SphericalCoefficients sft_seminaive_forward(std::span<const cplx> samples, const SftPlan& plan);

/// Seminaive inverse: per-m synthesis through the transposed table (weights
/// omitted), inverse cosine/sine transform, then azimuthal synthesis.
cvector sft_seminaive_inverse(const SphericalCoefficients& coeffs, const SftPlan& plan);

/// Allocation-free variants writing into caller buffers (length L^2 and
/// 4L^2 respectively); the shell loops of the composed transforms use these.
void sft_seminaive_forward_into(std::span<const cplx> samples, const SftPlan& plan,
                                std::span<cplx> out);
void sft_seminaive_inverse_into(std::span<const cplx> coeffs, const SftPlan& plan,
                                std::span<cplx> out);

}  // namespace sgl
