#pragma once

#include <stdexcept>
#include <vector>

namespace sgl {

/// Equiangular quadrature rule of order L on the unit sphere.
///
/// theta[j] = (2j+1) pi / 4L and phi[k] = k pi / L for j, k = 0..2L-1. b_raw
/// holds the closed-form polar weights; b_cal = (pi / L) * b_raw carries the
/// azimuthal step so that the discrete rule reproduces exact spherical inner
/// products for polynomials of degree < L.
struct SphericalRule {
    int order = 0;
    std::vector<double> theta;
    std::vector<double> phi;
    std::vector<double> b_raw;
    std::vector<double> b_cal;
};

/// Gaussian quadrature rule of order N for the weight exp(-r^2) on [0, inf).
///
/// Nodes are the simple positive roots of the Nth orthogonal polynomial for
/// that weight; the rule integrates polynomials of degree <= 2N-1 exactly.
/// a_mod[i] = a[i] * exp(r[i]^2) * r[i]^2 compensates the decay of the
/// weights in the forward transforms.
struct RadialRule {
    int order = 0;
    std::vector<double> r;
    std::vector<double> a;
    std::vector<double> a_mod;
};

/// Raised when rule generation detects an ill-conditioned or failed solve
/// (loss of weight positivity, non-converging eigensolve, unsupported order).
struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Largest supported half-range Hermite order. Generation beyond this is
/// refused rather than silently degraded.
inline constexpr int kMaxRadialOrder = 128;

SphericalRule sphere_rule(int L);

/// Generates the half-range Gauss-Hermite rule. The monic recurrence
/// coefficients are derived from the analytic moments Gamma((k+1)/2)/2 in
/// extended precision, nodes and weights come from the Golub-Welsch
/// eigenproblem solved in the same precision, and the result is rounded to
/// doubles.
RadialRule half_range_hermite_rule(int N);

/// a_mod recomputed from (r, a) in log space: exp(log a + r^2 + 2 log r).
std::vector<double> modified_radial_weights(const RadialRule& rule);

/// Analytic moment of the half-range Hermite weight, Gamma((k+1)/2)/2.
double half_range_hermite_moment(int k);

}  // namespace sgl
