#pragma once

#include <span>

#include "sgl/quadrature.hpp"
#include "sgl/types.hpp"

namespace sgl {

/// Discrete R transform of order l for bandlimit B: analysis of radial node
/// data against the normalized radial functions. Given samples s_i at the
/// 2B half-range Hermite nodes,
///
///   out[n - l - 1] = sum_i { N_nl R_nl(r_i) e^{-r_i^2} } { a_mod_i s_i },
///   n = l+1 .. B.
///
/// Computed in O(B^2) by one recurrence ascent per node. rule.order must be
/// 2B and out must have length B - l.
void drt_forward(int l, int B, const RadialRule& rule, std::span<const cplx> s,
                 std::span<cplx> out);

/// Inverse discrete R transform: synthesis at the radial nodes,
///
///   out[i] = sum_{n=l+1..B} t[n - l - 1] N_nl R_nl(r_i),
///
/// evaluated with Clenshaw's backward recurrence in O(B^2). The exp(+-r^2)
/// factors are dropped here; drt_forward(drt_inverse(t)) = t by the Gaussian
/// exactness of the rule. out must have length 2B.
void drt_inverse(int l, int B, const RadialRule& rule, std::span<const cplx> t,
                 std::span<cplx> out);

/// Materializes R_l diag(a_i r_i^2) R_l^T and returns the maximum deviation
/// from the identity. Diagnostic for rule/recurrence consistency.
double radial_orthogonality_check(int l, int B, const RadialRule& rule);

}  // namespace sgl
