#pragma once

#include <complex>

namespace sgl {

/// Associated Legendre polynomial P_lm(t) for 0 <= m <= l, |t| <= 1, in the
/// Rodrigues convention with the (-1)^m Condon-Shortley factor. Seeded at
/// P_mm and ascended in l via the three-term recurrence.
double assoc_legendre(int l, int m, double t);

/// P_lm(t) for any |m| <= l. Negative orders use the symmetry
/// P_{l,-m} = (-1)^m (l-m)!/(l+m)! P_{lm}.
double assoc_legendre_signed(int l, int m, double t);

/// Generalized Laguerre polynomial L_k^(alpha)(t), upward three-term
/// recurrence from L_0 = 1, L_1 = alpha + 1 - t.
double gen_laguerre(int k, double alpha, double t);

/// Normalization constant of the spherical harmonic,
/// sqrt((2l+1)/(4 pi) * (l-m)!/(l+m)!), evaluated in log space.
double sph_harm_norm(int l, int m);

/// Spherical harmonic Y_lm(theta, phi), theta in [0, pi], phi in [0, 2 pi).
std::complex<double> sph_harm(int l, int m, double theta, double phi);

/// N_nl = sqrt(2 (n-l-1)! / Gamma(n + 1/2)), evaluated in log space.
double norm_const(int n, int l);

/// Raw radial part R_nl(r) = L_{n-l-1}^{(l+1/2)}(r^2) r^l. Testing aid; the
/// transforms consume the normalized recurrence below.
double radial_raw(int n, int l, double r);

/// Normalized radial value N_nl R_nl(r), computed by ascending the radial
/// three-term recurrence from the seed sqrt(2/Gamma(l+3/2)) r^l (the seed
/// already carries N_{l+1,l}). n == l returns 0.
double radial_normalized(int n, int l, double r);

/// N_nl R_nl(r) exp(-r^2), with the decay fused into the recurrence seed so
/// intermediate magnitudes stay bounded at large r.
double radial_normalized_decayed(int n, int l, double r);

/// SGL basis function H_nlm(r, theta, phi) = N_nl R_nl(r) Y_lm(theta, phi).
std::complex<double> sgl_basis(int n, int l, int m, double r, double theta, double phi);

namespace detail {

/// Recurrence ascent for N_nl R_nl(r) from a caller-supplied value of the
/// seed N_{l+1,l} R_{l+1,l}(r) (optionally pre-scaled, e.g. by exp(-r^2)).
double radial_from_seed(int n, int l, double r, double seed_value);

}  // namespace detail

}  // namespace sgl
