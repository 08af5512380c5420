#pragma once

#include <array>
#include <cstddef>
#include <utility>

namespace sgl {

/// Canonical linear layouts for a fixed bandlimit B.
///
/// Sample grids are stored in psi-order (shell-major: radius i, then polar
/// angle j, then azimuth k) and coefficient vectors in omega-order (degree n,
/// then l, then m). All transforms and file formats use these orders; nothing
/// reorders silently.
struct Layout {
    int bandlimit;

    explicit Layout(int B);

    /// Psi = 8 B^3
    std::size_t sample_count() const;
    /// Omega = B (B+1) (2B+1) / 6
    std::size_t coefficient_count() const;
};

std::size_t sample_count(int B);
std::size_t coefficient_count(int B);

/// mu = 2Bj + k, enumerating the sampling angles (theta_j, phi_k).
int mu_index(int j, int k, int B);
/// psi = 4B^2 i + 2B j + k, enumerating the sampling points (r_i, theta_j, phi_k).
int psi_index(int i, int j, int k, int B);
/// nu = l(l+1) + m, enumerating the spherical harmonics Y_lm, |m| <= l.
int nu_index(int l, int m);
/// omega = n(n-1)(2n-1)/6 + l(l+1) + m, enumerating the basis functions H_nlm.
int omega_index(int n, int l, int m);

std::pair<int, int> mu_inverse(int mu, int B);
std::array<int, 3> psi_inverse(int psi, int B);
std::pair<int, int> nu_inverse(int nu);
std::array<int, 3> omega_inverse(int omega);

}  // namespace sgl
