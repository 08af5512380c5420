#include "sgl/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sgl {

namespace {

void check_orders(int l, int m) {
    if (m < 0 || m > l) {
        throw std::domain_error("assoc_legendre: require 0 <= m <= l, got l=" +
                                std::to_string(l) + " m=" + std::to_string(m));
    }
}

}  // namespace

double assoc_legendre(int l, int m, double t) {
    check_orders(l, m);
    if (std::abs(t) > 1.0) {
        throw std::domain_error("assoc_legendre: argument must satisfy |t| <= 1");
    }
    // P_mm = (-1)^m (2m-1)!! (1-t^2)^{m/2}
    double pmm = 1.0;
    if (m > 0) {
        const double s = std::sqrt((1.0 - t) * (1.0 + t));
        double fact = 1.0;
        for (int i = 0; i < m; ++i) {
            pmm *= -fact * s;
            fact += 2.0;
        }
    }
    if (l == m) {
        return pmm;
    }
    double pm1 = pmm;                        // P_{m,m}
    double p = t * (2 * m + 1) * pmm;        // P_{m+1,m}
    for (int ll = m + 2; ll <= l; ++ll) {
        const double next = ((2 * ll - 1) * t * p - (ll - 1 + m) * pm1) / (ll - m);
        pm1 = p;
        p = next;
    }
    return p;
}

double assoc_legendre_signed(int l, int m, double t) {
    if (m >= 0) {
        return assoc_legendre(l, m, t);
    }
    if (-m > l) {
        throw std::domain_error("assoc_legendre_signed: require |m| <= l");
    }
    const int am = -m;
    const double ratio =
        std::exp(std::lgamma(static_cast<double>(l - am + 1)) -
                 std::lgamma(static_cast<double>(l + am + 1)));
    const double sign = (am % 2 == 0) ? 1.0 : -1.0;
    return sign * ratio * assoc_legendre(l, am, t);
}

double gen_laguerre(int k, double alpha, double t) {
    if (k < 0) {
        throw std::domain_error("gen_laguerre: degree must be nonnegative");
    }
    if (k == 0) {
        return 1.0;
    }
    double prev = 1.0;             // L_0
    double cur = alpha + 1.0 - t;  // L_1
    for (int j = 1; j < k; ++j) {
        const double next = ((2 * j + alpha + 1.0 - t) * cur - (j + alpha) * prev) / (j + 1);
        prev = cur;
        cur = next;
    }
    return cur;
}

double sph_harm_norm(int l, int m) {
    if (l < 0 || std::abs(m) > l) {
        throw std::domain_error("sph_harm_norm: require |m| <= l");
    }
    const double log_ratio = std::lgamma(static_cast<double>(l - m + 1)) -
                             std::lgamma(static_cast<double>(l + m + 1));
    return std::sqrt((2 * l + 1) / (4.0 * std::numbers::pi) * std::exp(log_ratio));
}

std::complex<double> sph_harm(int l, int m, double theta, double phi) {
    if (theta < 0.0 || theta > std::numbers::pi) {
        throw std::domain_error("sph_harm: theta must lie in [0, pi]");
    }
    if (phi < 0.0 || phi >= 2.0 * std::numbers::pi) {
        throw std::domain_error("sph_harm: phi must lie in [0, 2 pi)");
    }
    const int am = std::abs(m);
    if (am > l) {
        throw std::domain_error("sph_harm: require |m| <= l");
    }
    const double base = sph_harm_norm(l, am) * assoc_legendre(l, am, std::cos(theta));
    const std::complex<double> y =
        base * std::complex<double>(std::cos(am * phi), std::sin(am * phi));
    if (m >= 0) {
        return y;
    }
    return (am % 2 == 0) ? std::conj(y) : -std::conj(y);
}

double norm_const(int n, int l) {
    if (l < 0 || n <= l) {
        throw std::domain_error("norm_const: require 0 <= l < n");
    }
    const double log_val = std::numbers::ln2 + std::lgamma(static_cast<double>(n - l)) -
                           std::lgamma(n + 0.5);
    return std::exp(0.5 * log_val);
}

double radial_raw(int n, int l, double r) {
    if (l < 0 || n <= l) {
        throw std::domain_error("radial_raw: require 0 <= l < n");
    }
    if (r < 0.0) {
        throw std::domain_error("radial_raw: radius must be nonnegative");
    }
    return gen_laguerre(n - l - 1, l + 0.5, r * r) * std::pow(r, l);
}

namespace detail {

double radial_from_seed(int n, int l, double r, double seed_value) {
    const double r2 = r * r;
    double prev = 0.0;         // N_ll R_ll = 0
    double cur = seed_value;   // N_{l+1,l} R_{l+1,l}
    for (int nn = l + 1; nn < n; ++nn) {
        const double a = (2 * nn - l - 0.5 - r2) / std::sqrt((nn + 0.5) * (nn - l));
        const double b = std::sqrt((nn - 0.5) / (nn + 0.5) *
                                   (static_cast<double>(nn - l - 1) / (nn - l)));
        const double next = a * cur - b * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace detail

namespace {

double radial_impl(int n, int l, double r, bool decayed) {
    if (l < 0 || n < l) {
        throw std::domain_error("radial_normalized: require 0 <= l <= n");
    }
    if (r < 0.0) {
        throw std::domain_error("radial_normalized: radius must be nonnegative");
    }
    if (n == l) {
        return 0.0;
    }
    double seed = std::sqrt(2.0 * std::exp(-std::lgamma(l + 1.5)));
    for (int i = 0; i < l; ++i) {
        seed *= r;
    }
    if (decayed) {
        seed *= std::exp(-r * r);
    }
    return detail::radial_from_seed(n, l, r, seed);
}

}  // namespace

double radial_normalized(int n, int l, double r) { return radial_impl(n, l, r, false); }

double radial_normalized_decayed(int n, int l, double r) { return radial_impl(n, l, r, true); }

std::complex<double> sgl_basis(int n, int l, int m, double r, double theta, double phi) {
    if (l >= n) {
        throw std::domain_error("sgl_basis: require l < n");
    }
    return radial_normalized(n, l, r) * sph_harm(l, m, theta, phi);
}

}  // namespace sgl
