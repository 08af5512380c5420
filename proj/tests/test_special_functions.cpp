#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "sgl/special_functions.hpp"

using namespace sgl;
using doctest::Approx;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("assoc_legendre pinned values") {
    CHECK(assoc_legendre(0, 0, 0.3) == Approx(1.0));
    CHECK(assoc_legendre(1, 1, 0.0) == Approx(-1.0));
    CHECK(assoc_legendre(2, 0, 1.0) == Approx(1.0));
}

TEST_CASE("assoc_legendre domain errors") {
    CHECK_THROWS_AS(assoc_legendre(1, 0, 1.5), std::domain_error);
    CHECK_THROWS_AS(assoc_legendre(1, 2, 0.5), std::domain_error);
    CHECK_THROWS_AS(assoc_legendre(2, -1, 0.5), std::domain_error);
}

TEST_CASE("assoc_legendre matches the Rodrigues formula") {
    for (int l = 0; l <= 8; ++l) {
        for (int m = 0; m <= l; ++m) {
            for (int s = 0; s <= 20; ++s) {
                const double t = -1.0 + 0.1 * s;
                const double ref = oracles::rodrigues_legendre(l, m, t);
                CHECK(assoc_legendre(l, m, t) == Approx(ref).epsilon(1e-12).scale(1.0));
            }
        }
    }
}

TEST_CASE("assoc_legendre satisfies the three-term recurrence to 1e-12") {
    for (int l = 1; l <= 64; ++l) {
        for (int m = 0; m <= l - 1; ++m) {
            for (int s = 0; s <= 10; ++s) {
                const double t = -1.0 + 0.2 * s;
                const double lhs = (l + 1 - m) * assoc_legendre(l + 1, m, t);
                const double rhs = (2 * l + 1) * t * assoc_legendre(l, m, t) -
                                   (l + m) * assoc_legendre(l - 1, m, t);
                CHECK(lhs == Approx(rhs).epsilon(1e-12).scale(std::max(1.0, std::abs(rhs))));
            }
        }
    }
}

TEST_CASE("assoc_legendre_signed pinned values and symmetry") {
    CHECK(assoc_legendre_signed(1, -1, 0.0) == Approx(0.5));
    // (2,-2,0): symmetry gives 0!/4! * P_22(0) = 3/24 = 1/8, confirmed by the
    // Rodrigues oracle.
    CHECK(oracles::rodrigues_legendre(2, -2, 0.0) == Approx(0.125));
    CHECK(assoc_legendre_signed(2, -2, 0.0) == Approx(0.125));
    for (int l = 0; l <= 6; ++l) {
        CHECK(assoc_legendre_signed(l, 0, 0.37) == Approx(assoc_legendre(l, 0, 0.37)));
    }
    for (int l = 0; l <= 8; ++l) {
        for (int m = -l; m <= l; ++m) {
            for (int s = 0; s <= 10; ++s) {
                const double t = -0.95 + 0.19 * s;
                const double ref = oracles::rodrigues_legendre(l, m, t);
                CHECK(assoc_legendre_signed(l, m, t) == Approx(ref).epsilon(1e-12).scale(1.0));
            }
        }
    }
}

TEST_CASE("gen_laguerre pinned values") {
    CHECK(gen_laguerre(0, 0.5, 3.7) == Approx(1.0));
    CHECK(gen_laguerre(1, 0.5, 1.0) == Approx(0.5));
    // Closed-form sum at t = 0 gives binom(k + alpha, k) = 15/8 for k = 2,
    // alpha = 1/2.
    CHECK(oracles::laguerre_closed_form(2, 0.5, 0.0) == Approx(15.0 / 8.0));
    CHECK(gen_laguerre(2, 0.5, 0.0) == Approx(15.0 / 8.0));
}

TEST_CASE("gen_laguerre recurrence matches closed form") {
    for (int k = 0; k <= 12; ++k) {
        for (double alpha : {0.5, 1.5, 2.5}) {
            for (int s = 0; s < 50; ++s) {
                const double t = 20.0 * s / 49.0;
                const double ref = oracles::laguerre_closed_form(k, alpha, t);
                CHECK(gen_laguerre(k, alpha, t) ==
                      Approx(ref).epsilon(1e-10).scale(std::max(1.0, std::abs(ref))));
            }
        }
    }
}

TEST_CASE("sph_harm pinned values") {
    CHECK(sph_harm(0, 0, 1.0, 2.0).real() == Approx(1.0 / std::sqrt(4.0 * kPi)));
    CHECK(sph_harm(0, 0, 1.0, 2.0).imag() == Approx(0.0));
    CHECK(sph_harm(1, 0, 0.0, 0.0).real() == Approx(std::sqrt(3.0 / (4.0 * kPi))));
}

TEST_CASE("sph_harm angle domain errors") {
    CHECK_THROWS_AS(sph_harm(1, 0, -0.1, 0.0), std::domain_error);
    CHECK_THROWS_AS(sph_harm(1, 0, 3.5, 0.0), std::domain_error);
    CHECK_THROWS_AS(sph_harm(1, 0, 1.0, -0.1), std::domain_error);
    CHECK_THROWS_AS(sph_harm(1, 0, 1.0, 2.0 * kPi), std::domain_error);
}

TEST_CASE("sph_harm conjugation symmetry") {
    for (int l = 0; l <= 16; ++l) {
        for (int m = 0; m <= l; ++m) {
            for (int a = 0; a < 10; ++a) {
                for (int b = 0; b < 10; ++b) {
                    const double theta = kPi * (a + 0.5) / 10.0;
                    const double phi = 2.0 * kPi * b / 10.0;
                    const auto lhs = sph_harm(l, -m, theta, phi);
                    const auto rhs = (m % 2 == 0 ? 1.0 : -1.0) * std::conj(sph_harm(l, m, theta, phi));
                    CHECK(std::abs(lhs - rhs) < 1e-12);
                }
            }
        }
    }
}

TEST_CASE("sph_harm against the Rodrigues reference") {
    for (int l = 0; l <= 8; ++l) {
        for (int m = -l; m <= l; ++m) {
            const double theta = 1.234;
            const double phi = 4.321;
            const auto ref = oracles::sph_harm_reference(l, m, theta, phi);
            CHECK(std::abs(sph_harm(l, m, theta, phi) - ref) < 1e-12);
        }
    }
}

TEST_CASE("norm_const pinned values and positivity") {
    CHECK(norm_const(1, 0) == Approx(std::sqrt(4.0 / std::sqrt(kPi))));
    CHECK(norm_const(2, 1) == Approx(std::sqrt(2.0 / std::tgamma(2.5))));
    for (int n = 1; n <= 128; ++n) {
        for (int l = 0; l < n; ++l) {
            CHECK(norm_const(n, l) > 0.0);
        }
    }
    // stays finite well beyond the supported transform range
    for (int n = 129; n <= 256; n += 16) {
        CHECK(std::isfinite(norm_const(n, n / 2)));
    }
    CHECK_THROWS_AS(norm_const(2, 2), std::domain_error);
}

TEST_CASE("radial values: seeds, closed form, decay fusion") {
    // R_ll is identically zero in the recurrence convention.
    CHECK(radial_normalized(3, 3, 1.7) == Approx(0.0));
    // n = l + 1 hits the seed exactly.
    for (double r : {0.0, 0.5, 1.3, 2.9}) {
        CHECK(radial_normalized(1, 0, r) == Approx(std::sqrt(2.0 / std::tgamma(1.5))));
    }
    CHECK(radial_raw(2, 0, 1.0) == Approx(0.5));
    CHECK_THROWS_AS(radial_normalized(2, 3, 1.0), std::domain_error);
    CHECK_THROWS_AS(radial_raw(2, 2, 1.0), std::domain_error);

    // Normalized recurrence equals N_nl times the closed-form assembly.
    for (int n = 1; n <= 12; ++n) {
        for (int l = 0; l < n; ++l) {
            for (double r : {0.1, 0.9, 2.2, 4.0}) {
                const double ref = norm_const(n, l) * oracles::laguerre_closed_form(
                                                          n - l - 1, l + 0.5, r * r) *
                                   std::pow(r, l);
                CHECK(radial_normalized(n, l, r) ==
                      Approx(ref).epsilon(1e-11).scale(std::max(1.0, std::abs(ref))));
                CHECK(radial_normalized_decayed(n, l, r) ==
                      Approx(ref * std::exp(-r * r))
                          .epsilon(1e-11)
                          .scale(std::max(1.0, std::abs(ref * std::exp(-r * r)))));
            }
        }
    }
}

TEST_CASE("radial part is a polynomial in r^2 times r^l") {
    for (int n = 1; n <= 8; ++n) {
        for (int l = 0; l < n; ++l) {
            for (double r : {0.3, 1.1, 2.5}) {
                const double direct = radial_raw(n, l, r);
                const double via_laguerre = gen_laguerre(n - l - 1, l + 0.5, r * r) * std::pow(r, l);
                CHECK(direct == Approx(via_laguerre).epsilon(1e-13).scale(
                                    std::max(1.0, std::abs(via_laguerre))));
            }
        }
    }
}

TEST_CASE("sgl_basis pinned values") {
    const double ref = std::pow(kPi, -0.75);
    CHECK(sgl_basis(1, 0, 0, 0.7, 0.8, 0.9).real() == Approx(ref));
    CHECK(sgl_basis(1, 0, 0, 3.0, 2.0, 1.0).real() == Approx(ref));
    // P_lm(1) = 0 for m != 0, so the basis vanishes on the polar axis.
    CHECK(std::abs(sgl_basis(3, 2, 1, 1.1, 0.0, 0.4)) == Approx(0.0));
    CHECK(std::abs(sgl_basis(3, 2, -2, 1.1, 0.0, 0.4)) == Approx(0.0));
    CHECK_THROWS_AS(sgl_basis(1, 1, 0, 1.0, 1.0, 1.0), std::domain_error);
}
