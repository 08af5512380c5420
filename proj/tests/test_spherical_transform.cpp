#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "sgl/indexing.hpp"
#include "sgl/special_functions.hpp"
#include "sgl/spherical_transform.hpp"

using namespace sgl;

namespace {

cvector random_complex(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    cvector v(n);
    for (auto& x : v) {
        x = {dist(rng), dist(rng)};
    }
    return v;
}

cvector sample_harmonic(int l, int m, const SphericalRule& rule) {
    const int count = 2 * rule.order;
    cvector g(static_cast<std::size_t>(count) * count);
    for (int j = 0; j < count; ++j) {
        for (int k = 0; k < count; ++k) {
            g[static_cast<std::size_t>(mu_index(j, k, rule.order))] =
                sph_harm(l, m, rule.theta[j], rule.phi[k]);
        }
    }
    return g;
}

cvector synthesize_random_bandlimited(const SphericalRule& rule, std::uint64_t seed) {
    const int L = rule.order;
    SphericalCoefficients c;
    c.order = L;
    c.values = random_complex(static_cast<std::size_t>(L) * L, seed);
    return sft_naive_inverse(c, rule);
}

double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

}  // namespace

TEST_CASE("naive forward picks out sampled harmonics") {
    const int L = 4;
    const auto rule = sphere_rule(L);
    const auto g = sample_harmonic(2, 1, rule);
    const auto coeffs = sft_naive_forward(g, L, rule);
    REQUIRE(coeffs.values.size() == 16);
    CHECK(nu_index(2, 1) == 7);
    for (int nu = 0; nu < 16; ++nu) {
        const double target = (nu == 7) ? 1.0 : 0.0;
        CHECK(std::abs(coeffs.values[nu] - target) < 1e-12);
    }
}

TEST_CASE("naive forward of Y_00 samples at several orders") {
    for (int L : {1, 2, 5}) {
        const auto rule = sphere_rule(L);
        const auto g = sample_harmonic(0, 0, rule);
        const auto coeffs = sft_naive_forward(g, L, rule);
        for (std::size_t nu = 0; nu < coeffs.values.size(); ++nu) {
            const double target = (nu == 0) ? 1.0 : 0.0;
            CHECK(std::abs(coeffs.values[nu] - target) < 1e-12);
        }
    }
}

TEST_CASE("naive forward of the zero grid") {
    const int L = 3;
    const auto rule = sphere_rule(L);
    cvector zero(static_cast<std::size_t>(4 * L * L), cplx(0.0));
    const auto coeffs = sft_naive_forward(zero, L, rule);
    for (const auto& v : coeffs.values) {
        CHECK(std::abs(v) == 0.0);
    }
}

TEST_CASE("naive inverse: unit coefficient, roundtrip, linearity") {
    const int L = 4;
    const auto rule = sphere_rule(L);

    SphericalCoefficients unit;
    unit.order = L;
    unit.values.assign(16, cplx(0.0));
    unit.values[0] = 1.0;
    const auto constant = sft_naive_inverse(unit, rule);
    for (const auto& v : constant) {
        CHECK(std::abs(v - 1.0 / std::sqrt(4.0 * std::numbers::pi)) < 1e-13);
    }

    const auto g = synthesize_random_bandlimited(rule, 17);
    const auto coeffs = sft_naive_forward(g, L, rule);
    const auto back = sft_naive_inverse(coeffs, rule);
    CHECK(max_abs_diff(g, back) < 1e-11);

    SphericalCoefficients c1, c2, mix;
    c1.order = c2.order = mix.order = L;
    c1.values = random_complex(16, 21);
    c2.values = random_complex(16, 22);
    mix.values.resize(16);
    const cplx alpha(0.3, 0.8);
    for (int i = 0; i < 16; ++i) {
        mix.values[i] = alpha * c1.values[i] + c2.values[i];
    }
    const auto g1 = sft_naive_inverse(c1, rule);
    const auto g2 = sft_naive_inverse(c2, rule);
    const auto gm = sft_naive_inverse(mix, rule);
    for (std::size_t i = 0; i < gm.size(); ++i) {
        CHECK(std::abs(gm[i] - (alpha * g1[i] + g2[i])) < 1e-12);
    }
}

TEST_CASE("Legendre table rows are truncated and match direct transforms") {
    const int L = 8;
    const auto table = LegendreDctTable::build(L);
    REQUIRE(table.rows.size() == 64);
    for (int l = 0; l < L; ++l) {
        for (int m = -l; m <= l; ++m) {
            CHECK(table.rows[static_cast<std::size_t>(nu_index(l, m))].size() ==
                  static_cast<std::size_t>(l) + 1);
        }
    }
    // beyond-truncation entries of the full transform vanish
    const auto rule = sphere_rule(L);
    const kernels::DctPlan cosine(2 * L, kernels::TrigMode::cosine);
    const kernels::DctPlan sine(2 * L, kernels::TrigMode::sine);
    for (int l = 0; l < L; ++l) {
        for (int m = -l; m <= l; ++m) {
            std::vector<double> p(2 * L), full(2 * L);
            for (int j = 0; j < 2 * L; ++j) {
                const double norm_sign =
                    (m < 0 && std::abs(m) % 2 != 0) ? -1.0 : 1.0;
                p[j] = norm_sign * sph_harm_norm(l, std::abs(m)) *
                       assoc_legendre(l, std::abs(m), std::cos(rule.theta[j]));
            }
            const auto& plan = (std::abs(m) % 2 == 0) ? cosine : sine;
            plan.forward(std::span<const double>(p), std::span<double>(full));
            const auto& row = table.rows[static_cast<std::size_t>(nu_index(l, m))];
            for (std::size_t q = 0; q < full.size(); ++q) {
                if (q < row.size()) {
                    CHECK(full[q] == doctest::Approx(row[q]).epsilon(1e-13).scale(1.0));
                } else {
                    CHECK(std::abs(full[q]) < 1e-12);
                }
            }
        }
    }
}

TEST_CASE("seminaive DLT equals the naive DLT") {
    const int L = 8;
    const auto plan = SftPlan::build(L);
    const auto t = random_complex(2 * L, 33);
    for (int m = -(L - 1); m < L; ++m) {
        cvector out(L - std::abs(m));
        dlt_seminaive(m, t, plan, out);
        for (int l = std::abs(m); l < L; ++l) {
            // direct summation against M_lm P_lm(cos theta_j)
            std::vector<double> row(2 * L);
            for (int j = 0; j < 2 * L; ++j) {
                const double sign = (m < 0 && std::abs(m) % 2 != 0) ? -1.0 : 1.0;
                row[j] = sign * sph_harm_norm(l, std::abs(m)) *
                         assoc_legendre(l, std::abs(m), std::cos(plan.rule.theta[j]));
            }
            const cplx ref = oracles::naive_dlt_term(row, {t.begin(), t.end()});
            CHECK(std::abs(out[l - std::abs(m)] - ref) < 1e-11);
        }
    }
}

TEST_CASE("seminaive DLT edge cases") {
    const int L = 5;
    const auto plan = SftPlan::build(L);
    const auto t = random_complex(2 * L, 34);
    cvector single(1);
    dlt_seminaive(L - 1, t, plan, single);  // one admissible l
    CHECK(single.size() == 1);
    cvector zero_in(2 * L, cplx(0.0)), out(L);
    dlt_seminaive(0, zero_in, plan, out);
    for (const auto& v : out) {
        CHECK(std::abs(v) == 0.0);
    }
    CHECK_THROWS_AS(dlt_seminaive(L, t, plan, out), std::invalid_argument);
}

TEST_CASE("seminaive forward equals naive forward") {
    for (int L : {2, 4, 8, 16}) {
        const auto plan = SftPlan::build(L);
        const auto g = random_complex(static_cast<std::size_t>(4 * L * L), 4000 + L);
        const auto fast = sft_seminaive_forward(g, plan);
        const auto naive = sft_naive_forward(g, L, plan.rule);
        CHECK(max_abs_diff(fast.values, naive.values) < 1e-11);
    }
}

TEST_CASE("seminaive inverse equals naive inverse") {
    for (int L : {2, 4, 8, 16}) {
        const auto plan = SftPlan::build(L);
        SphericalCoefficients c;
        c.order = L;
        c.values = random_complex(static_cast<std::size_t>(L) * L, 4100 + L);
        const auto fast = sft_seminaive_inverse(c, plan);
        const auto naive = sft_naive_inverse(c, plan.rule);
        CHECK(max_abs_diff(fast, naive) < 1e-11);
    }
}

TEST_CASE("seminaive roundtrip on bandlimited grids") {
    for (int L : {2, 4, 8}) {
        const auto plan = SftPlan::build(L);
        const auto g = synthesize_random_bandlimited(plan.rule, 600 + L);
        const auto coeffs = sft_seminaive_forward(g, plan);
        const auto back = sft_seminaive_inverse(coeffs, plan);
        CHECK(max_abs_diff(g, back) < 1e-10);
    }
}

TEST_CASE("seminaive inverse of the unit coefficient is constant") {
    const int L = 4;
    const auto plan = SftPlan::build(L);
    SphericalCoefficients c;
    c.order = L;
    c.values.assign(16, cplx(0.0));
    c.values[0] = 1.0;
    const auto g = sft_seminaive_inverse(c, plan);
    for (const auto& v : g) {
        CHECK(std::abs(v - 1.0 / std::sqrt(4.0 * std::numbers::pi)) < 1e-12);
    }
}

TEST_CASE("forward exactness for every harmonic at L = 8") {
    const int L = 8;
    const auto plan = SftPlan::build(L);
    for (int l = 0; l < L; ++l) {
        for (int m = -l; m <= l; ++m) {
            const auto g = sample_harmonic(l, m, plan.rule);
            const auto coeffs = sft_seminaive_forward(g, plan);
            for (int nu = 0; nu < L * L; ++nu) {
                const double target = (nu == nu_index(l, m)) ? 1.0 : 0.0;
                CHECK(std::abs(coeffs.values[nu] - target) < 1e-10);
            }
        }
    }
}

TEST_CASE("inverse matrix is the conjugate transpose of the weight-stripped forward") {
    const int L = 4;
    const auto plan = SftPlan::build(L);
    const int mu_count = 4 * L * L;
    const int nu_count = L * L;

    // forward matrix F[nu][mu] via unit grids
    std::vector<cvector> fwd(mu_count);
    for (int mu = 0; mu < mu_count; ++mu) {
        cvector e(mu_count, cplx(0.0));
        e[mu] = 1.0;
        fwd[mu] = sft_seminaive_forward(e, plan).values;
    }
    // inverse matrix G[mu][nu] via unit coefficients
    std::vector<cvector> inv(nu_count);
    for (int nu = 0; nu < nu_count; ++nu) {
        SphericalCoefficients c;
        c.order = L;
        c.values.assign(nu_count, cplx(0.0));
        c.values[nu] = 1.0;
        inv[nu] = sft_seminaive_inverse(c, plan);
    }
    for (int mu = 0; mu < mu_count; ++mu) {
        const int j = mu / (2 * L);
        for (int nu = 0; nu < nu_count; ++nu) {
            const cplx stripped = fwd[mu][nu] / plan.rule.b_cal[j];
            CHECK(std::abs(inv[nu][mu] - std::conj(stripped)) < 1e-12);
        }
    }
}

TEST_CASE("seminaive cost grows one power of L slower than naive") {
    const auto time_forward = [](int L, bool seminaive) {
        const auto plan = SftPlan::build(L);
        const auto g = random_complex(static_cast<std::size_t>(4 * L * L), 7000 + L);
        const auto t0 = std::chrono::steady_clock::now();
        if (seminaive) {
            (void)sft_seminaive_forward(g, plan);
        } else {
            (void)sft_naive_forward(g, L, plan.rule);
        }
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };
    const auto slope = [&](std::vector<int> orders, bool seminaive) {
        std::vector<double> lx, ly;
        for (int L : orders) {
            double best = 1e300;
            for (int rep = 0; rep < 3; ++rep) {
                best = std::min(best, time_forward(L, seminaive));
            }
            lx.push_back(std::log2(static_cast<double>(L)));
            ly.push_back(std::log2(best));
        }
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const auto n = static_cast<double>(lx.size());
        for (std::size_t i = 0; i < lx.size(); ++i) {
            sx += lx[i];
            sy += ly[i];
            sxx += lx[i] * lx[i];
            sxy += lx[i] * ly[i];
        }
        return (n * sxy - sx * sy) / (n * sxx - sx * sx);
    };
    const double semi = slope({16, 32, 64}, true);
    const double naive = slope({8, 16, 32}, false);
    MESSAGE("seminaive slope ", semi, ", naive slope ", naive);
    CHECK(semi < 3.9);
    CHECK(naive > 3.6);
    CHECK(naive - semi > 0.5);
}
