#include "sgl/spherical_transform.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "sgl/indexing.hpp"
#include "sgl/special_functions.hpp"

namespace sgl {

namespace {

void check_grid(std::size_t samples, int L) {
    if (L < 1) {
        throw std::invalid_argument("spherical transform: order must be positive");
    }
    if (samples != static_cast<std::size_t>(4 * L * L)) {
        throw std::invalid_argument("spherical transform: expected a 2L x 2L sample grid");
    }
}

void check_coeffs(const SphericalCoefficients& c) {
    if (c.order < 1 || c.values.size() != static_cast<std::size_t>(c.order) * c.order) {
        throw std::invalid_argument("spherical transform: coefficient vector must have length L^2");
    }
}

}  // namespace

LegendreDctTable LegendreDctTable::build(int L) {
    if (L < 1) {
        throw std::invalid_argument("LegendreDctTable: order must be positive");
    }
    const SphericalRule rule = sphere_rule(L);
    const int count = 2 * L;
    const kernels::DctPlan cosine(count, kernels::TrigMode::cosine);
    const kernels::DctPlan sine(count, kernels::TrigMode::sine);

    LegendreDctTable table;
    table.order = L;
    table.rows.resize(static_cast<std::size_t>(L) * L);

    // For each m, ascend l with the Legendre three-term recurrence applied to
    // whole sample vectors, then transform and truncate at l+1 entries.
    std::vector<double> cos_theta(count);
    for (int j = 0; j < count; ++j) {
        cos_theta[j] = std::cos(rule.theta[j]);
    }
    std::vector<double> pmm(count), plo(count), phi(count), transformed(count);
    for (int m = -(L - 1); m < L; ++m) {
        const int am = std::abs(m);
        for (int j = 0; j < count; ++j) {
            pmm[j] = assoc_legendre(am, am, cos_theta[j]);
        }
        plo.assign(count, 0.0);
        std::vector<double>* cur = &pmm;
        std::vector<double>* prev = &plo;
        for (int l = am; l < L; ++l) {
            // M_{l,-m} P_{l,-m} = (-1)^m M_{lm} P_{lm}, so negative orders
            // reuse the positive-order vector with a sign.
            std::vector<double> scaled(count);
            const double mlm = sph_harm_norm(l, am);
            const double sign = (m < 0 && am % 2 != 0) ? -1.0 : 1.0;
            for (int j = 0; j < count; ++j) {
                scaled[j] = sign * mlm * (*cur)[j];
            }
            const kernels::DctPlan& t = (am % 2 == 0) ? cosine : sine;
            t.forward(std::span<const double>(scaled), std::span<double>(transformed));
            table.rows[static_cast<std::size_t>(nu_index(l, m))] =
                std::vector<double>(transformed.begin(), transformed.begin() + l + 1);

            // advance (P_lm, P_{l-1,m}) -> (P_{l+1,m}, P_lm)
            if (l + 1 < L) {
                for (int j = 0; j < count; ++j) {
                    const double next =
                        ((2 * l + 1) * cos_theta[j] * (*cur)[j] - (l + am) * (*prev)[j]) /
                        (l + 1 - am);
                    (*prev)[j] = next;
                }
                std::swap(cur, prev);
            }
        }
    }
    return table;
}

SftPlan SftPlan::build(int L) { return assemble(sphere_rule(L), LegendreDctTable::build(L)); }

SftPlan SftPlan::assemble(SphericalRule rule, LegendreDctTable table) {
    if (rule.order != table.order) {
        throw std::invalid_argument("SftPlan: rule and table orders disagree");
    }
    const int L = rule.order;
    SftPlan plan{L,
                 std::move(rule),
                 std::move(table),
                 kernels::DctPlan(2 * L, kernels::TrigMode::cosine),
                 kernels::DctPlan(2 * L, kernels::TrigMode::sine),
                 kernels::DftPlan(2 * L),
                 {},
                 0};
    plan.block_row.resize(2 * L - 1);
    int even = 0, odd = 0;
    for (int m = -(L - 1); m < L; ++m) {
        if (std::abs(m) % 2 == 0) {
            plan.block_row[m + L - 1] = even++;
        } else {
            ++odd;
        }
    }
    plan.even_rows = even;
    int next_odd = even;
    for (int m = -(L - 1); m < L; ++m) {
        if (std::abs(m) % 2 != 0) {
            plan.block_row[m + L - 1] = next_odd++;
        }
    }
    return plan;
}

SphericalCoefficients sft_naive_forward(std::span<const cplx> samples, int L,
                                        const SphericalRule& rule) {
    check_grid(samples.size(), L);
    if (rule.order != L) {
        throw std::invalid_argument("sft_naive_forward: rule order mismatch");
    }
    SphericalCoefficients out;
    out.order = L;
    out.values.assign(static_cast<std::size_t>(L) * L, cplx(0.0));
    const int count = 2 * L;
    for (int l = 0; l < L; ++l) {
        for (int m = -l; m <= l; ++m) {
            cplx acc = 0.0;
            for (int j = 0; j < count; ++j) {
                for (int k = 0; k < count; ++k) {
                    acc += rule.b_cal[j] * samples[static_cast<std::size_t>(mu_index(j, k, L))] *
                           std::conj(sph_harm(l, m, rule.theta[j], rule.phi[k]));
                }
            }
            out.values[static_cast<std::size_t>(nu_index(l, m))] = acc;
        }
    }
    return out;
}

cvector sft_naive_inverse(const SphericalCoefficients& coeffs, const SphericalRule& rule) {
    check_coeffs(coeffs);
    const int L = coeffs.order;
    if (rule.order != L) {
        throw std::invalid_argument("sft_naive_inverse: rule order mismatch");
    }
    const int count = 2 * L;
    cvector out(static_cast<std::size_t>(count) * count, cplx(0.0));
    for (int j = 0; j < count; ++j) {
        for (int k = 0; k < count; ++k) {
            cplx acc = 0.0;
            for (int l = 0; l < L; ++l) {
                for (int m = -l; m <= l; ++m) {
                    acc += coeffs.values[static_cast<std::size_t>(nu_index(l, m))] *
                           sph_harm(l, m, rule.theta[j], rule.phi[k]);
                }
            }
            out[static_cast<std::size_t>(mu_index(j, k, L))] = acc;
        }
    }
    return out;
}

void dlt_seminaive(int m, std::span<const cplx> t, const SftPlan& plan, std::span<cplx> out) {
    const int L = plan.order;
    if (std::abs(m) >= L) {
        throw std::invalid_argument("dlt_seminaive: order m out of range");
    }
    const int count = 2 * L;
    if (t.size() != static_cast<std::size_t>(count) ||
        out.size() != static_cast<std::size_t>(L - std::abs(m))) {
        throw std::invalid_argument("dlt_seminaive: buffer length mismatch");
    }
    thread_local cvector transformed;
    transformed.resize(count);
    const kernels::DctPlan& kernel = (std::abs(m) % 2 == 0) ? plan.cosine : plan.sine;
    kernel.forward(t, std::span<cplx>(transformed.data(), count));
    for (int l = std::abs(m); l < L; ++l) {
        const auto& row = plan.table.rows[static_cast<std::size_t>(nu_index(l, m))];
        cplx acc = 0.0;
        for (std::size_t idx = 0; idx < row.size(); ++idx) {
            acc += transformed[idx] * row[idx];
        }
        out[l - std::abs(m)] = acc;
    }
}

void sft_seminaive_forward_into(std::span<const cplx> samples, const SftPlan& plan,
                                std::span<cplx> out) {
    const int L = plan.order;
    check_grid(samples.size(), L);
    if (out.size() != static_cast<std::size_t>(L) * L) {
        throw std::invalid_argument("sft_seminaive_forward: output must have length L^2");
    }
    const int count = 2 * L;

    // Ring-wise azimuthal DFT: rings[j][bin] = sum_k g(theta_j, phi_k) e^{-im phi_k}.
    thread_local cvector rings;
    rings.resize(static_cast<std::size_t>(count) * count);
    plan.azimuth.forward_rows(samples, {rings.data(), rings.size()}, count);

    // Gather the weighted per-m data into the block matrix, run one batched
    // cosine and one batched sine transform, then the truncated dot products.
    const int mcount = 2 * L - 1;
    thread_local cvector tmat, ttrans;
    tmat.resize(static_cast<std::size_t>(mcount) * count);
    ttrans.resize(static_cast<std::size_t>(mcount) * count);
    for (int m = -(L - 1); m < L; ++m) {
        const int bin = m >= 0 ? m : count + m;
        cplx* dest = tmat.data() + static_cast<std::size_t>(plan.block_row[m + L - 1]) * count;
        for (int j = 0; j < count; ++j) {
            dest[j] = plan.rule.b_cal[j] * rings[static_cast<std::size_t>(j) * count + bin];
        }
    }
    const int odd_rows = mcount - plan.even_rows;
    plan.cosine.forward_rows({tmat.data(), static_cast<std::size_t>(plan.even_rows) * count},
                             {ttrans.data(), static_cast<std::size_t>(plan.even_rows) * count},
                             plan.even_rows);
    if (odd_rows > 0) {
        plan.sine.forward_rows(
            {tmat.data() + static_cast<std::size_t>(plan.even_rows) * count,
             static_cast<std::size_t>(odd_rows) * count},
            {ttrans.data() + static_cast<std::size_t>(plan.even_rows) * count,
             static_cast<std::size_t>(odd_rows) * count},
            odd_rows);
    }
    for (int m = -(L - 1); m < L; ++m) {
        const cplx* u = ttrans.data() + static_cast<std::size_t>(plan.block_row[m + L - 1]) * count;
        for (int l = std::abs(m); l < L; ++l) {
            const auto& row = plan.table.rows[static_cast<std::size_t>(nu_index(l, m))];
            cplx acc = 0.0;
            for (std::size_t idx = 0; idx < row.size(); ++idx) {
                acc += u[idx] * row[idx];
            }
            out[static_cast<std::size_t>(nu_index(l, m))] = acc;
        }
    }
}

SphericalCoefficients sft_seminaive_forward(std::span<const cplx> samples, const SftPlan& plan) {
    SphericalCoefficients out;
    out.order = plan.order;
    out.values.resize(static_cast<std::size_t>(plan.order) * plan.order);
    sft_seminaive_forward_into(samples, plan, out.values);
    return out;
}

void sft_seminaive_inverse_into(std::span<const cplx> coeffs, const SftPlan& plan,
                                std::span<cplx> out) {
    const int L = plan.order;
    if (coeffs.size() != static_cast<std::size_t>(L) * L) {
        throw std::invalid_argument("sft_seminaive_inverse: coefficients must have length L^2");
    }
    const int count = 2 * L;
    if (out.size() != static_cast<std::size_t>(count) * count) {
        throw std::invalid_argument("sft_seminaive_inverse: output must have length 4L^2");
    }

    // Per-m synthesis through the transposed truncated products; the
    // accumulated vectors live in transformed space, so one batched inverse
    // cosine/sine transform recovers the ring values of every order.
    const int mcount = 2 * L - 1;
    thread_local cvector rings, wmat, wvals;
    rings.resize(static_cast<std::size_t>(count) * count);
    wmat.assign(static_cast<std::size_t>(mcount) * count, cplx(0.0));
    wvals.resize(static_cast<std::size_t>(mcount) * count);
    for (int m = -(L - 1); m < L; ++m) {
        cplx* accum = wmat.data() + static_cast<std::size_t>(plan.block_row[m + L - 1]) * count;
        for (int l = std::abs(m); l < L; ++l) {
            const auto& row = plan.table.rows[static_cast<std::size_t>(nu_index(l, m))];
            const cplx c = coeffs[static_cast<std::size_t>(nu_index(l, m))];
            for (std::size_t idx = 0; idx < row.size(); ++idx) {
                accum[idx] += c * row[idx];
            }
        }
    }
    const int odd_rows = mcount - plan.even_rows;
    plan.cosine.inverse_rows({wmat.data(), static_cast<std::size_t>(plan.even_rows) * count},
                             {wvals.data(), static_cast<std::size_t>(plan.even_rows) * count},
                             plan.even_rows);
    if (odd_rows > 0) {
        plan.sine.inverse_rows(
            {wmat.data() + static_cast<std::size_t>(plan.even_rows) * count,
             static_cast<std::size_t>(odd_rows) * count},
            {wvals.data() + static_cast<std::size_t>(plan.even_rows) * count,
             static_cast<std::size_t>(odd_rows) * count},
            odd_rows);
    }
    // Scatter per-m ring values into DFT bin order; bin L stays zero.
    std::fill(rings.begin(), rings.end(), cplx(0.0));
    for (int m = -(L - 1); m < L; ++m) {
        const cplx* vals = wvals.data() + static_cast<std::size_t>(plan.block_row[m + L - 1]) * count;
        const int bin = m >= 0 ? m : count + m;
        for (int j = 0; j < count; ++j) {
            rings[static_cast<std::size_t>(j) * count + bin] = vals[j];
        }
    }

    plan.azimuth.synthesize_rows({rings.data(), rings.size()}, out, count);
}

cvector sft_seminaive_inverse(const SphericalCoefficients& coeffs, const SftPlan& plan) {
    check_coeffs(coeffs);
    if (plan.order != coeffs.order) {
        throw std::invalid_argument("sft_seminaive_inverse: plan order mismatch");
    }
    const int count = 2 * plan.order;
    cvector out(static_cast<std::size_t>(count) * count);
    sft_seminaive_inverse_into(coeffs.values, plan, out);
    return out;
}

}  // namespace sgl
