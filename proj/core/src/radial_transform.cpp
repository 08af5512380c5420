#include "sgl/radial_transform.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "sgl/special_functions.hpp"

namespace sgl {

namespace {

void check_args(int l, int B, const RadialRule& rule, std::size_t in_len, std::size_t out_len,
                std::size_t expected_in, std::size_t expected_out) {
    if (l < 0 || l >= B) {
        throw std::invalid_argument("discrete R transform: require 0 <= l < B");
    }
    if (rule.order != 2 * B) {
        throw std::invalid_argument("discrete R transform: radial rule order must be 2B");
    }
    if (in_len != expected_in || out_len != expected_out) {
        throw std::invalid_argument("discrete R transform: buffer length mismatch");
    }
}

// Recurrence coefficients for N_nl R_nl: value(n+1) = (c1[n] - c2[n] r^2) value(n) - c3[n] value(n-1).
struct RadialRecurrence {
    std::vector<double> c1, c2, c3;
    double seed = 0.0;  // sqrt(2/Gamma(l+3/2))

    RadialRecurrence(int l, int B) {
        c1.reserve(B - l);
        c2.reserve(B - l);
        c3.reserve(B - l);
        for (int n = l + 1; n < B; ++n) {
            const double denom = std::sqrt((n + 0.5) * (n - l));
            c1.push_back((2 * n - l - 0.5) / denom);
            c2.push_back(1.0 / denom);
            c3.push_back(std::sqrt((n - 0.5) / (n + 0.5) *
                                   (static_cast<double>(n - l - 1) / (n - l))));
        }
        seed = std::sqrt(2.0 * std::exp(-std::lgamma(l + 1.5)));
    }
};

// The coefficients depend only on (l, B); the transform loops revisit each
// pair on every call, so memoize per thread.
const RadialRecurrence& cached_recurrence(int l, int B) {
    thread_local std::unordered_map<int, std::vector<std::unique_ptr<RadialRecurrence>>> cache;
    auto& per_l = cache[B];
    if (per_l.empty()) {
        per_l.resize(B);
    }
    auto& slot = per_l[l];
    if (!slot) {
        slot = std::make_unique<RadialRecurrence>(l, B);
    }
    return *slot;
}

// seed * r^l without pow(); magnitudes stay bounded because callers fold the
// decay into `seed` when r is large.
double seed_at(double seed, double r, int l) {
    double v = seed;
    for (int i = 0; i < l; ++i) {
        v *= r;
    }
    return v;
}

}  // namespace

void drt_forward(int l, int B, const RadialRule& rule, std::span<const cplx> s,
                 std::span<cplx> out) {
    check_args(l, B, rule, s.size(), out.size(), static_cast<std::size_t>(2 * B),
               static_cast<std::size_t>(B - l));
    const RadialRecurrence& rec = cached_recurrence(l, B);
    const double seed = rec.seed;
    std::fill(out.begin(), out.end(), cplx(0.0));
    for (int i = 0; i < 2 * B; ++i) {
        const double r = rule.r[i];
        const double r2 = r * r;
        const cplx data = rule.a_mod[i] * s[i];
        // Ascend n = l+1 .. B with the decay fused into the seed.
        double prev = 0.0;
        double cur = seed_at(seed * std::exp(-r2), r, l);
        out[0] += cur * data;
        for (int idx = 0; idx < B - l - 1; ++idx) {
            const double next = (rec.c1[idx] - rec.c2[idx] * r2) * cur - rec.c3[idx] * prev;
            prev = cur;
            cur = next;
            out[idx + 1] += cur * data;
        }
    }
}

void drt_inverse(int l, int B, const RadialRule& rule, std::span<const cplx> t,
                 std::span<cplx> out) {
    check_args(l, B, rule, t.size(), out.size(), static_cast<std::size_t>(B - l),
               static_cast<std::size_t>(2 * B));
    const RadialRecurrence& rec = cached_recurrence(l, B);
    const double seed = rec.seed;
    const int top = B - l - 1;  // highest summand index; t[j] weights value at n = l+1+j
    for (int i = 0; i < 2 * B; ++i) {
        const double r = rule.r[i];
        const double r2 = r * r;
        // Clenshaw against value(j+1) = a_j value(j) + b_j value(j-1) with
        // a_j = c1[j] - c2[j] r^2 and b_j = -c3[j].
        cplx y1 = 0.0, y2 = 0.0;
        if (top >= 1) {
            y1 = t[top];
            for (int k = top - 1; k >= 1; --k) {
                const double ak = rec.c1[k] - rec.c2[k] * r2;
                cplx y = t[k] + ak * y1;
                if (k + 1 < top) {
                    y -= rec.c3[k + 1] * y2;
                }
                y2 = y1;
                y1 = y;
            }
        }
        cplx result = t[0];
        if (top >= 1) {
            result += (rec.c1[0] - rec.c2[0] * r2) * y1;
            if (top >= 2) {
                result -= rec.c3[1] * y2;
            }
        }
        out[i] = seed_at(seed, r, l) * result;
    }
}

double radial_orthogonality_check(int l, int B, const RadialRule& rule) {
    if (l < 0 || l >= B) {
        throw std::invalid_argument("radial_orthogonality_check: require 0 <= l < B");
    }
    const int rows = B - l;
    const int cols = rule.order;
    std::vector<double> mat(static_cast<std::size_t>(rows) * cols);
    for (int i = 0; i < cols; ++i) {
        for (int n = l + 1; n <= B; ++n) {
            mat[static_cast<std::size_t>(n - l - 1) * cols + i] =
                radial_normalized(n, l, rule.r[i]);
        }
    }
    double worst = 0.0;
    for (int a = 0; a < rows; ++a) {
        for (int b = 0; b < rows; ++b) {
            double acc = 0.0;
            for (int i = 0; i < cols; ++i) {
                acc += mat[static_cast<std::size_t>(a) * cols + i] * rule.a[i] * rule.r[i] *
                       rule.r[i] * mat[static_cast<std::size_t>(b) * cols + i];
            }
            const double target = (a == b) ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(acc - target));
        }
    }
    return worst;
}

}  // namespace sgl
