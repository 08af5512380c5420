#include "sgl/quadrature.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace sgl {

namespace {

constexpr double kPi = std::numbers::pi;

namespace mp = boost::multiprecision;
using Real60 = mp::number<mp::cpp_bin_float<60>>;
using Real260 = mp::number<mp::cpp_bin_float<260>>;

template <typename Real>
Real pi_value() {
    return 4 * atan(Real(1));
}

// Monic three-term recurrence coefficients (alpha_k, beta_k) from the raw
// moments, via the classical moment algorithm (sigma table). Requires
// moments m_0 .. m_{2N-1}; beta_0 = m_0. Loss of positivity in beta means
// the working precision was insufficient.
template <typename Real>
void recurrence_from_moments(const std::vector<Real>& mom, int N, std::vector<Real>& alpha,
                             std::vector<Real>& beta) {
    alpha.assign(N, Real(0));
    beta.assign(N, Real(0));
    alpha[0] = mom[1] / mom[0];
    beta[0] = mom[0];
    if (N == 1) {
        return;
    }
    std::vector<Real> prev(mom.begin(), mom.end());  // sigma_{0,l} = m_l
    std::vector<Real> prev2;                         // sigma_{-1,l} = 0
    std::vector<Real> cur(mom.size(), Real(0));
    for (int k = 1; k < N; ++k) {
        const int lmax = 2 * N - k - 1;
        for (int l = k; l <= lmax; ++l) {
            Real v = prev[l + 1] - alpha[k - 1] * prev[l];
            if (k >= 2) {
                v -= beta[k - 1] * prev2[l];
            }
            cur[l] = v;
        }
        beta[k] = cur[k] / prev[k - 1];
        alpha[k] = cur[k + 1] / cur[k] - prev[k] / prev[k - 1];
        if (beta[k] <= 0) {
            throw QuadratureError(
                "half_range_hermite_rule: precision fault, beta_" + std::to_string(k) +
                " lost positivity during moment reduction (order " + std::to_string(N) + ")");
        }
        prev2 = prev;
        prev = cur;
    }
}

// Golub-Welsch: implicit-shift QL on the symmetric tridiagonal Jacobi matrix,
// accumulating only the first row of the eigenvector matrix. d holds the
// diagonal, e the subdiagonal; on return d holds eigenvalues and z the first
// eigenvector components.
template <typename Real>
void tridiagonal_eigen(std::vector<Real>& d, std::vector<Real>& e, std::vector<Real>& z) {
    const int n = static_cast<int>(d.size());
    z.assign(n, Real(0));
    z[0] = 1;
    if (n == 1) {
        return;
    }
    e.push_back(Real(0));
    const Real eps = std::numeric_limits<Real>::epsilon();
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        while (true) {
            int m = l;
            for (; m < n - 1; ++m) {
                const Real dd = abs(d[m]) + abs(d[m + 1]);
                if (abs(e[m]) <= eps * dd) {
                    break;
                }
            }
            if (m == l) {
                break;
            }
            if (++iter > 100) {
                throw QuadratureError(
                    "half_range_hermite_rule: precision fault, tridiagonal eigensolve failed "
                    "to converge");
            }
            Real g = (d[l + 1] - d[l]) / (2 * e[l]);
            Real r = sqrt(g * g + 1);
            g = d[m] - d[l] + e[l] / (g + (g >= 0 ? abs(r) : -abs(r)));
            Real s = 1, c = 1, p = 0;
            bool underflow = false;
            for (int i = m - 1; i >= l; --i) {
                Real f = s * e[i];
                const Real b = c * e[i];
                r = sqrt(f * f + g * g);
                e[i + 1] = r;
                if (r == 0) {
                    d[i + 1] -= p;
                    e[m] = 0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                f = z[i + 1];
                z[i + 1] = s * z[i] + c * f;
                z[i] = c * z[i] - s * f;
            }
            if (underflow) {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0;
        }
    }
}

template <typename Real>
RadialRule generate_half_range_hermite(int N) {
    // Moments m_k = Gamma((k+1)/2)/2 via the exact reduction
    // m_k = ((k-1)/2) m_{k-2}, m_0 = sqrt(pi)/2, m_1 = 1/2.
    std::vector<Real> mom(2 * N);
    mom[0] = sqrt(pi_value<Real>()) / 2;
    if (N >= 1 && mom.size() > 1) {
        mom[1] = Real(1) / 2;
    }
    for (std::size_t k = 2; k < mom.size(); ++k) {
        mom[k] = mom[k - 2] * Real(k - 1) / 2;
    }

    std::vector<Real> alpha, beta;
    recurrence_from_moments(mom, N, alpha, beta);

    std::vector<Real> d = alpha;
    std::vector<Real> e(N > 1 ? N - 1 : 0);
    for (int k = 1; k < N; ++k) {
        e[k - 1] = sqrt(beta[k]);
    }
    std::vector<Real> z;
    tridiagonal_eigen(d, e, z);

    std::vector<int> idx(N);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return d[a] < d[b]; });

    RadialRule rule;
    rule.order = N;
    rule.r.resize(N);
    rule.a.resize(N);
    rule.a_mod.resize(N);
    for (int i = 0; i < N; ++i) {
        const Real node = d[idx[i]];
        const Real weight = beta[0] * z[idx[i]] * z[idx[i]];
        if (node <= 0 || weight <= 0) {
            throw QuadratureError(
                "half_range_hermite_rule: precision fault, node or weight lost positivity "
                "(order " + std::to_string(N) + ")");
        }
        rule.r[i] = static_cast<double>(node);
        rule.a[i] = static_cast<double>(weight);
        rule.a_mod[i] = static_cast<double>(weight * exp(node * node) * node * node);
    }
    for (int i = 1; i < N; ++i) {
        if (!(rule.r[i] > rule.r[i - 1])) {
            throw QuadratureError(
                "half_range_hermite_rule: precision fault, nodes are not strictly increasing");
        }
    }
    return rule;
}

}  // namespace

SphericalRule sphere_rule(int L) {
    if (L < 1) {
        throw std::invalid_argument("sphere_rule: order must be positive");
    }
    SphericalRule rule;
    rule.order = L;
    const int count = 2 * L;
    rule.theta.resize(count);
    rule.phi.resize(count);
    rule.b_raw.resize(count);
    rule.b_cal.resize(count);
    for (int j = 0; j < count; ++j) {
        rule.theta[j] = (2 * j + 1) * kPi / (4.0 * L);
        rule.phi[j] = j * kPi / L;
        double sum = 0.0;
        for (int l = 0; l < L; ++l) {
            sum += std::sin((2 * j + 1) * (2 * l + 1) * kPi / (4.0 * L)) / (2 * l + 1);
        }
        rule.b_raw[j] = std::sin((2 * j + 1) * kPi / (4.0 * L)) * (2.0 / L) * sum;
        rule.b_cal[j] = kPi / L * rule.b_raw[j];
    }
    return rule;
}

RadialRule half_range_hermite_rule(int N) {
    if (N < 1) {
        throw std::invalid_argument("half_range_hermite_rule: order must be positive");
    }
    if (N > kMaxRadialOrder) {
        throw QuadratureError("half_range_hermite_rule: order " + std::to_string(N) +
                              " exceeds the supported maximum " +
                              std::to_string(kMaxRadialOrder) +
                              "; the moment reduction is too ill-conditioned beyond that");
    }
    if (N <= 32) {
        return generate_half_range_hermite<Real60>(N);
    }
    return generate_half_range_hermite<Real260>(N);
}

std::vector<double> modified_radial_weights(const RadialRule& rule) {
    std::vector<double> out(rule.r.size());
    for (std::size_t i = 0; i < rule.r.size(); ++i) {
        out[i] = std::exp(std::log(rule.a[i]) + rule.r[i] * rule.r[i] + 2.0 * std::log(rule.r[i]));
    }
    return out;
}

double half_range_hermite_moment(int k) {
    if (k < 0) {
        throw std::invalid_argument("half_range_hermite_moment: negative power");
    }
    return 0.5 * std::exp(std::lgamma((k + 1) / 2.0));
}

}  // namespace sgl
