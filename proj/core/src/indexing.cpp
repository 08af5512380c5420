#include "sgl/indexing.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sgl {

namespace {

void check_bandlimit(int B) {
    // 8 B^3 must stay well inside int range.
    if (B < 1 || B > 512) {
        throw std::invalid_argument("bandlimit must be in [1, 512], got " + std::to_string(B));
    }
}

int isqrt(int v) {
    int s = static_cast<int>(std::sqrt(static_cast<double>(v)));
    while (s > 0 && s * s > v) --s;
    while ((s + 1) * (s + 1) <= v) ++s;
    return s;
}

// Number of coefficients with degree < n, i.e. sum of squares below n.
long long degree_offset(int n) {
    return static_cast<long long>(n - 1) * n * (2 * n - 1) / 6;
}

}  // namespace

Layout::Layout(int B) : bandlimit(B) { check_bandlimit(B); }

std::size_t Layout::sample_count() const { return sgl::sample_count(bandlimit); }

std::size_t Layout::coefficient_count() const { return sgl::coefficient_count(bandlimit); }

std::size_t sample_count(int B) {
    check_bandlimit(B);
    const auto b = static_cast<std::size_t>(B);
    return 8 * b * b * b;
}

std::size_t coefficient_count(int B) {
    check_bandlimit(B);
    const auto b = static_cast<std::size_t>(B);
    return b * (b + 1) * (2 * b + 1) / 6;
}

int mu_index(int j, int k, int B) {
    check_bandlimit(B);
    if (j < 0 || j >= 2 * B || k < 0 || k >= 2 * B) {
        throw std::out_of_range("mu_index: angle indices out of range");
    }
    return 2 * B * j + k;
}

int psi_index(int i, int j, int k, int B) {
    check_bandlimit(B);
    if (i < 0 || i >= 2 * B || j < 0 || j >= 2 * B || k < 0 || k >= 2 * B) {
        throw std::out_of_range("psi_index: node indices out of range");
    }
    return 4 * B * B * i + 2 * B * j + k;
}

int nu_index(int l, int m) {
    if (l < 0 || m < -l || m > l) {
        throw std::out_of_range("nu_index: require |m| <= l");
    }
    return l * (l + 1) + m;
}

int omega_index(int n, int l, int m) {
    if (n < 1 || l < 0 || l >= n || m < -l || m > l) {
        throw std::out_of_range("omega_index: require |m| <= l < n");
    }
    return static_cast<int>(degree_offset(n)) + l * (l + 1) + m;
}

std::pair<int, int> mu_inverse(int mu, int B) {
    check_bandlimit(B);
    if (mu < 0 || mu >= 4 * B * B) {
        throw std::out_of_range("mu_inverse: index out of range");
    }
    return {mu / (2 * B), mu % (2 * B)};
}

std::array<int, 3> psi_inverse(int psi, int B) {
    check_bandlimit(B);
    if (psi < 0 || static_cast<std::size_t>(psi) >= sample_count(B)) {
        throw std::out_of_range("psi_inverse: index out of range");
    }
    const int i = psi / (4 * B * B);
    const int rest = psi % (4 * B * B);
    return {i, rest / (2 * B), rest % (2 * B)};
}

std::pair<int, int> nu_inverse(int nu) {
    if (nu < 0) {
        throw std::out_of_range("nu_inverse: negative index");
    }
    const int l = isqrt(nu);
    return {l, nu - l * (l + 1)};
}

std::array<int, 3> omega_inverse(int omega) {
    if (omega < 0) {
        throw std::out_of_range("omega_inverse: negative index");
    }
    // Invert the cubic degree offset, then peel off the (l, m) part.
    int n = std::max(1, static_cast<int>(std::cbrt(3.0 * omega)));
    while (degree_offset(n + 1) <= omega) ++n;
    while (n > 1 && degree_offset(n) > omega) --n;
    const int rest = omega - static_cast<int>(degree_offset(n));
    const auto [l, m] = nu_inverse(rest);
    if (l >= n) {
        throw std::out_of_range("omega_inverse: index out of range");
    }
    return {n, l, m};
}

}  // namespace sgl
