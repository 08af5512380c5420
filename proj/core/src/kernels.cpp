#include "sgl/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sgl::kernels {

namespace {

constexpr double kPi = std::numbers::pi;

void check_length(int n) {
    if (n < 1) {
        throw std::invalid_argument("transform length must be positive");
    }
}

void check_spans(std::size_t n, std::size_t in, std::size_t out) {
    if (in != n || out != n) {
        throw std::invalid_argument("transform buffer length mismatch");
    }
}

std::vector<cplx>& scratch_buffer(int which, std::size_t n) {
    thread_local std::vector<cplx> buffers[4];
    auto& buf = buffers[which];
    if (buf.size() < n) {
        buf.resize(n);
    }
    return buf;
}

void dft_naive(std::span<const cplx> in, std::span<cplx> out, int sign) {
    const std::size_t n = in.size();
    const double base = sign * 2.0 * kPi / static_cast<double>(n);
    for (std::size_t b = 0; b < n; ++b) {
        cplx acc = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            acc += in[k] * std::polar(1.0, base * static_cast<double>(b * k));
        }
        out[b] = acc;
    }
}

double row_scale(std::size_t n, std::size_t k, TrigMode mode) {
    const std::size_t unit_row = (mode == TrigMode::cosine) ? 0 : n - 1;
    return std::sqrt((k == unit_row ? 1.0 : 2.0) / static_cast<double>(n));
}

void trig_naive_forward(TrigMode mode, std::span<const double> in, std::span<double> out) {
    const std::size_t n = in.size();
    for (std::size_t k = 0; k < n; ++k) {
        const double freq = (mode == TrigMode::cosine) ? static_cast<double>(k)
                                                       : static_cast<double>(k + 1);
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double arg = freq * (2.0 * j + 1.0) * kPi / (2.0 * static_cast<double>(n));
            acc += in[j] * ((mode == TrigMode::cosine) ? std::cos(arg) : std::sin(arg));
        }
        out[k] = row_scale(n, k, mode) * acc;
    }
}

void trig_naive_inverse(TrigMode mode, std::span<const double> in, std::span<double> out) {
    const std::size_t n = in.size();
    for (std::size_t j = 0; j < n; ++j) {
        double acc = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const double freq = (mode == TrigMode::cosine) ? static_cast<double>(k)
                                                           : static_cast<double>(k + 1);
            const double arg = freq * (2.0 * j + 1.0) * kPi / (2.0 * static_cast<double>(n));
            acc += in[k] * row_scale(n, k, mode) *
                   ((mode == TrigMode::cosine) ? std::cos(arg) : std::sin(arg));
        }
        out[j] = acc;
    }
}

}  // namespace

namespace detail {

FftCore::FftCore(int n) : n_(n) {
    bitrev_.resize(n);
    for (int i = 1, j = 0; i < n; ++i) {
        int bit = n >> 1;
        for (; j & bit; bit >>= 1) {
            j ^= bit;
        }
        j ^= bit;
        bitrev_[i] = j;
    }
    twiddle_.resize(n / 2);
    for (int j = 0; j < n / 2; ++j) {
        twiddle_[j] = std::polar(1.0, -2.0 * kPi * j / static_cast<double>(n));
    }
}

namespace {

// Compile-time length lets the optimizer unroll the whole transform; at the
// small sizes the shell loops live on, loop mechanics would otherwise cost
// more than the arithmetic.
template <int N, int Sign>
void fft_fixed(cplx* a, const cplx* twiddle, const int* bitrev) {
    for (int i = 1; i < N; ++i) {
        const int j = bitrev[i];
        if (i < j) {
            std::swap(a[i], a[j]);
        }
    }
    for (int len = 2; len <= N; len <<= 1) {
        const int half = len / 2;
        const int step = N / len;
        for (int i = 0; i < N; i += len) {
            for (int j = 0; j < half; ++j) {
                const cplx tw = twiddle[j * step];
                const double wr = tw.real();
                const double wi = Sign < 0 ? tw.imag() : -tw.imag();
                cplx& lo = a[i + j];
                cplx& hi = a[i + j + half];
                const double xr = hi.real(), xi = hi.imag();
                const double vr = xr * wr - xi * wi;
                const double vi = xr * wi + xi * wr;
                const double ur = lo.real(), ui = lo.imag();
                lo = {ur + vr, ui + vi};
                hi = {ur - vr, ui - vi};
            }
        }
    }
}

}  // namespace

template <int Sign>
void FftCore::run(std::span<cplx> a) const {
    const int n = n_;
    cplx* data = a.data();
    switch (n) {
        case 1:
            return;
        case 2:
            fft_fixed<2, Sign>(data, twiddle_.data(), bitrev_.data());
            return;
        case 4:
            fft_fixed<4, Sign>(data, twiddle_.data(), bitrev_.data());
            return;
        case 8:
            fft_fixed<8, Sign>(data, twiddle_.data(), bitrev_.data());
            return;
        case 16:
            fft_fixed<16, Sign>(data, twiddle_.data(), bitrev_.data());
            return;
        case 32:
            fft_fixed<32, Sign>(data, twiddle_.data(), bitrev_.data());
            return;
        default:
            break;
    }
    for (int i = 1; i < n; ++i) {
        const int j = bitrev_[i];
        if (i < j) {
            std::swap(a[i], a[j]);
        }
    }
    for (int len = 2; len <= n; len <<= 1) {
        const int half = len / 2;
        const int step = n / len;
        for (int i = 0; i < n; i += len) {
            const cplx* tw = twiddle_.data();
            for (int j = 0; j < half; ++j, tw += step) {
                const double wr = tw->real();
                const double wi = Sign < 0 ? tw->imag() : -tw->imag();
                cplx& lo = a[i + j];
                cplx& hi = a[i + j + half];
                const double xr = hi.real(), xi = hi.imag();
                const double vr = xr * wr - xi * wi;
                const double vi = xr * wi + xi * wr;
                const double ur = lo.real(), ui = lo.imag();
                lo = {ur + vr, ui + vi};
                hi = {ur - vr, ui - vi};
            }
        }
    }
}

void FftCore::execute(std::span<cplx> a, int sign) const {
    if (sign < 0) {
        run<-1>(a);
    } else {
        run<+1>(a);
    }
}

}  // namespace detail

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

DctPlan::DctPlan(int n, TrigMode mode)
    : DctPlan(n, mode, is_pow2(n) ? Variant::fast : Variant::naive) {}

DctPlan::DctPlan(int n, TrigMode mode, Variant variant) : n_(n), mode_(mode), variant_(variant) {
    check_length(n);
    if (variant == Variant::fast) {
        if (!is_pow2(n)) {
            throw std::invalid_argument(
                "fast cosine/sine transform requires a power-of-two length");
        }
        fft_ = detail::FftCore(n);
        phase_.resize(n);
        for (int k = 0; k < n; ++k) {
            phase_[k] = std::polar(1.0, -kPi * k / (2.0 * static_cast<double>(n)));
        }
    }
    scale_.resize(n);
    for (int k = 0; k < n; ++k) {
        scale_[k] = row_scale(static_cast<std::size_t>(n), static_cast<std::size_t>(k), mode);
    }
}

// Unscaled DCT-II via a length-N FFT of the even/odd reordered input.
void DctPlan::dct2_unscaled(std::span<const double> in, std::span<double> out) const {
    const auto n = static_cast<std::size_t>(n_);
    auto& buf = scratch_buffer(0, n);
    for (std::size_t i = 0; i < n / 2; ++i) {
        buf[i] = in[2 * i];
        buf[n - 1 - i] = in[2 * i + 1];
    }
    if (n % 2 == 1) {
        buf[n / 2] = in[n - 1];
    }
    fft_->execute(std::span<cplx>(buf.data(), n), -1);
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = (buf[k] * phase_[k]).real();
    }
}

// Exact inverse of dct2_unscaled.
void DctPlan::dct3_unscaled(std::span<const double> in, std::span<double> out) const {
    const auto n = static_cast<std::size_t>(n_);
    auto& buf = scratch_buffer(0, n);
    buf[0] = in[0];
    for (std::size_t k = 1; k < n; ++k) {
        buf[k] = std::conj(phase_[k]) * cplx(in[k], -in[n - k]);
    }
    fft_->execute(std::span<cplx>(buf.data(), n), +1);
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n / 2; ++i) {
        out[2 * i] = buf[i].real() * inv_n;
        out[2 * i + 1] = buf[n - 1 - i].real() * inv_n;
    }
    if (n % 2 == 1) {
        out[n - 1] = buf[n / 2].real() * inv_n;
    }
}

void DctPlan::forward(std::span<const double> in, std::span<double> out) const {
    check_spans(static_cast<std::size_t>(n_), in.size(), out.size());
    if (variant_ == Variant::naive) {
        trig_naive_forward(mode_, in, out);
        return;
    }
    const auto n = static_cast<std::size_t>(n_);
    if (mode_ == TrigMode::cosine) {
        dct2_unscaled(in, out);
        for (std::size_t k = 0; k < n; ++k) {
            out[k] *= scale_[k];
        }
    } else {
        // DST-II via sign flip and index reversal of the DCT-II.
        thread_local std::vector<double> flipped, tmp;
        flipped.resize(n);
        tmp.resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            flipped[j] = (j % 2 == 0) ? in[j] : -in[j];
        }
        dct2_unscaled(flipped, tmp);
        for (std::size_t k = 0; k < n; ++k) {
            out[k] = scale_[k] * tmp[n - 1 - k];
        }
    }
}

void DctPlan::inverse(std::span<const double> in, std::span<double> out) const {
    check_spans(static_cast<std::size_t>(n_), in.size(), out.size());
    if (variant_ == Variant::naive) {
        trig_naive_inverse(mode_, in, out);
        return;
    }
    const auto n = static_cast<std::size_t>(n_);
    thread_local std::vector<double> unscaled, tmp;
    unscaled.resize(n);
    if (mode_ == TrigMode::cosine) {
        for (std::size_t k = 0; k < n; ++k) {
            unscaled[k] = in[k] * scale_[k] * static_cast<double>(n) / 2.0;
        }
        unscaled[0] *= 2.0;
        dct3_unscaled(unscaled, out);
    } else {
        tmp.resize(n);
        for (std::size_t k = 0; k < n; ++k) {
            unscaled[n - 1 - k] = in[k] * scale_[k] * static_cast<double>(n) / 2.0;
        }
        unscaled[0] *= 2.0;
        dct3_unscaled(unscaled, tmp);
        for (std::size_t j = 0; j < n; ++j) {
            out[j] = (j % 2 == 0) ? tmp[j] : -tmp[j];
        }
    }
}

// Complex-input analogue of dct2_unscaled: one complex FFT, then the phase
// combination y_k = (e^{-i theta_k} F_k + e^{+i theta_k} F_{N-k}) / 2, which
// reduces to the real formula when the input is real.
void DctPlan::dct2_unscaled_complex(std::span<const cplx> in, std::span<cplx> out) const {
    const auto n = static_cast<std::size_t>(n_);
    auto& buf = scratch_buffer(1, n);
    for (std::size_t i = 0; i < n / 2; ++i) {
        buf[i] = in[2 * i];
        buf[n - 1 - i] = in[2 * i + 1];
    }
    if (n % 2 == 1) {
        buf[n / 2] = in[n - 1];
    }
    fft_->execute(std::span<cplx>(buf.data(), n), -1);
    out[0] = buf[0];
    for (std::size_t k = 1; k < n; ++k) {
        out[k] = 0.5 * (phase_[k] * buf[k] + std::conj(phase_[k]) * buf[n - k]);
    }
}

void DctPlan::dct3_unscaled_complex(std::span<const cplx> in, std::span<cplx> out) const {
    const auto n = static_cast<std::size_t>(n_);
    auto& buf = scratch_buffer(1, n);
    buf[0] = in[0];
    for (std::size_t k = 1; k < n; ++k) {
        buf[k] = std::conj(phase_[k]) * (in[k] - cplx(0.0, 1.0) * in[n - k]);
    }
    fft_->execute(std::span<cplx>(buf.data(), n), +1);
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n / 2; ++i) {
        out[2 * i] = buf[i] * inv_n;
        out[2 * i + 1] = buf[n - 1 - i] * inv_n;
    }
    if (n % 2 == 1) {
        out[n - 1] = buf[n / 2] * inv_n;
    }
}

void DctPlan::forward(std::span<const cplx> in, std::span<cplx> out) const {
    check_spans(static_cast<std::size_t>(n_), in.size(), out.size());
    const auto n = static_cast<std::size_t>(n_);
    if (variant_ == Variant::naive) {
        thread_local std::vector<double> re, im, tre, tim;
        re.resize(n);
        im.resize(n);
        tre.resize(n);
        tim.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            re[i] = in[i].real();
            im[i] = in[i].imag();
        }
        trig_naive_forward(mode_, {re.data(), n}, {tre.data(), n});
        trig_naive_forward(mode_, {im.data(), n}, {tim.data(), n});
        for (std::size_t i = 0; i < n; ++i) {
            out[i] = {tre[i], tim[i]};
        }
        return;
    }
    if (mode_ == TrigMode::cosine) {
        dct2_unscaled_complex(in, out);
        for (std::size_t k = 0; k < n; ++k) {
            out[k] *= scale_[k];
        }
    } else {
        auto& flipped = scratch_buffer(2, n);
        for (std::size_t j = 0; j < n; ++j) {
            flipped[j] = (j % 2 == 0) ? in[j] : -in[j];
        }
        auto& tmp = scratch_buffer(3, n);
        dct2_unscaled_complex({flipped.data(), n}, {tmp.data(), n});
        for (std::size_t k = 0; k < n; ++k) {
            out[k] = scale_[k] * tmp[n - 1 - k];
        }
    }
}

void DctPlan::inverse(std::span<const cplx> in, std::span<cplx> out) const {
    check_spans(static_cast<std::size_t>(n_), in.size(), out.size());
    const auto n = static_cast<std::size_t>(n_);
    if (variant_ == Variant::naive) {
        thread_local std::vector<double> re, im, tre, tim;
        re.resize(n);
        im.resize(n);
        tre.resize(n);
        tim.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            re[i] = in[i].real();
            im[i] = in[i].imag();
        }
        trig_naive_inverse(mode_, {re.data(), n}, {tre.data(), n});
        trig_naive_inverse(mode_, {im.data(), n}, {tim.data(), n});
        for (std::size_t i = 0; i < n; ++i) {
            out[i] = {tre[i], tim[i]};
        }
        return;
    }
    auto& unscaled = scratch_buffer(2, n);
    if (mode_ == TrigMode::cosine) {
        for (std::size_t k = 0; k < n; ++k) {
            unscaled[k] = in[k] * (scale_[k] * static_cast<double>(n) / 2.0);
        }
        unscaled[0] *= 2.0;
        dct3_unscaled_complex({unscaled.data(), n}, out);
    } else {
        for (std::size_t k = 0; k < n; ++k) {
            unscaled[n - 1 - k] = in[k] * (scale_[k] * static_cast<double>(n) / 2.0);
        }
        unscaled[0] *= 2.0;
        auto& tmp = scratch_buffer(3, n);
        dct3_unscaled_complex({unscaled.data(), n}, {tmp.data(), n});
        for (std::size_t j = 0; j < n; ++j) {
            out[j] = (j % 2 == 0) ? tmp[j] : -tmp[j];
        }
    }
}

void DctPlan::forward_rows(std::span<const cplx> in, std::span<cplx> out, int rows) const {
    const auto n = static_cast<std::size_t>(n_);
    check_spans(n * rows, in.size(), out.size());
    for (int r = 0; r < rows; ++r) {
        forward(in.subspan(r * n, n), out.subspan(r * n, n));
    }
}

void DctPlan::inverse_rows(std::span<const cplx> in, std::span<cplx> out, int rows) const {
    const auto n = static_cast<std::size_t>(n_);
    check_spans(n * rows, in.size(), out.size());
    for (int r = 0; r < rows; ++r) {
        inverse(in.subspan(r * n, n), out.subspan(r * n, n));
    }
}

DftPlan::DftPlan(int n) : DftPlan(n, is_pow2(n) ? Variant::fast : Variant::naive) {}

DftPlan::DftPlan(int n, Variant variant) : n_(n), variant_(variant) {
    check_length(n);
    if (variant == Variant::fast) {
        if (!is_pow2(n)) {
            throw std::invalid_argument("fast DFT requires a power-of-two length");
        }
        fft_ = detail::FftCore(n);
    }
}

void DftPlan::forward(std::span<const cplx> in, std::span<cplx> out) const {
    check_spans(static_cast<std::size_t>(n_), in.size(), out.size());
    if (variant_ == Variant::naive) {
        dft_naive(in, out, -1);
        return;
    }
    std::copy(in.begin(), in.end(), out.begin());
    fft_->execute(out, -1);
}

void DftPlan::synthesize(std::span<const cplx> in, std::span<cplx> out) const {
    check_spans(static_cast<std::size_t>(n_), in.size(), out.size());
    if (variant_ == Variant::naive) {
        dft_naive(in, out, +1);
        return;
    }
    std::copy(in.begin(), in.end(), out.begin());
    fft_->execute(out, +1);
}

void DftPlan::forward_rows(std::span<const cplx> in, std::span<cplx> out, int rows) const {
    const auto n = static_cast<std::size_t>(n_);
    check_spans(n * rows, in.size(), out.size());
    std::copy(in.begin(), in.end(), out.begin());
    for (int r = 0; r < rows; ++r) {
        if (variant_ == Variant::naive) {
            dft_naive(in.subspan(r * n, n), out.subspan(r * n, n), -1);
        } else {
            fft_->execute(out.subspan(r * n, n), -1);
        }
    }
}

void DftPlan::synthesize_rows(std::span<const cplx> in, std::span<cplx> out, int rows) const {
    const auto n = static_cast<std::size_t>(n_);
    check_spans(n * rows, in.size(), out.size());
    std::copy(in.begin(), in.end(), out.begin());
    for (int r = 0; r < rows; ++r) {
        if (variant_ == Variant::naive) {
            dft_naive(in.subspan(r * n, n), out.subspan(r * n, n), +1);
        } else {
            fft_->execute(out.subspan(r * n, n), +1);
        }
    }
}

}  // namespace sgl::kernels
