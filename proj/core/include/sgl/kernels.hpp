#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sgl/types.hpp"

namespace sgl::kernels {

enum class TrigMode { cosine, sine };
enum class Variant { naive, fast };

bool is_pow2(int n);

namespace detail {

/// Radix-2 complex FFT with precomputed bit-reversal and twiddle tables.
/// sign = -1 analyzes (e^{-i...}), +1 synthesizes (e^{+i...}, no 1/N).
class FftCore {
  public:
    explicit FftCore(int n);

    void execute(std::span<cplx> data, int sign) const;

  private:
    template <int Sign>
    void run(std::span<cplx> data) const;

    int n_;
    std::vector<int> bitrev_;
    std::vector<cplx> twiddle_;
};

}  // namespace detail

/// Orthogonal cosine/sine transform on the shifted grid theta_j = (2j+1)pi/2N.
///
/// In cosine mode the forward map is the orthogonal DCT-II matrix C_N whose
/// row k is scaled by sqrt(1/N) for k = 0 and sqrt(2/N) otherwise; sine mode
/// uses rows sin((k+1) theta_j) with the sqrt(1/N) scale on the last row.
/// Both matrices are orthogonal, so inverse() applies the transpose. The fast
/// variant requires a power-of-two length; plans constructed without an
/// explicit variant fall back to the naive O(N^2) path otherwise. Plans are
/// immutable after construction and execute calls are re-entrant.
class DctPlan {
  public:
    DctPlan() : DctPlan(1, TrigMode::cosine) {}
    DctPlan(int n, TrigMode mode);
    DctPlan(int n, TrigMode mode, Variant variant);

    int length() const { return n_; }
    TrigMode mode() const { return mode_; }
    Variant variant() const { return variant_; }

    void forward(std::span<const double> in, std::span<double> out) const;
    void inverse(std::span<const double> in, std::span<double> out) const;

    // Complex data: real transform applied to real and imaginary parts.
    void forward(std::span<const cplx> in, std::span<cplx> out) const;
    void inverse(std::span<const cplx> in, std::span<cplx> out) const;

    /// Transforms `rows` consecutive length-N complex rows in one call.
    void forward_rows(std::span<const cplx> in, std::span<cplx> out, int rows) const;
    void inverse_rows(std::span<const cplx> in, std::span<cplx> out, int rows) const;

  private:
    void dct2_unscaled(std::span<const double> in, std::span<double> out) const;
    void dct3_unscaled(std::span<const double> in, std::span<double> out) const;
    void dct2_unscaled_complex(std::span<const cplx> in, std::span<cplx> out) const;
    void dct3_unscaled_complex(std::span<const cplx> in, std::span<cplx> out) const;

    int n_;
    TrigMode mode_;
    Variant variant_;
    std::optional<detail::FftCore> fft_;
    std::vector<cplx> phase_;    // e^{-i pi k / 2N}
    std::vector<double> scale_;  // orthogonal row scales
};

/// Azimuthal DFT of length 2L on the nodes phi_k = k pi / L.
///
/// forward() returns the inner sums sum_k g_k e^{-im phi_k}, with order m
/// living in DFT bin m for m >= 0 and bin 2L + m for m < 0. synthesize()
/// evaluates y_k = sum_m v_m e^{+im phi_k} without a 1/N factor, so
/// synthesize(forward(g)) = 2L * g.
class DftPlan {
  public:
    DftPlan() : DftPlan(1) {}
    explicit DftPlan(int n);
    DftPlan(int n, Variant variant);

    int length() const { return n_; }
    Variant variant() const { return variant_; }

    void forward(std::span<const cplx> in, std::span<cplx> out) const;
    void synthesize(std::span<const cplx> in, std::span<cplx> out) const;

    /// Transforms `rows` consecutive length-N rows in one call.
    void forward_rows(std::span<const cplx> in, std::span<cplx> out, int rows) const;
    void synthesize_rows(std::span<const cplx> in, std::span<cplx> out, int rows) const;

  private:
    int n_;
    Variant variant_;
    std::optional<detail::FftCore> fft_;
};

}  // namespace sgl::kernels
