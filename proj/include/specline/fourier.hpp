#ifndef SPECLINE_FOURIER_HPP
#define SPECLINE_FOURIER_HPP

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace specline::fourier {

std::size_t next_pow2(std::size_t n);

/// In-place complex FFT, forward = exp(-2 pi i jk/M) convention.
/// Thread-safe (FFTW planning is serialized internally).
void fft(std::vector<std::complex<double>>& data, bool forward);

/// Layout of the internal tau/frequency grids used to apply a detection-chain
/// kernel on a caller-supplied uniform frequency grid.
///
/// The FFT frequency spacing is dnu/2^m (m chosen so the tau range 2^m/(2 dnu)
/// covers the correlation decay) and the transform size keeps the
/// periodization at least `pad` grid spans away.
struct TransformPlan {
    std::size_t n = 0;        ///< caller grid points
    double dnu = 0.0;         ///< caller grid spacing (MHz)
    double anchor = 0.0;      ///< caller grid first frequency (MHz)
    int m = 0;                ///< oversampling exponent
    std::size_t size = 0;     ///< FFT length M
    double dtau = 0.0;        ///< tau spacing (1/MHz)
    double dnu_fft = 0.0;     ///< FFT frequency spacing (MHz)

    std::size_t half() const { return size / 2 + 1; }
    /// Frequency of periodized bin j (upper half maps to the left of anchor).
    double bin_frequency(std::size_t j) const {
        const double rel = (j < size / 2)
            ? static_cast<double>(j)
            : static_cast<double>(j) - static_cast<double>(size);
        return anchor + rel * dnu_fft;
    }
};

/// Builds a plan; `modulus_envelope` must be a non-increasing bound on the
/// kernel magnitude in tau (typically the correlation modulus).
TransformPlan make_plan(const std::vector<double>& grid,
                        const std::function<double(double)>& modulus_envelope,
                        int pad = 8);

/// out[j] = 2 Re int_0^inf K(tau) exp(-2 pi i (grid[j] - anchor) tau) dtau
/// from samples K(k dtau), k = 0 .. size/2 (Hermitian extension implied).
std::vector<double> inverse_hermitian_half(const TransformPlan& plan,
                                           const std::vector<std::complex<double>>& half);

/// Convenience wrapper sampling the kernel callable.
std::vector<double> inverse_hermitian_transform(
    const TransformPlan& plan,
    const std::function<std::complex<double>(double)>& kernel);

/// Multiplies a real frequency-domain curve by a tau-domain kernel:
/// out[j] = IFFT[ kernel(tau) * FFT[curve] ] at the caller grid points.
/// `samples` holds the curve on the periodized plan grid (bin_frequency).
std::vector<double> apply_tau_kernel_to_samples(
    const TransformPlan& plan,
    const std::vector<double>& samples,
    const std::function<std::complex<double>(double)>& kernel);

} // namespace specline::fourier

#endif
