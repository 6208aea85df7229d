#include "specline/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace specline::fourier {

namespace {
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}
}

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

void fft(std::vector<std::complex<double>>& data, bool forward) {
    const auto n = static_cast<int>(data.size());
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan = fftw_plan_dft_1d(n, buf, buf, forward ? FFTW_FORWARD : FFTW_BACKWARD,
                                FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
}

TransformPlan make_plan(const std::vector<double>& grid,
                        const std::function<double(double)>& modulus_envelope,
                        int pad) {
    if (grid.size() < 2)
        throw std::invalid_argument("make_plan: grid needs at least 2 points");
    if (pad < 2) pad = 2;
    TransformPlan p;
    p.n = grid.size();
    p.anchor = grid.front();
    p.dnu = (grid.back() - grid.front()) / static_cast<double>(grid.size() - 1);

    // Base tau coverage is 1/(2 dnu); double it until the kernel has decayed.
    p.m = 0;
    double tau_max = 0.5 / p.dnu;
    while (p.m < 20 && modulus_envelope(tau_max) > 1e-13) {
        ++p.m;
        tau_max *= 2.0;
    }
    p.size = next_pow2((static_cast<std::size_t>(pad) * p.n) << p.m);
    if (p.size < 1024) p.size = 1024;
    p.dnu_fft = p.dnu / static_cast<double>(std::size_t{1} << p.m);
    p.dtau = 1.0 / (static_cast<double>(p.size) * p.dnu_fft);
    return p;
}

std::vector<double> inverse_hermitian_half(const TransformPlan& plan,
                                           const std::vector<std::complex<double>>& half) {
    const std::size_t M = plan.size;
    if (half.size() != plan.half())
        throw std::invalid_argument("inverse_hermitian_half: bad sample count");
    std::vector<std::complex<double>> x(M);
    for (std::size_t k = 0; k <= M / 2; ++k)
        x[k] = half[k];
    x[M / 2] = x[M / 2].real();
    for (std::size_t k = M / 2 + 1; k < M; ++k)
        x[k] = std::conj(x[M - k]);
    fft(x, true);
    std::vector<double> out(plan.n);
    const std::size_t stride = std::size_t{1} << plan.m;
    for (std::size_t j = 0; j < plan.n; ++j)
        out[j] = plan.dtau * x[j * stride].real();
    return out;
}

std::vector<double> inverse_hermitian_transform(
    const TransformPlan& plan,
    const std::function<std::complex<double>(double)>& kernel) {
    std::vector<std::complex<double>> half(plan.half());
    for (std::size_t k = 0; k < half.size(); ++k)
        half[k] = kernel(k * plan.dtau);
    return inverse_hermitian_half(plan, half);
}

std::vector<double> apply_tau_kernel_to_samples(
    const TransformPlan& plan,
    const std::vector<double>& samples,
    const std::function<std::complex<double>(double)>& kernel) {
    const std::size_t M = plan.size;
    if (samples.size() != M)
        throw std::invalid_argument("apply_tau_kernel_to_samples: bad sample count");
    std::vector<std::complex<double>> x(M);
    for (std::size_t j = 0; j < M; ++j)
        x[j] = samples[j];
    fft(x, false); // nu -> tau with the exp(+2 pi i) convention of the paper
    for (std::size_t k = 0; k <= M / 2; ++k)
        x[k] *= kernel(k * plan.dtau);
    for (std::size_t k = M / 2 + 1; k < M; ++k) {
        // negative tau: kernel(-tau) = conj(kernel(tau)) keeps the output real
        x[k] *= std::conj(kernel(static_cast<double>(M - k) * plan.dtau));
    }
    fft(x, true);
    std::vector<double> out(plan.n);
    const std::size_t stride = std::size_t{1} << plan.m;
    const double scale = 1.0 / static_cast<double>(M);
    for (std::size_t j = 0; j < plan.n; ++j)
        out[j] = scale * x[j * stride].real();
    return out;
}

} // namespace specline::fourier
