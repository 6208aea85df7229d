#include "specline/faddeeva.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace specline {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

// Weideman rational approximation of w(z) on the upper half plane
// (SIAM J. Numer. Anal. 31, 1497). N = 64 terms keeps the uniform error
// near 1e-14. Coefficients are the Fourier-cosine moments of
// exp(-t^2) (L^2 + t^2) under the Moebius map t = L tan(theta/2).
constexpr int kN = 64;

struct WeidemanTable {
    double L;
    std::array<double, kN> a;

    WeidemanTable() {
        L = std::sqrt(kN / std::sqrt(2.0));
        const int m = 2 * kN;      // half the number of quadrature nodes
        const int m2 = 2 * m;
        std::array<double, kN> acc{};
        for (int k = -m + 1; k <= m; ++k) {
            const double theta = k * M_PI / m;
            double f = 0.0;
            if (k != m) {          // f(theta = pi) = 0: tan singularity killed by exp(-t^2)
                const double t = L * std::tan(0.5 * theta);
                f = std::exp(-t * t) * (L * L + t * t);
            }
            for (int n = 1; n <= kN; ++n)
                acc[n - 1] += f * std::cos(n * theta);
        }
        for (int n = 0; n < kN; ++n)
            a[n] = 2.0 * acc[n] / m2;
    }
};

const WeidemanTable& weideman() {
    static const WeidemanTable table;
    return table;
}

std::complex<double> weideman_w(std::complex<double> z) {
    const WeidemanTable& t = weideman();
    const std::complex<double> iz(-z.imag(), z.real());
    const std::complex<double> lmiz = t.L - iz;
    const std::complex<double> zz = (t.L + iz) / lmiz;
    std::complex<double> p = 0.0;
    for (int n = kN - 1; n >= 0; --n)
        p = p * zz + t.a[n];
    return 2.0 * p / (lmiz * lmiz) + (1.0 / kSqrtPi) / lmiz;
}

// Asymptotic series tail, |z| large.
std::complex<double> asymptotic_w(std::complex<double> z) {
    const std::complex<double> z2 = z * z;
    // w(z) ~ i/(sqrt(pi) z) [1 + 1/(2 z^2) + 3/(4 z^4) + 15/(8 z^6) + ...]
    std::complex<double> s = 1.0;
    std::complex<double> term = 1.0;
    for (int k = 1; k <= 6; ++k) {
        term *= (k - 0.5) / z2;
        s += term;
    }
    return std::complex<double>(0.0, 1.0) * s / (kSqrtPi * z);
}

} // namespace

double dawson(double x) {
    // Im w(x) = 2 D(x)/sqrt(pi) on the real axis.
    const double ax = std::abs(x);
    if (ax < 0.2) {
        // series D(x) = x - 2x^3/3 + 4x^5/15 - ...
        const double x2 = x * x;
        double term = x;
        double sum = x;
        for (int k = 1; k < 16; ++k) {
            term *= -2.0 * x2 / (2.0 * k + 1.0);
            sum += term;
            if (std::abs(term) < 1e-18 * std::abs(sum)) break;
        }
        return sum;
    }
    const std::complex<double> w = faddeeva_w({ax, 0.0});
    const double d = 0.5 * kSqrtPi * w.imag();
    return x < 0 ? -d : d;
}

std::complex<double> faddeeva_w(std::complex<double> z) {
    if (z.imag() < 0.0)
        throw std::invalid_argument("faddeeva_w: lower half plane not supported");
    const double x = z.real();
    const double y = z.imag();
    if (y == 0.0) {
        // Exact real part; imaginary part from the rational fit (Dawson-like,
        // O(1/x), so relatively accurate).
        double re;
        if (std::abs(x) < 26.0)
            re = std::exp(-x * x);
        else
            re = 0.0;
        double im;
        if (x * x > 1.0e4)
            im = asymptotic_w(z).imag();
        else
            im = weideman_w(z).imag();
        return {re, im};
    }
    if (x * x + y * y > 1.0e4)
        return asymptotic_w(z);
    return weideman_w(z);
}

} // namespace specline
