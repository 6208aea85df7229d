#ifndef SPECLINE_FADDEEVA_HPP
#define SPECLINE_FADDEEVA_HPP

#include <complex>

namespace specline {

/// Scaled complex error function w(z) = exp(-z^2) erfc(-iz) for Im(z) >= 0.
///
/// The real part of w((x + i a)) is the Voigt function used throughout the
/// profile code; the recurrence w'(z) = -2 z w(z) + 2i/sqrt(pi) supplies all
/// higher derivatives. Relative accuracy is ~1e-13 over the upper half plane
/// (absolute near the real axis where Re w underflows ahead of Im w).
std::complex<double> faddeeva_w(std::complex<double> z);

/// Dawson integral D(x) = exp(-x^2) * int_0^x exp(t^2) dt.
double dawson(double x);

} // namespace specline

#endif
