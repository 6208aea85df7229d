#ifndef SPECLINE_FILTERS_HPP
#define SPECLINE_FILTERS_HPP

#include <complex>
#include <string>
#include <vector>

namespace specline {

/// Detection-chain low-pass filter: 1st order (q = 0) or 2nd order.
/// A 2nd-order stage with q = 1/2 is algebraically two identical cascaded
/// 1st-order stages of time constant tau_d; q = sqrt(1/2) is the Butterworth
/// case.
struct FilterSpec {
    int order = 2;       ///< 1 or 2
    double q = 0.5;      ///< quality factor; must be 0 for order 1, in (0, 1] for order 2
    double tau_d = 1.0;  ///< time constant (s)
};

/// Stepwise frequency-scan protocol.
struct SweepSpec {
    double delta_nu = 1.0;  ///< frequency step (MHz, signed; negative = downward sweep)
    double delta_t = 1.0;   ///< step duration (s)
    long n_steps = 2;       ///< number of recorded steps
    double nu_start = 0.0;  ///< first frequency (MHz)

    double rate() const { return delta_nu / delta_t; } ///< MHz/s, signed
};

/// Validates invariants; appends a note to `warnings` (if given) for
/// underdamped filters with q > sqrt(1/2).
void validate_filter(const FilterSpec& f, std::vector<std::string>* warnings = nullptr);
void validate_sweep(const SweepSpec& s);

/// Frequency constant nu_D (MHz, signed): tau_d * rate / q for order 2,
/// tau_d * rate for order 1.
double frequency_constant(const FilterSpec& f, double sweep_rate);

/// Complex gain G(tau) = 1 / (1 - 2 pi i nu_d tau - (2 pi q nu_d tau)^2).
/// Order 1 is the q = 0 case. Throws std::logic_error if the denominator
/// magnitude falls below 1e-12 (cannot happen for real tau and q <= 1).
std::complex<double> gain(const FilterSpec& f, double nu_d, double tau);

} // namespace specline

#endif
