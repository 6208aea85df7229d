#include "specline/filters.hpp"

#include <cmath>
#include <stdexcept>

namespace specline {

namespace {
constexpr double kTwoPi = 6.28318530717958647692;
constexpr double kSqrtHalf = 0.70710678118654752440;
}

void validate_filter(const FilterSpec& f, std::vector<std::string>* warnings) {
    if (f.order != 1 && f.order != 2)
        throw std::invalid_argument("FilterSpec: order must be 1 or 2");
    if (f.order == 1 && f.q != 0.0)
        throw std::invalid_argument("FilterSpec: order 1 requires q = 0");
    if (f.order == 2 && !(f.q > 0.0 && f.q <= 1.0))
        throw std::invalid_argument("FilterSpec: order 2 requires 0 < q <= 1");
    if (!(f.tau_d > 0.0))
        throw std::invalid_argument("FilterSpec: tau_d must be > 0");
    if (warnings && f.order == 2 && f.q > kSqrtHalf + 1e-15)
        warnings->push_back("filter q > sqrt(1/2): underdamped response will ring");
}

void validate_sweep(const SweepSpec& s) {
    if (!(s.delta_t > 0.0))
        throw std::invalid_argument("SweepSpec: delta_t must be > 0");
    if (s.delta_nu == 0.0)
        throw std::invalid_argument("SweepSpec: delta_nu must be nonzero");
    if (s.n_steps < 2)
        throw std::invalid_argument("SweepSpec: n_steps must be >= 2");
}

double frequency_constant(const FilterSpec& f, double sweep_rate) {
    validate_filter(f);
    if (f.order == 1)
        return f.tau_d * sweep_rate;
    return f.tau_d * sweep_rate / f.q;
}

std::complex<double> gain(const FilterSpec& f, double nu_d, double tau) {
    const double u = kTwoPi * nu_d * tau;
    const double qu = f.q * u;
    const std::complex<double> den(1.0 - qu * qu, -u);
    if (std::norm(den) < 1e-24)
        throw std::logic_error("gain: filter denominator vanished");
    return 1.0 / den;
}

} // namespace specline
