#include "specline/profiles.hpp"
#include "specline/faddeeva.hpp"

#include <algorithm>
#include <cmath>

namespace specline {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kTwoPi = 2.0 * kPi;

// (e^-z - 1 + z)/z^2, the diffusion taper of the Galatry exponent.
// Series below z = 0.5 avoids the z^2 cancellation; direct form above.
double soft_collision_taper(double z) {
    if (z < 0.5) {
        double term = 0.5;   // k = 0: 1/2!
        double sum = 0.5;
        for (int k = 1; k <= 24; ++k) {
            term *= -z / (k + 2.0);
            sum += term;
            if (std::abs(term) < 1e-18 * sum) break;
        }
        return sum;
    }
    return (std::expm1(-z) + z) / (z * z);
}

double galatry_gaussian_exponent(const LineParams& p, double tau) {
    // -(dnu_dop^2 / (2 beta^2)) (z - 1 + e^-z)  ==  -2 (pi dnu_dop tau)^2 g(z)
    const double z = kTwoPi * p.beta_gal * tau;
    const double g = soft_collision_taper(z);
    const double pdt = kPi * p.dnu_dop * tau;
    return -2.0 * pdt * pdt * g;
}

struct GalatryTable {
    std::vector<double> tau;
    std::vector<double> weighted_mod; // Simpson weight * modulus
};

// Samples the (real) Galatry correlation modulus on a Simpson grid sized for
// the largest frequency offset that will be transformed.
GalatryTable tabulate_galatry_modulus(const LineParams& p, double max_offset) {
    double tau_end = 1e-4;
    while (correlation_modulus(p, tau_end, ProfileKind::galatry) > 1e-17 && tau_end < 1e9)
        tau_end *= 2.0;
    std::size_t n = std::max<std::size_t>(
        801, static_cast<std::size_t>(std::ceil(12.0 * std::abs(max_offset) * tau_end)));
    if (n % 2 == 0) ++n; // Simpson needs an even interval count
    GalatryTable t;
    t.tau.resize(n);
    t.weighted_mod.resize(n);
    const double h = tau_end / static_cast<double>(n - 1);
    for (std::size_t k = 0; k < n; ++k) {
        const double tk = k * h;
        double wgt = (k == 0 || k + 1 == n) ? 1.0 : (k % 2 == 1 ? 4.0 : 2.0);
        t.tau[k] = tk;
        t.weighted_mod[k] = wgt * (h / 3.0) *
            correlation_modulus(p, tk, ProfileKind::galatry);
    }
    return t;
}

double galatry_absorbance_from_table(const GalatryTable& t, double area, double offset) {
    double acc = 0.0;
    const double om = kTwoPi * offset;
    for (std::size_t k = 0; k < t.tau.size(); ++k)
        acc += t.weighted_mod[k] * std::cos(om * t.tau[k]);
    return 2.0 * area * acc;
}

} // namespace

double get_param(const LineParams& p, int index) {
    switch (index) {
        case param_index::nu0: return p.nu0;
        case param_index::dnu_dop: return p.dnu_dop;
        case param_index::dnu_coll: return p.dnu_coll;
        case param_index::beta_gal: return p.beta_gal;
        case param_index::area: return p.area;
        case param_index::baseline_level: return p.baseline_level;
        case param_index::baseline_slope: return p.baseline_slope;
    }
    throw std::out_of_range("LineParams index");
}

void set_param(LineParams& p, int index, double value) {
    switch (index) {
        case param_index::nu0: p.nu0 = value; return;
        case param_index::dnu_dop: p.dnu_dop = value; return;
        case param_index::dnu_coll: p.dnu_coll = value; return;
        case param_index::beta_gal: p.beta_gal = value; return;
        case param_index::area: p.area = value; return;
        case param_index::baseline_level: p.baseline_level = value; return;
        case param_index::baseline_slope: p.baseline_slope = value; return;
    }
    throw std::out_of_range("LineParams index");
}

const char* param_name(int index) {
    static const char* names[] = {"nu0", "dnu_dop", "dnu_coll", "beta_gal",
                                  "area", "baseline_level", "baseline_slope"};
    if (index < 0 || index >= param_index::count)
        throw std::out_of_range("LineParams index");
    return names[index];
}

ProfileKind profile_kind_from_string(const std::string& s) {
    if (s == "gaussian") return ProfileKind::gaussian;
    if (s == "lorentzian") return ProfileKind::lorentzian;
    if (s == "voigt") return ProfileKind::voigt;
    if (s == "galatry") return ProfileKind::galatry;
    throw std::invalid_argument("unknown profile kind: " + s);
}

std::string to_string(ProfileKind kind) {
    switch (kind) {
        case ProfileKind::gaussian: return "gaussian";
        case ProfileKind::lorentzian: return "lorentzian";
        case ProfileKind::voigt: return "voigt";
        case ProfileKind::galatry: return "galatry";
    }
    return "?";
}

void validate_line(const LineParams& p) {
    if (!(p.dnu_dop >= 0.0) || !(p.dnu_coll >= 0.0) || !(p.beta_gal >= 0.0))
        throw std::invalid_argument("LineParams: widths and beta_gal must be >= 0");
    if (!(p.area >= 0.0))
        throw std::invalid_argument("LineParams: area must be >= 0");
    if (p.dnu_dop == 0.0 && p.dnu_coll == 0.0)
        throw std::invalid_argument("LineParams: need dnu_dop > 0 or dnu_coll > 0");
}

void validate_line(const LineParams& p, ProfileKind kind) {
    validate_line(p);
    switch (kind) {
        case ProfileKind::gaussian:
            if (p.dnu_coll != 0.0 || p.beta_gal != 0.0)
                throw std::invalid_argument("gaussian model requires dnu_coll = beta_gal = 0");
            break;
        case ProfileKind::lorentzian:
            if (p.dnu_dop != 0.0 || p.beta_gal != 0.0)
                throw std::invalid_argument("lorentzian model requires dnu_dop = beta_gal = 0");
            break;
        case ProfileKind::voigt:
            if (p.beta_gal != 0.0)
                throw std::invalid_argument("voigt model requires beta_gal = 0");
            break;
        case ProfileKind::galatry:
            if (p.dnu_dop == 0.0)
                throw std::invalid_argument("galatry model requires dnu_dop > 0");
            break;
    }
}

double grid_step(const std::vector<double>& grid) {
    if (grid.size() < 2)
        throw grid_error("frequency grid needs at least 2 points");
    return (grid.back() - grid.front()) / static_cast<double>(grid.size() - 1);
}

void validate_grid(const std::vector<double>& grid, const LineParams& p) {
    const double step = grid_step(grid);
    if (!(step > 0.0))
        throw grid_error("frequency grid must be strictly increasing");
    const double scale = std::max(std::abs(grid.front()), std::abs(grid.back())) + std::abs(step);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double d = grid[i] - grid[i - 1];
        if (!(d > 0.0))
            throw grid_error("frequency grid must be strictly increasing");
        if (std::abs(d - step) > 1e-9 * scale)
            throw grid_error("frequency grid must be uniform to 1e-9 relative");
    }
    const double width = p.dnu_dop + p.dnu_coll;
    if (step > width / 4.0)
        throw grid_error("grid step too coarse: step > (dnu_dop + dnu_coll)/4 risks aliasing");
}

std::complex<double> voigt_correlation(const LineParams& p, double tau) {
    const double pdt = kPi * p.dnu_dop * tau;
    const double re = -kTwoPi * p.dnu_coll * tau - pdt * pdt;
    const double im = kTwoPi * p.nu0 * tau;
    return std::polar(std::exp(re), im);
}

std::complex<double> galatry_correlation(const LineParams& p, double tau) {
    if (p.beta_gal == 0.0)
        return voigt_correlation(p, tau);
    const double re = -kTwoPi * p.dnu_coll * tau + galatry_gaussian_exponent(p, tau);
    const double im = kTwoPi * p.nu0 * tau;
    return std::polar(std::exp(re), im);
}

std::complex<double> correlation(const LineParams& p, double tau, ProfileKind kind) {
    if (kind == ProfileKind::galatry)
        return galatry_correlation(p, tau);
    return voigt_correlation(p, tau);
}

std::vector<CorrelationSample> correlation_series(const LineParams& p,
                                                  const std::vector<double>& taus,
                                                  ProfileKind kind) {
    std::vector<CorrelationSample> out(taus.size());
    for (std::size_t i = 0; i < taus.size(); ++i)
        out[i] = {taus[i], correlation(p, taus[i], kind)};
    return out;
}

double correlation_modulus(const LineParams& p, double tau, ProfileKind kind) {
    double re = -kTwoPi * p.dnu_coll * tau;
    if (kind == ProfileKind::galatry && p.beta_gal > 0.0) {
        re += galatry_gaussian_exponent(p, tau);
    } else {
        const double pdt = kPi * p.dnu_dop * tau;
        re -= pdt * pdt;
    }
    return std::exp(re);
}

double absorbance_at(const LineParams& p, double nu, ProfileKind kind) {
    const double d = nu - p.nu0;
    switch (kind) {
        case ProfileKind::gaussian: {
            const double u = d / p.dnu_dop;
            return p.area / (p.dnu_dop * kSqrtPi) * std::exp(-u * u);
        }
        case ProfileKind::lorentzian:
            return p.area * p.dnu_coll / (kPi * (d * d + p.dnu_coll * p.dnu_coll));
        case ProfileKind::voigt: {
            if (p.dnu_dop == 0.0)
                return absorbance_at(p, nu, ProfileKind::lorentzian);
            if (p.dnu_coll == 0.0)
                return absorbance_at(p, nu, ProfileKind::gaussian);
            const std::complex<double> z(d / p.dnu_dop, p.dnu_coll / p.dnu_dop);
            return p.area / (p.dnu_dop * kSqrtPi) * faddeeva_w(z).real();
        }
        case ProfileKind::galatry: {
            if (p.beta_gal == 0.0)
                return absorbance_at(p, nu, ProfileKind::voigt);
            const GalatryTable t = tabulate_galatry_modulus(p, d);
            return galatry_absorbance_from_table(t, p.area, d);
        }
    }
    return 0.0;
}

std::vector<double> absorbance_profile(const LineParams& p,
                                       const std::vector<double>& grid,
                                       ProfileKind kind) {
    validate_line(p, kind);
    validate_grid(grid, p);
    std::vector<double> out(grid.size());
    if (kind == ProfileKind::galatry && p.beta_gal > 0.0) {
        const double max_off = std::max(std::abs(grid.front() - p.nu0),
                                        std::abs(grid.back() - p.nu0));
        const GalatryTable t = tabulate_galatry_modulus(p, max_off);
        for (std::size_t i = 0; i < grid.size(); ++i)
            out[i] = galatry_absorbance_from_table(t, p.area, grid[i] - p.nu0);
        return out;
    }
    for (std::size_t i = 0; i < grid.size(); ++i)
        out[i] = absorbance_at(p, grid[i], kind);
    return out;
}

double absorbance_derivative(const LineParams& p, double nu, ProfileKind kind, int order) {
    if (order < 0 || order > 5)
        throw std::invalid_argument("absorbance_derivative supports orders 0..5");
    if (order == 0)
        return absorbance_at(p, nu, kind);
    const double d = nu - p.nu0;
    switch (kind) {
        case ProfileKind::gaussian: {
            const double w = p.dnu_dop;
            const double u = d / w;
            // physicists' Hermite polynomials
            static const auto hermite = [](int n, double x) {
                switch (n) {
                    case 0: return 1.0;
                    case 1: return 2.0 * x;
                    case 2: return 4.0 * x * x - 2.0;
                    case 3: return (8.0 * x * x - 12.0) * x;
                    case 4: return (16.0 * x * x - 48.0) * x * x + 12.0;
                    default: return ((32.0 * x * x - 160.0) * x * x + 120.0) * x;
                }
            };
            const double sign = (order % 2 == 0) ? 1.0 : -1.0;
            return sign * hermite(order, u) * std::exp(-u * u) *
                   p.area / (kSqrtPi * std::pow(w, order + 1));
        }
        case ProfileKind::lorentzian: {
            std::complex<double> pole(d, -p.dnu_coll);
            std::complex<double> v = 1.0 / pole;
            double fact = 1.0;
            for (int n = 1; n <= order; ++n) {
                v /= pole;
                fact *= -n;
            }
            return p.area / kPi * (fact * v).imag();
        }
        case ProfileKind::voigt: {
            if (p.dnu_dop == 0.0)
                return absorbance_derivative(p, nu, ProfileKind::lorentzian, order);
            if (p.dnu_coll == 0.0)
                return absorbance_derivative(p, nu, ProfileKind::gaussian, order);
            const double w0 = p.dnu_dop;
            const std::complex<double> z(d / w0, p.dnu_coll / w0);
            const std::complex<double> two_i_over_sqrtpi(0.0, 2.0 / kSqrtPi);
            std::complex<double> wm1 = 0.0; // w^{(n-1)}
            std::complex<double> wn = faddeeva_w(z);
            for (int n = 0; n < order; ++n) {
                const std::complex<double> next =
                    (n == 0) ? (-2.0 * z * wn + two_i_over_sqrtpi)
                             : (-2.0 * static_cast<double>(n) * wm1 - 2.0 * z * wn);
                wm1 = wn;
                wn = next;
            }
            return p.area / (kSqrtPi * std::pow(w0, order + 1)) * wn.real();
        }
        case ProfileKind::galatry:
            throw std::invalid_argument("analytic derivatives not available for galatry");
    }
    return 0.0;
}

} // namespace specline
