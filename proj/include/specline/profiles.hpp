#ifndef SPECLINE_PROFILES_HPP
#define SPECLINE_PROFILES_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace specline {

// Units used everywhere in this library:
//   frequencies and widths        MHz
//   conjugate (correlation) time  1/MHz
//   laboratory time               s
//   sweep rates                   MHz/s

/// Physical description of an isolated absorption line.
struct LineParams {
    double nu0 = 0.0;            ///< center frequency (MHz)
    double dnu_dop = 0.0;        ///< Doppler half-width at 1/e of maximum (MHz)
    double dnu_coll = 0.0;       ///< collisional HWHM of the Lorentzian part (MHz)
    double beta_gal = 0.0;       ///< Dicke diffusion rate (MHz); 0 disables narrowing
    double area = 1.0;           ///< integrated absorbance (MHz)
    double baseline_level = 0.0; ///< dimensionless
    double baseline_slope = 0.0; ///< per MHz
};

/// Flat indexing of LineParams fields, shared by the fit machinery.
namespace param_index {
constexpr int nu0 = 0;
constexpr int dnu_dop = 1;
constexpr int dnu_coll = 2;
constexpr int beta_gal = 3;
constexpr int area = 4;
constexpr int baseline_level = 5;
constexpr int baseline_slope = 6;
constexpr int count = 7;
} // namespace param_index

double get_param(const LineParams& p, int index);
void set_param(LineParams& p, int index, double value);
const char* param_name(int index);

/// One sample of the dipole correlation function.
struct CorrelationSample {
    double tau = 0.0;                      ///< conjugate time (1/MHz)
    std::complex<double> value{1.0, 0.0};  ///< Phi(tau); Phi(0) = 1
};

enum class ProfileKind { gaussian, lorentzian, voigt, galatry };

ProfileKind profile_kind_from_string(const std::string& s);
std::string to_string(ProfileKind kind);

struct grid_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Throws std::invalid_argument when an invariant is violated
/// (negative widths, unnormalizable profile, model/parameter mismatch).
void validate_line(const LineParams& p);
void validate_line(const LineParams& p, ProfileKind kind);

/// Throws grid_error unless grid is strictly increasing, uniform to 1e-9
/// relative, and fine enough for p (step <= (dnu_dop + dnu_coll)/4).
void validate_grid(const std::vector<double>& grid, const LineParams& p);
double grid_step(const std::vector<double>& grid);

/// Voigt dipole correlation, exp[2 pi (i nu0 - dnu_coll) tau - (pi dnu_dop tau)^2].
std::complex<double> voigt_correlation(const LineParams& p, double tau);

/// Galatry (soft-collision) correlation. The Gaussian decay is replaced by
/// the diffusion form -(dnu_dop^2 / (2 beta^2)) (z - 1 + e^-z), z = 2 pi beta tau,
/// which tends to -(pi dnu_dop tau)^2 as beta -> 0.
std::complex<double> galatry_correlation(const LineParams& p, double tau);

/// Correlation for the requested profile family.
std::complex<double> correlation(const LineParams& p, double tau, ProfileKind kind);

std::vector<CorrelationSample> correlation_series(const LineParams& p,
                                                  const std::vector<double>& taus,
                                                  ProfileKind kind);

/// |Phi(tau)| without the oscillatory center-frequency factor. Monotone
/// non-increasing in tau; used to size Fourier grids.
double correlation_modulus(const LineParams& p, double tau, ProfileKind kind);

/// Undistorted absorbance A(nu) on a uniform grid. Baseline is NOT applied
/// here; the forward module owns it. Gaussian/Lorentzian/Voigt are evaluated
/// in closed form, Galatry by quadrature of its correlation function.
std::vector<double> absorbance_profile(const LineParams& p,
                                       const std::vector<double>& grid,
                                       ProfileKind kind);

/// Absorbance at a single frequency, same conventions as absorbance_profile.
double absorbance_at(const LineParams& p, double nu, ProfileKind kind);

/// d^n A / d nu^n in closed form (n <= 5) for gaussian/lorentzian/voigt.
double absorbance_derivative(const LineParams& p, double nu, ProfileKind kind, int order);

} // namespace specline

#endif
