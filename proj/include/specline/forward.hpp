#ifndef SPECLINE_FORWARD_HPP
#define SPECLINE_FORWARD_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "specline/filters.hpp"
#include "specline/profiles.hpp"

namespace specline {

/// Detection-chain distortion: the filter together with the frequency
/// constant produced by a particular sweep rate.
struct DistortionModel {
    FilterSpec filter;
    double nu_d = 0.0;              ///< frequency constant (MHz, signed)
    bool correction_enabled = true; ///< consumed by the fit module
};

/// Builds a consistent model from the sweep rate.
DistortionModel make_distortion(const FilterSpec& f, double sweep_rate,
                                bool correction_enabled = true);

/// Builds from an explicit nu_d (no rate available to cross-check).
DistortionModel make_distortion_from_nu_d(const FilterSpec& f, double nu_d,
                                          bool correction_enabled = true);

/// Throws std::invalid_argument when the stored nu_d disagrees with
/// frequency_constant(filter, sweep_rate).
void validate_distortion(const DistortionModel& d,
                         std::optional<double> sweep_rate = std::nullopt);

struct SpectrumMeta {
    ProfileKind model = ProfileKind::voigt;
    bool thick = false;
    std::optional<LineParams> truth;    ///< generating parameters, when synthetic
    std::optional<FilterSpec> filter;
    std::optional<SweepSpec> sweep;
    std::optional<double> nu_d;
    double noise_sigma = 0.0;
    std::uint64_t seed = 0;
    std::string mode;                   ///< "continuous" | "step" | ""
};

/// Sampled (frequency, signal) record; freqs strictly increasing and uniform.
struct Spectrum {
    std::vector<double> freqs;  ///< MHz
    std::vector<double> signal; ///< absorbance-like or transmission values
    SpectrumMeta meta;
};

void validate_spectrum(const Spectrum& s);

/// Continuous-sweep distorted absorbance spectrum: Fourier inversion of
/// gain x correlation, plus the linear baseline. Exactly equals
/// absorbance_profile + baseline when nu_d = 0.
Spectrum distorted_spectrum_continuous(const LineParams& p, const DistortionModel& d,
                                       const std::vector<double>& grid, ProfileKind kind);

/// Power-series forward model in nu_d:
///   order 1: A(nu - nu_d)
///   order 2: + (1/2 - q^2) nu_d^2 A''(nu)
///   order 3: - (5/6 - 2 q^2) nu_d^3 A'''(nu)
/// Valid for |nu_d| <= 0.3 (dnu_dop + dnu_coll); throws std::domain_error
/// outside. Derivatives are analytic (gaussian/lorentzian/voigt only).
Spectrum perturbative_spectrum(const LineParams& p, const DistortionModel& d,
                               const std::vector<double>& grid, int order);

/// Small-tau cumulants of the distorted Voigt correlation:
/// center shifted by nu_d, Gaussian width sqrt(dnu_dop^2 + (2-4q^2) nu_d^2),
/// tau^3 asymmetry coefficient (1/3 - q^2); Lorentz width unchanged.
struct VoigtCumulants {
    double center_shift = 0.0;   ///< MHz
    double gaussian_width = 0.0; ///< MHz
    double asymmetry = 0.0;      ///< coefficient of (2 pi nu_d tau)^3
    double lorentz_width = 0.0;  ///< MHz
};
VoigtCumulants voigt_cumulants(const LineParams& p, const DistortionModel& d);

/// Optically thick transmission: T = exp(-A) filtered through the detection
/// chain, with the baseline applied multiplicatively. Throws
/// std::overflow_error when peak absorbance exceeds 50.
Spectrum thick_sample_transmission(const LineParams& p, const DistortionModel& d,
                                   const std::vector<double>& grid, ProfileKind kind);

/// Forward model bound to a fixed grid, evaluating signal and analytic
/// parameter derivatives. This is the function the fit module minimizes
/// against; distortion == nullopt gives the undistorted model.
class LineShapeModel {
public:
    LineShapeModel(std::vector<double> grid, ProfileKind kind,
                   std::optional<DistortionModel> distortion, bool thick);

    const std::vector<double>& grid() const { return grid_; }
    ProfileKind kind() const { return kind_; }
    bool thick() const { return thick_; }

    std::vector<double> operator()(const LineParams& p) const;

    /// signal plus d(signal)/d(param) columns for the requested parameters.
    void eval(const LineParams& p, std::vector<double>& signal,
              std::vector<std::vector<double>>* jacobian,
              const std::array<bool, param_index::count>* wanted) const;

private:
    std::vector<double> grid_;
    ProfileKind kind_;
    std::optional<DistortionModel> distortion_;
    bool thick_;
};

} // namespace specline

#endif
