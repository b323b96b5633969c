#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "twotemp/coefficients.hpp"
#include "twotemp/polynomial.hpp"

namespace twotemp {

using Matrix4c = Eigen::Matrix<cplx, 4, 4>;
using Vector4c = Eigen::Matrix<cplx, 4, 1>;

struct RbsOptions {
    /// Reproduce the printed matrix (first-derivative viscous term, delta/3 in row 4).
    bool verbatim = false;
};

/// Knudsen number and frequency that correspond to (y, x): Kn = 1/(2 sqrt2 pi y),
/// omega = 2 sqrt2 pi x, with wavenumber 2 pi.
double rbs_knudsen(double y);
double rbs_omega(double x);

/// Laplace-Fourier system for a density impulse; unknowns (rho, v, theta_tr, theta_in).
std::pair<Matrix4c, Vector4c> assemble_srb_system(const CoefficientSet& c, double delta,
                                                  double omega, RbsOptions opt = {});

struct SpectrumCurve {
    double y = 0.0;
    std::vector<double> x_grid;
    std::vector<double> s_values;
    ModelTag model_tag = ModelTag::Model1;
    bool nsf = false;
};

SpectrumCurve density_spectrum(const CoefficientSet& c, double delta, double y,
                               const std::vector<double>& x_grid, RbsOptions opt = {});

/// One-temperature NSF spectrum with shear viscosity Kn and conductivity lambda.
SpectrumCurve nsf_density_spectrum(double delta, double conductivity_per_kn, double y,
                                   const std::vector<double>& x_grid);

struct PeakReport {
    double rayleigh_height = 0.0;
    std::optional<double> brillouin_x;
    std::optional<double> brillouin_height;
};

PeakReport peak_report(const SpectrumCurve& curve);

/// Symmetric grid [-x_max, x_max] with the given step.
std::vector<double> symmetric_grid(double x_max, double step);

} // namespace twotemp
