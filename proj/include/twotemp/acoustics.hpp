#pragma once

#include <vector>

#include "twotemp/coefficients.hpp"
#include "twotemp/polynomial.hpp"

namespace twotemp {

struct AcousticPoint {
    double rarefaction = 0.0;  ///< r = p/(mu omega)
    double atten_factor = 0.0; ///< alpha c0 / omega
    double recip_speed = 0.0;  ///< c0 / v_ph
    double speed_dev = 0.0;    ///< (v_ph - c0) / c0
    cplx k;                    ///< selected forward acoustic wavenumber (Kn = 1 units)
};

double equilibrium_sound_speed(double delta);

/// Two-temperature curve; the coefficient set is rescaled to Kn = 1 internally.
std::vector<AcousticPoint> acoustic_curve(const CoefficientSet& c, double delta,
                                          const std::vector<double>& r_grid);

struct NsfAcousticOptions {
    double bulk_viscosity = 0.0;  ///< mu_b / mu, off by default
};

/// Classical one-temperature NSF curve with shear viscosity Kn and conductivity
/// lambda = `conductivity_per_kn` * Kn.
std::vector<AcousticPoint> nsf_curve(double delta, double conductivity_per_kn,
                                     const std::vector<double>& r_grid,
                                     NsfAcousticOptions opt = {});
std::vector<AcousticPoint> nsf_baseline_curve(const GasSpecies& s,
                                              const std::vector<double>& r_grid,
                                              NsfAcousticOptions opt = {});

/// Forward acoustic root among spatial roots: k_r > 0, maximal k_r/|k_i|.
cplx select_forward_acoustic(const std::vector<cplx>& ks);

std::vector<double> log_grid(double lo, double hi, int points);

} // namespace twotemp
