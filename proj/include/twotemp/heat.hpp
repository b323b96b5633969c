#pragma once

#include <optional>
#include <vector>

#include "twotemp/coefficients.hpp"

namespace twotemp {

/// Steady conduction between plates at y = -1/2 (lower) and y = +1/2 (upper).
struct HeatCase {
    double kn = 0.1;
    double chi = 1.0;
    std::optional<double> chi_upper;  ///< defaults to chi
    double delta = 2.0;
    double wall_temp_upper = 0.0;     ///< dimensionless deviation
    double wall_temp_lower = 0.0;
    CoefficientSet coeffs;            ///< rescaled to `kn` by the solver
    /// Solve for all seven constants, including the shear/slip pair.
    bool full_system = false;
    double wall_velocity_upper = 0.0; ///< tangential, only with full_system
    double wall_velocity_lower = 0.0;
    int grid_points = 201;

    double chi_lo() const { return chi; }
    double chi_hi() const { return chi_upper.value_or(chi); }
};

/// Closed-form solution
///   vartheta = A cosh(m y)/cosh(m/2) + B sinh(m y)/sinh(m/2),  theta = beta vartheta + E + F y,
///   rho = K - theta - vartheta,  v = G + H y.
/// The hyperbolic basis is normalized to the wall values so large m cannot overflow.
struct HeatSolution {
    double A = 0, B = 0, E = 0, F = 0, K = 0, G = 0, H = 0;
    double m = 0.0;
    double beta = 0.0;
    double delta = 2.0;
    double conductivity = 0.0;        ///< zeta11 + 2 zeta12 + zeta22
    bool single_temperature = false;  ///< reduced or NSF: vartheta == 0
    double condition_number = 0.0;
};

struct HeatFields {
    double rho, theta_tr, theta_in, theta, vartheta, v;
};

struct HeatProfile {
    std::vector<double> y_grid;
    std::vector<double> rho, theta_tr, theta_in, theta, vartheta, Q_y;
    double q_y = 0.0;
    HeatSolution solution;
    bool nsf = false;

    HeatFields at(double y) const;
};

HeatProfile solve_heat_case(const HeatCase& c);

/// Single temperature, Fourier law and classical temperature jump q_n = -eta11 T.
HeatProfile solve_heat_nsf(const HeatCase& c);

/// Resamples a profile from its (possibly modified) analytic solution.
void resample(HeatProfile& p, const HeatCase& c);

/// Max absolute finite-difference residual of the balance laws, jump conditions and the
/// zero-mean-density constraint.
double residual_check(const HeatProfile& p, const HeatCase& c);

bool antisymmetry_check(const HeatProfile& p, const HeatCase& c, double tol = 1e-9);

} // namespace twotemp
