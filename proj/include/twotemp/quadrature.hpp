#pragma once

#include <vector>

#include "twotemp/thermo.hpp"

namespace twotemp {

struct QuadratureRule {
    std::vector<double> nodes, weights;
};

/// Gauss-Hermite for weight exp(-t^2) (Golub-Welsch).
QuadratureRule gauss_hermite(int n);
/// Generalized Gauss-Laguerre for weight t^alpha exp(-t), alpha > -1.
QuadratureRule gauss_laguerre(int n, double alpha);

struct F6Moments {
    double mass = 0.0;
    Eigen::Vector3d momentum = Eigen::Vector3d::Zero();  ///< peculiar momentum, zero for f6
    double translational_energy = 0.0;                   ///< int m f6 C^2/2
    double internal_energy = 0.0;                        ///< int m f6 I
    int order = 0;                                       ///< quadrature order that converged
};

/// Moments of eval_f6 by tensorized Hermite x Laguerre quadrature, order doubled until
/// two successive orders agree to `tol`.
F6Moments f6_moments(const FieldState& s, double m = 1.0, double tol = 1e-8);

} // namespace twotemp
