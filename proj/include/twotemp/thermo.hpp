#pragma once

#include <Eigen/Dense>

#include "twotemp/coefficients.hpp"

namespace twotemp {

struct FieldState {
    double rho = 1.0;
    Eigen::Vector3d velocity = Eigen::Vector3d::Zero();
    double theta_tr = 1.0;
    double theta_in = 1.0;
    double delta = 2.0;
};

struct GradientState {
    Eigen::Matrix3d dv = Eigen::Matrix3d::Zero();  ///< dv(i,k) = d v_i / d x_k
    Eigen::Vector3d dtheta_tr = Eigen::Vector3d::Zero();
    Eigen::Vector3d dtheta_in = Eigen::Vector3d::Zero();
};

void validate(const FieldState& s);

double mixture_temperature(const FieldState& s);
/// vartheta = theta_tr - theta
double dynamic_temperature(const FieldState& s);

/// Maximum-entropy distribution: Maxwellian in C = c - v times a Gamma law in I.
double eval_f6(const FieldState& s, const Eigen::Vector3d& c, double I, double m = 1.0);

/// rho s relative to the reference state (additive constants dropped).
double entropy_density(const FieldState& s);

/// h = q_tr/theta_tr + q_in/theta_in
Eigen::Vector3d entropy_flux(const FieldState& s, const Eigen::Vector3d& q_tr,
                             const Eigen::Vector3d& q_in);

/// Same flux written with q = q_tr + q_in and the heat-flux difference Q.
Eigen::Vector3d entropy_flux_decomposed(const FieldState& s, const Eigen::Vector3d& q,
                                        const Eigen::Vector3d& Q);

struct TotalFluxes {
    Eigen::Vector3d q, Q;
};
TotalFluxes to_total_fluxes(const FieldState& s, const Eigen::Vector3d& q_tr,
                            const Eigen::Vector3d& q_in);

struct ConstitutiveFluxes {
    Eigen::Matrix3d sigma;  ///< deviatoric stress
    Eigen::Vector3d q_tr, q_in;
};

/// Nonlinear constitutive laws with constant coefficients: sigma = -2 mu grad<v>,
/// q_a = -sum_b zeta_ab grad theta_b / theta_b^2.
ConstitutiveFluxes constitutive_fluxes(const GradientState& g, const FieldState& s,
                                       const CoefficientSet& c);

/// Exchange production rho vartheta / tau_int.
double exchange_production(const FieldState& s, double tau_int);

/// Bulk entropy production; `exchange` is the production P01.
double entropy_production(const FieldState& s, const GradientState& g, const CoefficientSet& c,
                          double exchange);

/// Symmetric traceless part of a 3x3 matrix.
Eigen::Matrix3d deviator(const Eigen::Matrix3d& a);

} // namespace twotemp
