#pragma once

#include <Eigen/Dense>

namespace twotemp {

struct OnsagerMatrix {
    double eta11 = 0.0, eta12 = 0.0, eta22 = 0.0, xi = 0.0;
    double chi = 1.0;
    bool specular = false;  ///< chi == 0, all resistivities vanish

    bool is_psd(double tol = 1e-12) const;
};

struct WallState {
    double theta_w = 1.0;
    Eigen::Vector3d velocity = Eigen::Vector3d::Zero();
    Eigen::Vector3d normal = Eigen::Vector3d::UnitY();  ///< from the wall into the gas
};

struct NormalTangential {
    double q_n = 0.0;
    Eigen::Vector3d q_bar = Eigen::Vector3d::Zero();
    double Q_n = 0.0;
    Eigen::Vector3d Q_bar = Eigen::Vector3d::Zero();
    double sigma_nn = 0.0;
    Eigen::Vector3d sigma_bar = Eigen::Vector3d::Zero();
    Eigen::Matrix3d sigma_tilde = Eigen::Matrix3d::Zero();
};

NormalTangential decompose_normal_tangential(const Eigen::Vector3d& q, const Eigen::Vector3d& Q,
                                             const Eigen::Matrix3d& sigma,
                                             const Eigen::Vector3d& n);
/// Inverse of the decomposition: returns {q, Q, sigma}.
struct Recomposed {
    Eigen::Vector3d q, Q;
    Eigen::Matrix3d sigma;
};
Recomposed recompose(const NormalTangential& d, const Eigen::Vector3d& n);

/// Leading-order kinetic resistivities; p and theta may be dimensional or scaled.
OnsagerMatrix onsager_matrix(double delta, double chi, double p = 1.0, double theta = 1.0);
/// Reduced-model matrix: eta12 = 2 eta11/(5+delta), eta22 = 4 eta11/(5+delta)^2.
OnsagerMatrix reduced_onsager_matrix(double delta, double chi, double p = 1.0,
                                     double theta = 1.0);

struct WallFluxes {
    double q_n = 0.0;
    double Q_n = 0.0;
    Eigen::Vector3d sigma_bar = Eigen::Vector3d::Zero();
};

/// Linear jump conditions for a general Onsager matrix; T = theta - theta_w, vartheta and
/// slip are dimensionless deviations.
WallFluxes apply_onsager_linear(const OnsagerMatrix& m, double delta, double temp_jump,
                                double vartheta, const Eigen::Vector3d& slip);
/// Closed-form linear conditions of the kinetic matrix.
WallFluxes apply_pbc_linear(double delta, double chi, double temp_jump, double vartheta,
                            const Eigen::Vector3d& slip);
/// Reduced-model conditions; Q_n is identically zero.
WallFluxes apply_pbc_reduced(double delta, double chi, double temp_jump, double vartheta,
                             const Eigen::Vector3d& slip);

/// Fluxes that make the nonlinear wall production equal the Onsager quadratic form.
WallFluxes apply_pbc_nonlinear(const OnsagerMatrix& m, double delta, double theta,
                               double theta_w, double vartheta, const Eigen::Vector3d& slip);

/// Nonlinear three-term wall entropy production.
double wall_entropy_production(double theta, double theta_w, double vartheta,
                               const WallFluxes& f, const Eigen::Vector3d& slip, double delta);
/// Second-order (linearized) wall entropy production about theta = theta_w = 1.
double wall_entropy_production_linear(double temp_jump, double vartheta, const WallFluxes& f,
                                      const Eigen::Vector3d& slip, double delta);

} // namespace twotemp
