#include "twotemp/wall.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "twotemp/errors.hpp"

namespace twotemp {

bool OnsagerMatrix::is_psd(double tol) const {
    const double scale = std::max({std::abs(eta11), std::abs(eta22), 1e-300});
    return eta11 >= -tol * scale && eta22 >= -tol * scale && xi >= -tol * scale &&
           eta11 * eta22 - eta12 * eta12 >= -tol * scale * scale;
}

NormalTangential decompose_normal_tangential(const Eigen::Vector3d& q, const Eigen::Vector3d& Q,
                                             const Eigen::Matrix3d& sigma,
                                             const Eigen::Vector3d& n) {
    if (std::abs(n.norm() - 1.0) > 1e-12) throw DomainError("normal must be a unit vector");
    NormalTangential d;
    d.q_n = q.dot(n);
    d.q_bar = q - d.q_n * n;
    d.Q_n = Q.dot(n);
    d.Q_bar = Q - d.Q_n * n;
    const Eigen::Vector3d sn = sigma * n;
    d.sigma_nn = n.dot(sn);
    d.sigma_bar = sn - d.sigma_nn * n;
    const Eigen::Matrix3d nn = n * n.transpose();
    d.sigma_tilde = sigma - d.sigma_nn * (1.5 * nn - 0.5 * Eigen::Matrix3d::Identity()) -
                    d.sigma_bar * n.transpose() - n * d.sigma_bar.transpose();
    return d;
}

Recomposed recompose(const NormalTangential& d, const Eigen::Vector3d& n) {
    const Eigen::Matrix3d nn = n * n.transpose();
    Recomposed r;
    r.q = d.q_n * n + d.q_bar;
    r.Q = d.Q_n * n + d.Q_bar;
    r.sigma = d.sigma_nn * (1.5 * nn - 0.5 * Eigen::Matrix3d::Identity()) +
              d.sigma_bar * n.transpose() + n * d.sigma_bar.transpose() + d.sigma_tilde;
    return r;
}

namespace {

double wall_factor(double chi, double p, double theta) {
    if (!(chi >= 0.0 && chi <= 1.0)) throw RangeError("chi", chi, "[0, 1]");
    if (!(p > 0.0)) throw RangeError("p", p, "(0, inf)");
    if (!(theta > 0.0)) throw RangeError("theta", theta, "(0, inf)");
    return chi / (2.0 - chi) * p * std::sqrt(2.0 / (std::numbers::pi * theta));
}

} // namespace

OnsagerMatrix onsager_matrix(double delta, double chi, double p, double theta) {
    if (!(delta > 0.0)) throw RangeError("delta", delta, "(0, inf)");
    const double s = wall_factor(chi, p, theta);
    OnsagerMatrix m;
    m.chi = chi;
    m.specular = (chi == 0.0);
    m.eta11 = s * (4.0 + delta) / 2.0;
    m.eta12 = s / 2.0;
    m.eta22 = s * ((15.0 + 4.0 * delta) / (2.0 * delta) * (3.0 + delta) / (5.0 + delta) +
                   1.0 / (3.0 + delta));
    m.xi = s;
    return m;
}

OnsagerMatrix reduced_onsager_matrix(double delta, double chi, double p, double theta) {
    OnsagerMatrix m = onsager_matrix(delta, chi, p, theta);
    m.eta12 = 2.0 * m.eta11 / (5.0 + delta);
    m.eta22 = 4.0 * m.eta11 / ((5.0 + delta) * (5.0 + delta));
    return m;
}

WallFluxes apply_onsager_linear(const OnsagerMatrix& m, double delta, double temp_jump,
                                double vartheta, const Eigen::Vector3d& slip) {
    const double a = 2.0 / (5.0 + delta);
    WallFluxes f;
    f.q_n = -m.eta11 * temp_jump - m.eta12 * vartheta;
    f.Q_n = -(5.0 + delta) / (3.0 + delta) *
            ((m.eta12 - a * m.eta11) * temp_jump + (m.eta22 - a * m.eta12) * vartheta);
    f.sigma_bar = -m.xi * slip;
    return f;
}

WallFluxes apply_pbc_linear(double delta, double chi, double temp_jump, double vartheta,
                            const Eigen::Vector3d& slip) {
    const double s = wall_factor(chi, 1.0, 1.0);
    WallFluxes f;
    f.q_n = -s * (4.0 + delta) / 2.0 * temp_jump - s / 2.0 * vartheta;
    f.Q_n = s / 2.0 * temp_jump -
            s * ((15.0 + 4.0 * delta) / (2.0 * delta) + 2.0 / ((3.0 + delta) * (3.0 + delta))) *
                vartheta;
    f.sigma_bar = -s * slip;
    return f;
}

WallFluxes apply_pbc_reduced(double delta, double chi, double temp_jump, double vartheta,
                             const Eigen::Vector3d& slip) {
    const double s = wall_factor(chi, 1.0, 1.0);
    WallFluxes f;
    f.q_n = -s * (4.0 + delta) / 2.0 * temp_jump - s * (4.0 + delta) / (5.0 + delta) * vartheta;
    f.Q_n = 0.0;
    f.sigma_bar = -s * slip;
    return f;
}

WallFluxes apply_pbc_nonlinear(const OnsagerMatrix& m, double delta, double theta,
                               double theta_w, double vartheta, const Eigen::Vector3d& slip) {
    if (!(theta + vartheta > 0.0)) throw DomainError("theta + vartheta must be positive");
    const double T = theta - theta_w;
    const double g = vartheta / (theta + vartheta);
    const double vt = g * theta;
    WallFluxes f;
    f.sigma_bar = -m.xi * slip;
    const double b1 = -m.eta11 * T - m.eta12 * vt;
    const double b2 = -m.eta12 * T - m.eta22 * vt;
    f.q_n = b1 + g * b2 - f.sigma_bar.dot(slip);
    f.Q_n = (5.0 + delta) / (3.0 + delta) * (b2 - 2.0 / (5.0 + delta) * f.q_n);
    return f;
}

double wall_entropy_production(double theta, double theta_w, double vartheta,
                               const WallFluxes& f, const Eigen::Vector3d& slip, double delta) {
    const double T = theta - theta_w;
    const double g = vartheta / (theta + vartheta);
    const double a = 2.0 / (5.0 + delta), b = (3.0 + delta) / (5.0 + delta);
    const double sv = f.sigma_bar.dot(slip);
    return -T / (theta * theta_w) * (f.q_n - a * g * f.q_n - b * g * f.Q_n + sv) -
           g * theta / (theta * theta_w) * (a * f.q_n + b * f.Q_n) - sv / theta;
}

double wall_entropy_production_linear(double temp_jump, double vartheta, const WallFluxes& f,
                                      const Eigen::Vector3d& slip, double delta) {
    const double a = 2.0 / (5.0 + delta), b = (3.0 + delta) / (5.0 + delta);
    return -temp_jump * f.q_n - vartheta * (a * f.q_n + b * f.Q_n) - f.sigma_bar.dot(slip);
}

} // namespace twotemp
