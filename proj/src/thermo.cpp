#include "twotemp/thermo.hpp"

#include <cmath>
#include <numbers>

#include "twotemp/errors.hpp"

namespace twotemp {

void validate(const FieldState& s) {
    if (!(s.rho > 0.0)) throw DomainError("rho must be positive");
    if (!(s.theta_tr > 0.0)) throw DomainError("theta_tr must be positive");
    if (!(s.theta_in > 0.0)) throw DomainError("theta_in must be positive");
    if (!(s.delta > 0.0)) throw DomainError("delta must be positive");
}

double mixture_temperature(const FieldState& s) {
    return (3.0 * s.theta_tr + s.delta * s.theta_in) / (3.0 + s.delta);
}

double dynamic_temperature(const FieldState& s) { return s.theta_tr - mixture_temperature(s); }

double eval_f6(const FieldState& s, const Eigen::Vector3d& c, double I, double m) {
    if (!(I > 0.0)) throw DomainError("internal energy I must be positive");
    validate(s);
    if (std::isinf(I)) return 0.0;
    const double C2 = (c - s.velocity).squaredNorm();
    if (std::isinf(C2)) return 0.0;
    const double half = 0.5 * s.delta;
    const double maxwell =
        std::pow(2.0 * std::numbers::pi * s.theta_tr, -1.5) * std::exp(-C2 / (2.0 * s.theta_tr));
    // I^{-1} (I/theta_in)^{delta/2} e^{-I/theta_in} / Gamma(delta/2), in log form
    const double log_gamma_part =
        -std::log(I) + half * std::log(I / s.theta_in) - I / s.theta_in - std::lgamma(half);
    return s.rho / m * maxwell * std::exp(log_gamma_part);
}

double entropy_density(const FieldState& s) {
    validate(s);
    return s.rho * (1.5 * std::log(s.theta_tr) + 0.5 * s.delta * std::log(s.theta_in) -
                    std::log(s.rho));
}

Eigen::Vector3d entropy_flux(const FieldState& s, const Eigen::Vector3d& q_tr,
                             const Eigen::Vector3d& q_in) {
    return q_tr / s.theta_tr + q_in / s.theta_in;
}

TotalFluxes to_total_fluxes(const FieldState& s, const Eigen::Vector3d& q_tr,
                            const Eigen::Vector3d& q_in) {
    const double th = mixture_temperature(s);
    const double vt = s.theta_tr - th;
    const double ratio = (5.0 * th + 3.0 * vt) / (s.delta * th - 3.0 * vt);
    return {q_tr + q_in, q_tr - ratio * q_in};
}

Eigen::Vector3d entropy_flux_decomposed(const FieldState& s, const Eigen::Vector3d& q,
                                        const Eigen::Vector3d& Q) {
    const double th = mixture_temperature(s);
    const double vt = s.theta_tr - th;
    if (!(s.delta * th - 3.0 * vt > 0.0)) throw DomainError("delta theta - 3 vartheta must be positive");
    const double d = s.delta;
    const double g = vt / (th * (th + vt));
    return q / th - 2.0 / (5.0 + d) * g * q - (3.0 + d) / (5.0 + d) * g * Q;
}

Eigen::Matrix3d deviator(const Eigen::Matrix3d& a) {
    Eigen::Matrix3d sym = 0.5 * (a + a.transpose());
    return sym - sym.trace() / 3.0 * Eigen::Matrix3d::Identity();
}

ConstitutiveFluxes constitutive_fluxes(const GradientState& g, const FieldState& s,
                                       const CoefficientSet& c) {
    ConstitutiveFluxes f;
    f.sigma = -2.0 * c.mu * deviator(g.dv);
    const Eigen::Vector3d a = g.dtheta_tr / (s.theta_tr * s.theta_tr);
    const Eigen::Vector3d b = g.dtheta_in / (s.theta_in * s.theta_in);
    f.q_tr = -c.zeta11 * a - c.zeta12 * b;
    f.q_in = -c.zeta12 * a - c.zeta22 * b;
    return f;
}

double exchange_production(const FieldState& s, double tau_int) {
    if (!(tau_int > 0.0)) throw DomainError("tau_int must be positive");
    return s.rho * dynamic_temperature(s) / tau_int;
}

double entropy_production(const FieldState& s, const GradientState& g, const CoefficientSet& c,
                          double exchange) {
    validate(s);
    const auto f = constitutive_fluxes(g, s, c);
    const double viscous = -(f.sigma.array() * g.dv.array()).sum() / s.theta_tr;
    const double heat = -f.q_tr.dot(g.dtheta_tr) / (s.theta_tr * s.theta_tr) -
                        f.q_in.dot(g.dtheta_in) / (s.theta_in * s.theta_in);
    const double relax = (1.0 / s.theta_in - 1.0 / s.theta_tr) * exchange;
    return viscous + heat + relax;
}

} // namespace twotemp
