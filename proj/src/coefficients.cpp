#include "twotemp/coefficients.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>

#include "twotemp/errors.hpp"

namespace twotemp {

std::string to_string(ModelTag tag) {
    switch (tag) {
    case ModelTag::Model1: return "model1";
    case ModelTag::Model2: return "model2";
    case ModelTag::Model3: return "model3";
    case ModelTag::Model4: return "model4";
    case ModelTag::Reduced: return "reduced";
    }
    return "unknown";
}

ModelTag parse_model_tag(const std::string& text) {
    std::string t;
    for (char ch : text) t += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (t.rfind("model", 0) == 0) t = t.substr(5);
    if (t == "1") return ModelTag::Model1;
    if (t == "2") return ModelTag::Model2;
    if (t == "3") return ModelTag::Model3;
    if (t == "4") return ModelTag::Model4;
    if (t == "reduced" || t == "r") return ModelTag::Reduced;
    throw InputError("unknown model '" + text + "' (expected 1, 2, 3, 4 or reduced)");
}

bool CoefficientSet::is_psd(double tol) const {
    const double scale = std::max({std::abs(zeta11), std::abs(zeta22), std::abs(zeta12), 1e-300});
    return zeta11 >= -tol * scale && zeta22 >= -tol * scale &&
           zeta_det() >= -tol * scale * scale && mu >= 0.0 && c_ex >= 0.0;
}

CoefficientSet CoefficientSet::rescaled(double new_kn) const {
    if (!(new_kn > 0.0)) throw RangeError("kn", new_kn, "(0, inf)");
    CoefficientSet r = *this;
    const double f = new_kn / kn;
    r.zeta11 *= f;
    r.zeta12 *= f;
    r.zeta22 *= f;
    r.mu *= f;
    r.c_ex /= f;
    r.kn = new_kn;
    return r;
}

double CoefficientSet::equivalent_bulk_viscosity(double delta) const {
    if (c_ex <= 0.0) return std::numeric_limits<double>::infinity();
    return delta * delta / (c_ex * (3.0 + delta) * (3.0 + delta));
}

namespace {

void check_kn(double kn) {
    if (!(kn > 0.0) || !std::isfinite(kn)) throw RangeError("kn", kn, "(0, inf)");
}

} // namespace

CoefficientSet model1_coefficients(const GasSpecies& s, double kn) {
    check_kn(kn);
    if (!s.model1) throw InputError("species '" + s.name + "' has no model1 constants");
    const double k = s.model1->kappa;
    if (!(k >= 0.0 && k <= 2.0 / 3.0)) throw RangeError("model1.kappa", k, "[0, 0.666667]");
    const double den = 24.0 + 150.0 * k + 202.0 * k * k + 204.0 * k * k * k;
    CoefficientSet c;
    c.model_tag = ModelTag::Model1;
    c.kn = kn;
    c.mu = kn;
    c.zeta11 = kn * 15.0 * (6.0 + 25.0 * k + 38.0 * k * k + 26.0 * k * k * k) / den;
    c.zeta12 = kn * 15.0 * k * (6.0 + 13.0 * k) / den;
    c.zeta22 = kn * 9.0 * (24.0 + 154.0 * k + 221.0 * k * k) /
               (10.0 * (12.0 + 75.0 * k + 101.0 * k * k + 102.0 * k * k * k));
    // mu / tau_int = 20 p kappa / (13 kappa + 6)
    const double inv_tau = 20.0 * k / ((13.0 * k + 6.0) * kn);
    c.c_ex = s.delta / (3.0 + s.delta) * inv_tau;
    c.exchange_free = (c.c_ex == 0.0);
    return c;
}

CoefficientSet model2_coefficients(const GasSpecies& s, double kn) {
    check_kn(kn);
    if (!s.model2) throw InputError("species '" + s.name + "' has no model2 constants");
    const double nu = s.model2->nu;
    if (!(nu < 1.0)) throw RangeError("model2.nu", nu, "[-0.5, 1)");
    if (!(nu >= -0.5)) throw RangeError("model2.nu", nu, "[-0.5, 1)");
    const double th1 = s.model2->theta1;
    if (!(th1 > 0.0 && th1 <= 1.0)) throw RangeError("model2.theta1", th1, "(0, 1]");
    const double d = s.delta;
    CoefficientSet c;
    c.model_tag = ModelTag::Model2;
    c.kn = kn;
    c.mu = kn;
    c.zeta11 = 2.5 * (1.0 - nu) * kn;
    c.zeta12 = 0.0;
    c.zeta22 = 0.5 * d * (1.0 - nu) * kn;
    c.c_ex = 3.0 * d * th1 / (4.0 * (3.0 + d) * (1.0 - nu) * kn);
    return c;
}

void validate_model3(const Model3Constants& p, double delta) {
    if (!(p.P0_sigma > 0.0)) throw RangeError("model3.P0_sigma", p.P0_sigma, "(0, inf)");
    if (!(p.P0_q > 0.0)) throw RangeError("model3.P0_q", p.P0_q, "(0, inf)");
    if (!(p.P0_s > 0.0)) throw RangeError("model3.P0_s", p.P0_s, "(0, inf)");
    if (!(p.P0_Pi >= 0.0)) throw RangeError("model3.P0_Pi", p.P0_Pi, "[0, inf)");
    const double D = p.P0_q * p.P0_s - p.P1_q * p.P1_s;
    if (!(D > 0.0))
        throw RangeError("model3.P0_q*P0_s-P1_q*P1_s", D, "(0, inf)");
    // symmetrized zeta must be PSD; evaluate at Kn = 1 with sigma-normalized constants
    const double z11 = 2.5 * p.P0_s / D;
    const double z22 = 0.5 * delta * p.P0_q / D;
    const double z12 = 0.5 * (-0.5 * delta * p.P1_q - 2.5 * p.P1_s) / D;
    const double det = z11 * z22 - z12 * z12;
    if (det < -1e-12 * z11 * z22)
        throw RangeError("model3 zeta determinant", det, "[0, inf)");
}

CoefficientSet model3_coefficients(const GasSpecies& s, double kn) {
    check_kn(kn);
    if (!s.model3) throw InputError("species '" + s.name + "' has no model3 constants");
    const auto& p = *s.model3;
    if (!(p.P0_sigma > 0.0)) throw RangeError("model3.P0_sigma", p.P0_sigma, "(0, inf)");
    const double q0 = p.P0_q / p.P0_sigma, q1 = p.P1_q / p.P0_sigma;
    const double s0 = p.P0_s / p.P0_sigma, s1 = p.P1_s / p.P0_sigma;
    const double D = q0 * s0 - q1 * s1;
    if (D == 0.0 || !std::isfinite(D))
        throw NumericError("model3: singular denominator P0_q P0_s - P1_q P1_s = 0");
    const double d = s.delta;
    CoefficientSet c;
    c.model_tag = ModelTag::Model3;
    c.kn = kn;
    c.mu = kn;
    c.zeta11 = 2.5 * kn * s0 / D;
    c.zeta22 = 0.5 * d * kn * q0 / D;
    const double z12 = -0.5 * d * kn * q1 / D;
    const double z21 = -2.5 * kn * s1 / D;
    c.zeta12 = 0.5 * (z12 + z21);
    const double scale = std::max(std::abs(z12) + std::abs(z21), 1e-300);
    c.zeta_asymmetry = (z12 == z21) ? 0.0 : std::abs(z12 - z21) / scale;
    c.c_ex = 3.0 * d / (2.0 * (3.0 + d)) * (p.P0_Pi / p.P0_sigma) / kn;
    c.exchange_free = (c.c_ex == 0.0);
    return c;
}

CoefficientSet model4_coefficients(const GasSpecies& s, double kn) {
    check_kn(kn);
    if (!s.thermal_conductivity)
        throw InputError("species '" + s.name + "' has no thermal_conductivity (model4)");
    if (!s.model4) throw InputError("species '" + s.name + "' has no model4 relaxation_time");
    const double d = s.delta;
    const double lam = kn * *s.thermal_conductivity / (s.gas_constant * s.shear_viscosity);
    CoefficientSet c;
    c.model_tag = ModelTag::Model4;
    c.kn = kn;
    c.mu = kn;
    c.zeta11 = 5.0 * lam / (5.0 + d);
    c.zeta22 = d * lam / (5.0 + d);
    c.zeta12 = 0.0;
    c.c_ex = d / ((3.0 + d) * s.model4->relaxation_time * kn);
    return c;
}

CoefficientSet reduced_coefficients(const CoefficientSet& base, double delta) {
    if (!(base.zeta11 >= 0.0)) throw RangeError("zeta11", base.zeta11, "[0, inf)");
    CoefficientSet c = base;
    const double r = delta / 5.0;
    c.zeta12 = r * base.zeta11;
    c.zeta22 = r * r * base.zeta11;
    c.zeta_asymmetry = 0.0;
    c.model_tag = ModelTag::Reduced;
    return c;
}

CoefficientSet coefficients_for(const GasSpecies& s, ModelTag tag, double kn,
                                ModelTag reduced_base) {
    switch (tag) {
    case ModelTag::Model1: return model1_coefficients(s, kn);
    case ModelTag::Model2: return model2_coefficients(s, kn);
    case ModelTag::Model3: return model3_coefficients(s, kn);
    case ModelTag::Model4: return model4_coefficients(s, kn);
    case ModelTag::Reduced:
        if (reduced_base == ModelTag::Reduced) throw InputError("reduced model needs a base model");
        return reduced_coefficients(coefficients_for(s, reduced_base, kn), s.delta);
    }
    throw InputError("unknown model tag");
}

double model1_dimensional_viscosity(const GasSpecies& s) {
    if (!s.model1) throw InputError("species '" + s.name + "' has no model1 constants");
    constexpr double kB = 1.380649e-23;
    const double k = s.model1->kappa, a = s.model1->diameter;
    const double m = kB / s.gas_constant;
    return 15.0 / (8.0 * a * a) * std::sqrt(kB * s.ref_temperature * m / std::numbers::pi) *
           (k + 1.0) * (k + 1.0) / (13.0 * k + 6.0);
}

double model2_dimensional_viscosity(const GasSpecies& s) {
    if (!s.model2) throw InputError("species '" + s.name + "' has no model2 constants");
    return s.ref_theta() / (2.0 * (1.0 - s.model2->nu) * s.model2->collision_freq_coeff);
}

FluxCoefficients nonlinear_flux_coefficients(const CoefficientSet& c, double theta,
                                             double vartheta, double delta) {
    if (!(theta > 0.0)) throw DomainError("theta must be positive");
    const double ttr = theta + vartheta;
    const double din = delta * theta - 3.0 * vartheta;  // delta * theta_in
    if (!(ttr > 0.0)) throw DomainError("translational temperature theta + vartheta must be positive");
    if (!(din > 0.0))
        throw DomainError("internal temperature vanishes or is negative (vartheta >= delta theta/3)");
    const double z11 = c.zeta11, z12 = c.zeta12, z22 = c.zeta22;
    const double t2 = ttr * ttr, d2 = delta * delta;
    const double w = 5.0 * theta + 3.0 * vartheta;
    FluxCoefficients f{};
    f.A_q_theta = (z11 + z12) / t2 + (z12 + z22) * d2 / (din * din);
    f.A_q_vartheta = (z11 + z12) / t2 - 3.0 * (z12 + z22) * delta / (din * din);
    f.A_Q_theta = z11 / t2 - z22 * w * d2 / (din * din * din) -
                  z12 * (-d2 * t2 + delta * theta * w - 3.0 * vartheta * w) / (t2 * din * din);
    f.A_Q_vartheta = z11 / t2 + 3.0 * z22 * w * delta / (din * din * din) -
                     z12 *
                         (8.0 * delta * theta * theta + 3.0 * (3.0 * delta - 5.0) * theta * vartheta +
                          3.0 * (delta - 3.0) * vartheta * vartheta) /
                         (t2 * din * din);
    return f;
}

} // namespace twotemp
