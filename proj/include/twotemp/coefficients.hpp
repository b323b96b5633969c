#pragma once

#include <string>

#include "twotemp/species.hpp"

namespace twotemp {

enum class ModelTag { Model1, Model2, Model3, Model4, Reduced };

std::string to_string(ModelTag tag);
/// Accepts "1".."4", "model1".."model4" and "reduced".
ModelTag parse_model_tag(const std::string& text);

/// Dimensionless linearized closure at the reference state.
/// Viscosity and conductivities scale with Kn, the exchange rate with 1/Kn.
struct CoefficientSet {
    double zeta11 = 0.0;
    double zeta12 = 0.0;
    double zeta22 = 0.0;
    double mu = 0.0;
    double c_ex = 0.0;  ///< linearized production P01 = c_ex (theta_tr - theta_in)
    ModelTag model_tag = ModelTag::Model4;
    double kn = 1.0;
    double zeta_asymmetry = 0.0;  ///< Model 3: relative |zeta12 - zeta21| before symmetrization
    bool exchange_free = false;   ///< c_ex == 0 (no internal relaxation)

    double total_conductivity() const { return zeta11 + 2.0 * zeta12 + zeta22; }
    double zeta_det() const { return zeta11 * zeta22 - zeta12 * zeta12; }
    bool is_psd(double tol = 1e-12) const;
    /// Same gas at another Knudsen number.
    CoefficientSet rescaled(double new_kn) const;
    /// Bulk viscosity implied by the relaxation, delta^2 / (c_ex (3+delta)^2).
    double equivalent_bulk_viscosity(double delta) const;
};

CoefficientSet model1_coefficients(const GasSpecies& s, double kn);
CoefficientSet model2_coefficients(const GasSpecies& s, double kn);
CoefficientSet model3_coefficients(const GasSpecies& s, double kn);
CoefficientSet model4_coefficients(const GasSpecies& s, double kn);
CoefficientSet reduced_coefficients(const CoefficientSet& base, double delta);

/// Dispatch on tag; the reduced model is built on `reduced_base`.
CoefficientSet coefficients_for(const GasSpecies& s, ModelTag tag, double kn,
                                ModelTag reduced_base = ModelTag::Model4);

/// Length-scale entry points, Kn = mu0 sqrt(theta0)/(p0 L).
inline CoefficientSet coefficients_for_length(const GasSpecies& s, ModelTag tag, double length,
                                              ModelTag reduced_base = ModelTag::Model4) {
    return coefficients_for(s, tag, s.knudsen(length), reduced_base);
}

/// Dimensional shear viscosities intrinsic to Models 1 and 2 [Pa s], for diagnostics.
double model1_dimensional_viscosity(const GasSpecies& s);
double model2_dimensional_viscosity(const GasSpecies& s);

/// Model 3 admissibility: positive diagonal constants, D != 0, PSD after symmetrization.
void validate_model3(const Model3Constants& p, double delta);

/// Prefactors of the nonlinear heat-flux relations
/// q = -A_qt dtheta - A_qv dvartheta, Q = -A_Qt dtheta - A_Qv dvartheta.
struct FluxCoefficients {
    double A_q_theta, A_q_vartheta, A_Q_theta, A_Q_vartheta;
};

FluxCoefficients nonlinear_flux_coefficients(const CoefficientSet& c, double theta,
                                             double vartheta, double delta);

} // namespace twotemp
