#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

namespace twotemp {

struct Model1Constants {
    double kappa = 0.0;     ///< dimensionless moment of inertia, [0, 2/3]
    double diameter = 0.0;  ///< molecular diameter [m]
    bool operator==(const Model1Constants&) const = default;
};

struct Model2Constants {
    double nu = 0.0;                    ///< Prandtl adjustment, [-1/2, 1)
    double theta1 = 1.0;                ///< bulk viscosity adjustment, (0, 1]
    double collision_freq_coeff = 0.0;  ///< A_c [m^2/(s^2 Pa s)]
    bool operator==(const Model2Constants&) const = default;
};

/// Kernel constants; only their ratios to P0_sigma matter.
struct Model3Constants {
    double P0_q = 0.0, P1_q = 0.0, P0_s = 0.0, P1_s = 0.0, P0_Pi = 0.0, P0_sigma = 0.0;
    bool operator==(const Model3Constants&) const = default;
};

struct Model4Constants {
    /// Internal relaxation time in units of mu0/p0 (a rotational collision number).
    double relaxation_time = 0.0;
    bool operator==(const Model4Constants&) const = default;
};

struct GasSpecies {
    std::string name;
    double delta = 0.0;
    double gas_constant = 0.0;     ///< R [J/(kg K)]
    double ref_temperature = 0.0;  ///< T0 [K]
    double ref_pressure = 0.0;     ///< p0 [Pa]
    double shear_viscosity = 0.0;  ///< mu0 [Pa s]
    std::optional<double> thermal_conductivity;  ///< lambda0 [W/(m K)]
    double accommodation = 1.0;
    std::optional<Model1Constants> model1;
    std::optional<Model2Constants> model2;
    std::optional<Model3Constants> model3;
    std::optional<Model4Constants> model4;

    /// theta0 = R T0, energy per unit mass.
    double ref_theta() const { return gas_constant * ref_temperature; }
    /// Kn = mu0 sqrt(theta0) / (p0 L).
    double knudsen(double length_scale) const;

    bool operator==(const GasSpecies&) const = default;
};

double heat_capacity_ratio(double delta);
inline double heat_capacity_ratio(const GasSpecies& s) { return heat_capacity_ratio(s.delta); }

/// Checks every invariant; throws RangeError / InputError.
void validate(const GasSpecies& s);

GasSpecies species_from_json(const nlohmann::json& doc);
nlohmann::json species_to_json(const GasSpecies& s);

GasSpecies load_species(const std::filesystem::path& file);
GasSpecies parse_species(const std::string& text);

/// Bundled fixture directory; TWOTEMP_SPECIES_DIR overrides the compiled default.
std::filesystem::path species_directory();

/// Accepts a file path or a bundled fixture name such as "N2".
GasSpecies resolve_species(const std::string& path_or_name);

} // namespace twotemp
