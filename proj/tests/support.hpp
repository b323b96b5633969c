#pragma once

#include <cmath>
#include <random>
#include <string>

#include "twotemp/species.hpp"

namespace test {

inline std::string data_file(const std::string& name) {
    return std::string(TWOTEMP_TEST_DATA) + "/" + name;
}

inline twotemp::GasSpecies fixture(const std::string& name) {
    return twotemp::resolve_species(name);
}

/// Synthetic gas with lambda0 = R mu0, so the dimensionless conductivity equals Kn.
inline twotemp::GasSpecies unit_gas(double delta) {
    twotemp::GasSpecies s;
    s.name = "unit";
    s.delta = delta;
    s.gas_constant = 1.0;
    s.ref_temperature = 1.0;
    s.ref_pressure = 1.0;
    s.shear_viscosity = 1.0;
    s.thermal_conductivity = 1.0;
    s.model1 = twotemp::Model1Constants{0.2, 1e-10};
    s.model2 = twotemp::Model2Constants{0.0, 1.0, 1.0};
    s.model3 = twotemp::Model3Constants{1.0, 0.0, 1.0, 0.0, 1.0, 1.0};
    s.model4 = twotemp::Model4Constants{1.0};
    return s;
}

inline bool rel_close(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({std::abs(a), std::abs(b), 1e-300});
}

} // namespace test
