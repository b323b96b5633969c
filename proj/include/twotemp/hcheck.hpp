#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twotemp/coefficients.hpp"
#include "twotemp/thermo.hpp"

namespace twotemp {

struct PropertyCheck {
    std::string name;
    std::string model;
    long samples = 0;
    long failures = 0;
    double worst = 0.0;  ///< most negative normalized value seen
    bool passed() const { return failures == 0; }
};

/// Randomized second-law checks for every coefficient model: PSD closures, bulk and wall
/// entropy production, and the eigenvalues of the assembled bulk quadratic form.
std::vector<PropertyCheck> h_theorem_suite(long samples_per_model, std::uint64_t seed);

/// Bulk production without the exchange term, written as x^T M x with
/// x = (dv row-major, dtheta_tr, dtheta_in).
Eigen::Matrix<double, 15, 15> bulk_quadratic_form(const FieldState& s, const CoefficientSet& c);

} // namespace twotemp
