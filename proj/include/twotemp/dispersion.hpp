#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "twotemp/coefficients.hpp"
#include "twotemp/polynomial.hpp"

namespace twotemp {

using Matrix4c = Eigen::Matrix<cplx, 4, 4>;

enum class RootKind { Temporal, Spatial };
enum class Branch { Acoustic, Thermal, Relaxational, Unclassified };

const char* to_string(Branch b);

struct ModeRoot {
    cplx omega;
    cplx k;
    RootKind kind = RootKind::Temporal;
    Branch branch = Branch::Unclassified;
    double phase_velocity = 0.0;  ///< NaN when undefined (k_r = 0)
    double damping = 0.0;         ///< omega_i (temporal) or -k_i (spatial)
};

/// Plane-wave matrix for exp[i(omega t - k x)], unknowns (rho, v, theta_tr, theta_in).
Matrix4c assemble_matrix(const CoefficientSet& c, double delta, cplx omega, cplx k);

/// det A as a polynomial in omega at fixed k (degree 4).
Polynomial dispersion_polynomial_in_omega(const CoefficientSet& c, double delta, double k);
/// det A as a polynomial in k at fixed omega (degree <= 6, even powers only).
Polynomial dispersion_polynomial_in_k(const CoefficientSet& c, double delta, double omega);
/// The even polynomial above rewritten in s = k^2 (degree <= 3).
Polynomial dispersion_polynomial_in_k2(const CoefficientSet& c, double delta, double omega);

std::vector<ModeRoot> temporal_roots(const CoefficientSet& c, double delta, double k);
std::vector<ModeRoot> spatial_roots(const CoefficientSet& c, double delta, double omega);

/// Temporal roots on an ascending k grid, labelled by continuation from k = 0.
/// Entry j holds the roots at k_grid[j] ordered as {acoustic+, acoustic-, thermal, relaxational}.
std::vector<std::array<ModeRoot, 4>> temporal_branches(const CoefficientSet& c, double delta,
                                                       const std::vector<double>& k_grid);

/// Spatial roots (k_r >= 0 member of each pair) on an ascending omega grid,
/// ordered {acoustic, thermal, relaxational}; absent branches are NaN.
std::vector<std::array<ModeRoot, 3>> spatial_branches(const CoefficientSet& c, double delta,
                                                      const std::vector<double>& omega_grid);

struct StabilityReport {
    bool temporal_ok = true;
    bool spatial_ok = true;
    double worst_temporal = 0.0;  ///< min omega_i over all roots
    double worst_spatial = 0.0;   ///< max k_r k_i over all roots
    double worst_temporal_k = 0.0;
    double worst_spatial_omega = 0.0;
    bool stable() const { return temporal_ok && spatial_ok; }
};

StabilityReport stability_report(const CoefficientSet& c, double delta,
                                 const std::vector<double>& k_grid,
                                 const std::vector<double>& omega_grid);

/// |det A(root)| relative to the product of row norms.
double relative_residual(const CoefficientSet& c, double delta, cplx omega, cplx k);

/// Linear system of the reduced model written in (rho, v, theta, vartheta), with its own
/// conductivity lambda = (5+delta)^2/25 zeta11. Used to cross-check the rank-1 route.
Matrix4c assemble_reduced_matrix(const CoefficientSet& c, double delta, cplx omega, cplx k);
std::vector<cplx> reduced_temporal_roots(const CoefficientSet& c, double delta, double k);
std::vector<cplx> reduced_spatial_roots(const CoefficientSet& c, double delta, double omega);

/// Determinant of a matrix of polynomials by Leibniz expansion, small coefficients
/// produced by cancellation chopped to zero.
Polynomial polynomial_determinant(const std::vector<std::vector<Polynomial>>& m);

} // namespace twotemp
