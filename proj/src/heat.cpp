#include "twotemp/heat.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <tuple>
#include <sstream>

#include <Eigen/Dense>

#include "twotemp/errors.hpp"
#include "twotemp/wall.hpp"

namespace twotemp {

namespace {

constexpr double kLower = -0.5, kUpper = 0.5;

enum class Closure { TwoTemperature, Reduced, Nsf };

/// Everything about a case that does not depend on the integration constants.
struct Problem {
    Closure closure = Closure::TwoTemperature;
    CoefficientSet c;
    double delta = 2.0;
    double S = 0.0, m = 0.0, beta = 0.0;
    OnsagerMatrix wall_lo, wall_hi;
    const HeatCase* hc = nullptr;
};

struct Basis {
    double ch, sh, dch, dsh;
};

/// cosh(my)/cosh(m/2), sinh(my)/sinh(m/2) and their derivatives, overflow-free.
Basis basis(double m, double y) {
    if (m == 0.0) return {1.0, 2.0 * y, 0.0, 2.0};
    const double ep = std::exp(m * (y - 0.5)), em = std::exp(-m * (y + 0.5));
    const double e = std::exp(-m);
    return {(ep + em) / (1.0 + e), (ep - em) / (1.0 - e), m * (ep - em) / (1.0 + e),
            m * (ep + em) / (1.0 - e)};
}

struct Local {
    double vt, dvt, th, dth, v, dv;
};

Local local(const HeatSolution& s, double y) {
    Local l{};
    if (!s.single_temperature) {
        const Basis b = basis(s.m, y);
        l.vt = s.A * b.ch + s.B * b.sh;
        l.dvt = s.A * b.dch + s.B * b.dsh;
    }
    l.th = s.beta * l.vt + s.E + s.F * y;
    l.dth = s.beta * l.dvt + s.F;
    l.v = s.G + s.H * y;
    l.dv = s.H;
    return l;
}

HeatFields fields(const HeatSolution& s, double y) {
    const Local l = local(s, y);
    HeatFields f{};
    f.theta = l.th;
    f.vartheta = l.vt;
    f.theta_tr = l.th + l.vt;
    f.theta_in = l.th - 3.0 * l.vt / s.delta;
    f.rho = s.K - f.theta_tr;
    f.v = l.v;
    return f;
}

struct Fluxes {
    double q_tr, q_in, q, Q, sigma_xy;
};

Fluxes fluxes_from_gradients(const Problem& p, double dtr, double din, double dv) {
    Fluxes f{};
    if (p.closure == Closure::Nsf) {
        f.q = -p.S * dtr;
        f.q_tr = 3.0 / (3.0 + p.delta) * f.q;
        f.q_in = f.q - f.q_tr;
        f.Q = 0.0;
    } else {
        f.q_tr = -p.c.zeta11 * dtr - p.c.zeta12 * din;
        f.q_in = -p.c.zeta12 * dtr - p.c.zeta22 * din;
        f.q = f.q_tr + f.q_in;
        f.Q = f.q_tr - 5.0 / p.delta * f.q_in;
    }
    f.sigma_xy = -p.c.mu * dv;
    return f;
}

Fluxes analytic_fluxes(const Problem& p, const HeatSolution& s, double y) {
    const Local l = local(s, y);
    return fluxes_from_gradients(p, l.dth + l.dvt, l.dth - 3.0 * l.dvt / p.delta, l.dv);
}

/// Jump-condition residuals at one wall; n = +1 at the lower wall, -1 at the upper.
std::vector<double> wall_residuals(const Problem& p, const HeatFields& f, const Fluxes& fl,
                                   double n, double theta_w, double v_w, const OnsagerMatrix& w,
                                   bool with_shear) {
    const double T = f.theta - theta_w;
    const Eigen::Vector3d slip(f.v - v_w, 0.0, 0.0);
    std::vector<double> r;
    if (p.closure == Closure::Nsf) {
        r.push_back(n * fl.q + w.eta11 * T);
    } else {
        const WallFluxes pbc = apply_onsager_linear(w, p.delta, T, f.vartheta, slip);
        r.push_back(n * fl.q - pbc.q_n);
        if (p.closure == Closure::TwoTemperature) r.push_back(n * fl.Q - pbc.Q_n);
    }
    if (with_shear) r.push_back(n * fl.sigma_xy + w.xi * slip.x());
    return r;
}

double mean_density_analytic(const HeatSolution& s) {
    double mean_vt = 0.0;
    if (!s.single_temperature)
        mean_vt = s.A * (s.m == 0.0 ? 1.0 : 2.0 * std::tanh(0.5 * s.m) / s.m);
    return s.K - s.E - (s.beta + 1.0) * mean_vt;
}

Problem make_problem(const HeatCase& hc, bool nsf) {
    if (!(hc.kn > 0.0)) throw RangeError("kn", hc.kn, "(0, inf)");
    if (!(hc.chi_lo() > 0.0 && hc.chi_lo() <= 1.0)) throw RangeError("chi", hc.chi_lo(), "(0, 1]");
    if (!(hc.chi_hi() > 0.0 && hc.chi_hi() <= 1.0))
        throw RangeError("chi_upper", hc.chi_hi(), "(0, 1]");
    if (!(hc.delta > 0.0)) throw RangeError("delta", hc.delta, "(0, inf)");
    if (!hc.full_system && (hc.wall_velocity_lower != 0.0 || hc.wall_velocity_upper != 0.0))
        throw InputError("moving walls need the full seven-constant system");
    Problem p;
    p.hc = &hc;
    p.delta = hc.delta;
    p.c = hc.coeffs.rescaled(hc.kn);
    if (!p.c.is_psd()) throw InputError("conductivity matrix is not positive semidefinite");
    p.S = p.c.total_conductivity();
    if (!(p.S > 0.0)) throw InputError("total conductivity must be positive");
    const bool reduced = p.c.model_tag == ModelTag::Reduced;
    p.closure = nsf ? Closure::Nsf : reduced ? Closure::Reduced : Closure::TwoTemperature;
    auto wall = [&](double chi) {
        return p.closure == Closure::Reduced ? reduced_onsager_matrix(p.delta, chi)
                                             : onsager_matrix(p.delta, chi);
    };
    p.wall_lo = wall(hc.chi_lo());
    p.wall_hi = wall(hc.chi_hi());
    if (p.closure == Closure::TwoTemperature) {
        const double det = p.c.zeta_det();
        if (!(det > 1e-12 * p.c.zeta11 * p.c.zeta22))
            throw NumericError("conductivity matrix is singular; use the reduced model");
        const double m2 = p.c.c_ex * p.S / det;
        if (!(m2 > 0.0) || !std::isfinite(m2))
            throw NumericError("decay rate m^2 = " + std::to_string(m2) + " must be positive");
        p.m = std::sqrt(m2);
        const double alpha1 = (p.c.zeta12 + p.c.zeta22) / p.S;
        p.beta = ((3.0 + p.delta) * alpha1 - p.delta) / p.delta;
    }
    return p;
}

HeatSolution blank_solution(const Problem& p) {
    HeatSolution s;
    s.m = p.m;
    s.beta = p.beta;
    s.delta = p.delta;
    s.conductivity = p.S;
    s.single_temperature = p.closure != Closure::TwoTemperature;
    return s;
}

/// Residual vector of the constant-determination system; affine in the constants.
std::vector<double> system_residual(const Problem& p, const HeatSolution& s) {
    const HeatCase& hc = *p.hc;
    const bool shear = hc.full_system;
    std::vector<double> r;
    const auto lo = wall_residuals(p, fields(s, kLower), analytic_fluxes(p, s, kLower), +1.0,
                                   hc.wall_temp_lower, hc.wall_velocity_lower, p.wall_lo, shear);
    const auto hi = wall_residuals(p, fields(s, kUpper), analytic_fluxes(p, s, kUpper), -1.0,
                                   hc.wall_temp_upper, hc.wall_velocity_upper, p.wall_hi, shear);
    r.insert(r.end(), lo.begin(), lo.end());
    r.insert(r.end(), hi.begin(), hi.end());
    r.push_back(mean_density_analytic(s));
    return r;
}

std::vector<double*> unknowns(HeatSolution& s, const Problem& p) {
    std::vector<double*> u;
    if (p.closure == Closure::TwoTemperature) {
        u.push_back(&s.A);
        u.push_back(&s.B);
    }
    u.push_back(&s.E);
    u.push_back(&s.F);
    u.push_back(&s.K);
    if (p.hc->full_system) {
        u.push_back(&s.G);
        u.push_back(&s.H);
    }
    return u;
}

HeatSolution solve_constants(const Problem& p) {
    HeatSolution s = blank_solution(p);
    auto u = unknowns(s, p);
    const auto n = static_cast<Eigen::Index>(u.size());
    const auto r0 = system_residual(p, s);
    if (static_cast<Eigen::Index>(r0.size()) != n)
        throw NumericError("constant-determination system is not square");
    Eigen::MatrixXd M(n, n);
    Eigen::VectorXd b(n);
    for (Eigen::Index i = 0; i < n; ++i) b(i) = -r0[i];
    for (Eigen::Index j = 0; j < n; ++j) {
        *u[j] = 1.0;
        const auto rj = system_residual(p, s);
        for (Eigen::Index i = 0; i < n; ++i) M(i, j) = rj[i] - r0[i];
        *u[j] = 0.0;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
    const auto& sv = svd.singularValues();
    const double cond = sv(n - 1) > 0.0 ? sv(0) / sv(n - 1) : std::numeric_limits<double>::infinity();
    if (!(cond < 1e13)) {
        std::ostringstream os;
        os << "singular constant-determination system (condition number " << cond
           << ", smallest singular value " << sv(n - 1) << ")";
        throw NumericError(os.str());
    }
    const Eigen::VectorXd x = M.fullPivLu().solve(b);
    for (Eigen::Index j = 0; j < n; ++j) *u[j] = x(j);
    s.condition_number = cond;
    return s;
}

HeatProfile build_profile(const Problem& p, const HeatSolution& s) {
    HeatProfile out;
    out.solution = s;
    out.nsf = p.closure == Closure::Nsf;
    resample(out, *p.hc);
    return out;
}

} // namespace

HeatFields HeatProfile::at(double y) const { return fields(solution, y); }

void resample(HeatProfile& prof, const HeatCase& hc) {
    const Problem p = make_problem(hc, prof.nsf);
    const int n = std::max(hc.grid_points, 3);
    prof.y_grid.clear();
    prof.rho.clear();
    prof.theta_tr.clear();
    prof.theta_in.clear();
    prof.theta.clear();
    prof.vartheta.clear();
    prof.Q_y.clear();
    for (int i = 0; i < n; ++i) {
        // mirrored construction keeps the grid exactly symmetric
        const double y = i < n / 2 ? -0.5 + static_cast<double>(i) / (n - 1)
                                   : 0.5 - static_cast<double>(n - 1 - i) / (n - 1);
        const HeatFields f = fields(prof.solution, y);
        prof.y_grid.push_back(y);
        prof.rho.push_back(f.rho);
        prof.theta_tr.push_back(f.theta_tr);
        prof.theta_in.push_back(f.theta_in);
        prof.theta.push_back(f.theta);
        prof.vartheta.push_back(f.vartheta);
        prof.Q_y.push_back(analytic_fluxes(p, prof.solution, y).Q);
    }
    prof.q_y = -prof.solution.conductivity * prof.solution.F;
}

HeatProfile solve_heat_case(const HeatCase& hc) {
    const Problem p = make_problem(hc, false);
    return build_profile(p, solve_constants(p));
}

HeatProfile solve_heat_nsf(const HeatCase& hc) {
    const Problem p = make_problem(hc, true);
    return build_profile(p, solve_constants(p));
}

double residual_check(const HeatProfile& prof, const HeatCase& hc) {
    const Problem p = make_problem(hc, prof.nsf);
    const HeatSolution& s = prof.solution;
    const double h = std::min(1e-3, 0.02 / std::max(s.m, 1e-300));

    auto d1 = [h](const std::function<double(double)>& f, double y) {
        return (f(y - 2 * h) - 8 * f(y - h) + 8 * f(y + h) - f(y + 2 * h)) / (12 * h);
    };
    auto at = [&](double y) { return fields(s, y); };
    auto fd_fluxes = [&](double y) {
        const double dtr = d1([&](double x) { return at(x).theta_tr; }, y);
        const double din = d1([&](double x) { return at(x).theta_in; }, y);
        const double dv = d1([&](double x) { return at(x).v; }, y);
        return fluxes_from_gradients(p, dtr, din, dv);
    };

    double worst = 0.0;
    auto note = [&](double r) { worst = std::max(worst, std::abs(r)); };
    const int n = 401;
    for (int i = 0; i < n; ++i) {
        const double y = -0.5 + static_cast<double>(i) / (n - 1);
        const HeatFields f = at(y);
        const double D = f.theta_tr - f.theta_in;
        // momentum: rho + theta_tr constant
        note(d1([&](double x) { const auto g = at(x); return g.rho + g.theta_tr; }, y));
        // total energy, shear stress
        note(d1([&](double x) { return fd_fluxes(x).q; }, y));
        note(d1([&](double x) { return fd_fluxes(x).sigma_xy; }, y));
        if (p.closure == Closure::TwoTemperature) {
            note(d1([&](double x) { return fd_fluxes(x).q_in; }, y) - p.c.c_ex * D);
            note(d1([&](double x) { return fd_fluxes(x).q_tr; }, y) + p.c.c_ex * D);
        } else {
            // single temperature: vartheta vanishes and Q is identically zero
            note(f.vartheta);
            note(fd_fluxes(y).Q);
        }
    }
    // jump conditions from finite-difference fluxes
    for (const auto& [y, nrm, tw, vw, w] :
         {std::tuple{kLower, 1.0, hc.wall_temp_lower, hc.wall_velocity_lower, p.wall_lo},
          std::tuple{kUpper, -1.0, hc.wall_temp_upper, hc.wall_velocity_upper, p.wall_hi}})
        for (double r : wall_residuals(p, at(y), fd_fluxes(y), nrm, tw, vw, w, true)) note(r);
    // zero mean density by composite Simpson
    const int m = 4000;
    double integral = 0.0;
    for (int i = 0; i <= m; ++i) {
        const double y = -0.5 + static_cast<double>(i) / m;
        const double wgt = (i == 0 || i == m) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        integral += wgt * at(y).rho;
    }
    note(integral / (3.0 * m));
    // the reported total heat flux must match the profile
    note(prof.q_y - fd_fluxes(0.0).q);
    return worst;
}

bool antisymmetry_check(const HeatProfile& prof, const HeatCase&, double tol) {
    const std::size_t n = prof.y_grid.size();
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = n - 1 - i;
        if (std::abs(prof.y_grid[i] + prof.y_grid[j]) > 1e-14) return false;
        if (std::abs(prof.theta[i] + prof.theta[j]) > tol) return false;
        if (std::abs(prof.vartheta[i] + prof.vartheta[j]) > tol) return false;
        if (std::abs(prof.rho[i] + prof.rho[j]) > tol) return false;
    }
    return true;
}

} // namespace twotemp
