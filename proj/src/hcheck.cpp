#include "twotemp/hcheck.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "twotemp/errors.hpp"
#include "twotemp/wall.hpp"

namespace twotemp {

namespace {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

double log_uniform(Rng& rng, double lo, double hi) {
    return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

/// Synthetic gas with every model block populated from random admissible constants.
GasSpecies random_species(Rng& rng) {
    GasSpecies s;
    s.name = "random";
    s.delta = uniform(rng, 0.5, 10.0);
    s.gas_constant = 297.0;
    s.ref_temperature = 300.0;
    s.ref_pressure = 101325.0;
    s.shear_viscosity = 1.8e-5;
    s.thermal_conductivity = uniform(rng, 1.0, 10.0) * s.gas_constant * s.shear_viscosity;
    s.model1 = Model1Constants{uniform(rng, 0.0, 2.0 / 3.0), 3.7e-10};
    s.model2 = Model2Constants{uniform(rng, -0.5, 0.99), uniform(rng, 0.01, 1.0), 1.0};
    s.model4 = Model4Constants{log_uniform(rng, 0.1, 100.0)};
    // Model 3: rejection sampling against the admissibility rule
    for (;;) {
        Model3Constants p{uniform(rng, 0.2, 2.0), uniform(rng, -0.5, 0.5),
                          uniform(rng, 0.2, 2.0), uniform(rng, -0.5, 0.5),
                          uniform(rng, 0.0, 2.0), 1.0};
        try {
            validate_model3(p, s.delta);
            s.model3 = p;
            break;
        } catch (const InputError&) {
        }
    }
    return s;
}

FieldState random_state(Rng& rng, double delta) {
    FieldState f;
    f.delta = delta;
    f.rho = log_uniform(rng, 0.1, 10.0);
    for (int i = 0; i < 3; ++i) f.velocity(i) = uniform(rng, -1.0, 1.0);
    f.theta_tr = log_uniform(rng, 0.2, 5.0);
    f.theta_in = log_uniform(rng, 0.2, 5.0);
    return f;
}

GradientState random_gradients(Rng& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    GradientState g;
    for (int i = 0; i < 3; ++i) {
        for (int k = 0; k < 3; ++k) g.dv(i, k) = n(rng);
        g.dtheta_tr(i) = n(rng);
        g.dtheta_in(i) = n(rng);
    }
    return g;
}

void record(PropertyCheck& c, double value, double scale, double tol = 1e-10) {
    ++c.samples;
    const double normalized = value / std::max(scale, 1e-300);
    c.worst = std::min(c.worst, normalized);
    if (normalized < -tol) ++c.failures;
}

} // namespace

Eigen::Matrix<double, 15, 15> bulk_quadratic_form(const FieldState& s, const CoefficientSet& c) {
    Eigen::Matrix<double, 15, 15> m = Eigen::Matrix<double, 15, 15>::Zero();
    // viscous part: 2 mu / theta_tr |dev(dv)|^2
    for (int col = 0; col < 9; ++col) {
        Eigen::Matrix3d e = Eigen::Matrix3d::Zero();
        e(col / 3, col % 3) = 1.0;
        const Eigen::Matrix3d de = deviator(e);
        for (int row = 0; row < 9; ++row) {
            Eigen::Matrix3d f = Eigen::Matrix3d::Zero();
            f(row / 3, row % 3) = 1.0;
            m(row, col) = 2.0 * c.mu / s.theta_tr * (deviator(f).array() * de.array()).sum();
        }
    }
    // heat part: sum_ab zeta_ab (g_a / theta_a^2) . (g_b / theta_b^2)
    const double w[2] = {1.0 / (s.theta_tr * s.theta_tr), 1.0 / (s.theta_in * s.theta_in)};
    const double z[2][2] = {{c.zeta11, c.zeta12}, {c.zeta12, c.zeta22}};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int i = 0; i < 3; ++i) m(9 + 3 * a + i, 9 + 3 * b + i) = z[a][b] * w[a] * w[b];
    return m;
}

std::vector<PropertyCheck> h_theorem_suite(long samples_per_model, std::uint64_t seed) {
    if (samples_per_model <= 0) throw RangeError("samples", double(samples_per_model), "[1, inf)");
    const ModelTag tags[] = {ModelTag::Model1, ModelTag::Model2, ModelTag::Model3,
                             ModelTag::Model4, ModelTag::Reduced};
    std::vector<PropertyCheck> out;
    Rng rng(seed);
    for (const ModelTag tag : tags) {
        const std::string name = to_string(tag);
        PropertyCheck closure{"closure_psd", name};
        PropertyCheck bulk{"bulk_production", name};
        PropertyCheck form{"quadratic_form_eigen", name};
        PropertyCheck wall_matrix{"onsager_psd", name};
        PropertyCheck wall_lin{"wall_production_linear", name};
        PropertyCheck wall_nl{"wall_production_nonlinear", name};
        for (long n = 0; n < samples_per_model; ++n) {
            const GasSpecies sp = random_species(rng);
            const double kn = log_uniform(rng, 1e-3, 10.0);
            const ModelTag base = (tag == ModelTag::Reduced)
                                      ? tags[std::uniform_int_distribution<int>(0, 3)(rng)]
                                      : ModelTag::Model4;
            const CoefficientSet c = coefficients_for(sp, tag, kn, base);

            const double zscale = std::abs(c.zeta11) + std::abs(c.zeta22) + 1e-300;
            const double zmin = 0.5 * (c.zeta11 + c.zeta22) -
                                std::hypot(0.5 * (c.zeta11 - c.zeta22), c.zeta12);
            record(closure, std::min({zmin, c.mu, c.c_ex}), zscale);

            const FieldState st = random_state(rng, sp.delta);
            const GradientState g = random_gradients(rng);
            // any production proportional to (theta_tr - theta_in) with a positive factor
            const double exchange = c.c_ex * st.rho * (st.theta_tr - st.theta_in);
            const double sigma = entropy_production(st, g, c, exchange);
            Eigen::Matrix<double, 15, 1> x;
            for (int i = 0; i < 9; ++i) x(i) = g.dv(i / 3, i % 3);
            x.segment<3>(9) = g.dtheta_tr;
            x.segment<3>(12) = g.dtheta_in;
            const auto m = bulk_quadratic_form(st, c);
            const double relax = (1.0 / st.theta_in - 1.0 / st.theta_tr) * exchange;
            const double quad = x.dot(m * x);
            const double scale = x.dot(m.cwiseAbs() * x.cwiseAbs()) + std::abs(relax) + 1e-300;
            record(bulk, sigma, scale);
            // the assembled form must reproduce the production and be positive semidefinite
            const Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 15, 15>> es(m);
            const double mscale = m.cwiseAbs().maxCoeff() + 1e-300;
            const double mismatch = std::abs(quad + relax - sigma) / scale;
            record(form, std::min(es.eigenvalues().minCoeff() / mscale, -mismatch), 1.0);

            const double chi = uniform(rng, 0.0, 1.0);
            const OnsagerMatrix om = (tag == ModelTag::Reduced)
                                         ? reduced_onsager_matrix(sp.delta, chi)
                                         : onsager_matrix(sp.delta, chi);
            const double emin = 0.5 * (om.eta11 + om.eta22) -
                                std::hypot(0.5 * (om.eta11 - om.eta22), om.eta12);
            record(wall_matrix, std::min(emin, om.xi),
                   std::abs(om.eta11) + std::abs(om.eta22) + 1e-300);

            const double T = uniform(rng, -0.2, 0.2);
            const double vt = uniform(rng, -0.2, 0.2);
            const Eigen::Vector3d slip(uniform(rng, -0.2, 0.2), 0.0, uniform(rng, -0.2, 0.2));
            const WallFluxes fl = apply_onsager_linear(om, sp.delta, T, vt, slip);
            const double lin = wall_entropy_production_linear(T, vt, fl, slip, sp.delta);
            record(wall_lin, lin,
                   std::abs(fl.q_n * T) + std::abs(fl.Q_n * vt) +
                       std::abs(fl.sigma_bar.dot(slip)) + 1e-300);

            // nonlinear: theta_in = theta - 3 vartheta / delta must stay positive
            const double theta = log_uniform(rng, 0.5, 2.0);
            const double theta_w = log_uniform(rng, 0.5, 2.0);
            const double vt_hi = 0.9 * sp.delta * theta / 3.0;
            const double vtn = uniform(rng, -0.9 * theta, std::min(vt_hi, 0.9 * theta));
            const WallFluxes fn = apply_pbc_nonlinear(om, sp.delta, theta, theta_w, vtn, slip);
            const double nl = wall_entropy_production(theta, theta_w, vtn, fn, slip, sp.delta);
            record(wall_nl, nl,
                   std::abs(fn.q_n) + std::abs(fn.Q_n) + std::abs(fn.sigma_bar.dot(slip)) +
                       1e-300);
        }
        for (auto* c : {&closure, &bulk, &form, &wall_matrix, &wall_lin, &wall_nl})
            out.push_back(*c);
    }
    return out;
}

} // namespace twotemp
