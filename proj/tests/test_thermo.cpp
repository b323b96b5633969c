#include <doctest.h>

#include <boost/math/quadrature/exp_sinh.hpp>

#include "support.hpp"
#include "twotemp/errors.hpp"
#include "twotemp/hcheck.hpp"
#include "twotemp/quadrature.hpp"
#include "twotemp/thermo.hpp"

using namespace twotemp;

namespace {

FieldState state(double rho, double ttr, double tin, double delta) {
    FieldState s;
    s.rho = rho;
    s.theta_tr = ttr;
    s.theta_in = tin;
    s.delta = delta;
    return s;
}

CoefficientSet closure(double z11, double z12, double z22, double mu) {
    CoefficientSet c;
    c.zeta11 = z11;
    c.zeta12 = z12;
    c.zeta22 = z22;
    c.mu = mu;
    c.c_ex = 1.0;
    return c;
}

} // namespace

TEST_CASE("mixture and dynamic temperature") {
    CHECK(mixture_temperature(state(1, 1, 1, 3)) == doctest::Approx(1.0));
    const FieldState s = state(1, 1.2, 0.9, 2);
    CHECK(mixture_temperature(s) == doctest::Approx(1.08).epsilon(1e-15));
    CHECK(dynamic_temperature(s) == doctest::Approx(0.12).epsilon(1e-14));
    CHECK_THROWS_AS(validate(state(0, 1, 1, 2)), DomainError);
    CHECK_THROWS_AS(validate(state(1, 1, -1, 2)), DomainError);
}

TEST_CASE("f6 moments against an adaptive quadrature oracle") {
    using boost::math::quadrature::exp_sinh;
    exp_sinh<double> es;
    for (const auto& s0 : {state(1.3, 0.8, 1.4, 2.0), state(0.6, 1.5, 0.7, 3.0)}) {
        FieldState s = s0;
        s.velocity = Eigen::Vector3d(0.3, -0.2, 0.1);
        const double m = 1.0;
        // radial integral over the peculiar speed times an integral over I
        auto radial = [&](auto weight_c, auto weight_i) {
            return es.integrate([&](double C) {
                if (!std::isfinite(C) || C > 60.0) return 0.0;
                const Eigen::Vector3d c = s.velocity + Eigen::Vector3d(C, 0.0, 0.0);
                return 4.0 * M_PI * C * C * weight_c(C) *
                       es.integrate([&](double I) { return m * weight_i(I) * eval_f6(s, c, I, m); });
            });
        };
        const double mass = radial([](double) { return 1.0; }, [](double) { return 1.0; });
        const double etr = radial([](double C) { return 0.5 * C * C; }, [](double) { return 1.0; });
        const double ein = radial([](double) { return 1.0; }, [](double I) { return I; });
        CHECK(mass == doctest::Approx(s.rho).epsilon(1e-8));
        CHECK(etr == doctest::Approx(1.5 * s.rho * s.theta_tr).epsilon(1e-8));
        CHECK(ein == doctest::Approx(0.5 * s.delta * s.rho * s.theta_in).epsilon(1e-8));

        const F6Moments q = f6_moments(s, m);
        CHECK(q.mass == doctest::Approx(mass).epsilon(1e-7));
        CHECK(q.translational_energy == doctest::Approx(etr).epsilon(1e-7));
        CHECK(q.internal_energy == doctest::Approx(ein).epsilon(1e-7));
        CHECK(q.momentum.norm() < 1e-10);
    }
    CHECK_THROWS_AS(eval_f6(state(1, 1, 1, 2), Eigen::Vector3d::Zero(), 0.0), DomainError);
}

TEST_CASE("quadrature rules integrate polynomials exactly") {
    const auto h = gauss_hermite(8);
    double m0 = 0, m2 = 0, m4 = 0;
    for (std::size_t i = 0; i < h.nodes.size(); ++i) {
        m0 += h.weights[i];
        m2 += h.weights[i] * h.nodes[i] * h.nodes[i];
        m4 += h.weights[i] * std::pow(h.nodes[i], 4);
    }
    CHECK(m0 == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-13));
    CHECK(m2 == doctest::Approx(std::sqrt(M_PI) / 2).epsilon(1e-13));
    CHECK(m4 == doctest::Approx(3 * std::sqrt(M_PI) / 4).epsilon(1e-13));
    const auto l = gauss_laguerre(8, 0.5);
    double l0 = 0, l1 = 0;
    for (std::size_t i = 0; i < l.nodes.size(); ++i) {
        l0 += l.weights[i];
        l1 += l.weights[i] * l.nodes[i];
    }
    CHECK(l0 == doctest::Approx(std::tgamma(1.5)).epsilon(1e-13));
    CHECK(l1 == doctest::Approx(std::tgamma(2.5)).epsilon(1e-13));
}

TEST_CASE("entropy density and the Gibbs relation") {
    CHECK(entropy_density(state(1, 1, 1, 2)) == 0.0);
    const FieldState s = state(1.4, 0.9, 1.3, 3.0);
    const double h = 1e-6;
    auto with = [&](double drho, double dtr, double din) {
        return entropy_density(state(s.rho + drho, s.theta_tr + dtr, s.theta_in + din, s.delta));
    };
    const double d_tr = (with(0, h, 0) - with(0, -h, 0)) / (2 * h);
    const double d_in = (with(0, 0, h) - with(0, 0, -h)) / (2 * h);
    CHECK(d_tr == doctest::Approx(1.5 * s.rho / s.theta_tr).epsilon(1e-8));
    CHECK(d_in == doctest::Approx(0.5 * s.delta * s.rho / s.theta_in).epsilon(1e-8));
    // specific entropy: rho d(s)/d(rho) = -1
    auto spec = [&](double drho) { return with(drho, 0, 0) / (s.rho + drho); };
    CHECK(s.rho * (spec(h) - spec(-h)) / (2 * h) == doctest::Approx(-1.0).epsilon(1e-8));
}

TEST_CASE("entropy is maximal at equal temperatures for fixed total energy") {
    const double delta = 2.0, theta = 1.1;
    double best = -1e300, arg = 0;
    for (int i = 1; i < 20000; ++i) {
        const double ttr = 0.5 + 1.2 * i / 20000.0;
        const double tin = ((3 + delta) * theta - 3 * ttr) / delta;
        if (tin <= 0) continue;
        const double e = entropy_density(state(1, ttr, tin, delta));
        if (e > best) {
            best = e;
            arg = ttr;
        }
    }
    CHECK(arg == doctest::Approx(theta).epsilon(1e-3));
}

TEST_CASE("entropy flux forms") {
    const FieldState eq = state(1, 1.3, 1.3, 2);
    const Eigen::Vector3d a(0.2, -0.1, 0.4), b(-0.3, 0.5, 0.1);
    const Eigen::Vector3d h = entropy_flux(eq, a, b);
    CHECK((h - (a + b) / 1.3).norm() < 1e-15);
    CHECK(entropy_flux(eq, Eigen::Vector3d::Zero(), Eigen::Vector3d::Zero()).norm() == 0.0);

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.2, 3.0), g(-1.0, 1.0);
    for (int n = 0; n < 500; ++n) {
        const FieldState s = state(u(rng), u(rng), u(rng), u(rng));
        const Eigen::Vector3d qt(g(rng), g(rng), g(rng)), qi(g(rng), g(rng), g(rng));
        const auto tf = to_total_fluxes(s, qt, qi);
        const Eigen::Vector3d h1 = entropy_flux(s, qt, qi);
        const Eigen::Vector3d h2 = entropy_flux_decomposed(s, tf.q, tf.Q);
        CHECK((h1 - h2).norm() <= 1e-12 * std::max(1.0, h1.norm()));
    }
}

TEST_CASE("entropy production") {
    const auto c = closure(1.0, 0.3, 0.5, 0.7);
    CHECK(entropy_production(state(1, 1, 1, 2), GradientState{}, c, 0.0) == 0.0);

    // exchange term with P01 = rho vartheta / tau
    const FieldState s = state(1.2, 1.4, 0.8, 3.0);
    const double tau = 0.6;
    const double P = exchange_production(s, tau);
    CHECK(P == doctest::Approx(s.rho * dynamic_temperature(s) / tau));
    const double term = entropy_production(s, GradientState{}, c, P);
    const double expected = s.rho * s.delta / (tau * (3 + s.delta)) *
                            std::pow(s.theta_tr - s.theta_in, 2) / (s.theta_tr * s.theta_in);
    CHECK(term == doctest::Approx(expected).epsilon(1e-13));
    CHECK(term >= 0.0);
    CHECK_THROWS_AS(exchange_production(s, 0.0), DomainError);

    // random gradients: the production is the assembled quadratic form, which is PSD
    std::mt19937_64 rng(3);
    std::normal_distribution<double> n01;
    std::uniform_real_distribution<double> u(0.3, 3.0);
    for (int k = 0; k < 10000; ++k) {
        const FieldState st = state(u(rng), u(rng), u(rng), u(rng));
        const double z11 = u(rng), z22 = u(rng);
        const double z12 = (2 * u(rng) / 3.0 - 1.0) * std::sqrt(z11 * z22);
        const auto cc = closure(z11, z12, z22, u(rng));
        GradientState gs;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) gs.dv(i, j) = n01(rng);
            gs.dtheta_tr(i) = n01(rng);
            gs.dtheta_in(i) = n01(rng);
        }
        const double sigma = entropy_production(st, gs, cc, 0.0);
        Eigen::Matrix<double, 15, 1> x;
        for (int i = 0; i < 9; ++i) x(i) = gs.dv(i / 3, i % 3);
        x.segment<3>(9) = gs.dtheta_tr;
        x.segment<3>(12) = gs.dtheta_in;
        const auto M = bulk_quadratic_form(st, cc);
        CHECK(sigma == doctest::Approx(x.dot(M * x)).epsilon(1e-10));
        CHECK(sigma >= -1e-12);
        if (k % 500 == 0) {
            Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 15, 15>> es(M);
            CHECK(es.eigenvalues().minCoeff() >= -1e-12 * M.cwiseAbs().maxCoeff());
        }
    }
}

TEST_CASE("stress is the traceless symmetric part") {
    Eigen::Matrix3d a;
    a << 1, 2, 3, 4, 5, 6, 7, 8, 10;
    const Eigen::Matrix3d d = deviator(a);
    CHECK(std::abs(d.trace()) < 1e-14);
    CHECK((d - d.transpose()).norm() < 1e-14);
    GradientState g;
    g.dv = a;
    const auto f = constitutive_fluxes(g, state(1, 1, 1, 2), closure(1, 0, 1, 0.5));
    CHECK((f.sigma + 2 * 0.5 * d).norm() < 1e-14);
}
