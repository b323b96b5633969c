#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "support.hpp"
#include "twotemp/errors.hpp"
#include "twotemp/heat.hpp"

using namespace twotemp;

namespace {

constexpr double kDev = 0.0476;

HeatCase n2_case(double kn, ModelTag tag = ModelTag::Model4, double chi = 1.0) {
    const GasSpecies s = test::fixture("N2");
    HeatCase c;
    c.kn = kn;
    c.chi = chi;
    c.delta = s.delta;
    c.wall_temp_lower = kDev;
    c.wall_temp_upper = -kDev;
    c.coeffs = coefficients_for(s, tag, kn, ModelTag::Model4);
    return c;
}

double mean(const std::vector<double>& v) {
    // trapezoid on a uniform grid
    double sum = 0.5 * (v.front() + v.back());
    for (std::size_t i = 1; i + 1 < v.size(); ++i) sum += v[i];
    return sum / double(v.size() - 1);
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

} // namespace

TEST_CASE("equal wall temperatures give the rest state") {
    HeatCase c = n2_case(0.1);
    c.wall_temp_lower = c.wall_temp_upper = 0.0;
    const auto p = solve_heat_case(c);
    CHECK(std::abs(p.q_y) < 1e-14);
    for (std::size_t i = 0; i < p.y_grid.size(); ++i) {
        CHECK(std::abs(p.rho[i]) < 1e-14);
        CHECK(std::abs(p.theta[i]) < 1e-14);
        CHECK(std::abs(p.vartheta[i]) < 1e-14);
    }
}

TEST_CASE("nitrogen heat flux, model 4") {
    const auto a = solve_heat_case(n2_case(0.071));
    const auto b = solve_heat_case(n2_case(0.71));
    // hot lower wall: heat flows towards +y
    CHECK(a.q_y == doctest::Approx(0.025).epsilon(0.10));
    CHECK(b.q_y == doctest::Approx(0.084).epsilon(0.10));
    CHECK(a.q_y > 0.0);
    CHECK(b.q_y > a.q_y);
    CHECK(a.y_grid.size() == 201);
    CHECK(a.y_grid.front() == doctest::Approx(-0.5));
    CHECK(a.y_grid.back() == doctest::Approx(0.5));
}

TEST_CASE("residuals and the perturbation control") {
    for (double kn : {0.071, 0.2, 0.71}) {
        for (ModelTag tag : {ModelTag::Model4, ModelTag::Reduced, ModelTag::Model2}) {
            const HeatCase c = n2_case(kn, tag);
            const auto p = solve_heat_case(c);
            CHECK(residual_check(p, c) <= 1e-8);
            const auto nsf = solve_heat_nsf(c);
            CHECK(residual_check(nsf, c) <= 1e-8);
        }
    }
    const HeatCase c = n2_case(0.071);
    auto p = solve_heat_case(c);
    p.solution.A += 1e-3;
    resample(p, c);
    CHECK(residual_check(p, c) > 1e-4);
}

TEST_CASE("symmetry and profile invariants") {
    const HeatCase c = n2_case(0.3);
    const auto p = solve_heat_case(c);
    CHECK(antisymmetry_check(p, c));
    CHECK(std::abs(mean(p.rho)) < 1e-10);
    for (std::size_t i = 0; i < p.y_grid.size(); ++i) {
        CHECK(p.rho[i] + p.theta[i] + p.vartheta[i] ==
              doctest::Approx(p.rho[0] + p.theta[0] + p.vartheta[0]).epsilon(1e-12));
        CHECK(p.Q_y[i] == doctest::Approx(p.Q_y[p.Q_y.size() - 1 - i]).epsilon(1e-9));
    }
    HeatCase u = c;
    u.chi_upper = 0.5;
    const auto q = solve_heat_case(u);
    CHECK(residual_check(q, u) <= 1e-8);
    CHECK_FALSE(antisymmetry_check(q, u));
}

TEST_CASE("reduced model has no dynamic temperature") {
    for (double kn : {0.071, 0.71}) {
        const HeatCase c = n2_case(kn, ModelTag::Reduced);
        const auto p = solve_heat_case(c);
        CHECK(p.solution.single_temperature);
        for (std::size_t i = 0; i < p.y_grid.size(); ++i) {
            CHECK(std::abs(p.vartheta[i]) < 1e-10);
            CHECK(std::abs(p.Q_y[i]) < 1e-10);
        }
    }
}

TEST_CASE("temperature jump grows with Knudsen number") {
    double last = 0.0;
    for (double kn : {0.05, 0.1, 0.3, 0.7}) {
        const auto p = solve_heat_case(n2_case(kn));
        const double jump = kDev - p.theta.front();
        CHECK(jump > last);
        last = jump;
    }
}

TEST_CASE("departure from Fourier grows with Knudsen number") {
    auto gap = [](double kn) {
        const HeatCase c = n2_case(kn);
        return max_abs_diff(solve_heat_case(c).theta, solve_heat_nsf(c).theta);
    };
    CHECK(gap(0.71) > gap(0.071));
}

TEST_CASE("seven-constant system reproduces the four-constant one") {
    HeatCase c = n2_case(0.2);
    const auto p = solve_heat_case(c);
    c.full_system = true;
    const auto f = solve_heat_case(c);
    CHECK(f.q_y == doctest::Approx(p.q_y).epsilon(1e-12));
    CHECK(max_abs_diff(f.theta, p.theta) < 1e-12);
    CHECK(std::abs(f.solution.G) < 1e-14);
    CHECK(std::abs(f.solution.H) < 1e-14);
    CHECK(residual_check(f, c) <= 1e-8);

    HeatCase moving = n2_case(0.2);
    moving.wall_velocity_upper = 0.1;
    CHECK_THROWS_AS(solve_heat_case(moving), InputError);
    moving.full_system = true;
    const auto m = solve_heat_case(moving);
    CHECK(residual_check(m, moving) <= 1e-8);
    CHECK(std::abs(m.solution.H) > 0.0);
}
