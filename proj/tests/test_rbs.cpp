#include <doctest.h>

#include "support.hpp"
#include "twotemp/acoustics.hpp"
#include "twotemp/rbs.hpp"

using namespace twotemp;

namespace {

const double kPi = 3.14159265358979323846;

CoefficientSet ch4_model1() { return model1_coefficients(test::fixture("CH4"), 1.0); }

} // namespace

TEST_CASE("system entries") {
    const auto c = ch4_model1().rescaled(0.05);
    const cplx i(0, 1);
    const double w = 1.7;
    const auto [a, rhs] = assemble_srb_system(c, 3.0, w);
    CHECK(a(0, 1) == 2.0 * kPi * i);
    CHECK(std::abs(a(1, 1) - (-i * w + 16.0 * kPi * kPi / 3.0 * 0.05)) < 1e-14);
    CHECK(std::abs(a(3, 3) - (-1.5 * i * w + 4 * kPi * kPi * c.zeta22 + c.c_ex)) < 1e-14);
    CHECK(rhs == Vector4c(1.0, 0.0, 0.0, 0.0));

    RbsOptions v;
    v.verbatim = true;
    const auto [b, rhs2] = assemble_srb_system(c, 3.0, w, v);
    CHECK(std::abs(b(1, 1) - (-(i * w - 8.0 * kPi * i / 3.0 * 0.05))) < 1e-14);
    CHECK(std::abs(b(3, 3) - (-1.0 * i * w + 4 * kPi * kPi * c.zeta22 + c.c_ex)) < 1e-14);
    CHECK(b(0, 1) == a(0, 1));
}

TEST_CASE("zero frequency gives a real response") {
    const auto c = ch4_model1().rescaled(50.0);
    const auto [a, rhs] = assemble_srb_system(c, 3.0, 0.0);
    const Vector4c sol = a.fullPivLu().solve(rhs);
    CHECK(std::abs(sol(0).imag()) < 1e-14 * std::abs(sol(0)));
}

TEST_CASE("no real-axis poles") {
    const auto c = ch4_model1();
    for (double y : {18.27, 4.46, 2.70}) {
        const auto cy = c.rescaled(rbs_knudsen(y));
        double least = 1e300;
        for (double x : symmetric_grid(3.0, 0.01)) {
            const auto [a, rhs] = assemble_srb_system(cy, 3.0, rbs_omega(x));
            least = std::min(least, std::abs(a.determinant()));
        }
        CHECK(least > 1e-6);
    }
}

TEST_CASE("hydrodynamic spectrum has Brillouin peaks near sqrt(gamma/2)") {
    const auto grid = symmetric_grid(3.0, 0.005);
    CHECK(grid.size() == 1201);
    const auto s = density_spectrum(ch4_model1(), 3.0, 18.27, grid);
    const auto p = peak_report(s);
    REQUIRE(p.brillouin_x.has_value());
    CHECK(std::abs(*p.brillouin_x - std::sqrt(2.0 / 3.0)) <= 0.03);
    CHECK(p.rayleigh_height == doctest::Approx(1.0));
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(s.s_values[i] == s.s_values[grid.size() - 1 - i]);
        CHECK(s.s_values[i] >= 0.0);
    }
    CHECK(s.s_values[grid.size() / 2] == 1.0);

    // classical NSF line shape at the same y
    const GasSpecies ch4 = test::fixture("CH4");
    const double lam = *ch4.thermal_conductivity / (ch4.gas_constant * ch4.shear_viscosity);
    const auto n = peak_report(nsf_density_spectrum(3.0, lam, 18.27, grid));
    REQUIRE(n.brillouin_x.has_value());
    CHECK(*n.brillouin_x == doctest::Approx(*p.brillouin_x).epsilon(0.02));
}

TEST_CASE("side peaks fade toward the kinetic regime") {
    const auto grid = symmetric_grid(3.0, 0.005);
    auto contrast = [&](double y) {
        const auto s = density_spectrum(ch4_model1(), 3.0, y, grid);
        const auto p = peak_report(s);
        if (!p.brillouin_x) return 0.0;
        double valley = 1.0;
        for (std::size_t i = 0; i < grid.size(); ++i)
            if (grid[i] > 0 && grid[i] < *p.brillouin_x) valley = std::min(valley, s.s_values[i]);
        return *p.brillouin_height - valley;
    };
    const double hydro = contrast(18.27), mid = contrast(4.46), kinetic = contrast(2.70);
    CHECK(hydro > mid);
    CHECK(mid > kinetic);
    // far into the kinetic regime the side peaks merge with the central line
    CHECK_FALSE(peak_report(density_spectrum(ch4_model1(), 3.0, 0.3, grid)).brillouin_x.has_value());
}

TEST_CASE("continuity in y and bounded integral") {
    const auto grid = symmetric_grid(3.0, 0.005);
    for (double y : {18.27, 4.46, 2.70}) {
        const auto a = density_spectrum(ch4_model1(), 3.0, y, grid);
        const auto b = density_spectrum(ch4_model1(), 3.0, y * 1.001, grid);
        double gap = 0, area = 0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            gap = std::max(gap, std::abs(a.s_values[i] - b.s_values[i]));
            area += 0.005 * a.s_values[i];
        }
        CHECK(gap < 1e-2);
        CHECK(std::isfinite(area));
        CHECK(area > 0.0);
        CHECK(area < 6.0);
    }
}

TEST_CASE("input checks") {
    const auto c = ch4_model1();
    CHECK_THROWS(density_spectrum(c, 3.0, 0.0, symmetric_grid(1.0, 0.1)));
    CHECK_THROWS(density_spectrum(c, 3.0, 5.0, {0.0, 0.1, 0.3}));
    CHECK(rbs_knudsen(1.0) == doctest::Approx(1.0 / (2.0 * std::sqrt(2.0) * kPi)));
    CHECK(rbs_omega(1.0) == doctest::Approx(2.0 * std::sqrt(2.0) * kPi));
}
