#include <doctest.h>

#include "support.hpp"
#include "twotemp/acoustics.hpp"
#include "twotemp/dispersion.hpp"

using namespace twotemp;

namespace {

double nsf_lambda(const GasSpecies& s) {
    return *s.thermal_conductivity / (s.gas_constant * s.shear_viscosity);
}

} // namespace

TEST_CASE("equilibrium sound speed") {
    CHECK(equilibrium_sound_speed(3.0) == doctest::Approx(1.1547005383792515));
    CHECK(equilibrium_sound_speed(2.0) == doctest::Approx(std::sqrt(1.4)));
    CHECK(equilibrium_sound_speed(1e12) == doctest::Approx(1.0));
}

TEST_CASE("near-equilibrium limit") {
    const GasSpecies n2 = test::fixture("N2");
    for (ModelTag t : {ModelTag::Model1, ModelTag::Model2, ModelTag::Model4}) {
        const auto c = coefficients_for(n2, t, 1.0);
        const auto p = acoustic_curve(c, n2.delta, {100.0});
        CHECK(std::abs(p[0].recip_speed - 1.0) <= 0.01);
        // the relaxation acts as a bulk viscosity; with it the NSF curve is matched
        NsfAcousticOptions opt;
        opt.bulk_viscosity = c.equivalent_bulk_viscosity(n2.delta);
        const double lam = c.total_conductivity() / c.kn;
        const auto n = nsf_curve(n2.delta, lam, {100.0}, opt);
        CHECK(p[0].atten_factor == doctest::Approx(n[0].atten_factor).epsilon(0.02));
    }
}

TEST_CASE("attenuation vanishes at equilibrium and grows through the transition") {
    const GasSpecies o2 = test::fixture("O2");
    const auto c = coefficients_for(o2, ModelTag::Model4, 1.0);
    const auto far = acoustic_curve(c, o2.delta, {1e4, 1e2});
    CHECK(far[0].atten_factor < far[1].atten_factor);
    CHECK(far[0].atten_factor < 1e-3);
    const auto grid = log_grid(1.0, 100.0, 80);
    const auto curve = acoustic_curve(c, o2.delta, grid);
    for (std::size_t i = 1; i < curve.size(); ++i)
        CHECK(curve[i].atten_factor < curve[i - 1].atten_factor);
}

TEST_CASE("NSF baseline") {
    const GasSpecies n2 = test::fixture("N2");
    const auto grid = log_grid(100.0, 1e4, 9);
    const auto n = nsf_baseline_curve(n2, grid);
    CHECK(n.back().recip_speed == doctest::Approx(1.0).epsilon(1e-6));
    // attenuation ~ 1/r at large r
    const double slope = std::log(n.back().atten_factor / n.front().atten_factor) /
                         std::log(grid.back() / grid.front());
    CHECK(slope == doctest::Approx(-1.0).epsilon(0.01));

    const auto c = coefficients_for(n2, ModelTag::Model4, 1.0);
    const auto two = acoustic_curve(c, n2.delta, {1.0, 100.0});
    const auto nsf = nsf_baseline_curve(n2, {1.0, 100.0});
    // relaxation shows up as extra dispersion in the transition regime
    const double gap_lo = std::abs(two[0].recip_speed / nsf[0].recip_speed - 1.0);
    const double gap_hi = std::abs(two[1].recip_speed / nsf[1].recip_speed - 1.0);
    CHECK(gap_lo > 0.05);
    CHECK(gap_hi < 1e-3);
}

TEST_CASE("selected root obeys the quadrant rule and varies continuously") {
    const GasSpecies ch4 = test::fixture("CH4");
    const auto c = coefficients_for(ch4, ModelTag::Model1, 1.0);
    const auto grid = log_grid(0.1, 100.0, 120);
    const auto curve = acoustic_curve(c, ch4.delta, grid);
    for (std::size_t i = 0; i < curve.size(); ++i) {
        CHECK(curve[i].k.real() > 0.0);
        CHECK(curve[i].k.imag() <= 0.0);
        CHECK(curve[i].recip_speed > 0.0);
        CHECK(curve[i].speed_dev == doctest::Approx(1.0 / curve[i].recip_speed - 1.0));
        if (i == 0) continue;
        // k scales with omega = 1/r; compare the scaled wavenumbers of neighbours
        const cplx a = curve[i].k * grid[i], b = curve[i - 1].k * grid[i - 1];
        CHECK(std::abs(a - b) < 0.1 * std::abs(b));
    }
}

TEST_CASE("fast relaxation collapses to NSF with the same total conductivity") {
    const GasSpecies n2 = test::fixture("N2");
    auto c = coefficients_for(n2, ModelTag::Model4, 1.0);
    c.c_ex = 1e7;
    const auto two = acoustic_curve(c, n2.delta, {10.0, 100.0});
    const auto nsf = nsf_curve(n2.delta, c.total_conductivity(), {10.0, 100.0});
    for (int i = 0; i < 2; ++i) {
        CHECK(two[i].atten_factor == doctest::Approx(nsf[i].atten_factor).epsilon(0.01));
        CHECK(two[i].recip_speed == doctest::Approx(nsf[i].recip_speed).epsilon(0.01));
    }
    CHECK(nsf_lambda(n2) > 0.0);
}

TEST_CASE("forward acoustic selection") {
    const std::vector<cplx> ks{{1.0, -0.1}, {-1.0, 0.1}, {0.3, -2.0}, {-0.3, 2.0}};
    CHECK(select_forward_acoustic(ks) == cplx(1.0, -0.1));
    CHECK_THROWS(select_forward_acoustic({{-1.0, 0.1}, {0.0, 2.0}}));
    CHECK_THROWS(log_grid(0.0, 1.0, 5));
}
