#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "twotemp/acoustics.hpp"
#include "twotemp/dispersion.hpp"

using namespace twotemp;

namespace {

CoefficientSet ch4(ModelTag t, double kn = 1.0) {
    return coefficients_for(test::fixture("CH4"), t, kn, ModelTag::Model4);
}

CoefficientSet generic() {
    CoefficientSet c;
    c.zeta11 = 1.2;
    c.zeta12 = 0.3;
    c.zeta22 = 0.8;
    c.mu = 0.9;
    c.c_ex = 0.7;
    return c;
}

int rank(const Matrix4c& a) {
    Eigen::FullPivLU<Matrix4c> lu(a);
    lu.setThreshold(1e-12);
    return int(lu.rank());
}

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> g;
    for (int i = 0; i < n; ++i) g.push_back(a + (b - a) * i / (n - 1));
    return g;
}

} // namespace

TEST_CASE("matrix structure") {
    const auto c = generic();
    const double d = 3.0;
    const Matrix4c a0 = assemble_matrix(c, d, 0.0, 0.0);
    CHECK(a0.row(0).norm() == 0.0);
    CHECK(a0.row(1).norm() == 0.0);
    CHECK(rank(a0) == 1);
    CHECK(a0(2, 2) == cplx(c.c_ex));
    CHECK(a0(2, 3) == cplx(-c.c_ex));
    CHECK(a0(3, 2) == cplx(-c.c_ex));
    CHECK(a0(3, 3) == cplx(c.c_ex));

    const cplx w(0.7, 0.1), k(1.3, 0.0);
    const Matrix4c a = assemble_matrix(c, d, w, k);
    const cplx i(0, 1);
    CHECK(a(0, 0) == i * w);
    CHECK(a(0, 1) == -i * k);
    CHECK(a(0, 2) == cplx(0));
    CHECK(a(0, 3) == cplx(0));

    auto dec = c;
    dec.c_ex = 0.0;
    dec.zeta12 = 0.0;
    const Matrix4c b = assemble_matrix(dec, d, w, k);
    for (int r = 0; r < 3; ++r) CHECK(b(r, 3) == cplx(0));
    for (int col = 0; col < 3; ++col) CHECK(b(3, col) == cplx(0));
}

TEST_CASE("dispersion polynomial in omega") {
    const auto c = generic();
    const double d = 2.5;
    const auto p0 = dispersion_polynomial_in_omega(c, d, 0.0);
    CHECK(p0.degree() == 4);
    CHECK(std::abs(p0[4] - 0.75 * d) < 1e-14);
    // k = 0: triple zero root and the relaxation root i c (2(3+delta)/(3 delta))
    const auto r0 = temporal_roots(c, d, 0.0);
    REQUIRE(r0.size() == 4);
    int zeros = 0;
    cplx other;
    for (const auto& r : r0) {
        if (std::abs(r.omega) < 1e-12) ++zeros;
        else other = r.omega;
    }
    CHECK(zeros == 3);
    CHECK(std::abs(other.real()) < 1e-12);
    CHECK(other.imag() == doctest::Approx(c.c_ex * 2.0 * (3 + d) / (3 * d)).epsilon(1e-12));

    // against numeric determinants at random complex points
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-3, 3);
    for (int n = 0; n < 20; ++n) {
        const double k = u(rng);
        const cplx w(u(rng), u(rng));
        const cplx det = assemble_matrix(c, d, w, k).determinant();
        const cplx poly = dispersion_polynomial_in_omega(c, d, k)(w);
        CHECK(std::abs(det - poly) <= 1e-10 * std::max(1.0, std::abs(det)));
        const cplx kc(u(rng), u(rng));
        const double wr = u(rng);
        const cplx det2 = assemble_matrix(c, d, wr, kc).determinant();
        CHECK(std::abs(det2 - dispersion_polynomial_in_k(c, d, wr)(kc)) <=
              1e-10 * std::max(1.0, std::abs(det2)));
        CHECK(std::abs(det2 - dispersion_polynomial_in_k2(c, d, wr)(kc * kc)) <=
              1e-10 * std::max(1.0, std::abs(det2)));
    }
    const auto pk = dispersion_polynomial_in_k(c, d, 0.8);
    CHECK(pk.degree() == 6);
    for (int i = 1; i <= 5; i += 2) CHECK(pk[i] == cplx(0));
}

TEST_CASE("temporal roots") {
    const auto c = ch4(ModelTag::Model1);
    const double d = 3.0;
    const double c0 = equilibrium_sound_speed(d);
    const double k = 1e-3;
    const auto br = temporal_branches(c, d, {0.0, k});
    CHECK(br[1][0].omega.real() == doctest::Approx(c0 * k).epsilon(1e-4));
    CHECK(br[1][1].omega.real() == doctest::Approx(-c0 * k).epsilon(1e-4));
    CHECK(br[1][0].branch == Branch::Acoustic);
    CHECK(br[1][2].branch == Branch::Thermal);
    CHECK(br[1][3].branch == Branch::Relaxational);
    CHECK(br[1][3].omega.imag() > 0.0);

    for (double kk : linspace(0.0, 100.0, 200)) {
        const auto roots = temporal_roots(c, d, kk);
        REQUIRE(roots.size() == 4);
        for (const auto& r : roots) {
            CHECK(r.omega.imag() >= -1e-10);
            CHECK(relative_residual(c, d, r.omega, kk) <= 1e-8);
            CHECK(r.damping == r.omega.imag());
            // spectrum symmetric about the imaginary axis
            const cplx mirror = -std::conj(r.omega);
            const auto best = std::min_element(roots.begin(), roots.end(), [&](auto& a, auto& b) {
                return std::abs(a.omega - mirror) < std::abs(b.omega - mirror);
            });
            CHECK(std::abs(best->omega - mirror) <= 1e-8 * std::max(1.0, std::abs(r.omega)));
        }
    }
}

TEST_CASE("spatial roots") {
    const auto c = ch4(ModelTag::Model1);
    const double d = 3.0;
    CHECK_THROWS(spatial_roots(c, d, 0.0));
    for (double w : linspace(0.5, 100.0, 200)) {
        const auto roots = spatial_roots(c, d, w);
        REQUIRE(roots.size() == 6);
        for (const auto& r : roots) {
            CHECK(r.k.real() * r.k.imag() <= 1e-10);
            CHECK(relative_residual(c, d, w, r.k) <= 1e-8);
            const bool has_pair = std::any_of(roots.begin(), roots.end(),
                                              [&](const auto& o) { return std::abs(o.k + r.k) < 1e-12 * std::max(1.0, std::abs(r.k)); });
            CHECK(has_pair);
        }
    }
    // low frequency: acoustic wavenumber -> omega / c0
    const double w = 1e-4;
    const auto br = spatial_branches(c, d, {w});
    CHECK(br[0][0].k.real() == doctest::Approx(w / equilibrium_sound_speed(d)).epsilon(1e-5));
    CHECK(br[0][0].phase_velocity == doctest::Approx(equilibrium_sound_speed(d)).epsilon(1e-5));
}

TEST_CASE("stability reports") {
    const auto kg = linspace(0.0, 100.0, 200);
    std::vector<double> wg;
    for (int i = 1; i <= 200; ++i) wg.push_back(0.5 * i);
    const double d = 3.0;
    for (ModelTag t : {ModelTag::Model1, ModelTag::Model2, ModelTag::Model4, ModelTag::Reduced})
        CHECK(stability_report(ch4(t), d, kg, wg).stable());
    // very fast relaxation
    auto fast = ch4(ModelTag::Model4);
    fast.c_ex = 1e6;
    CHECK(stability_report(fast, d, kg, wg).stable());
    // indefinite conductivity matrix
    auto bad = generic();
    bad.zeta11 = 1.0;
    bad.zeta22 = 1.0;
    bad.zeta12 = 3.0;
    const auto rep = stability_report(bad, d, kg, wg);
    CHECK_FALSE(rep.stable());
    CHECK(rep.worst_temporal < -1e-10);
}

TEST_CASE("reduced model route agrees with the rank-1 closure") {
    const double d = 3.0;
    const auto red = ch4(ModelTag::Reduced);
    for (double k : {0.0, 0.3, 2.0, 15.0, 80.0}) {
        auto full = temporal_roots(red, d, k);
        auto alt = reduced_temporal_roots(red, d, k);
        REQUIRE(alt.size() == full.size());
        for (const auto& r : full) {
            double best = 1e300;
            for (const cplx a : alt) best = std::min(best, std::abs(a - r.omega));
            CHECK(best <= 1e-8 * std::max(1.0, std::abs(r.omega)));
        }
    }
    for (double w : {0.1, 1.0, 10.0, 90.0}) {
        auto full = spatial_roots(red, d, w);
        auto alt = reduced_spatial_roots(red, d, w);
        REQUIRE(alt.size() == full.size());
        for (const auto& r : full) {
            double best = 1e300;
            for (const cplx a : alt) best = std::min(best, std::abs(a - r.k));
            CHECK(best <= 1e-8 * std::max(1.0, std::abs(r.k)));
        }
    }
}
