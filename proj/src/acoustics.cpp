#include "twotemp/acoustics.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "twotemp/dispersion.hpp"
#include "twotemp/errors.hpp"

namespace twotemp {

double equilibrium_sound_speed(double delta) {
    if (!(delta > 0.0)) throw RangeError("delta", delta, "(0, inf)");
    return std::sqrt((5.0 + delta) / (3.0 + delta));
}

cplx select_forward_acoustic(const std::vector<cplx>& ks) {
    cplx best{std::numeric_limits<double>::quiet_NaN(), 0.0};
    double best_ratio = -1.0;
    for (auto k : ks) {
        if (!(k.real() > 0.0)) continue;
        if (k.imag() > 1e-12 * std::abs(k)) continue;  // growing wave, not a damped mode
        const double ratio = k.imag() == 0.0 ? std::numeric_limits<double>::infinity()
                                             : k.real() / std::abs(k.imag());
        if (ratio > best_ratio) {
            best_ratio = ratio;
            best = k;
        }
    }
    if (best_ratio < 0.0) throw NumericError("no damped forward root among the candidates");
    return best;
}

namespace {

AcousticPoint make_point(double r, double omega, cplx k, double c0) {
    if (std::isnan(k.real()))
        throw NumericError("no forward acoustic root at rarefaction r=" + std::to_string(r));
    AcousticPoint p;
    p.rarefaction = r;
    p.k = k;
    const double alpha = -k.imag();
    const double vph = omega / k.real();
    p.atten_factor = alpha * c0 / omega;
    p.recip_speed = c0 / vph;
    p.speed_dev = (vph - c0) / c0;
    return p;
}

void check_grid(const std::vector<double>& r_grid) {
    for (double r : r_grid)
        if (!(r > 0.0)) throw RangeError("rarefaction", r, "(0, inf)");
}

} // namespace

std::vector<AcousticPoint> acoustic_curve(const CoefficientSet& c, double delta,
                                          const std::vector<double>& r_grid) {
    check_grid(r_grid);
    const CoefficientSet unit = c.rescaled(1.0);
    const double c0 = equilibrium_sound_speed(delta);
    std::vector<AcousticPoint> out;
    for (double r : r_grid) {
        const double omega = 1.0 / r;
        std::vector<cplx> ks;
        for (const auto& m : spatial_roots(unit, delta, omega)) ks.push_back(m.k);
        out.push_back(make_point(r, omega, select_forward_acoustic(ks), c0));
    }
    return out;
}

std::vector<AcousticPoint> nsf_curve(double delta, double conductivity_per_kn,
                                     const std::vector<double>& r_grid, NsfAcousticOptions opt) {
    check_grid(r_grid);
    const double c0 = equilibrium_sound_speed(delta);
    const cplx I1{0.0, 1.0};
    const double visc = 4.0 / 3.0 + opt.bulk_viscosity;
    std::vector<AcousticPoint> out;
    for (double r : r_grid) {
        const double omega = 1.0 / r;
        const cplx iw = I1 * omega;
        std::vector<std::vector<Polynomial>> m(3, std::vector<Polynomial>(3, Polynomial{}));
        m[0][0] = {iw};
        m[0][1] = {0.0, -I1};
        m[1][0] = {0.0, -I1};
        m[1][1] = {iw, 0.0, visc};
        m[1][2] = {0.0, -I1};
        m[2][1] = {0.0, -I1};
        m[2][2] = {0.5 * (3.0 + delta) * iw, 0.0, conductivity_per_kn};
        const auto p = polynomial_determinant(m);
        std::vector<cplx> s;
        for (std::size_t i = 0; i < p.coeffs().size(); i += 2) s.push_back(p.coeffs()[i]);
        std::vector<cplx> ks;
        for (auto sr : Polynomial(s).roots()) {
            ks.push_back(std::sqrt(sr));
            ks.push_back(-std::sqrt(sr));
        }
        out.push_back(make_point(r, omega, select_forward_acoustic(ks), c0));
    }
    return out;
}

std::vector<AcousticPoint> nsf_baseline_curve(const GasSpecies& s,
                                              const std::vector<double>& r_grid,
                                              NsfAcousticOptions opt) {
    if (!s.thermal_conductivity)
        throw InputError("species '" + s.name + "' has no thermal_conductivity for the NSF baseline");
    const double lam = *s.thermal_conductivity / (s.gas_constant * s.shear_viscosity);
    return nsf_curve(s.delta, lam, r_grid, opt);
}

std::vector<double> log_grid(double lo, double hi, int points) {
    if (!(lo > 0.0) || !(hi >= lo) || points < 1) throw InputError("invalid logarithmic grid");
    std::vector<double> g;
    if (points == 1) return {lo};
    const double a = std::log(lo), b = std::log(hi);
    for (int i = 0; i < points; ++i) g.push_back(std::exp(a + (b - a) * i / (points - 1)));
    g.front() = lo;
    g.back() = hi;
    return g;
}

} // namespace twotemp
