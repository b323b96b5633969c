#include "twotemp/rbs.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "twotemp/errors.hpp"

namespace twotemp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx I1{0.0, 1.0};

void check_y(double y) {
    if (!(y > 0.0) || !std::isfinite(y)) throw RangeError("y", y, "(0, inf)");
}

void check_symmetric(const std::vector<double>& g) {
    if (g.empty()) throw InputError("empty frequency grid");
    const std::size_t n = g.size();
    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(g[i] + g[n - 1 - i]) > 1e-12 * (1.0 + std::abs(g[i])))
            throw InputError("frequency grid must be symmetric about x = 0");
}

template <class Solve>
SpectrumCurve sample(double y, const std::vector<double>& x_grid, Solve&& solve) {
    check_y(y);
    check_symmetric(x_grid);
    SpectrumCurve out;
    out.y = y;
    out.x_grid = x_grid;
    const double s0 = solve(0.0);
    if (!(s0 > 0.0)) throw NumericError("spectrum vanishes at x = 0");
    for (std::size_t i = 0; i < x_grid.size(); ++i) {
        const std::size_t j = x_grid.size() - 1 - i;
        // S is even in x; the mirrored half reuses the same solve so symmetry is exact
        if (j < i) {
            out.s_values.push_back(out.s_values[j]);
            continue;
        }
        out.s_values.push_back(x_grid[i] == 0.0 ? 1.0 : solve(std::abs(x_grid[i])) / s0);
    }
    return out;
}

} // namespace

double rbs_knudsen(double y) {
    check_y(y);
    return 1.0 / (2.0 * std::numbers::sqrt2 * kPi * y);
}

double rbs_omega(double x) { return 2.0 * std::numbers::sqrt2 * kPi * x; }

std::pair<Matrix4c, Vector4c> assemble_srb_system(const CoefficientSet& c, double delta,
                                                  double omega, RbsOptions opt) {
    const double kn = c.mu;
    const double K2 = 4.0 * kPi * kPi;
    const cplx iw = I1 * omega;
    const cplx iK = 2.0 * kPi * I1;
    Matrix4c a = Matrix4c::Zero();
    a(0, 0) = -iw;
    a(0, 1) = iK;
    a(1, 0) = iK;
    a(1, 2) = iK;
    a(2, 1) = iK;
    a(2, 2) = -1.5 * iw + K2 * c.zeta11 + c.c_ex;
    a(2, 3) = K2 * c.zeta12 - c.c_ex;
    a(3, 2) = K2 * c.zeta12 - c.c_ex;
    if (opt.verbatim) {
        a(1, 1) = -(iw - 8.0 * kPi * I1 / 3.0 * kn);
        a(3, 3) = -delta / 3.0 * iw + K2 * c.zeta22 + c.c_ex;
    } else {
        a(1, 1) = -iw + 4.0 / 3.0 * K2 * kn;
        a(3, 3) = -0.5 * delta * iw + K2 * c.zeta22 + c.c_ex;
    }
    Vector4c rhs(1.0, 0.0, 0.0, 0.0);
    return {a, rhs};
}

SpectrumCurve density_spectrum(const CoefficientSet& c, double delta, double y,
                               const std::vector<double>& x_grid, RbsOptions opt) {
    const CoefficientSet cy = c.rescaled(rbs_knudsen(y));
    auto solve = [&](double x) {
        auto [a, rhs] = assemble_srb_system(cy, delta, rbs_omega(x), opt);
        Eigen::FullPivLU<Matrix4c> lu(a);
        if (!lu.isInvertible())
            throw NumericError("singular spectrum system at x=" + std::to_string(x));
        return lu.solve(rhs)(0).real();
    };
    auto out = sample(y, x_grid, solve);
    out.model_tag = c.model_tag;
    return out;
}

SpectrumCurve nsf_density_spectrum(double delta, double conductivity_per_kn, double y,
                                   const std::vector<double>& x_grid) {
    const double kn = rbs_knudsen(y);
    const double lam = conductivity_per_kn * kn;
    const double K2 = 4.0 * kPi * kPi;
    const cplx iK = 2.0 * kPi * I1;
    auto solve = [&](double x) {
        const cplx iw = I1 * rbs_omega(x);
        Eigen::Matrix3cd a = Eigen::Matrix3cd::Zero();
        a(0, 0) = -iw;
        a(0, 1) = iK;
        a(1, 0) = iK;
        a(1, 1) = -iw + 4.0 / 3.0 * K2 * kn;
        a(1, 2) = iK;
        a(2, 1) = iK;
        a(2, 2) = -0.5 * (3.0 + delta) * iw + K2 * lam;
        Eigen::FullPivLU<Eigen::Matrix3cd> lu(a);
        if (!lu.isInvertible())
            throw NumericError("singular spectrum system at x=" + std::to_string(x));
        return lu.solve(Eigen::Vector3cd(1.0, 0.0, 0.0))(0).real();
    };
    auto out = sample(y, x_grid, solve);
    out.nsf = true;
    return out;
}

PeakReport peak_report(const SpectrumCurve& curve) {
    const auto& x = curve.x_grid;
    const auto& s = curve.s_values;
    PeakReport r;
    std::size_t i0 = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (std::abs(x[i]) < std::abs(x[i0])) i0 = i;
    r.rayleigh_height = s[i0];
    std::size_t best = 0;
    for (std::size_t i = i0 + 1; i + 1 < x.size(); ++i)
        if (s[i] > s[i - 1] && s[i] >= s[i + 1] && (best == 0 || s[i] > s[best])) best = i;
    if (best == 0) return r;
    // parabola through the three samples around the maximum
    const double x0 = x[best - 1], x1 = x[best], x2 = x[best + 1];
    const double y0 = s[best - 1], y1 = s[best], y2 = s[best + 1];
    const double d1 = (y1 - y0) / (x1 - x0), d2 = (y2 - y1) / (x2 - x1);
    const double a = (d2 - d1) / (x2 - x0);
    if (a < 0.0) {
        const double xv = 0.5 * (x0 + x1) - d1 / (2.0 * a);
        r.brillouin_x = xv;
        r.brillouin_height = y0 + d1 * (xv - x0) + a * (xv - x0) * (xv - x1);
    } else {
        r.brillouin_x = x1;
        r.brillouin_height = y1;
    }
    return r;
}

std::vector<double> symmetric_grid(double x_max, double step) {
    if (!(x_max > 0.0) || !(step > 0.0)) throw InputError("invalid spectrum grid");
    const long n = std::lround(x_max / step);
    std::vector<double> g;
    for (long i = -n; i <= n; ++i) g.push_back(static_cast<double>(i) * step);
    return g;
}

} // namespace twotemp
