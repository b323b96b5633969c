#include "twotemp/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "twotemp/acoustics.hpp"
#include "twotemp/errors.hpp"

namespace twotemp {

namespace {

constexpr cplx I1{0.0, 1.0};
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
/// Coefficients below this fraction of their cancellation-free magnitude are exact zeros.
constexpr double kChop = 1e-12;

using PolyMatrix = std::vector<std::vector<Polynomial>>;

PolyMatrix omega_matrix(const CoefficientSet& c, double delta, double k) {
    const cplx ik = I1 * k;
    const double k2 = k * k;
    PolyMatrix m(4, std::vector<Polynomial>(4, Polynomial{}));
    m[0][0] = {0.0, I1};
    m[0][1] = {-ik};
    m[1][0] = {-ik};
    m[1][1] = {4.0 / 3.0 * c.mu * k2, I1};
    m[1][2] = {-ik};
    m[2][1] = {-ik};
    m[2][2] = {c.c_ex + k2 * c.zeta11, 1.5 * I1};
    m[2][3] = {-c.c_ex + k2 * c.zeta12};
    m[3][2] = {-c.c_ex + k2 * c.zeta12};
    m[3][3] = {c.c_ex + k2 * c.zeta22, 0.5 * delta * I1};
    return m;
}

PolyMatrix k_matrix(const CoefficientSet& c, double delta, double omega) {
    const cplx iw = I1 * omega;
    PolyMatrix m(4, std::vector<Polynomial>(4, Polynomial{}));
    m[0][0] = {iw};
    m[0][1] = {0.0, -I1};
    m[1][0] = {0.0, -I1};
    m[1][1] = {iw, 0.0, 4.0 / 3.0 * c.mu};
    m[1][2] = {0.0, -I1};
    m[2][1] = {0.0, -I1};
    m[2][2] = {c.c_ex + 1.5 * iw, 0.0, c.zeta11};
    m[2][3] = {-c.c_ex, 0.0, c.zeta12};
    m[3][2] = {-c.c_ex, 0.0, c.zeta12};
    m[3][3] = {c.c_ex + 0.5 * delta * iw, 0.0, c.zeta22};
    return m;
}

PolyMatrix reduced_omega_matrix(const CoefficientSet& c, double delta, double k) {
    const cplx ik = I1 * k;
    const double k2 = k * k;
    const double lam = (5.0 + delta) * (5.0 + delta) / 25.0 * c.zeta11;
    const double g = 2.0 * delta / ((3.0 + delta) * (5.0 + delta));
    PolyMatrix m(4, std::vector<Polynomial>(4, Polynomial{}));
    m[0][0] = {0.0, I1};
    m[0][1] = {-ik};
    m[1][0] = {-ik};
    m[1][1] = {4.0 / 3.0 * c.mu * k2, I1};
    m[1][2] = {-ik};
    m[1][3] = {-ik};
    m[2][1] = {-ik};
    m[2][2] = {k2 * lam, 0.5 * (3.0 + delta) * I1};
    m[2][3] = {k2 * 2.0 * lam / (5.0 + delta)};
    m[3][1] = {-ik * delta / (3.0 + delta)};
    m[3][2] = {g * k2 * lam};
    m[3][3] = {g * k2 * 2.0 * lam / (5.0 + delta) + c.c_ex * (3.0 + delta) / delta, 1.5 * I1};
    return m;
}

PolyMatrix reduced_k_matrix(const CoefficientSet& c, double delta, double omega) {
    const cplx iw = I1 * omega;
    const double lam = (5.0 + delta) * (5.0 + delta) / 25.0 * c.zeta11;
    const double g = 2.0 * delta / ((3.0 + delta) * (5.0 + delta));
    PolyMatrix m(4, std::vector<Polynomial>(4, Polynomial{}));
    m[0][0] = {iw};
    m[0][1] = {0.0, -I1};
    m[1][0] = {0.0, -I1};
    m[1][1] = {iw, 0.0, 4.0 / 3.0 * c.mu};
    m[1][2] = {0.0, -I1};
    m[1][3] = {0.0, -I1};
    m[2][1] = {0.0, -I1};
    m[2][2] = {0.5 * (3.0 + delta) * iw, 0.0, lam};
    m[2][3] = {0.0, 0.0, 2.0 * lam / (5.0 + delta)};
    m[3][1] = {0.0, -I1 * delta / (3.0 + delta)};
    m[3][2] = {0.0, 0.0, g * lam};
    m[3][3] = {1.5 * iw + c.c_ex * (3.0 + delta) / delta, 0.0, g * 2.0 * lam / (5.0 + delta)};
    return m;
}

Matrix4c evaluate(const PolyMatrix& m, cplx x) {
    Matrix4c a;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a(i, j) = m[i][j](x);
    return a;
}

Polynomial even_part_in_s(const Polynomial& p) {
    std::vector<cplx> s;
    for (std::size_t i = 0; i < p.coeffs().size(); i += 2) s.push_back(p.coeffs()[i]);
    return Polynomial(std::move(s));
}

std::vector<cplx> k_roots_from_s(const std::vector<cplx>& s_roots) {
    std::vector<cplx> ks;
    for (auto s : s_roots) {
        const cplx r = std::sqrt(s);
        ks.push_back(r);
        ks.push_back(-r);
    }
    return ks;
}

double safe_phase(double num, double den) { return den == 0.0 ? kNaN : num / den; }

ModeRoot temporal_mode(cplx omega, double k) {
    ModeRoot r;
    r.omega = omega;
    r.k = k;
    r.kind = RootKind::Temporal;
    r.phase_velocity = safe_phase(omega.real(), k);
    r.damping = omega.imag();
    return r;
}

ModeRoot spatial_mode(cplx k, double omega) {
    ModeRoot r;
    r.omega = omega;
    r.k = k;
    r.kind = RootKind::Spatial;
    r.phase_velocity = safe_phase(omega, k.real());
    r.damping = -k.imag();
    return r;
}

/// Permutation p minimizing sum |prev[i] - cur[p[i]]|.
template <std::size_t N>
std::array<int, N> best_match(const std::array<cplx, N>& prev, const std::vector<cplx>& cur) {
    std::array<int, N> p, best;
    std::iota(p.begin(), p.end(), 0);
    best = p;
    double best_cost = std::numeric_limits<double>::infinity();
    do {
        double cost = 0.0;
        for (std::size_t i = 0; i < N; ++i) cost += std::abs(prev[i] - cur[p[i]]);
        if (cost < best_cost) {
            best_cost = cost;
            best = p;
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

template <std::size_t N>
double min_gap(const std::array<cplx, N>& r) {
    double g = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j) g = std::min(g, std::abs(r[i] - r[j]));
    return g;
}

/// Follows N labelled roots of `solve` from parameter a to b, refining the step until every
/// root moves by less than half the smallest gap (or the step becomes negligible).
template <std::size_t N, class Solve>
std::array<cplx, N> continue_roots(const std::array<cplx, N>& ra, double a, double b,
                                   Solve&& solve, int depth = 0) {
    auto cur = solve(b);
    auto p = best_match<N>(ra, cur);
    std::array<cplx, N> rb;
    double move = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        rb[i] = cur[p[i]];
        move = std::max(move, std::abs(rb[i] - ra[i]));
    }
    const double gap = min_gap<N>(ra);
    const bool tiny_step = std::abs(b - a) <= 1e-9 * std::max(std::abs(b), 1e-300);
    if (move <= 0.5 * gap || tiny_step || depth > 40) return rb;
    const double mid = 0.5 * (a + b);
    auto rm = continue_roots<N>(ra, a, mid, solve, depth + 1);
    return continue_roots<N>(rm, mid, b, solve, depth + 1);
}

std::vector<cplx> omega_roots(const CoefficientSet& c, double delta, double k) {
    auto r = dispersion_polynomial_in_omega(c, delta, k).roots();
    if (r.size() != 4) throw NumericError("temporal dispersion polynomial lost its degree");
    return r;
}

/// s = k^2 roots padded with NaN to three entries.
std::vector<cplx> s_roots_padded(const CoefficientSet& c, double delta, double omega) {
    auto r = dispersion_polynomial_in_k2(c, delta, omega).roots();
    while (r.size() < 3) r.emplace_back(kNaN, kNaN);
    return r;
}

} // namespace

const char* to_string(Branch b) {
    switch (b) {
    case Branch::Acoustic: return "acoustic";
    case Branch::Thermal: return "thermal";
    case Branch::Relaxational: return "relaxational";
    case Branch::Unclassified: return "unclassified";
    }
    return "unclassified";
}

Matrix4c assemble_matrix(const CoefficientSet& c, double delta, cplx omega, cplx k) {
    const cplx iw = I1 * omega, ik = I1 * k, k2 = k * k;
    Matrix4c a = Matrix4c::Zero();
    a(0, 0) = iw;
    a(0, 1) = -ik;
    a(1, 0) = -ik;
    a(1, 1) = 4.0 / 3.0 * c.mu * k2 + iw;
    a(1, 2) = -ik;
    a(2, 1) = -ik;
    a(2, 2) = c.c_ex + k2 * c.zeta11 + 1.5 * iw;
    a(2, 3) = -c.c_ex + k2 * c.zeta12;
    a(3, 2) = -c.c_ex + k2 * c.zeta12;
    a(3, 3) = c.c_ex + k2 * c.zeta22 + 0.5 * delta * iw;
    return a;
}

Polynomial polynomial_determinant(const PolyMatrix& m) {
    const std::size_t n = m.size();
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    Polynomial det, bound;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (p[i] > p[j]) ++inversions;
        Polynomial term{1.0}, mag{1.0};
        bool zero = false;
        for (std::size_t i = 0; i < n && !zero; ++i) {
            const auto& e = m[i][p[i]];
            if (e.degree() < 0) zero = true;
            term = term * e;
            mag = mag * e.abs_coeffs();
        }
        if (zero) continue;
        if (inversions % 2) det -= term;
        else det += term;
        bound += mag;
    } while (std::next_permutation(p.begin(), p.end()));
    det.chop(bound, kChop);
    return det;
}

Polynomial dispersion_polynomial_in_omega(const CoefficientSet& c, double delta, double k) {
    return polynomial_determinant(omega_matrix(c, delta, k));
}

Polynomial dispersion_polynomial_in_k(const CoefficientSet& c, double delta, double omega) {
    return polynomial_determinant(k_matrix(c, delta, omega));
}

Polynomial dispersion_polynomial_in_k2(const CoefficientSet& c, double delta, double omega) {
    return even_part_in_s(dispersion_polynomial_in_k(c, delta, omega));
}

std::vector<ModeRoot> temporal_roots(const CoefficientSet& c, double delta, double k) {
    if (!(k >= 0.0)) throw DomainError("temporal roots need k >= 0");
    std::vector<ModeRoot> out;
    for (auto w : omega_roots(c, delta, k)) out.push_back(temporal_mode(w, k));
    return out;
}

std::vector<ModeRoot> spatial_roots(const CoefficientSet& c, double delta, double omega) {
    if (!(omega > 0.0)) throw DomainError("spatial roots need omega > 0");
    std::vector<ModeRoot> out;
    for (auto k : k_roots_from_s(dispersion_polynomial_in_k2(c, delta, omega).roots()))
        out.push_back(spatial_mode(k, omega));
    return out;
}

namespace {

double relaxation_root(const CoefficientSet& c, double delta) {
    return 2.0 * c.c_ex * (3.0 + delta) / (3.0 * delta);
}

double transport_scale(const CoefficientSet& c) {
    return std::max({c.mu, c.zeta11 + std::abs(c.zeta12), c.zeta22 + std::abs(c.zeta12), 1e-300});
}

} // namespace

std::vector<std::array<ModeRoot, 4>> temporal_branches(const CoefficientSet& c, double delta,
                                                       const std::vector<double>& k_grid) {
    std::vector<std::array<ModeRoot, 4>> out;
    if (k_grid.empty()) return out;
    if (!std::is_sorted(k_grid.begin(), k_grid.end()) || k_grid.front() < 0.0)
        throw DomainError("k grid must be ascending and non-negative");

    const double c0 = equilibrium_sound_speed(delta);
    const double w_rel = relaxation_root(c, delta);
    double k_seed = 1e-4 * std::min(1.0, c0 / transport_scale(c));
    if (w_rel > 0.0) k_seed = std::min(k_seed, 1e-4 * w_rel / c0);
    for (double k : k_grid)
        if (k > 0.0) {
            k_seed = std::min(k_seed, k);
            break;
        }

    auto solve = [&](double k) { return omega_roots(c, delta, k); };
    auto seed = solve(k_seed);
    // label: relaxational first, then the acoustic pair (largest |Re|), thermal last
    std::array<cplx, 4> lab;
    std::vector<cplx> rest = seed;
    auto take = [&](auto better) {
        auto it = std::min_element(rest.begin(), rest.end(), better);
        cplx v = *it;
        rest.erase(it);
        return v;
    };
    if (w_rel > 0.0) {
        lab[3] = take([&](cplx a, cplx b) {
            return std::abs(a - I1 * w_rel) < std::abs(b - I1 * w_rel);
        });
    }
    lab[0] = take([](cplx a, cplx b) { return a.real() > b.real(); });
    lab[1] = take([](cplx a, cplx b) { return a.real() < b.real(); });
    if (w_rel > 0.0) {
        lab[2] = rest.front();
    } else {
        lab[2] = take([](cplx a, cplx b) { return a.imag() < b.imag(); });
        lab[3] = rest.front();
    }

    constexpr Branch kinds[4] = {Branch::Acoustic, Branch::Acoustic, Branch::Thermal,
                                 Branch::Relaxational};
    auto emit = [&](const std::array<cplx, 4>& r, double k) {
        std::array<ModeRoot, 4> m;
        for (int i = 0; i < 4; ++i) {
            m[i] = temporal_mode(r[i], k);
            m[i].branch = kinds[i];
        }
        out.push_back(m);
    };

    double k_cur = k_seed;
    std::array<cplx, 4> cur = lab;
    for (double k : k_grid) {
        if (k < k_seed) {
            // below the seed: a single matching step towards k = 0 is unambiguous
            auto r = solve(k);
            auto p = best_match<4>(lab, r);
            std::array<cplx, 4> rr;
            for (int i = 0; i < 4; ++i) rr[i] = r[p[i]];
            emit(rr, k);
            continue;
        }
        if (k > k_cur) {
            // geometric sub-steps keep relative root motion small
            while (k_cur * 1.5 < k) {
                cur = continue_roots<4>(cur, k_cur, k_cur * 1.5, solve);
                k_cur *= 1.5;
            }
            cur = continue_roots<4>(cur, k_cur, k, solve);
            k_cur = k;
        }
        emit(cur, k);
    }
    return out;
}

std::vector<std::array<ModeRoot, 3>> spatial_branches(const CoefficientSet& c, double delta,
                                                      const std::vector<double>& omega_grid) {
    std::vector<std::array<ModeRoot, 3>> out;
    if (omega_grid.empty()) return out;
    if (!std::is_sorted(omega_grid.begin(), omega_grid.end()) || !(omega_grid.front() > 0.0))
        throw DomainError("omega grid must be ascending and positive");
    double w_seed = 1e-4 * std::min(1.0, 1.0 / transport_scale(c));
    if (c.c_ex > 0.0) w_seed = std::min(w_seed, 1e-4 * c.c_ex);
    w_seed = std::min(w_seed, omega_grid.front());

    auto solve = [&](double w) { return s_roots_padded(c, delta, w); };
    auto seed = solve(w_seed);
    std::sort(seed.begin(), seed.end(), [](cplx a, cplx b) {
        const double fa = std::isnan(a.real()) ? std::numeric_limits<double>::infinity() : std::abs(a);
        const double fb = std::isnan(b.real()) ? std::numeric_limits<double>::infinity() : std::abs(b);
        return fa < fb;
    });
    std::array<cplx, 3> cur{seed[0], seed[1], seed[2]};
    // NaN padding would poison the matching; follow only the finite roots
    const bool has_relax = !std::isnan(cur[2].real());

    constexpr Branch kinds[3] = {Branch::Acoustic, Branch::Thermal, Branch::Relaxational};
    double w_cur = w_seed;
    for (double w : omega_grid) {
        if (w > w_cur) {
            if (has_relax) {
                auto step = [&](double a, double b) { cur = continue_roots<3>(cur, a, b, solve); };
                while (w_cur * 1.5 < w) {
                    step(w_cur, w_cur * 1.5);
                    w_cur *= 1.5;
                }
                step(w_cur, w);
            } else {
                auto solve2 = [&](double x) {
                    auto r = solve(x);
                    r.resize(2);
                    return r;
                };
                std::array<cplx, 2> c2{cur[0], cur[1]};
                while (w_cur * 1.5 < w) {
                    c2 = continue_roots<2>(c2, w_cur, w_cur * 1.5, solve2);
                    w_cur *= 1.5;
                }
                c2 = continue_roots<2>(c2, w_cur, w, solve2);
                cur[0] = c2[0];
                cur[1] = c2[1];
            }
            w_cur = w;
        }
        std::array<ModeRoot, 3> m;
        for (int i = 0; i < 3; ++i) {
            cplx k = std::sqrt(cur[i]);
            if (k.real() < 0.0) k = -k;
            m[i] = spatial_mode(k, w);
            m[i].branch = kinds[i];
        }
        out.push_back(m);
    }
    return out;
}

StabilityReport stability_report(const CoefficientSet& c, double delta,
                                 const std::vector<double>& k_grid,
                                 const std::vector<double>& omega_grid) {
    if (k_grid.empty() || omega_grid.empty()) throw InputError("stability grids must be non-empty");
    StabilityReport r;
    r.worst_temporal = std::numeric_limits<double>::infinity();
    r.worst_spatial = -std::numeric_limits<double>::infinity();
    for (double k : k_grid)
        for (const auto& m : temporal_roots(c, delta, k))
            if (m.omega.imag() < r.worst_temporal) {
                r.worst_temporal = m.omega.imag();
                r.worst_temporal_k = k;
            }
    for (double w : omega_grid)
        for (const auto& m : spatial_roots(c, delta, w)) {
            const double prod = m.k.real() * m.k.imag();
            if (prod > r.worst_spatial) {
                r.worst_spatial = prod;
                r.worst_spatial_omega = w;
            }
        }
    r.temporal_ok = r.worst_temporal >= -1e-10;
    r.spatial_ok = r.worst_spatial <= 1e-10;
    return r;
}

double relative_residual(const CoefficientSet& c, double delta, cplx omega, cplx k) {
    const Matrix4c a = assemble_matrix(c, delta, omega, k);
    const double det = std::abs(a.determinant());
    if (det == 0.0) return 0.0;
    double scale = 1.0;
    for (int i = 0; i < 4; ++i) scale *= std::max(a.row(i).norm(), 1e-300);
    return det / scale;
}

Matrix4c assemble_reduced_matrix(const CoefficientSet& c, double delta, cplx omega, cplx k) {
    // entries are affine in omega: evaluate the polynomial form at this k
    if (k.imag() == 0.0) return evaluate(reduced_omega_matrix(c, delta, k.real()), omega);
    if (omega.imag() == 0.0) return evaluate(reduced_k_matrix(c, delta, omega.real()), k);
    throw DomainError("reduced matrix needs real omega or real k");
}

std::vector<cplx> reduced_temporal_roots(const CoefficientSet& c, double delta, double k) {
    return polynomial_determinant(reduced_omega_matrix(c, delta, k)).roots();
}

std::vector<cplx> reduced_spatial_roots(const CoefficientSet& c, double delta, double omega) {
    if (!(omega > 0.0)) throw DomainError("spatial roots need omega > 0");
    auto p = polynomial_determinant(reduced_k_matrix(c, delta, omega));
    return k_roots_from_s(even_part_in_s(p).roots());
}

} // namespace twotemp
