#include "twotemp/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "twotemp/errors.hpp"

namespace twotemp {

namespace {

/// Golub-Welsch: nodes are eigenvalues of the Jacobi matrix, weights mu0 * v_0^2.
QuadratureRule golub_welsch(const Eigen::VectorXd& diag, const Eigen::VectorXd& off, double mu0) {
    const auto n = diag.size();
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    J.diagonal() = diag;
    for (Eigen::Index i = 0; i + 1 < n; ++i) J(i, i + 1) = J(i + 1, i) = off(i);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    QuadratureRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        r.nodes[i] = es.eigenvalues()(i);
        const double v0 = es.eigenvectors()(0, i);
        r.weights[i] = mu0 * v0 * v0;
    }
    return r;
}

} // namespace

QuadratureRule gauss_hermite(int n) {
    if (n < 1) throw InputError("quadrature order must be >= 1");
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd off(std::max(n - 1, 0));
    for (int i = 1; i < n; ++i) off(i - 1) = std::sqrt(0.5 * i);
    return golub_welsch(diag, off, std::sqrt(std::numbers::pi));
}

QuadratureRule gauss_laguerre(int n, double alpha) {
    if (n < 1) throw InputError("quadrature order must be >= 1");
    if (!(alpha > -1.0)) throw DomainError("Laguerre exponent must exceed -1");
    Eigen::VectorXd diag(n);
    Eigen::VectorXd off(std::max(n - 1, 0));
    for (int i = 0; i < n; ++i) diag(i) = 2.0 * i + alpha + 1.0;
    for (int i = 1; i < n; ++i) off(i - 1) = std::sqrt(i * (i + alpha));
    return golub_welsch(diag, off, std::tgamma(alpha + 1.0));
}

namespace {

F6Moments moments_at_order(const FieldState& s, double m, int n) {
    const auto gh = gauss_hermite(n);
    const double alpha = 0.5 * s.delta - 1.0;
    const auto gl = gauss_laguerre(n, alpha);
    const double sc = std::sqrt(2.0 * s.theta_tr);
    const double jac = sc * sc * sc * s.theta_in;
    F6Moments out;
    out.order = n;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                const Eigen::Vector3d t(gh.nodes[a], gh.nodes[b], gh.nodes[c]);
                const double wc = gh.weights[a] * gh.weights[b] * gh.weights[c];
                const Eigen::Vector3d C = sc * t;
                const double gauss = std::exp(-t.squaredNorm());
                for (int l = 0; l < n; ++l) {
                    const double u = gl.nodes[l];
                    const double I = s.theta_in * u;
                    const double weight = gauss * std::pow(u, alpha) * std::exp(-u);
                    const double f = m * eval_f6(s, s.velocity + C, I, m) / weight;
                    const double w = wc * gl.weights[l] * jac * f;
                    out.mass += w;
                    out.momentum += w * C;
                    out.translational_energy += 0.5 * w * C.squaredNorm();
                    out.internal_energy += w * I;
                }
            }
    return out;
}

double moment_distance(const F6Moments& a, const F6Moments& b) {
    auto rel = [](double x, double y) { return std::abs(x - y) / std::max(std::abs(y), 1e-300); };
    double d = std::max({rel(a.mass, b.mass), rel(a.translational_energy, b.translational_energy),
                         rel(a.internal_energy, b.internal_energy)});
    return std::max(d, (a.momentum - b.momentum).norm() / std::max(std::abs(b.mass), 1e-300));
}

} // namespace

F6Moments f6_moments(const FieldState& s, double m, double tol) {
    validate(s);
    F6Moments prev = moments_at_order(s, m, 4);
    for (int n = 8; n <= 48; n *= 2) {
        F6Moments cur = moments_at_order(s, m, n);
        if (moment_distance(cur, prev) <= tol) return cur;
        prev = cur;
    }
    throw NumericError("f6 moment quadrature did not converge");
}

} // namespace twotemp
