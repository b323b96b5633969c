#include "twotemp/polynomial.hpp"

#include <cmath>

#include <Eigen/Dense>

namespace twotemp {

Polynomial::Polynomial(std::vector<cplx> coeffs) : c_(std::move(coeffs)) {}
Polynomial::Polynomial(std::initializer_list<cplx> coeffs) : c_(coeffs) {}

int Polynomial::degree() const {
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i)
        if (c_[i] != cplx{}) return i;
    return -1;
}

cplx Polynomial::operator()(cplx x) const {
    cplx r{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

Polynomial Polynomial::derivative() const {
    std::vector<cplx> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(static_cast<double>(i) * c_[i]);
    return Polynomial(std::move(d));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<cplx> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
}

Polynomial operator*(cplx s, Polynomial a) {
    for (auto& x : a.c_) x *= s;
    return a;
}

Polynomial Polynomial::abs_coeffs() const {
    std::vector<cplx> r;
    for (auto x : c_) r.emplace_back(std::abs(x));
    return Polynomial(std::move(r));
}

void Polynomial::chop(const Polynomial& bound, double rel) {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (std::abs(c_[i]) <= rel * std::abs(bound[i])) c_[i] = cplx{};
}

namespace {

/// Newton refinement; a step is kept only while it lowers |p|.
cplx polish(const Polynomial& p, const Polynomial& dp, cplx z) {
    double best = std::abs(p(z));
    for (int it = 0; it < 8 && best > 0.0; ++it) {
        const cplx d = dp(z);
        if (d == cplx{}) break;
        const cplx cand = z - p(z) / d;
        const double r = std::abs(p(cand));
        if (!(r < best)) break;
        z = cand;
        best = r;
    }
    return z;
}

} // namespace

std::vector<cplx> Polynomial::roots() const {
    const int n = degree();
    std::vector<cplx> out;
    if (n <= 0) return out;
    int z = 0;
    while (c_[z] == cplx{}) ++z;
    for (int i = 0; i < z; ++i) out.emplace_back(0.0, 0.0);
    const int m = n - z;
    if (m == 0) return out;
    std::vector<cplx> a(c_.begin() + z, c_.begin() + n + 1);  // degree m, a[0] != 0
    if (m == 1) {
        out.push_back(-a[0] / a[1]);
        return out;
    }
    // scale x = sigma * t so that the extreme coefficients have equal magnitude
    const double sigma = std::pow(std::abs(a[0]) / std::abs(a[m]), 1.0 / m);
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(m, m);
    std::vector<cplx> b(m + 1);
    double sp = 1.0;
    for (int j = 0; j <= m; ++j) {
        b[j] = a[j] * sp;
        sp *= sigma;
    }
    for (int j = 0; j < m; ++j) C(0, j) = -b[m - 1 - j] / b[m];
    for (int j = 1; j < m; ++j) C(j, j - 1) = 1.0;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
    const Polynomial reduced(a);
    const Polynomial dreduced = reduced.derivative();
    for (int i = 0; i < m; ++i) out.push_back(polish(reduced, dreduced, sigma * es.eigenvalues()(i)));
    return out;
}

} // namespace twotemp
