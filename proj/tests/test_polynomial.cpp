#include <doctest.h>

#include <algorithm>

#include "twotemp/dispersion.hpp"
#include "twotemp/polynomial.hpp"

using namespace twotemp;

namespace {

/// Sorted-by-(real, imag) comparison of two root sets.
bool same_roots(std::vector<cplx> a, std::vector<cplx> b, double tol) {
    if (a.size() != b.size()) return false;
    auto key = [](cplx x, cplx y) {
        return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    };
    for (const cplx r : a) {
        auto it = std::min_element(b.begin(), b.end(), [&](cplx x, cplx y) {
            return std::abs(x - r) < std::abs(y - r);
        });
        if (std::abs(*it - r) > tol * std::max(1.0, std::abs(r))) return false;
        b.erase(it);
    }
    (void)key;
    return true;
}

Polynomial from_roots(const std::vector<cplx>& roots, cplx lead = 1.0) {
    Polynomial p{lead};
    for (const cplx r : roots) p = p * Polynomial{-r, 1.0};
    return p;
}

} // namespace

TEST_CASE("arithmetic and evaluation") {
    const Polynomial p{1.0, 2.0, 3.0};
    CHECK(p.degree() == 2);
    CHECK(p(2.0) == cplx(17.0));
    CHECK(p.derivative()(1.0) == cplx(8.0));
    CHECK((p * p).degree() == 4);
    CHECK((p - p).degree() == -1);
    CHECK((cplx(2.0) * p)[2] == cplx(6.0));
}

TEST_CASE("roots recover a known factorization") {
    const std::vector<cplx> r{{1, 2}, {1, -2}, {-3, 0}, {0, 0.5}};
    CHECK(same_roots(from_roots(r, {2, 1}).roots(), r, 1e-12));
    const std::vector<cplx> with_zero{{0, 0}, {0, 0}, {2, 0}};
    const auto z = from_roots(with_zero).roots();
    CHECK(std::count(z.begin(), z.end(), cplx(0.0)) == 2);
    CHECK(same_roots(z, with_zero, 1e-14));
    // widely separated magnitudes
    const std::vector<cplx> spread{{1e-4, 0}, {1, 0}, {0, 1e4}};
    CHECK(same_roots(from_roots(spread).roots(), spread, 1e-10));
}

TEST_CASE("chop removes cancellation noise only") {
    Polynomial p{1e-17, 1.0};
    p.chop(Polynomial{1.0, 1.0}, 1e-12);
    CHECK(p[0] == cplx(0.0));
    CHECK(p[1] == cplx(1.0));
}

TEST_CASE("polynomial determinant") {
    // [[x, 1], [1, x]] -> x^2 - 1
    const Polynomial x{0.0, 1.0}, one{1.0};
    const auto d = polynomial_determinant({{x, one}, {one, x}});
    CHECK(d.degree() == 2);
    CHECK(std::abs(d[0] + 1.0) < 1e-15);
    CHECK(std::abs(d[2] - 1.0) < 1e-15);
    // 3x3 triangular: product of the diagonal
    const Polynomial a{2.0, 1.0}, b{0.0, 3.0}, c{1.0, 0.0, 1.0};
    const auto t = polynomial_determinant({{a, one, x}, {Polynomial{}, b, one}, {Polynomial{}, Polynomial{}, c}});
    const auto prod = a * b * c;
    for (int i = 0; i <= 4; ++i) CHECK(std::abs(t[i] - prod[i]) < 1e-14);
}
