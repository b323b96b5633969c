#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

namespace twotemp {

using cplx = std::complex<double>;

/// Dense complex polynomial, coefficients in ascending powers.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<cplx> coeffs);
    Polynomial(std::initializer_list<cplx> coeffs);

    const std::vector<cplx>& coeffs() const { return c_; }
    cplx operator[](std::size_t i) const { return i < c_.size() ? c_[i] : cplx{}; }
    /// Degree ignoring exactly-zero leading coefficients; -1 for the zero polynomial.
    int degree() const;

    cplx operator()(cplx x) const;
    Polynomial derivative() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(cplx s, Polynomial a);
    Polynomial abs_coeffs() const;

    /// Sets coefficient i to exactly zero when |c_i| <= rel * bound[i].
    void chop(const Polynomial& bound, double rel);

    /// All roots with multiplicity. Zero trailing coefficients give exact zero roots;
    /// the rest come from a scaled companion-matrix eigensolve followed by Newton polishing.
    std::vector<cplx> roots() const;

private:
    std::vector<cplx> c_;
};

} // namespace twotemp
