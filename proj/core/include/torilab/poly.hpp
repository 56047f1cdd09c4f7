/**
 * @file poly.hpp
 * @brief Dense univariate polynomials over Rational.
 *
 * The formal variable is anonymous; callers name it when formatting ("q",
 * "z", "t", "u"). Invariant: the highest stored coefficient is nonzero
 * unless the polynomial is zero (empty coefficient list).
 */
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "torilab/rational.hpp"

namespace torilab {

class Poly {
public:
    Poly() = default;
    Poly(int c) : Poly(Rational(c)) {}
    Poly(const Rational& c) {
        if (!c.is_zero()) c_.push_back(c);
    }

    /// Coefficients indexed by exponent; trailing zeros are trimmed.
    static Poly from_coeffs(std::vector<Rational> coeffs);
    static Poly variable() { return monomial(1, Rational(1)); }
    static Poly monomial(int exponent, const Rational& coeff);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    /// Coefficient of x^i; zero beyond the degree.
    const Rational& coeff(int i) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const Rational& s) const;
    Poly shifted(int k) const; ///< multiply by x^k
    Poly pow(int e) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Rational eval(const Rational& x) const;

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;
    /// Exact division; throws std::domain_error on a nonzero remainder.
    Poly divide_exact(const Poly& divisor) const;

    /// Leading coefficient made 1 (zero polynomial unchanged).
    Poly monic() const;

    /// Positive rational c with (*this)/c integer-coefficient and primitive.
    /// Zero polynomial has content 0.
    Rational content() const;

    /// "c0 + c1*q + c2*q^2" with zero terms omitted ("0" for the zero poly).
    std::string str(const std::string& var) const;

private:
    std::vector<Rational> c_;
    void trim();
};

/// Monic greatest common divisor; gcd(p, 0) = p/leading, gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);

} // namespace torilab
