/**
 * @file ratfun.hpp
 * @brief Reduced rational functions in one formal variable.
 *
 * Canonical form: gcd(num, den) = 1, both polynomials have integer
 * coefficients, their joint content is 1, and the leading coefficient of
 * the denominator is positive. Two values are equal iff their canonical
 * forms are equal field-by-field, so operator== is a structural check.
 */
#pragma once

#include <string>

#include "torilab/poly.hpp"

namespace torilab {

class RationalFunction {
public:
    RationalFunction() : num_(), den_(1) {}
    RationalFunction(int c) : RationalFunction(Poly(c)) {}
    RationalFunction(const Rational& c) : RationalFunction(Poly(c)) {}
    RationalFunction(const Poly& p) : num_(p), den_(1) { normalize(); }
    RationalFunction(Poly num, Poly den);

    static RationalFunction variable() { return RationalFunction(Poly::variable()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == Poly(1); }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction pow(int e) const; ///< negative exponents allowed

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    /// Exact evaluation; throws std::domain_error on a pole.
    Rational eval(const Rational& x) const;

    /// "num/den" in ascending-term notation, "/den" omitted when den = 1.
    std::string str(const std::string& var) const;

private:
    Poly num_, den_;
    void normalize();
};

/// Canonicalize num/den; throws std::domain_error if den = 0.
inline RationalFunction ratfun_normalize(const Poly& num, const Poly& den) {
    return RationalFunction(num, den);
}

inline RationalFunction zero_like(const RationalFunction&) { return RationalFunction(0); }
inline RationalFunction one_like(const RationalFunction&) { return RationalFunction(1); }
inline RationalFunction ring_inv(const RationalFunction& x) { return RationalFunction(1) / x; }
inline RationalFunction scale(const RationalFunction& x, const Rational& s) {
    return x * RationalFunction(s);
}

} // namespace torilab
