#include "torilab/ratfun.hpp"

#include <stdexcept>

namespace torilab {

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("division by zero rational function");
    normalize();
}

void RationalFunction::normalize() {
    if (den_.is_zero()) throw std::domain_error("division by zero rational function");
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divide_exact(g);
        den_ = den_.divide_exact(g);
    }
    // Joint content removal: scale so both polys are integral with content 1.
    Rational cn = num_.content(), cd = den_.content();
    Integer gn = cn.num() * cd.den();
    Integer gd = cn.den() * cd.num();
    Integer g2;
    mpz_gcd(g2.get_mpz_t(), gn.get_mpz_t(), gd.get_mpz_t());
    // joint content = gcd(cn, cd) as a positive rational
    Rational joint(g2, cn.den() * cd.den());
    Rational s = Rational(1) / joint;
    if (den_.leading().sign() < 0) s = -s;
    num_ = num_.scaled(s);
    den_ = den_.scaled(s);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::pow(int e) const {
    if (e >= 0) return RationalFunction(num_.pow(e), den_.pow(e));
    if (is_zero()) throw std::domain_error("division by zero rational function");
    return RationalFunction(den_.pow(-e), num_.pow(-e));
}

Rational RationalFunction::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d.is_zero()) throw std::domain_error("RationalFunction: evaluation at a pole");
    return num_.eval(x) / d;
}

std::string RationalFunction::str(const std::string& var) const {
    if (is_polynomial()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

} // namespace torilab
