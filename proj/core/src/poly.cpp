#include "torilab/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace torilab {

namespace {
const Rational kZero(0);
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::from_coeffs(std::vector<Rational> coeffs) {
    Poly p;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

Poly Poly::monomial(int exponent, const Rational& coeff) {
    if (exponent < 0) throw std::invalid_argument("Poly: negative exponent");
    Poly p;
    if (!coeff.is_zero()) {
        p.c_.assign(static_cast<size_t>(exponent) + 1, kZero);
        p.c_.back() = coeff;
    }
    return p;
}

const Rational& Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(i)];
}

const Rational& Poly::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), kZero);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), kZero);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            r[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return Poly::from_coeffs(std::move(r));
}

Poly Poly::scaled(const Rational& s) const {
    if (s.is_zero()) return Poly();
    Poly r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

Poly Poly::shifted(int k) const {
    if (is_zero()) return Poly();
    if (k < 0) throw std::invalid_argument("Poly: negative shift");
    Poly r;
    r.c_.assign(static_cast<size_t>(k), kZero);
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("Poly: negative power");
    Poly r(1), base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

Rational Poly::eval(const Rational& x) const {
    Rational r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
    Poly rem = *this;
    Poly quot;
    int dd = divisor.degree();
    const Rational lead_inv = Rational(1) / divisor.leading();
    if (rem.degree() >= dd) quot.c_.assign(static_cast<size_t>(rem.degree() - dd) + 1, kZero);
    while (rem.degree() >= dd) {
        int k = rem.degree() - dd;
        Rational f = rem.leading() * lead_inv;
        quot.c_[static_cast<size_t>(k)] = f;
        for (int i = 0; i <= dd; ++i) {
            rem.c_[static_cast<size_t>(i + k)] -= f * divisor.c_[static_cast<size_t>(i)];
        }
        rem.trim();
    }
    quot.trim();
    return {std::move(quot), std::move(rem)};
}

Poly Poly::divide_exact(const Poly& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw std::domain_error("Poly: nonzero remainder in exact division");
    return q;
}

Poly Poly::monic() const {
    if (is_zero()) return Poly();
    return scaled(Rational(1) / leading());
}

Rational Poly::content() const {
    if (is_zero()) return Rational(0);
    Integer num_gcd(0), den_lcm(1);
    for (const auto& c : c_) {
        if (c.is_zero()) continue;
        Integer n = c.num();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        Integer d = c.den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    return Rational(num_gcd, den_lcm);
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        const Rational& c = c_[i];
        if (c.is_zero()) continue;
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        if (i == 0) {
            out << a.str();
        } else {
            if (!a.is_one()) out << a.str() << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
        first = false;
    }
    return out.str();
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

} // namespace torilab
