#include "torilab/tori.hpp"

#include <sstream>
#include <stdexcept>

namespace torilab {

namespace {

Poly q_pow_minus(int k, int sign) {
    // q^k - 1 (sign = -1) or q^k + 1 (sign = +1)
    return Poly::monomial(k, Rational(1)) + Poly(sign);
}

Rational rat_pow(const Rational& x, int e) {
    Rational r(1);
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}

} // namespace

Poly gl_order(int n) {
    if (n < 0) throw std::invalid_argument("gl_order: n must be nonnegative");
    Poly p = Poly::monomial(n * (n - 1) / 2, Rational(1));
    for (int i = 1; i <= n; ++i) p *= q_pow_minus(i, -1);
    return p;
}

Poly sp_order(int n) {
    if (n < 0) throw std::invalid_argument("sp_order: n must be nonnegative");
    Poly p = Poly::monomial(n * n, Rational(1));
    for (int i = 1; i <= n; ++i) p *= q_pow_minus(2 * i, -1);
    return p;
}

Poly group_order_poly(Family f, int n) {
    return f == Family::A ? gl_order(n) : sp_order(n);
}

Poly total_tori(Family f, int n) {
    return Poly::monomial(f == Family::A ? n * n - n : 2 * n * n, Rational(1));
}

RationalFunction count_tori(Family f, const DoublePartition& type, int n) {
    if (type.size() != n) throw std::invalid_argument("count_tori: |type| != n");
    if (f == Family::A) {
        if (!type.negative.empty()) {
            throw std::invalid_argument("count_tori: type-A tori are typed by a single partition");
        }
        Poly den(Rational(z_lambda(type.positive)));
        for (int r : type.positive.parts()) den *= q_pow_minus(r, -1);
        return RationalFunction(gl_order(n), den);
    }
    Poly den(Rational(v_mu(type.positive) * v_mu(type.negative)));
    for (int r : type.positive.parts()) den *= q_pow_minus(r, -1);
    for (int r : type.negative.parts()) den *= q_pow_minus(r, +1);
    return RationalFunction(sp_order(n), den);
}

Rational count_tori_at(Family f, const DoublePartition& type, int n, const Rational& q) {
    if (type.size() != n) throw std::invalid_argument("count_tori: |type| != n");
    auto qp = [&](int k, int sign) { return rat_pow(q, k) + Rational(sign); };
    if (f == Family::A) {
        Rational num = gl_order(n).eval(q);
        Rational den(z_lambda(type.positive));
        for (int r : type.positive.parts()) den *= qp(r, -1);
        return num / den;
    }
    Rational num = sp_order(n).eval(q);
    Rational den(v_mu(type.positive) * v_mu(type.negative));
    for (int r : type.positive.parts()) den *= qp(r, -1);
    for (int r : type.negative.parts()) den *= qp(r, +1);
    return num / den;
}

RationalFunction statistic_sum(Family f, const CharacterPolynomial& P, int n) {
    if (f == Family::A && !P.is_type_a()) {
        throw std::invalid_argument("statistic_sum: family A requires a type-A character polynomial");
    }
    RationalFunction acc;
    for (const auto& c : conjugacy_classes(f, n)) {
        Rational v = P.evaluate(c.label);
        if (v.is_zero()) continue;
        acc += count_tori(f, c.label, n) * RationalFunction(v);
    }
    return acc;
}

RationalFunction statistic_sum_cf(const ClassFunction& chi) {
    auto classes = conjugacy_classes(chi.family, chi.n);
    if (chi.values.size() != classes.size()) {
        throw std::invalid_argument("statistic_sum_cf: value list does not match the class list");
    }
    RationalFunction acc;
    for (size_t i = 0; i < classes.size(); ++i) {
        if (chi.values[i].is_zero()) continue;
        acc += count_tori(chi.family, classes[i].label, chi.n) * RationalFunction(chi.values[i]);
    }
    return acc;
}

Rational statistic_sum_at(Family f, const CharacterPolynomial& P, int n, const Rational& q) {
    if (f == Family::A && !P.is_type_a()) {
        throw std::invalid_argument("statistic_sum: family A requires a type-A character polynomial");
    }
    Rational acc(0);
    for (const auto& c : conjugacy_classes(f, n)) {
        Rational v = P.evaluate(c.label);
        if (v.is_zero()) continue;
        acc += count_tori_at(f, c.label, n, q) * v;
    }
    return acc;
}

LehrerReport lehrer_verify(const ClassFunction& chi) {
    LehrerReport rep;
    Family f = chi.family;
    int n = chi.n;
    rep.lhs = statistic_sum_cf(chi) / RationalFunction(total_tori(f, n));

    GradedCharacter g = f == Family::A ? graded_char_a(n) : graded_char_bc(n);
    int top = g.top_degree();
    // sum_i q^{-i} <chi, R_n^i> = (sum_i <chi, R_n^i> q^{top-i}) / q^top
    Poly num;
    for (int i = 0; i <= top; ++i) {
        Rational m = inner_product(chi, g.coefficient(i));
        if (!m.is_zero()) num += Poly::monomial(top - i, m);
    }
    rep.rhs = RationalFunction(num, Poly::monomial(top, Rational(1)));

    if (rep.lhs == rep.rhs) {
        rep.ok = true;
        rep.detail = "both sides equal " + rep.lhs.str("q");
    } else {
        rep.detail = "mismatch: point-count side " + rep.lhs.str("q") + " vs coinvariant side " + rep.rhs.str("q");
    }
    return rep;
}

RationalFunction asymptotic_limit(Family f, const CharacterPolynomial& P) {
    if (f == Family::A && !P.is_type_a()) {
        throw std::invalid_argument("asymptotic_limit: family A requires a type-A character polynomial");
    }
    RationalFunction acc;
    for (const auto& [label, coeff] : to_binomial_basis(P)) {
        RationalFunction term(Rational(1));
        Integer denom_const = f == Family::A ? z_lambda(label.positive)
                                             : v_mu(label.positive) * v_mu(label.negative);
        term = RationalFunction(Rational(Integer(1), denom_const));
        for (int r : label.positive.parts()) {
            term *= RationalFunction(Poly::monomial(r, Rational(1)), q_pow_minus(r, -1));
        }
        for (int r : label.negative.parts()) {
            term *= RationalFunction(Poly::monomial(r, Rational(1)), q_pow_minus(r, +1));
        }
        acc += term * RationalFunction(coeff);
    }
    return acc;
}

ConvergenceReport verify_convergence(Family f, const CharacterPolynomial& P, int n_max, const Rational& q,
                                     int monotone_from) {
    ConvergenceReport rep;
    if (q < Rational(2)) {
        rep.detail = "q must be at least 2";
        return rep;
    }
    Rational limit = asymptotic_limit(f, P).eval(q);
    for (int n = 1; n <= n_max; ++n) {
        Rational total = total_tori(f, n).eval(q);
        Rational val = statistic_sum_at(f, P, n, q) / total;
        rep.diffs.push_back((val - limit).abs());
    }
    for (int n = monotone_from + 1; n <= n_max; ++n) {
        if (rep.diffs[static_cast<size_t>(n - 1)] > rep.diffs[static_cast<size_t>(n - 2)]) {
            std::ostringstream os;
            os << "|difference| increases from n=" << n - 1 << " to n=" << n;
            rep.detail = os.str();
            return rep;
        }
    }
    Rational tol = Rational(2) / rat_pow(q, n_max);
    if (rep.diffs.back() > tol) {
        rep.detail = "final difference " + rep.diffs.back().str() + " exceeds tolerance " + tol.str();
        return rep;
    }
    rep.ok = true;
    std::ostringstream os;
    os << "difference at n_max=" << n_max << " is " << rep.diffs.back().str() << " <= " << tol.str();
    rep.detail = os.str();
    return rep;
}

namespace {

/// exp(sum_m u^m c_m) with the closed-form exponent coefficients of the
/// all-variables-1 torus generating function.
TruncatedSeries<RationalFunction> exp_side_series(Family f, int u_order) {
    using Series = TruncatedSeries<RationalFunction>;
    Series expo(u_order, RationalFunction(0));
    for (int m = 1; m <= u_order; ++m) {
        RationalFunction cm;
        if (f == Family::A) {
            // 1/(m (q^m - 1))
            cm = RationalFunction(Poly(Rational(1, m)), q_pow_minus(m, -1));
        } else {
            // q^m / (m (q^{2m} - 1))
            cm = RationalFunction(Poly::monomial(m, Rational(1, m)), q_pow_minus(2 * m, -1));
        }
        expo.set_coeff(m, cm);
    }
    return expo.exp();
}

} // namespace

AverageGfReport verify_average_gf(Family f, const DoublePartition& type, int n_max) {
    AverageGfReport rep;
    if (f == Family::A && !type.negative.empty()) {
        rep.detail = "family A takes a single partition (negative part must be empty)";
        return rep;
    }
    using Series = TruncatedSeries<RationalFunction>;
    Series rhs = exp_side_series(f, n_max);

    RationalFunction pref(Rational(1));
    if (f == Family::A) {
        pref = RationalFunction(Rational(Integer(1), z_lambda(type.positive)));
        for (int r : type.positive.parts()) pref = pref / RationalFunction(q_pow_minus(r, -1));
    } else {
        pref = RationalFunction(Rational(Integer(1), v_mu(type.positive) * v_mu(type.negative)));
        for (int r : type.positive.parts()) pref = pref / RationalFunction(q_pow_minus(r, -1));
        for (int r : type.negative.parts()) pref = pref / RationalFunction(q_pow_minus(r, +1));
    }
    rhs *= Series::monomial(n_max, type.size(), pref);

    CharacterPolynomial P = binom_basis_element(type.positive, type.negative);
    for (int n = 0; n <= n_max; ++n) {
        RationalFunction expected = statistic_sum(f, P, n);
        RationalFunction got = rhs.coeff(n) * RationalFunction(group_order_poly(f, n));
        if (expected != got) {
            std::ostringstream os;
            os << "coefficient of u^" << n << " mismatches: generating function gives " << got.str("q")
               << ", class sum gives " << expected.str("q");
            rep.detail = os.str();
            return rep;
        }
    }
    rep.ok = true;
    rep.detail = "coefficients agree for n <= " + std::to_string(n_max);
    return rep;
}

TruncatedSeries<Rational> expand_at_infinity(const RationalFunction& f, int x_order) {
    using Series = TruncatedSeries<Rational>;
    if (f.is_zero()) return Series(x_order, Rational(0));
    int dn = f.num().degree(), dd = f.den().degree();
    int shift = dd - dn;
    if (shift < 0) {
        throw std::domain_error("expand_at_infinity: function does not vanish or stay bounded at infinity");
    }
    auto reversed = [&](const Poly& p, int deg) {
        Series s(x_order, Rational(0));
        for (int i = 0; i <= deg && i <= x_order; ++i) s.set_coeff(i, p.coeff(deg - i));
        return s;
    };
    Series num = reversed(f.num(), dn);
    Series den = reversed(f.den(), dd);
    Series result = num / den;
    // multiply by x^shift
    Series shifted(x_order, Rational(0));
    for (int i = 0; i + shift <= x_order; ++i) shifted.set_coeff(i + shift, result.coeff(i));
    return shifted;
}

namespace {

using XSeries = TruncatedSeries<Rational>;
using UXSeries = TruncatedSeries<XSeries>;

/// 1/(1 - u x^p) in Q[[x]][[u]].
UXSeries geometric_ux(int p, int u_order, int x_order) {
    XSeries zero(x_order, Rational(0));
    UXSeries s = UXSeries::constant(u_order, XSeries::constant(x_order, Rational(1)));
    for (int m = 1; m <= u_order; ++m) {
        if (static_cast<long>(p) * m > x_order) {
            break;
        }
        s.set_coeff(m, XSeries::monomial(x_order, p * m, Rational(1)));
    }
    return s;
}

} // namespace

bool check_exp_geometric_identity(Family f, int u_order, int x_order, std::string* detail) {
    // Exp side, exact over Q(q).
    TruncatedSeries<RationalFunction> exp_side = exp_side_series(f, u_order);

    // Geometric side, in Q[[x]].
    UXSeries geo = UXSeries::constant(u_order, XSeries::constant(x_order, Rational(1)));
    if (f == Family::A) {
        for (int r = 1; r <= x_order; ++r) geo *= geometric_ux(r, u_order, x_order);
    } else {
        for (int k = 1; 2 * k - 1 <= x_order; ++k) geo *= geometric_ux(2 * k - 1, u_order, x_order);
    }

    for (int m = 0; m <= u_order; ++m) {
        XSeries lhs = expand_at_infinity(exp_side.coeff(m), x_order);
        if (lhs != geo.coeff(m)) {
            if (detail) {
                *detail = "coefficient of u^" + std::to_string(m) + " differs between exp and geometric forms";
            }
            return false;
        }
    }
    if (detail) *detail = "exp and geometric forms agree to u-order " + std::to_string(u_order);
    return true;
}

bool check_euler_identity(int u_order, int x_order, std::string* detail) {
    XSeries one = XSeries::constant(x_order, Rational(1));
    UXSeries lhs = UXSeries::constant(u_order, one);
    for (int r = 1; r <= x_order; ++r) lhs *= geometric_ux(r, u_order, x_order);

    UXSeries rhs = UXSeries::constant(u_order, one);
    XSeries den = one;
    for (int n = 1; n <= u_order; ++n) {
        den *= one - XSeries::monomial(x_order, n, Rational(1));
        rhs.set_coeff(n, XSeries::monomial(x_order, n, Rational(1)) / den);
    }

    if (lhs != rhs) {
        if (detail) *detail = "Euler product expansion differs from the closed sum";
        return false;
    }
    if (detail) *detail = "Euler identity holds to u-order " + std::to_string(u_order);
    return true;
}

} // namespace torilab
