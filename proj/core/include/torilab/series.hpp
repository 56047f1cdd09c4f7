/**
 * @file series.hpp
 * @brief Truncated formal power series over a generic coefficient ring.
 *
 * A TruncatedSeries<R> stores exact coefficients for exponents 0..order.
 * Binary operations take the minimum of the two orders; coefficients are
 * never reported beyond the stated order. The coefficient ring R supplies
 * zero_like/one_like/scale (and ring_inv where division is used) via ADL;
 * Rational, RationalFunction, CharacterPolynomial and nested series all
 * qualify.
 */
#pragma once

#include <stdexcept>
#include <vector>

#include "torilab/rational.hpp"

namespace torilab {

template <class R>
class TruncatedSeries {
public:
    /// Zero series of the given order; proto supplies the coefficient shape
    /// (matters for nested series, where "zero" carries an inner order).
    TruncatedSeries(int order, const R& proto) : c_(static_cast<size_t>(check_order(order)) + 1, zero_like(proto)) {}

    static TruncatedSeries constant(int order, const R& value) {
        TruncatedSeries s(order, value);
        s.c_[0] = value;
        return s;
    }
    static TruncatedSeries monomial(int order, int k, const R& coeff) {
        TruncatedSeries s(order, coeff);
        if (k < 0) throw std::invalid_argument("TruncatedSeries: negative exponent");
        if (k <= order) s.c_[static_cast<size_t>(k)] = coeff;
        return s;
    }
    static TruncatedSeries from_coeffs(int order, std::vector<R> coeffs) {
        if (coeffs.empty()) throw std::invalid_argument("TruncatedSeries: empty coefficient list");
        TruncatedSeries s(order, coeffs[0]);
        for (size_t i = 0; i < coeffs.size() && i <= static_cast<size_t>(order); ++i) s.c_[i] = std::move(coeffs[i]);
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }

    /// Exact coefficient; throws std::out_of_range beyond the stated order.
    const R& coeff(int n) const {
        if (n < 0 || n > order()) throw std::out_of_range("TruncatedSeries: coefficient beyond stated order");
        return c_[static_cast<size_t>(n)];
    }
    void set_coeff(int n, const R& v) {
        if (n < 0 || n > order()) throw std::out_of_range("TruncatedSeries: coefficient beyond stated order");
        c_[static_cast<size_t>(n)] = v;
    }

    TruncatedSeries truncated(int new_order) const {
        if (new_order > order()) throw std::out_of_range("TruncatedSeries: cannot extend order");
        TruncatedSeries s(new_order, c_[0]);
        for (int i = 0; i <= new_order; ++i) s.c_[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)];
        return s;
    }

    TruncatedSeries operator-() const {
        TruncatedSeries s = *this;
        for (auto& c : s.c_) c = zero_like(c) - c;
        return s;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        int n = std::min(a.order(), b.order());
        TruncatedSeries s(n, a.c_[0]);
        for (int i = 0; i <= n; ++i) s.c_[static_cast<size_t>(i)] = a.c_[static_cast<size_t>(i)] + b.c_[static_cast<size_t>(i)];
        return s;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        int n = std::min(a.order(), b.order());
        TruncatedSeries s(n, a.c_[0]);
        for (int i = 0; i <= n; ++i) s.c_[static_cast<size_t>(i)] = a.c_[static_cast<size_t>(i)] - b.c_[static_cast<size_t>(i)];
        return s;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        int n = std::min(a.order(), b.order());
        TruncatedSeries s(n, a.c_[0]);
        for (int i = 0; i <= n; ++i) {
            R acc = zero_like(a.c_[0]);
            for (int k = 0; k <= i; ++k) {
                acc = acc + a.c_[static_cast<size_t>(k)] * b.c_[static_cast<size_t>(i - k)];
            }
            s.c_[static_cast<size_t>(i)] = std::move(acc);
        }
        return s;
    }
    TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
    TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this = *this - o; }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

    /// Multiplicative inverse; requires an invertible constant term.
    TruncatedSeries inverse() const {
        R inv0 = ring_inv(c_[0]);
        TruncatedSeries s(order(), c_[0]);
        s.c_[0] = inv0;
        for (int n = 1; n <= order(); ++n) {
            R acc = zero_like(c_[0]);
            for (int k = 1; k <= n; ++k) {
                acc = acc + c_[static_cast<size_t>(k)] * s.c_[static_cast<size_t>(n - k)];
            }
            s.c_[static_cast<size_t>(n)] = zero_like(acc) - acc * inv0;
        }
        return s;
    }

    friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
        int n = std::min(a.order(), b.order());
        return a.truncated(n) * b.truncated(n).inverse();
    }

    /// exp of a series with zero constant term over a ring containing Q.
    TruncatedSeries exp() const {
        if (!(c_[0] == zero_like(c_[0]))) {
            throw std::domain_error("TruncatedSeries: exp requires zero constant term");
        }
        TruncatedSeries s(order(), c_[0]);
        s.c_[0] = one_like(c_[0]);
        for (int n = 1; n <= order(); ++n) {
            R acc = zero_like(c_[0]);
            for (int k = 1; k <= n; ++k) {
                acc = acc + scale(c_[static_cast<size_t>(k)], Rational(k)) * s.c_[static_cast<size_t>(n - k)];
            }
            s.c_[static_cast<size_t>(n)] = scale(acc, Rational(1, n));
        }
        return s;
    }

private:
    std::vector<R> c_;
    static int check_order(int order) {
        if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
        return order;
    }
};

/// The [t^n] coefficient; errors beyond the stated order.
template <class R>
const R& series_coefficient(const TruncatedSeries<R>& s, int n) {
    return s.coeff(n);
}

/// (1 + base_sign*t^k)^exponent via the generalized binomial series
/// binom(e, j) = e(e-1)...(e-j+1)/j!. Exact finite expansion when the
/// exponent is a nonnegative integer of the ring.
template <class R>
TruncatedSeries<R> pow_binomial(int base_sign, int k, const R& exponent, int order) {
    if (k <= 0) throw std::invalid_argument("pow_binomial: k must be positive");
    if (base_sign != 1 && base_sign != -1) throw std::invalid_argument("pow_binomial: base_sign must be +1 or -1");
    TruncatedSeries<R> s = TruncatedSeries<R>::constant(order, one_like(exponent));
    R binom = one_like(exponent);
    int sign = 1;
    for (int j = 1; static_cast<long>(k) * j <= order; ++j) {
        binom = scale(binom * (exponent - scale(one_like(exponent), Rational(j - 1))), Rational(1, j));
        sign *= base_sign;
        s.set_coeff(k * j, sign > 0 ? binom : zero_like(binom) - binom);
    }
    return s;
}

/// (1 + base_sign*t^k)^e for an integer exponent e (negative allowed);
/// proto supplies the coefficient shape.
template <class R>
TruncatedSeries<R> pow_binomial_int(int base_sign, int k, long e, int order, const R& proto) {
    if (k <= 0) throw std::invalid_argument("pow_binomial: k must be positive");
    if (base_sign != 1 && base_sign != -1) throw std::invalid_argument("pow_binomial: base_sign must be +1 or -1");
    TruncatedSeries<R> s = TruncatedSeries<R>::constant(order, one_like(proto));
    Rational binom(1);
    int sign = 1;
    for (int j = 1; static_cast<long>(k) * j <= order; ++j) {
        binom = binom * Rational(e - (j - 1)) * Rational(1, j);
        sign *= base_sign;
        s.set_coeff(k * j, scale(one_like(proto), sign > 0 ? binom : -binom));
    }
    return s;
}

/// Geometric series 1/(1 - c*t^k) to the given order.
template <class R>
TruncatedSeries<R> geometric_series(const R& c, int k, int order) {
    if (k <= 0) throw std::invalid_argument("geometric_series: k must be positive");
    TruncatedSeries<R> s = TruncatedSeries<R>::constant(order, one_like(c));
    R p = one_like(c);
    for (int j = 1; static_cast<long>(k) * j <= order; ++j) {
        p = p * c;
        s.set_coeff(k * j, p);
    }
    return s;
}

template <class R>
TruncatedSeries<R> zero_like(const TruncatedSeries<R>& s) {
    return TruncatedSeries<R>(s.order(), s.coeff(0));
}
template <class R>
TruncatedSeries<R> one_like(const TruncatedSeries<R>& s) {
    return TruncatedSeries<R>::constant(s.order(), one_like(s.coeff(0)));
}
template <class R>
TruncatedSeries<R> ring_inv(const TruncatedSeries<R>& s) {
    return s.inverse();
}
template <class R>
TruncatedSeries<R> scale(const TruncatedSeries<R>& s, const Rational& r) {
    TruncatedSeries<R> out = s;
    for (int i = 0; i <= s.order(); ++i) out.set_coeff(i, scale(s.coeff(i), r));
    return out;
}

} // namespace torilab
