/**
 * @file charpoly.hpp
 * @brief The ring Q[X_1, Y_1, X_2, Y_2, ...] of hyperoctahedral character
 *        polynomials, in sparse monomial form.
 *
 * X_r evaluates to the number of positive r-cycles of a signed permutation
 * and Y_r to the number of negative r-cycles, so every element defines a
 * class function on B_n for all n at once (and on S_n when no Y appears).
 * deg X_r = deg Y_r = r.
 *
 * Text syntax (CLI input/output): terms like "1/2*X1^2*Y3 - X2", the named
 * presets "Cn", "Sym2Cn", "Wedge2Cn", "Wedge3Cn", and binomial-basis
 * elements "binom:2,1|3" meaning binom(X,(2,1))*binom(Y,(3)).
 */
#pragma once

#include <map>
#include <string>
#include <vector>

#include "torilab/partition.hpp"
#include "torilab/rational.hpp"

namespace torilab {

/// Exponent signature of a monomial: finitely many indices r with a pair of
/// exponents on X_r and Y_r. Entries sorted by index, x_exp + y_exp > 0.
class Monomial {
public:
    struct VarPow {
        int index;
        int x_exp;
        int y_exp;
        friend bool operator==(const VarPow& a, const VarPow& b) {
            return a.index == b.index && a.x_exp == b.x_exp && a.y_exp == b.y_exp;
        }
    };

    Monomial() = default; ///< the monomial 1
    explicit Monomial(std::vector<VarPow> entries);

    static Monomial var_x(int r) { return Monomial({{r, 1, 0}}); }
    static Monomial var_y(int r) { return Monomial({{r, 0, 1}}); }

    const std::vector<VarPow>& entries() const { return v_; }
    bool is_one() const { return v_.empty(); }
    int x_exp(int r) const;
    int y_exp(int r) const;
    int max_index() const { return v_.empty() ? 0 : v_.back().index; }

    /// sum over entries of r * (x_exp + y_exp)
    int degree() const;

    Monomial times(const Monomial& o) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.v_ == b.v_; }

    /// Lexicographic on (x_exp(1), y_exp(1), x_exp(2), y_exp(2), ...); a
    /// monomial componentwise below another compares smaller, which makes
    /// the binomial basis triangular with respect to this order.
    friend bool operator<(const Monomial& a, const Monomial& b);

private:
    std::vector<VarPow> v_;
};

class CharacterPolynomial {
public:
    CharacterPolynomial() = default; ///< zero
    CharacterPolynomial(int c) : CharacterPolynomial(Rational(c)) {}
    CharacterPolynomial(const Rational& c);
    static CharacterPolynomial var_x(int r) { return term(Monomial::var_x(r), Rational(1)); }
    static CharacterPolynomial var_y(int r) { return term(Monomial::var_y(r), Rational(1)); }
    static CharacterPolynomial term(const Monomial& m, const Rational& c);

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// true when no Y_r occurs (a symmetric-group character polynomial)
    bool is_type_a() const;
    Rational constant_term() const;
    /// 0 for constants (including zero)
    int degree() const;

    CharacterPolynomial operator-() const;
    CharacterPolynomial& operator+=(const CharacterPolynomial& o);
    CharacterPolynomial& operator-=(const CharacterPolynomial& o);
    friend CharacterPolynomial operator+(CharacterPolynomial a, const CharacterPolynomial& b) { return a += b; }
    friend CharacterPolynomial operator-(CharacterPolynomial a, const CharacterPolynomial& b) { return a -= b; }
    friend CharacterPolynomial operator*(const CharacterPolynomial& a, const CharacterPolynomial& b);
    CharacterPolynomial& operator*=(const CharacterPolynomial& o) { return *this = *this * o; }
    CharacterPolynomial scaled(const Rational& s) const;

    friend bool operator==(const CharacterPolynomial& a, const CharacterPolynomial& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const CharacterPolynomial& a, const CharacterPolynomial& b) { return !(a == b); }

    /// Substitute X_r = n_r(positive part), Y_r = n_r(negative part).
    /// Type-A evaluation passes (lambda_class, empty).
    Rational evaluate(const DoublePartition& cls) const;

    /// Largest monomial in the term order; polynomial must be nonzero.
    const Monomial& leading_monomial() const;

    /// Leading term first, constant last: "X1^2 - 1/2*X2 + 3".
    std::string str() const;

private:
    std::map<Monomial, Rational> terms_; // no zero coefficients stored
};

/// prod_r binom(X_r, n_r(mu)) * binom(Y_r, n_r(lambda)) expanded into
/// monomials, with binom(X, k) = X(X-1)...(X-k+1)/k!.
CharacterPolynomial binom_basis_element(const Partition& mu, const Partition& lambda);

/// Coefficients c_{mu,lambda} with P = sum c * binom(X,mu) binom(Y,lambda).
/// Keys are basis labels (positive = mu, negative = lambda); round-trips
/// with binom_basis_element exactly.
std::map<DoublePartition, Rational> to_binomial_basis(const CharacterPolynomial& P);

/// Character polynomials of the canonical B_n-representations.
CharacterPolynomial charpoly_cn();      ///< C^n: X_1 - Y_1
CharacterPolynomial charpoly_sym2cn();  ///< Sym^2 C^n
CharacterPolynomial charpoly_wedge2cn();///< Wedge^2 C^n
CharacterPolynomial charpoly_wedge3cn();///< Wedge^3 C^n

/// Parse the text syntax; errors cite byte offsets.
CharacterPolynomial parse_charpoly(const std::string& text);

inline CharacterPolynomial zero_like(const CharacterPolynomial&) { return CharacterPolynomial(); }
inline CharacterPolynomial one_like(const CharacterPolynomial&) { return CharacterPolynomial(1); }
CharacterPolynomial ring_inv(const CharacterPolynomial& x); ///< constants only
inline CharacterPolynomial scale(const CharacterPolynomial& x, const Rational& s) { return x.scaled(s); }

} // namespace torilab
