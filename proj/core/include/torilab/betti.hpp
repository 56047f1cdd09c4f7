/**
 * @file betti.hpp
 * @brief Stable twisted Betti numbers: the rational generating function in
 *        z, direct inner-product computation with a stabilization witness,
 *        the double generating function check, linear recurrences, and
 *        quasipolynomial closed forms.
 */
#pragma once

#include <string>
#include <vector>

#include "torilab/charpoly.hpp"
#include "torilab/coinvariant.hpp"
#include "torilab/poly.hpp"
#include "torilab/ratfun.hpp"

namespace torilab {

/// Generating function sum_i beta_i z^i of the stable twisted Betti numbers
/// of a character polynomial, reduced to lowest terms.
struct BettiGF {
    CharacterPolynomial P;
    RationalFunction gf; ///< in z
};

/// Expands P in the binomial basis and assembles
///   sum c_{mu,lambda} (1/(v_mu v_lambda)) prod (1/(1-z^r))^{n_r(mu)}
///                                         prod (1/(1+z^r))^{n_r(lambda)}.
BettiGF stable_betti_gf(const CharacterPolynomial& P);

/// beta_0..beta_N by series expansion of the generating function.
std::vector<Rational> betti_coeffs(const BettiGF& g, int N);

/// <P, chi_{R_n^i}>_{B_n} for i = 0..order at one n.
std::vector<Rational> twisted_betti_row(const CharacterPolynomial& P, int n, int order);

struct StableBettiValue {
    Rational value;
    int n_star; ///< stabilization witness: value agrees at n_star and n_star+1
};

/// beta_i computed directly at n = deg(P)+i, with the equality at n+1
/// checked; a disagreement is a hard failure (std::runtime_error).
StableBettiValue stable_betti_direct(const CharacterPolynomial& P, int i);

struct DoubleGfReport {
    bool ok = false;
    std::string detail;
};

/// Coefficientwise check, for n <= n_max and i <= z_order, of
///   sum_n sum_i beta_i(n) z^i u^n / prod_{j<=n}(1-z^{2j})
///     == (1/(v_mu v_lambda)) prod_r (u^r/(1-z^r))^{n_r(mu)}
///        prod_r (u^r/(1+z^r))^{n_r(lambda)} prod_{r>=1} 1/(1-u z^{2r-2}),
/// the left side built from directly computed inner products.
DoubleGfReport verify_double_gf(const DoublePartition& type, int n_max, int z_order);

/// beta_i = sum_j coeffs[j-1] * beta_{i-j} for all i >= valid_from.
struct LinearRecurrence {
    std::vector<Rational> coeffs; ///< d_1..d_N
    int valid_from = 0;
    bool integer_coeffs = false;

    int order() const { return static_cast<int>(coeffs.size()); }
};

/// Reads the recurrence off the reduced generating function (denominator
/// normalized to constant term 1), verifies it on 3N further terms, and
/// checks the order bounds: N = deg(P) for a single binomial-basis element
/// and N <= 2 deg(P)^2 always.
LinearRecurrence recurrence(const BettiGF& g);

/// beta_i = polys[i mod period](i) for i >= valid_from; each poly has
/// degree <= deg(P) - 1.
struct Quasipolynomial {
    int period = 1;
    std::vector<Poly> polys; ///< indexed by residue class
    int valid_from = 0;

    Rational eval(long i) const;
};

/// Extracts the quasipolynomial by exact interpolation on each residue
/// class, minimizing the period over divisors of lcm{2k : k <= deg(P)}
/// and cross-validating on further coefficients.
Quasipolynomial quasipolynomial(const BettiGF& g);

} // namespace torilab
