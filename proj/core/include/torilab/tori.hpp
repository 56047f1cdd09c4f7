/**
 * @file tori.hpp
 * @brief Exact counts of F-stable maximal tori by type, polynomial
 *        statistics on T(n,q) as rational functions in q, the
 *        point-count/coinvariant identity, asymptotic limits, and
 *        coefficientwise checks of the average-value generating functions.
 *
 * Everything is symbolic in q; evaluation at a concrete prime power is a
 * separate fast path used by the convergence checks.
 */
#pragma once

#include <string>
#include <vector>

#include "torilab/charpoly.hpp"
#include "torilab/coinvariant.hpp"
#include "torilab/ratfun.hpp"
#include "torilab/series.hpp"

namespace torilab {

/// |GL_n(F_q)| = q^{n(n-1)/2} prod_{i=1..n} (q^i - 1).
Poly gl_order(int n);
/// |Sp_{2n}(F_q)| = q^{n^2} prod_{i=1..n} (q^{2i} - 1).
Poly sp_order(int n);
Poly group_order_poly(Family f, int n);

/// q^{n^2-n} (type A) or q^{2n^2} (type B/C).
Poly total_tori(Family f, int n);

/// Number of F-stable maximal tori of the given type:
///   A:  |GL_n| / (z_lambda prod (q^r-1)^{n_r(lambda)})
///   BC: |Sp_2n| / (v_mu v_lambda prod (q^r-1)^{n_r(mu)} (q^r+1)^{n_r(lambda)})
/// Type A passes the partition in the positive slot. Throws on |type| != n.
RationalFunction count_tori(Family f, const DoublePartition& type, int n);

/// count_tori evaluated exactly at a concrete q.
Rational count_tori_at(Family f, const DoublePartition& type, int n, const Rational& q);

/// sum over classes of count * P(class); P must be type-A for family A.
RationalFunction statistic_sum(Family f, const CharacterPolynomial& P, int n);
/// Same for an arbitrary class function.
RationalFunction statistic_sum_cf(const ClassFunction& chi);
Rational statistic_sum_at(Family f, const CharacterPolynomial& P, int n, const Rational& q);

struct LehrerReport {
    bool ok = false;
    RationalFunction lhs, rhs;
    std::string detail;
};

/// Checks, symbolically in q,
///   (1/#tori) sum_T chi(T)  ==  sum_i q^{-i} <chi, chi_{R_n^i}>
/// with both sides put in canonical rational-function form.
LehrerReport lehrer_verify(const ClassFunction& chi);

/// Closed-form limit of the normalized statistic, by binomial-basis
/// linearity:
///   A:  (1/z_lambda) prod (q^r/(q^r-1))^{n_r}
///   BC: (1/(v_mu v_lambda)) prod (q^r/(q^r-1))^{n_r(mu)} (q^r/(q^r+1))^{n_r(lambda)}
RationalFunction asymptotic_limit(Family f, const CharacterPolynomial& P);

struct ConvergenceReport {
    bool ok = false;
    std::string detail;
    std::vector<Rational> diffs; ///< |normalized statistic - limit| for n = 1..n_max
};

/// Evaluates the normalized statistic at n = 1..n_max and the closed-form
/// limit at a concrete q; requires |diff| nonincreasing for n >= monotone_from
/// and |diff(n_max)| <= 2 q^{-n_max}.
ConvergenceReport verify_convergence(Family f, const CharacterPolynomial& P, int n_max, const Rational& q,
                                     int monotone_from = 3);

struct AverageGfReport {
    bool ok = false;
    std::string detail;
};

/// Coefficientwise check of the average-value generating function
///   sum_n u^n/|G_n| sum_T binom(X,mu)binom(Y,lambda)(T) = prefactor * G(u)
/// for n <= n_max, where the tail product over geometric factors enters in
/// its exp form (its u-coefficients are closed forms in q); the
/// exp/geometric equivalence is checked separately by
/// check_exp_geometric_identity.
AverageGfReport verify_average_gf(Family f, const DoublePartition& type, int n_max);

/// Expansion of f as a power series in x = 1/q; requires deg num <= deg den.
TruncatedSeries<Rational> expand_at_infinity(const RationalFunction& f, int x_order);

/// Checks, in Q[[x]] with x = 1/q truncated at x_order:
///   A:  prod_i exp[u^i/((q^i-1) i)]              == prod_r 1/(1 - u/q^r)
///   BC: prod_k exp[u^k/((q^k-1)2k) + u^k/((q^k+1)2k)] == prod_k 1/(1 - u/q^{2k-1})
/// The exp side is first computed exactly over Q(q) and then embedded.
bool check_exp_geometric_identity(Family f, int u_order, int x_order, std::string* detail = nullptr);

/// Euler: prod_r 1/(1 - u x^r) == 1 + sum_n u^n x^n / prod_{i<=n}(1 - x^i),
/// coefficientwise in Q[[x]][[u]] at the stated orders.
bool check_euler_identity(int u_order, int x_order, std::string* detail = nullptr);

} // namespace torilab
