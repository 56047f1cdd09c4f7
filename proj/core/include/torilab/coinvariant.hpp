/**
 * @file coinvariant.hpp
 * @brief Graded characters of the coinvariant algebras in types A and B/C,
 *        class functions and their inner product, the stable character
 *        polynomials Q_i, and the stable-range check.
 *
 * Type A: for the class lambda of S_n the graded character is
 *   prod_{i=1..n}(1-z^i) / prod_r (1-z^r)^{n_r(lambda)},
 * a polynomial of degree n(n-1)/2. Type B/C: for the class (mu, lambda)
 * of B_n it is
 *   prod_{i=1..n}(1-z^{2i}) / [prod_r (1-z^r)^{n_r(mu)} (1+z^r)^{n_r(lambda)}],
 * a polynomial of degree n^2. Both are cross-checked against the
 * characteristic-polynomial oracle det(1 - z M_sigma) on explicit
 * (signed) permutation matrices.
 */
#pragma once

#include <map>
#include <string>
#include <vector>

#include "torilab/charpoly.hpp"
#include "torilab/partition.hpp"
#include "torilab/poly.hpp"
#include "torilab/rational.hpp"
#include "torilab/series.hpp"

namespace torilab {

enum class Family { A, BC };

std::string family_name(Family f); ///< "a" or "bc"
Family parse_family(const std::string& s);

/// |S_n| = n! or |B_n| = 2^n n!.
Integer weyl_group_order(Family f, int n);

struct ConjClass {
    DoublePartition label; ///< type A uses the positive slot, negative empty
    Integer size;
};

/// Conjugacy classes in the deterministic enumeration order.
std::vector<ConjClass> conjugacy_classes(Family f, int n);

/// A class function given by its values on conjugacy_classes(family, n),
/// in that order. All characters handled here are rational-valued.
struct ClassFunction {
    Family family;
    int n;
    std::vector<Rational> values;

    static ClassFunction from_charpoly(Family f, int n, const CharacterPolynomial& P);
};

/// (1/|W|) sum over classes of size * f * g. No conjugation: S_n and B_n
/// have rational character tables. Throws on group mismatch.
Rational inner_product(const ClassFunction& f, const ClassFunction& g);

/// Graded character of R_n^*: one polynomial in z per conjugacy class.
struct GradedCharacter {
    Family family = Family::A;
    int n = 0;
    std::vector<ConjClass> classes;
    std::vector<Poly> polys; ///< aligned with classes

    int top_degree() const { return family == Family::A ? n * (n - 1) / 2 : n * n; }
    /// chi_{R_n^i} as a class function (zero beyond the top degree).
    ClassFunction coefficient(int i) const;
};

GradedCharacter graded_char_bc(int n);
GradedCharacter graded_char_a(int n);

/// chi_{R_n^i} for i = 0..order on every class, by truncated series
/// division; usable at n far beyond what full polynomials need.
std::vector<std::vector<Rational>> graded_char_table(Family f, int n, int order);

/// A signed permutation in image form: image[i] = +-(j+1) sends letter i+1
/// to letter j+1 with that sign. Plain permutations have all signs +.
struct SignedPermutation {
    std::vector<int> image;

    int size() const { return static_cast<int>(image.size()); }
    DoublePartition cycle_type() const;
};

/// Deterministic representative: cycles laid out on consecutive letters,
/// negative cycles carry the sign on their closing edge.
SignedPermutation class_representative(const DoublePartition& c);

/// det(1 - z M_sigma), evaluated from the Leibniz expansion of the n x n
/// signed permutation matrix (kept independent of the cycle-type formula
/// it is used to check).
Poly det_one_minus_z(const SignedPermutation& sigma);

/// prod_{i=1..n}(1-z^{2i}) / det(1 - z M_sigma).
Poly graded_char_bc_oracle(const SignedPermutation& sigma, int n);
/// prod_{i=1..n}(1-z^i) / det(1 - z M_sigma); sigma must be unsigned.
Poly graded_char_a_oracle(const SignedPermutation& sigma, int n);

/// Q_0..Q_D from the generating function
///   prod_{k>=1} (1-t^{2k}) / ((1-t^k)^{X_k} (1+t^k)^{Y_k}),
/// expanded over the character-polynomial ring via the binomial series
/// for (1-t^k)^{1-X_k} (1+t^k)^{1-Y_k}. Factors with k > D cannot
/// contribute below degree k and are dropped.
std::vector<CharacterPolynomial> q_char_polys(int max_degree);

struct StableRangeReport {
    bool ok = false;
    int n = 0;
    std::string detail;
};

/// Checks Q_i = chi_{R_n^i} on every class of B_n for i <= 2n+1, and that
/// a mismatch exists at i = 2n+2.
StableRangeReport verify_stable_range(int n);

} // namespace torilab
