#include "doctest.h"

#include <random>
#include <vector>

#include "torilab/charpoly.hpp"
#include "torilab/coinvariant.hpp"

using namespace torilab;

namespace {

const DoublePartition kEmptyClass{Partition(), Partition()};

using Matrix = std::vector<std::vector<Rational>>;

Matrix signed_perm_matrix(const SignedPermutation& s) {
    int n = s.size();
    Matrix m(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n), Rational(0)));
    for (int i = 0; i < n; ++i) {
        int img = s.image[static_cast<size_t>(i)];
        m[static_cast<size_t>(i)][static_cast<size_t>(std::abs(img) - 1)] = Rational(img < 0 ? -1 : 1);
    }
    return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    size_t n = a.size();
    Matrix c(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    }
    return c;
}

Rational trace(const Matrix& m) {
    Rational t(0);
    for (size_t i = 0; i < m.size(); ++i) t += m[i][i];
    return t;
}

CharacterPolynomial random_charpoly(std::mt19937_64& rng, int max_terms, int max_index, int max_exp) {
    std::uniform_int_distribution<int> terms(1, max_terms), index(1, max_index), ex(0, max_exp),
        coeff(-5, 5), den(1, 4);
    CharacterPolynomial p;
    int t = terms(rng);
    for (int i = 0; i < t; ++i) {
        std::vector<Monomial::VarPow> entry;
        for (int r = 1; r <= max_index; ++r) {
            int a = ex(rng), b = ex(rng);
            if (a + b > 0 && index(rng) <= 2) entry.push_back({r, a, b});
        }
        p += CharacterPolynomial::term(Monomial(std::move(entry)), Rational(coeff(rng), den(rng)));
    }
    return p;
}

} // namespace

TEST_CASE("binomial basis elements expand correctly") {
    CHECK(binom_basis_element(Partition({1}), Partition()) == CharacterPolynomial::var_x(1));
    auto x1 = CharacterPolynomial::var_x(1);
    CHECK(binom_basis_element(Partition({1, 1}), Partition()) ==
          scale(x1 * x1 - x1, Rational(1, 2)));
    CHECK(binom_basis_element(Partition(), Partition({2})) == CharacterPolynomial::var_y(2));
    CHECK(binom_basis_element(Partition(), Partition()) == CharacterPolynomial(1));
}

TEST_CASE("evaluation on conjugacy classes") {
    auto p = charpoly_cn();
    CHECK(p.evaluate({Partition({1, 1}), Partition()}) == Rational(2));
    CHECK(p.evaluate({Partition(), Partition({1, 1})}) == Rational(-2));
    CHECK(charpoly_sym2cn().evaluate({Partition({2}), Partition()}) == Rational(1));
    CHECK(p.evaluate(kEmptyClass) == Rational(0));
    // vanishing beyond the ambient n
    CHECK(CharacterPolynomial::var_x(5).evaluate({Partition({2}), Partition({1})}) == Rational(0));
}

TEST_CASE("to_binomial_basis on spec inputs") {
    auto x1 = CharacterPolynomial::var_x(1);
    auto basis = to_binomial_basis(x1 * x1);
    REQUIRE(basis.size() == 2);
    CHECK(basis[DoublePartition{Partition({1, 1}), Partition()}] == Rational(2));
    CHECK(basis[DoublePartition{Partition({1}), Partition()}] == Rational(1));

    auto one = to_binomial_basis(CharacterPolynomial(1));
    REQUIRE(one.size() == 1);
    CHECK(one[kEmptyClass] == Rational(1));

    // Sym^2 C^n: +1 on binom(X,1), binom(X,(1,1)), binom(Y,1), binom(Y,(1,1)),
    // binom(X,2); -1 on binom(Y,2) and binom(X,1)binom(Y,1)
    auto sym2 = to_binomial_basis(charpoly_sym2cn());
    REQUIRE(sym2.size() == 7);
    CHECK(sym2[DoublePartition{Partition({1}), Partition()}] == Rational(1));
    CHECK(sym2[DoublePartition{Partition({1, 1}), Partition()}] == Rational(1));
    CHECK(sym2[DoublePartition{Partition(), Partition({1})}] == Rational(1));
    CHECK(sym2[DoublePartition{Partition(), Partition({1, 1})}] == Rational(1));
    CHECK(sym2[DoublePartition{Partition({2}), Partition()}] == Rational(1));
    CHECK(sym2[DoublePartition{Partition(), Partition({2})}] == Rational(-1));
    CHECK(sym2[DoublePartition{Partition({1}), Partition({1})}] == Rational(-1));
}

TEST_CASE("binomial basis round-trips on random polynomials") {
    std::mt19937_64 rng(424242);
    for (int iter = 0; iter < 30; ++iter) {
        CharacterPolynomial p = random_charpoly(rng, 4, 3, 2);
        CharacterPolynomial back;
        for (const auto& [label, c] : to_binomial_basis(p)) {
            back += binom_basis_element(label.positive, label.negative).scaled(c);
        }
        CHECK(back == p);
    }
}

TEST_CASE("evaluation is a ring homomorphism on every class of B_n, n <= 5") {
    std::mt19937_64 rng(1234);
    for (int iter = 0; iter < 10; ++iter) {
        CharacterPolynomial p = random_charpoly(rng, 3, 3, 2);
        CharacterPolynomial q = random_charpoly(rng, 3, 3, 2);
        for (int n = 0; n <= 5; ++n) {
            for (const auto& c : conjugacy_classes(Family::BC, n)) {
                CHECK((p * q).evaluate(c.label) == p.evaluate(c.label) * q.evaluate(c.label));
                CHECK((p + q).evaluate(c.label) == p.evaluate(c.label) + q.evaluate(c.label));
            }
        }
    }
}

TEST_CASE("named polynomials match brute-force traces for n <= 3") {
    for (int n = 0; n <= 3; ++n) {
        for (const auto& c : conjugacy_classes(Family::BC, n)) {
            SignedPermutation sp = class_representative(c.label);
            Matrix m = signed_perm_matrix(sp);
            Rational t1 = trace(m);
            Rational t2 = n > 0 ? trace(mat_mul(m, m)) : Rational(0);
            Rational t3 = n > 0 ? trace(mat_mul(m, mat_mul(m, m))) : Rational(0);
            // power sums to elementary/complete symmetric functions of eigenvalues
            Rational tr_cn = t1;
            Rational tr_sym2 = (t1 * t1 + t2) / Rational(2);
            Rational tr_w2 = (t1 * t1 - t2) / Rational(2);
            Rational tr_w3 = (t1 * t1 * t1 - Rational(3) * t1 * t2 + Rational(2) * t3) / Rational(6);
            CHECK(charpoly_cn().evaluate(c.label) == tr_cn);
            CHECK(charpoly_sym2cn().evaluate(c.label) == tr_sym2);
            CHECK(charpoly_wedge2cn().evaluate(c.label) == tr_w2);
            CHECK(charpoly_wedge3cn().evaluate(c.label) == tr_w3);
        }
    }
}

TEST_CASE("charpoly text syntax round trip and errors") {
    CharacterPolynomial p = parse_charpoly("1/2*X1^2*Y3 - X2");
    CharacterPolynomial expected =
        scale(CharacterPolynomial::var_x(1) * CharacterPolynomial::var_x(1) * CharacterPolynomial::var_y(3),
              Rational(1, 2)) -
        CharacterPolynomial::var_x(2);
    CHECK(p == expected);
    CHECK(parse_charpoly(p.str()) == p);

    CHECK(parse_charpoly("Cn") == charpoly_cn());
    CHECK(parse_charpoly("Sym2Cn") == charpoly_sym2cn());
    CHECK(parse_charpoly("Wedge2Cn") == charpoly_wedge2cn());
    CHECK(parse_charpoly("Wedge3Cn") == charpoly_wedge3cn());
    CHECK(parse_charpoly("binom:2,1|3") == binom_basis_element(Partition({2, 1}), Partition({3})));
    CHECK(parse_charpoly("binom:|") == CharacterPolynomial(1));
    CHECK(parse_charpoly("2*binom:1| - Y2") ==
          CharacterPolynomial::var_x(1).scaled(Rational(2)) - CharacterPolynomial::var_y(2));
    CHECK(parse_charpoly("3/4") == CharacterPolynomial(Rational(3, 4)));
    CHECK(parse_charpoly("-X1") == -CharacterPolynomial::var_x(1));

    for (const char* bad : {"X1 + @", "Frob", "X0", "1/0", "X1 *", ""}) {
        CHECK_THROWS_WITH_AS(parse_charpoly(bad), doctest::Contains("byte"), std::invalid_argument);
    }
}

TEST_CASE("degree respects deg X_r = deg Y_r = r") {
    CHECK(CharacterPolynomial(7).degree() == 0);
    CHECK(charpoly_cn().degree() == 1);
    CHECK(charpoly_sym2cn().degree() == 2);
    CHECK(charpoly_wedge3cn().degree() == 3);
    CHECK(parse_charpoly("X1^2*Y3").degree() == 5);
}
