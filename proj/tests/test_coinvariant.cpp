#include "doctest.h"

#include "torilab/coinvariant.hpp"

using namespace torilab;

namespace {

Poly zpoly(std::initializer_list<int> coeffs) {
    std::vector<Rational> c;
    for (int v : coeffs) c.push_back(Rational(v));
    return Poly::from_coeffs(std::move(c));
}

const Poly& poly_for(const GradedCharacter& g, const DoublePartition& cls) {
    for (size_t i = 0; i < g.classes.size(); ++i) {
        if (g.classes[i].label == cls) return g.polys[i];
    }
    throw std::logic_error("class not found");
}

// Expansions of the product generating function through t^4.
const char* kQ3 =
    "1/6*X1^3 - 1/2*X1^2*Y1 + 1/2*X1^2 + X1*X2 + 1/2*X1*Y1^2 - X1*Y2 - 2/3*X1"
    " - X2*Y1 + X3 - 1/6*Y1^3 - 1/2*Y1^2 + Y1*Y2 + 2/3*Y1 - Y3";
const char* kQ4 =
    "1/24*X1^4 - 1/6*X1^3*Y1 + 1/4*X1^3 + 1/2*X1^2*X2 + 1/4*X1^2*Y1^2 - 1/4*X1^2*Y1"
    " - 1/2*X1^2*Y2 - 1/24*X1^2 - X1*X2*Y1 + 1/2*X1*X2 + X1*X3 - 1/6*X1*Y1^3"
    " - 1/4*X1*Y1^2 + X1*Y1*Y2 + 7/12*X1*Y1 - 1/2*X1*Y2 - X1*Y3 - 1/4*X1 + 1/2*X2^2"
    " + 1/2*X2*Y1^2 + 1/2*X2*Y1 - X2*Y2 - 1/2*X2 - X3*Y1 + X4 + 1/24*Y1^4 + 1/4*Y1^3"
    " - 1/2*Y1^2*Y2 - 1/24*Y1^2 - 1/2*Y1*Y2 + Y1*Y3 - 1/4*Y1 + 1/2*Y2^2 + 3/2*Y2 - Y4 - 1";

} // namespace

TEST_CASE("graded characters in type B/C at small n") {
    auto g1 = graded_char_bc(1);
    CHECK(poly_for(g1, {Partition({1}), Partition()}) == zpoly({1, 1}));
    CHECK(poly_for(g1, {Partition(), Partition({1})}) == zpoly({1, -1}));

    auto g2 = graded_char_bc(2);
    const Poly& ident = poly_for(g2, {Partition({1, 1}), Partition()});
    CHECK(ident == zpoly({1, 2, 2, 2, 1}));
    CHECK(ident.eval(Rational(1)) == Rational(8));

    for (const auto& p : g2.polys) CHECK(p.coeff(0) == Rational(1));
}

TEST_CASE("graded characters in type A at small n") {
    auto g2 = graded_char_a(2);
    CHECK(poly_for(g2, {Partition({1, 1}), Partition()}) == zpoly({1, 1}));
    CHECK(poly_for(g2, {Partition({2}), Partition()}) == zpoly({1, -1}));
    auto g3 = graded_char_a(3);
    CHECK(poly_for(g3, {Partition({1, 1, 1}), Partition()}).eval(Rational(1)) == Rational(6));
}

TEST_CASE("determinant oracle on explicit signed permutations") {
    SignedPermutation ident2{{1, 2}};
    CHECK(det_one_minus_z(ident2) == zpoly({1, -2, 1}));
    CHECK(graded_char_bc_oracle(ident2, 2) == zpoly({1, 2, 2, 2, 1}));

    SignedPermutation neg1{{-1}};
    CHECK(det_one_minus_z(neg1) == zpoly({1, 1}));
    CHECK(graded_char_bc_oracle(neg1, 1) == zpoly({1, -1}));

    SignedPermutation pos2cycle{{2, 1}};
    CHECK(det_one_minus_z(pos2cycle) == zpoly({1, 0, -1}));
}

TEST_CASE("class representatives hit their classes") {
    for (int n = 0; n <= 5; ++n) {
        for (const auto& c : conjugacy_classes(Family::BC, n)) {
            CHECK(class_representative(c.label).cycle_type() == c.label);
        }
    }
}

TEST_CASE("graded characters match the determinant oracle") {
    for (int n = 0; n <= 4; ++n) {
        auto g = graded_char_bc(n);
        for (size_t i = 0; i < g.classes.size(); ++i) {
            CHECK(g.polys[i] == graded_char_bc_oracle(class_representative(g.classes[i].label), n));
        }
        auto ga = graded_char_a(n);
        for (size_t i = 0; i < ga.classes.size(); ++i) {
            CHECK(ga.polys[i] == graded_char_a_oracle(class_representative(ga.classes[i].label), n));
        }
    }
}

TEST_CASE("series table agrees with full polynomials") {
    for (Family f : {Family::A, Family::BC}) {
        int n = 4;
        auto g = f == Family::A ? graded_char_a(n) : graded_char_bc(n);
        auto table = graded_char_table(f, n, 10);
        for (size_t idx = 0; idx < g.classes.size(); ++idx) {
            for (int i = 0; i <= 10; ++i) {
                CHECK(table[idx][static_cast<size_t>(i)] == g.polys[idx].coeff(i));
            }
        }
    }
}

TEST_CASE("inner products") {
    ClassFunction triv = ClassFunction::from_charpoly(Family::A, 3, CharacterPolynomial(1));
    CHECK(inner_product(triv, triv) == Rational(1));

    // <chi_{R_1^1}, sign> over B_1
    auto g1 = graded_char_bc(1);
    ClassFunction sign{Family::BC, 1, {Rational(1), Rational(-1)}};
    CHECK(inner_product(g1.coefficient(1), sign) == Rational(1));

    // <X_1 - Y_1, chi_{R_2^1}> over B_2
    auto g2 = graded_char_bc(2);
    ClassFunction cn = ClassFunction::from_charpoly(Family::BC, 2, charpoly_cn());
    CHECK(inner_product(cn, g2.coefficient(1)) == Rational(1));

    ClassFunction wrong_group = ClassFunction::from_charpoly(Family::BC, 2, CharacterPolynomial(1));
    CHECK_THROWS_AS(inner_product(triv, wrong_group), std::invalid_argument);
}

TEST_CASE("graded character properties for n <= 5") {
    for (int n = 0; n <= 5; ++n) {
        auto g = graded_char_bc(n);
        int top = g.top_degree();
        // R_n^0 is trivial, so the constant term is 1 on every class
        for (const auto& p : g.polys) CHECK(p.coeff(0) == Rational(1));
        DoublePartition ident{Partition(std::vector<int>(static_cast<size_t>(n), 1)), Partition()};
        const Poly& p = poly_for(g, ident);
        CHECK(p.eval(Rational(1)) == Rational(weyl_group_order(Family::BC, n)));
        for (int d = 0; d <= top; ++d) CHECK(p.coeff(d) == p.coeff(top - d));

        // only R_n^0 contains the trivial representation
        ClassFunction triv = ClassFunction::from_charpoly(Family::BC, n, CharacterPolynomial(1));
        for (int i = 0; i <= top; ++i) {
            CHECK(inner_product(triv, g.coefficient(i)) == Rational(i == 0 ? 1 : 0));
        }
    }
    for (int n = 0; n <= 5; ++n) {
        auto g = graded_char_a(n);
        DoublePartition ident{Partition(std::vector<int>(static_cast<size_t>(n), 1)), Partition()};
        CHECK(poly_for(g, ident).eval(Rational(1)) == Rational(factorial(n)));
    }
}

TEST_CASE("q polynomials through degree 4 match their known expansion") {
    auto qs = q_char_polys(4);
    REQUIRE(qs.size() == 5);
    CHECK(qs[0] == CharacterPolynomial(1));
    CHECK(qs[1] == charpoly_cn());
    CHECK(qs[2] == parse_charpoly("-1 + 1/2*X1 + 1/2*Y1 + 1/2*X1^2 + 1/2*Y1^2 - X1*Y1 + X2 - Y2"));
    CHECK(qs[3] == parse_charpoly(kQ3));
    CHECK(qs[4] == parse_charpoly(kQ4));
    // each Q_i contains X_i - Y_i, so deg Q_i = i
    for (int i = 1; i <= 4; ++i) CHECK(qs[static_cast<size_t>(i)].degree() == i);
}

TEST_CASE("truncating the q polynomial product at k = D is harmless") {
    // adding the factor for k = D+1 changes nothing up to degree D
    const int D = 5;
    auto qs = q_char_polys(D);
    using Series = TruncatedSeries<CharacterPolynomial>;
    Series s = Series::constant(D, CharacterPolynomial(1));
    for (int k = 1; k <= D + 1; ++k) {
        CharacterPolynomial ex = CharacterPolynomial(1) - CharacterPolynomial::var_x(k);
        CharacterPolynomial ey = CharacterPolynomial(1) - CharacterPolynomial::var_y(k);
        s *= pow_binomial(-1, k, ex, D);
        s *= pow_binomial(+1, k, ey, D);
    }
    for (int i = 0; i <= D; ++i) CHECK(s.coeff(i) == qs[static_cast<size_t>(i)]);
}

TEST_CASE("stable range: agreement through 2n+1, sharp at 2n+2") {
    // Q_2 on the empty group evaluates to -1 while R_0^2 = 0
    auto qs = q_char_polys(4);
    DoublePartition empty{Partition(), Partition()};
    CHECK(qs[1].evaluate(empty) == Rational(0));
    CHECK(qs[2].evaluate(empty) == Rational(-1));
    // Q_4 does not vanish on B_1 although R_1^4 = 0
    CHECK(qs[4].evaluate({Partition({1}), Partition()}) == Rational(-1));

    for (int n = 0; n <= 3; ++n) {
        auto rep = verify_stable_range(n);
        INFO(rep.detail);
        CHECK(rep.ok);
    }
}
