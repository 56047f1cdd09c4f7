#include "torilab/betti.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "torilab/parallel.hpp"
#include "torilab/series.hpp"

namespace torilab {

namespace {

Poly one_minus_z_pow(int k) {
    return Poly(1) - Poly::monomial(k, Rational(1));
}

Poly one_plus_z_pow(int k) {
    return Poly(1) + Poly::monomial(k, Rational(1));
}

} // namespace

BettiGF stable_betti_gf(const CharacterPolynomial& P) {
    BettiGF out;
    out.P = P;
    for (const auto& [label, coeff] : to_binomial_basis(P)) {
        Poly den(Rational(v_mu(label.positive) * v_mu(label.negative)));
        for (int r : label.positive.parts()) den *= one_minus_z_pow(r);
        for (int r : label.negative.parts()) den *= one_plus_z_pow(r);
        out.gf += RationalFunction(Poly(coeff), den);
    }
    // all poles are roots of unity: the denominator divides (1 - z^M)^deg P
    long m = 1;
    for (int k = 1; k <= P.degree(); ++k) m = std::lcm(m, 2L * k);
    Poly target = one_minus_z_pow(static_cast<int>(m)).pow(P.degree());
    if (!target.divmod(out.gf.den()).second.is_zero()) {
        throw std::runtime_error("stable_betti_gf: denominator has a pole off the unit circle");
    }
    return out;
}

std::vector<Rational> betti_coeffs(const BettiGF& g, int N) {
    if (N < 0) throw std::invalid_argument("betti_coeffs: N must be nonnegative");
    using Series = TruncatedSeries<Rational>;
    auto poly_series = [&](const Poly& p) {
        Series s(N, Rational(0));
        for (int i = 0; i <= p.degree() && i <= N; ++i) s.set_coeff(i, p.coeff(i));
        return s;
    };
    Series s = poly_series(g.gf.num()) / poly_series(g.gf.den());
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(N) + 1);
    for (int i = 0; i <= N; ++i) out.push_back(s.coeff(i));
    return out;
}

std::vector<Rational> twisted_betti_row(const CharacterPolynomial& P, int n, int order) {
    auto classes = conjugacy_classes(Family::BC, n);
    auto table = graded_char_table(Family::BC, n, order);
    std::vector<Rational> acc(static_cast<size_t>(order) + 1, Rational(0));
    for (size_t idx = 0; idx < classes.size(); ++idx) {
        Rational v = P.evaluate(classes[idx].label);
        if (v.is_zero()) continue;
        Rational w = Rational(classes[idx].size) * v;
        for (int i = 0; i <= order; ++i) {
            acc[static_cast<size_t>(i)] += w * table[idx][static_cast<size_t>(i)];
        }
    }
    Rational inv_order = Rational(1) / Rational(weyl_group_order(Family::BC, n));
    for (auto& a : acc) a *= inv_order;
    return acc;
}

StableBettiValue stable_betti_direct(const CharacterPolynomial& P, int i) {
    if (i < 0) throw std::invalid_argument("stable_betti_direct: i must be nonnegative");
    int n_star = P.degree() + i;
    Rational at_n = twisted_betti_row(P, n_star, i)[static_cast<size_t>(i)];
    Rational at_next = twisted_betti_row(P, n_star + 1, i)[static_cast<size_t>(i)];
    if (at_n != at_next) {
        std::ostringstream os;
        os << "instability detected for i=" << i << ": inner product is " << at_n.str() << " at n=" << n_star
           << " but " << at_next.str() << " at n=" << n_star + 1;
        throw std::runtime_error(os.str());
    }
    return {at_n, n_star};
}

DoubleGfReport verify_double_gf(const DoublePartition& type, int n_max, int z_order) {
    DoubleGfReport rep;
    using ZSeries = TruncatedSeries<Rational>;
    using UZSeries = TruncatedSeries<ZSeries>;
    ZSeries zone = ZSeries::constant(z_order, Rational(1));

    // Right side as a nested series, u outer, z inner.
    UZSeries rhs = UZSeries::constant(
        n_max, scale(zone, Rational(Integer(1), v_mu(type.positive) * v_mu(type.negative))));
    for (int r : type.positive.parts()) {
        ZSeries inner = zone / (zone - ZSeries::monomial(z_order, r, Rational(1)));
        rhs *= UZSeries::monomial(n_max, r, inner);
    }
    for (int r : type.negative.parts()) {
        ZSeries inner = zone / (zone + ZSeries::monomial(z_order, r, Rational(1)));
        rhs *= UZSeries::monomial(n_max, r, inner);
    }
    for (int r = 1; r == 1 || 2 * r - 2 <= z_order; ++r) {
        UZSeries factor = UZSeries::constant(n_max, zone);
        for (int m = 1; m <= n_max; ++m) {
            if (static_cast<long>(2 * r - 2) * m > z_order) break;
            factor.set_coeff(m, ZSeries::monomial(z_order, (2 * r - 2) * m, Rational(1)));
        }
        rhs *= factor;
    }

    // Left side from directly computed inner products.
    CharacterPolynomial P = binom_basis_element(type.positive, type.negative);
    for (int n = 0; n <= n_max; ++n) {
        auto row = twisted_betti_row(P, n, z_order);
        ZSeries lhs = ZSeries::from_coeffs(z_order, std::move(row));
        for (int j = 1; j <= n && 2 * j <= z_order; ++j) {
            lhs = lhs / (zone - ZSeries::monomial(z_order, 2 * j, Rational(1)));
        }
        const ZSeries& expected = rhs.coeff(n);
        for (int i = 0; i <= z_order; ++i) {
            if (lhs.coeff(i) != expected.coeff(i)) {
                std::ostringstream os;
                os << "double generating function mismatch at (n, i) = (" << n << ", " << i
                   << "): direct side " << lhs.coeff(i).str() << ", product side " << expected.coeff(i).str();
                rep.detail = os.str();
                return rep;
            }
        }
    }
    rep.ok = true;
    rep.detail = "coefficients agree for n <= " + std::to_string(n_max) + ", i <= " + std::to_string(z_order);
    return rep;
}

LinearRecurrence recurrence(const BettiGF& g) {
    LinearRecurrence rec;
    const Poly& A = g.gf.num();
    const Poly& B = g.gf.den();
    Rational b0 = B.coeff(0);
    if (b0.is_zero()) throw std::runtime_error("recurrence: generating function has a pole at z = 0");
    int N = B.degree();
    rec.coeffs.reserve(static_cast<size_t>(std::max(N, 0)));
    rec.integer_coeffs = true;
    for (int j = 1; j <= N; ++j) {
        Rational d = -(B.coeff(j) / b0);
        if (!d.is_integer()) rec.integer_coeffs = false;
        rec.coeffs.push_back(d);
    }
    rec.valid_from = A.degree() + 1; // A = 0 gives valid_from 0, matching beta = 0

    int deg_p = g.P.degree();
    auto basis = to_binomial_basis(g.P);
    if (basis.size() == 1 && N != basis.begin()->first.size()) {
        throw std::runtime_error("recurrence: order differs from the degree on a binomial-basis element");
    }
    if (N > 2 * deg_p * deg_p) {
        throw std::runtime_error("recurrence: order exceeds the 2 deg(P)^2 bound");
    }

    int check_to = rec.valid_from + 3 * std::max(N, 1);
    auto coeffs = betti_coeffs(g, check_to);
    for (int i = rec.valid_from; i <= check_to; ++i) {
        Rational expect(0);
        for (int j = 1; j <= N; ++j) {
            if (i - j >= 0) expect += rec.coeffs[static_cast<size_t>(j - 1)] * coeffs[static_cast<size_t>(i - j)];
        }
        if (expect != coeffs[static_cast<size_t>(i)]) {
            std::ostringstream os;
            os << "recurrence fails at i=" << i << ": predicted " << expect.str() << ", series gives "
               << coeffs[static_cast<size_t>(i)].str();
            throw std::runtime_error(os.str());
        }
    }
    return rec;
}

Rational Quasipolynomial::eval(long i) const {
    if (period <= 0) throw std::domain_error("Quasipolynomial: empty period");
    long r = i % period;
    if (r < 0) r += period;
    return polys[static_cast<size_t>(r)].eval(Rational(i));
}

namespace {

Poly lagrange_interpolate(const std::vector<long>& xs, const std::vector<Rational>& ys) {
    Poly acc;
    for (size_t j = 0; j < xs.size(); ++j) {
        Poly basis(1);
        Rational denom(1);
        for (size_t k = 0; k < xs.size(); ++k) {
            if (k == j) continue;
            basis *= Poly::from_coeffs({Rational(-xs[k]), Rational(1)});
            denom *= Rational(xs[j] - xs[k]);
        }
        acc += basis.scaled(ys[j] / denom);
    }
    return acc;
}

} // namespace

Quasipolynomial quasipolynomial(const BettiGF& g) {
    Quasipolynomial out;
    int deg_p = g.P.degree();
    out.valid_from = g.P.constant_term().is_zero() ? 0 : 1;

    if (deg_p == 0) {
        out.period = 1;
        out.polys = {Poly()};
        // beta_i = 0 for i >= 1 (and for i = 0 too when P = 0)
        auto coeffs = betti_coeffs(g, 4);
        for (int i = out.valid_from; i <= 4; ++i) {
            if (!coeffs[static_cast<size_t>(i)].is_zero()) {
                throw std::runtime_error("quasipolynomial: constant polynomial with nonzero tail");
            }
        }
        return out;
    }

    long m_bound = 1;
    for (int k = 1; k <= deg_p; ++k) m_bound = std::lcm(m_bound, 2L * k);
    std::vector<int> divisors;
    for (int d = 1; d <= m_bound; ++d) {
        if (m_bound % d == 0) divisors.push_back(d);
    }

    int samples = deg_p; // interpolation degree <= deg(P) - 1
    int n_terms = out.valid_from + static_cast<int>(m_bound) * (samples + 2) + 4;
    auto coeffs = betti_coeffs(g, n_terms);

    for (int M : divisors) {
        std::vector<Poly> polys(static_cast<size_t>(M));
        for (int s = 0; s < M; ++s) {
            std::vector<long> xs;
            std::vector<Rational> ys;
            for (long i = s; static_cast<int>(xs.size()) < samples; i += M) {
                if (i < out.valid_from) continue;
                xs.push_back(i);
                ys.push_back(coeffs[static_cast<size_t>(i)]);
            }
            polys[static_cast<size_t>(s)] = lagrange_interpolate(xs, ys);
        }
        bool ok = true;
        for (int i = out.valid_from; i <= n_terms && ok; ++i) {
            Rational v = polys[static_cast<size_t>(i % M)].eval(Rational(i));
            if (v != coeffs[static_cast<size_t>(i)]) ok = false;
        }
        if (ok) {
            out.period = M;
            out.polys = std::move(polys);
            for (const auto& p : out.polys) {
                if (p.degree() > deg_p - 1) {
                    throw std::runtime_error("quasipolynomial: interpolant degree exceeds deg(P) - 1");
                }
            }
            return out;
        }
    }
    throw std::runtime_error("quasipolynomial: no period up to the lcm bound fits (interpolation inconsistency)");
}

} // namespace torilab
