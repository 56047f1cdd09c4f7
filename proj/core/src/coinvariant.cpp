#include "torilab/coinvariant.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "torilab/parallel.hpp"

namespace torilab {

std::string family_name(Family f) {
    return f == Family::A ? "a" : "bc";
}

Family parse_family(const std::string& s) {
    if (s == "a" || s == "A") return Family::A;
    if (s == "bc" || s == "BC" || s == "b" || s == "c") return Family::BC;
    throw std::invalid_argument("unknown family '" + s + "' (expected 'a' or 'bc')");
}

Integer weyl_group_order(Family f, int n) {
    Integer r = factorial(n);
    if (f == Family::BC) r *= int_pow(Integer(2), static_cast<unsigned long>(n));
    return r;
}

std::vector<ConjClass> conjugacy_classes(Family f, int n) {
    std::vector<ConjClass> out;
    if (f == Family::A) {
        for (auto& lam : enumerate_partitions(n)) {
            ConjClass c{{lam, Partition()}, class_size_a(lam)};
            out.push_back(std::move(c));
        }
    } else {
        for (auto& dp : enumerate_double_partitions(n)) {
            ConjClass c{dp, class_size_bc(dp)};
            out.push_back(std::move(c));
        }
    }
    return out;
}

ClassFunction ClassFunction::from_charpoly(Family f, int n, const CharacterPolynomial& P) {
    if (f == Family::A && !P.is_type_a()) {
        throw std::invalid_argument("type-A class function requires a character polynomial without Y variables");
    }
    ClassFunction cf{f, n, {}};
    auto classes = conjugacy_classes(f, n);
    cf.values.reserve(classes.size());
    for (const auto& c : classes) cf.values.push_back(P.evaluate(c.label));
    return cf;
}

Rational inner_product(const ClassFunction& f, const ClassFunction& g) {
    if (f.family != g.family || f.n != g.n) {
        throw std::invalid_argument("inner_product: class functions on different groups");
    }
    auto classes = conjugacy_classes(f.family, f.n);
    if (f.values.size() != classes.size() || g.values.size() != classes.size()) {
        throw std::invalid_argument("inner_product: value list does not match the class list");
    }
    Rational acc(0);
    for (size_t i = 0; i < classes.size(); ++i) {
        acc += Rational(classes[i].size) * f.values[i] * g.values[i];
    }
    return acc / Rational(weyl_group_order(f.family, f.n));
}

ClassFunction GradedCharacter::coefficient(int i) const {
    ClassFunction cf{family, n, {}};
    cf.values.reserve(polys.size());
    for (const auto& p : polys) cf.values.push_back(p.coeff(i));
    return cf;
}

namespace {

Poly one_minus_z_pow(int k) {
    Poly p(1);
    return p - Poly::monomial(k, Rational(1));
}

Poly one_plus_z_pow(int k) {
    Poly p(1);
    return p + Poly::monomial(k, Rational(1));
}

GradedCharacter graded_char_impl(Family fam, int n) {
    GradedCharacter g;
    g.family = fam;
    g.n = n;
    g.classes = conjugacy_classes(fam, n);
    g.polys.resize(g.classes.size());

    Poly numerator(1);
    for (int i = 1; i <= n; ++i) {
        numerator *= one_minus_z_pow(fam == Family::A ? i : 2 * i);
    }

    parallel_for(g.classes.size(), [&](size_t idx) {
        const DoublePartition& cls = g.classes[idx].label;
        Poly den(1);
        for (int r : cls.positive.parts()) den *= one_minus_z_pow(r);
        for (int r : cls.negative.parts()) den *= one_plus_z_pow(r);
        Poly quotient;
        try {
            quotient = numerator.divide_exact(den);
        } catch (const std::domain_error&) {
            throw std::runtime_error("internal error: graded character division left a remainder on class " +
                                     cls.str());
        }
        if (quotient.degree() != g.top_degree()) {
            throw std::runtime_error("internal error: graded character has wrong degree on class " + cls.str());
        }
        g.polys[idx] = std::move(quotient);
    });
    return g;
}

} // namespace

GradedCharacter graded_char_bc(int n) {
    if (n < 0) throw std::invalid_argument("graded_char_bc: n must be nonnegative");
    return graded_char_impl(Family::BC, n);
}

GradedCharacter graded_char_a(int n) {
    if (n < 0) throw std::invalid_argument("graded_char_a: n must be nonnegative");
    return graded_char_impl(Family::A, n);
}

std::vector<std::vector<Rational>> graded_char_table(Family f, int n, int order) {
    auto classes = conjugacy_classes(f, n);
    using Series = TruncatedSeries<Rational>;
    Series numerator = Series::constant(order, Rational(1));
    for (int i = 1; i <= n; ++i) {
        int k = f == Family::A ? i : 2 * i;
        if (k > order) break;
        numerator *= Series::constant(order, Rational(1)) - Series::monomial(order, k, Rational(1));
    }
    std::vector<std::vector<Rational>> table(classes.size());
    parallel_for(classes.size(), [&](size_t idx) {
        const DoublePartition& cls = classes[idx].label;
        Series s = numerator;
        int prev = 0;
        for (int r : cls.positive.parts()) {
            if (r != prev) {
                s *= pow_binomial_int(-1, r, -cls.positive.multiplicity(r), order, Rational(0));
                prev = r;
            }
        }
        prev = 0;
        for (int r : cls.negative.parts()) {
            if (r != prev) {
                s *= pow_binomial_int(+1, r, -cls.negative.multiplicity(r), order, Rational(0));
                prev = r;
            }
        }
        std::vector<Rational> row;
        row.reserve(static_cast<size_t>(order) + 1);
        int top = f == Family::A ? n * (n - 1) / 2 : n * n;
        for (int i = 0; i <= order; ++i) row.push_back(i <= top ? s.coeff(i) : Rational(0));
        table[idx] = std::move(row);
    });
    return table;
}

DoublePartition SignedPermutation::cycle_type() const {
    int n = size();
    std::vector<bool> seen(static_cast<size_t>(n), false);
    std::vector<int> pos, neg;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        int len = 0, sign = 1, i = s;
        do {
            seen[static_cast<size_t>(i)] = true;
            int img = image[static_cast<size_t>(i)];
            if (img == 0 || std::abs(img) > n) throw std::invalid_argument("SignedPermutation: bad image");
            if (img < 0) sign = -sign;
            i = std::abs(img) - 1;
            ++len;
        } while (i != s);
        (sign > 0 ? pos : neg).push_back(len);
    }
    return {Partition(std::move(pos)), Partition(std::move(neg))};
}

SignedPermutation class_representative(const DoublePartition& c) {
    SignedPermutation sigma;
    sigma.image.resize(static_cast<size_t>(c.size()));
    int base = 0;
    auto lay_cycle = [&](int len, bool negative) {
        for (int i = 0; i < len - 1; ++i) sigma.image[static_cast<size_t>(base + i)] = base + i + 2;
        sigma.image[static_cast<size_t>(base + len - 1)] = (negative ? -1 : 1) * (base + 1);
        base += len;
    };
    for (int r : c.positive.parts()) lay_cycle(r, false);
    for (int r : c.negative.parts()) lay_cycle(r, true);
    return sigma;
}

Poly det_one_minus_z(const SignedPermutation& sigma) {
    int n = sigma.size();
    // A[i][j] = delta_ij - z * M[i][j]; M has the sign at (i, |image[i]|-1).
    std::vector<std::vector<Poly>> a(static_cast<size_t>(n), std::vector<Poly>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Poly entry;
            if (i == j) entry += Poly(1);
            int img = sigma.image[static_cast<size_t>(i)];
            if (std::abs(img) - 1 == j) {
                entry -= Poly::monomial(1, Rational(img < 0 ? -1 : 1));
            }
            a[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(entry);
        }
    }
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    Poly det;
    do {
        Poly prod(1);
        bool zero = false;
        for (int i = 0; i < n && !zero; ++i) {
            const Poly& e = a[static_cast<size_t>(i)][static_cast<size_t>(perm[static_cast<size_t>(i)])];
            if (e.is_zero()) {
                zero = true;
            } else {
                prod *= e;
            }
        }
        if (zero) continue;
        int inversions = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++inversions;
            }
        }
        if (inversions % 2 == 0) {
            det += prod;
        } else {
            det -= prod;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

Poly graded_char_bc_oracle(const SignedPermutation& sigma, int n) {
    if (sigma.size() != n) throw std::invalid_argument("graded_char_bc_oracle: size mismatch");
    Poly numerator(1);
    for (int i = 1; i <= n; ++i) numerator *= one_minus_z_pow(2 * i);
    return numerator.divide_exact(det_one_minus_z(sigma));
}

Poly graded_char_a_oracle(const SignedPermutation& sigma, int n) {
    if (sigma.size() != n) throw std::invalid_argument("graded_char_a_oracle: size mismatch");
    for (int img : sigma.image) {
        if (img < 0) throw std::invalid_argument("graded_char_a_oracle: permutation must be unsigned");
    }
    Poly numerator(1);
    for (int i = 1; i <= n; ++i) numerator *= one_minus_z_pow(i);
    return numerator.divide_exact(det_one_minus_z(sigma));
}

std::vector<CharacterPolynomial> q_char_polys(int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("q_char_polys: max_degree must be nonnegative");
    using Series = TruncatedSeries<CharacterPolynomial>;
    Series s = Series::constant(max_degree, CharacterPolynomial(1));
    for (int k = 1; k <= max_degree; ++k) {
        CharacterPolynomial ex = CharacterPolynomial(1) - CharacterPolynomial::var_x(k);
        CharacterPolynomial ey = CharacterPolynomial(1) - CharacterPolynomial::var_y(k);
        s *= pow_binomial(-1, k, ex, max_degree);
        s *= pow_binomial(+1, k, ey, max_degree);
    }
    std::vector<CharacterPolynomial> out;
    out.reserve(static_cast<size_t>(max_degree) + 1);
    for (int i = 0; i <= max_degree; ++i) out.push_back(s.coeff(i));
    return out;
}

StableRangeReport verify_stable_range(int n) {
    StableRangeReport rep;
    rep.n = n;
    int top = 2 * n + 2;
    auto qs = q_char_polys(top);
    GradedCharacter g = graded_char_bc(n);
    for (size_t idx = 0; idx < g.classes.size(); ++idx) {
        const DoublePartition& cls = g.classes[idx].label;
        for (int i = 0; i <= 2 * n + 1; ++i) {
            Rational expected = g.polys[idx].coeff(i);
            Rational got = qs[static_cast<size_t>(i)].evaluate(cls);
            if (expected != got) {
                std::ostringstream os;
                os << "agreement fails at n=" << n << ", i=" << i << ", class " << cls.str() << ": Q_i gives "
                   << got.str() << ", coinvariant character gives " << expected.str();
                rep.detail = os.str();
                return rep;
            }
        }
    }
    bool mismatch = false;
    for (size_t idx = 0; idx < g.classes.size() && !mismatch; ++idx) {
        const DoublePartition& cls = g.classes[idx].label;
        if (g.polys[idx].coeff(top) != qs[static_cast<size_t>(top)].evaluate(cls)) mismatch = true;
    }
    if (!mismatch) {
        rep.detail = "expected a mismatch at i = 2n+2 = " + std::to_string(top) + " but found agreement";
        return rep;
    }
    rep.ok = true;
    rep.detail = "Q_i matches chi_{R_n^i} for i <= " + std::to_string(2 * n + 1) +
                 " and differs at i = " + std::to_string(top);
    return rep;
}

} // namespace torilab
