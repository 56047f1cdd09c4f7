#include "torilab/charpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace torilab {

Monomial::Monomial(std::vector<VarPow> entries) : v_(std::move(entries)) {
    std::sort(v_.begin(), v_.end(), [](const VarPow& a, const VarPow& b) { return a.index < b.index; });
    for (size_t i = 0; i < v_.size(); ++i) {
        if (v_[i].index < 1 || v_[i].x_exp < 0 || v_[i].y_exp < 0 || v_[i].x_exp + v_[i].y_exp == 0) {
            throw std::invalid_argument("Monomial: bad exponent entry");
        }
        if (i + 1 < v_.size() && v_[i].index == v_[i + 1].index) {
            throw std::invalid_argument("Monomial: duplicate index");
        }
    }
}

int Monomial::x_exp(int r) const {
    for (const auto& e : v_) {
        if (e.index == r) return e.x_exp;
    }
    return 0;
}

int Monomial::y_exp(int r) const {
    for (const auto& e : v_) {
        if (e.index == r) return e.y_exp;
    }
    return 0;
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& e : v_) d += e.index * (e.x_exp + e.y_exp);
    return d;
}

Monomial Monomial::times(const Monomial& o) const {
    std::vector<VarPow> out;
    size_t i = 0, j = 0;
    while (i < v_.size() || j < o.v_.size()) {
        if (j == o.v_.size() || (i < v_.size() && v_[i].index < o.v_[j].index)) {
            out.push_back(v_[i++]);
        } else if (i == v_.size() || o.v_[j].index < v_[i].index) {
            out.push_back(o.v_[j++]);
        } else {
            out.push_back({v_[i].index, v_[i].x_exp + o.v_[j].x_exp, v_[i].y_exp + o.v_[j].y_exp});
            ++i;
            ++j;
        }
    }
    Monomial m;
    m.v_ = std::move(out);
    return m;
}

bool operator<(const Monomial& a, const Monomial& b) {
    size_t i = 0, j = 0;
    while (i < a.v_.size() || j < b.v_.size()) {
        int ra = i < a.v_.size() ? a.v_[i].index : INT32_MAX;
        int rb = j < b.v_.size() ? b.v_[j].index : INT32_MAX;
        int r = std::min(ra, rb);
        int ax = 0, ay = 0, bx = 0, by = 0;
        if (ra == r) {
            ax = a.v_[i].x_exp;
            ay = a.v_[i].y_exp;
            ++i;
        }
        if (rb == r) {
            bx = b.v_[j].x_exp;
            by = b.v_[j].y_exp;
            ++j;
        }
        if (ax != bx) return ax < bx;
        if (ay != by) return ay < by;
    }
    return false;
}

CharacterPolynomial::CharacterPolynomial(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Monomial(), c);
}

CharacterPolynomial CharacterPolynomial::term(const Monomial& m, const Rational& c) {
    CharacterPolynomial p;
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
}

bool CharacterPolynomial::is_type_a() const {
    for (const auto& [m, c] : terms_) {
        for (const auto& e : m.entries()) {
            if (e.y_exp > 0) return false;
        }
    }
    return true;
}

Rational CharacterPolynomial::constant_term() const {
    auto it = terms_.find(Monomial());
    return it == terms_.end() ? Rational(0) : it->second;
}

int CharacterPolynomial::degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

CharacterPolynomial CharacterPolynomial::operator-() const {
    CharacterPolynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

CharacterPolynomial& CharacterPolynomial::operator+=(const CharacterPolynomial& o) {
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

CharacterPolynomial& CharacterPolynomial::operator-=(const CharacterPolynomial& o) {
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, -c);
        } else {
            it->second -= c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

CharacterPolynomial operator*(const CharacterPolynomial& a, const CharacterPolynomial& b) {
    CharacterPolynomial r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = ma.times(mb);
            Rational c = ca * cb;
            auto it = r.terms_.find(m);
            if (it == r.terms_.end()) {
                r.terms_.emplace(std::move(m), c);
            } else {
                it->second += c;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

CharacterPolynomial CharacterPolynomial::scaled(const Rational& s) const {
    if (s.is_zero()) return CharacterPolynomial();
    CharacterPolynomial r = *this;
    for (auto& [m, c] : r.terms_) c *= s;
    return r;
}

Rational CharacterPolynomial::evaluate(const DoublePartition& cls) const {
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        bool zero = false;
        for (const auto& e : m.entries()) {
            long x = cls.positive.multiplicity(e.index);
            long y = cls.negative.multiplicity(e.index);
            if ((e.x_exp > 0 && x == 0) || (e.y_exp > 0 && y == 0)) {
                zero = true;
                break;
            }
            for (int k = 0; k < e.x_exp; ++k) v *= Rational(x);
            for (int k = 0; k < e.y_exp; ++k) v *= Rational(y);
        }
        if (!zero) total += v;
    }
    return total;
}

const Monomial& CharacterPolynomial::leading_monomial() const {
    if (terms_.empty()) throw std::domain_error("CharacterPolynomial: zero polynomial has no leading monomial");
    return terms_.rbegin()->first;
}

std::string CharacterPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rational c = it->second;
        if (first) {
            if (c.sign() < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        first = false;
        const Monomial& m = it->first;
        if (m.is_one()) {
            out << c.str();
            continue;
        }
        bool printed = false;
        if (!c.is_one()) {
            out << c.str();
            printed = true;
        }
        for (const auto& e : m.entries()) {
            if (e.x_exp > 0) {
                if (printed) out << "*";
                out << "X" << e.index;
                if (e.x_exp > 1) out << "^" << e.x_exp;
                printed = true;
            }
            if (e.y_exp > 0) {
                if (printed) out << "*";
                out << "Y" << e.index;
                if (e.y_exp > 1) out << "^" << e.y_exp;
                printed = true;
            }
        }
    }
    return out.str();
}

namespace {

/// binom(V, k) for a single variable V = X_r or Y_r.
CharacterPolynomial binom_single(bool is_x, int r, int k) {
    CharacterPolynomial v = is_x ? CharacterPolynomial::var_x(r) : CharacterPolynomial::var_y(r);
    CharacterPolynomial p(1);
    for (int j = 0; j < k; ++j) {
        p *= v - CharacterPolynomial(j);
    }
    return p.scaled(Rational(Integer(1), factorial(k)));
}

} // namespace

CharacterPolynomial binom_basis_element(const Partition& mu, const Partition& lambda) {
    CharacterPolynomial p(1);
    int prev = 0;
    for (int r : mu.parts()) {
        if (r != prev) {
            p *= binom_single(true, r, mu.multiplicity(r));
            prev = r;
        }
    }
    prev = 0;
    for (int r : lambda.parts()) {
        if (r != prev) {
            p *= binom_single(false, r, lambda.multiplicity(r));
            prev = r;
        }
    }
    return p;
}

std::map<DoublePartition, Rational> to_binomial_basis(const CharacterPolynomial& P) {
    std::map<DoublePartition, Rational> out;
    CharacterPolynomial rest = P;
    while (!rest.is_zero()) {
        const Monomial& m = rest.leading_monomial();
        Rational c = rest.terms().rbegin()->second;
        // The basis element with n_r(mu) = x_exp(r), n_r(lambda) = y_exp(r)
        // has leading monomial m with coefficient 1/prod(x_exp! y_exp!).
        std::vector<int> mu_parts, lam_parts;
        Rational fact(1);
        for (const auto& e : m.entries()) {
            for (int k = 0; k < e.x_exp; ++k) mu_parts.push_back(e.index);
            for (int k = 0; k < e.y_exp; ++k) lam_parts.push_back(e.index);
            fact *= Rational(factorial(e.x_exp) * factorial(e.y_exp));
        }
        DoublePartition label{Partition(std::move(mu_parts)), Partition(std::move(lam_parts))};
        Rational coeff = c * fact;
        rest -= binom_basis_element(label.positive, label.negative).scaled(coeff);
        out[label] += coeff;
        if (out[label].is_zero()) out.erase(label);
    }
    return out;
}

CharacterPolynomial charpoly_cn() {
    return CharacterPolynomial::var_x(1) - CharacterPolynomial::var_y(1);
}

CharacterPolynomial charpoly_sym2cn() {
    auto X1 = CharacterPolynomial::var_x(1), Y1 = CharacterPolynomial::var_y(1);
    auto X2 = CharacterPolynomial::var_x(2), Y2 = CharacterPolynomial::var_y(2);
    return X1 + binom_single(true, 1, 2) + Y1 + binom_single(false, 1, 2) + X2 - Y2 - X1 * Y1;
}

CharacterPolynomial charpoly_wedge2cn() {
    auto X1 = CharacterPolynomial::var_x(1), Y1 = CharacterPolynomial::var_y(1);
    auto X2 = CharacterPolynomial::var_x(2), Y2 = CharacterPolynomial::var_y(2);
    return binom_single(true, 1, 2) + binom_single(false, 1, 2) - X2 + Y2 - X1 * Y1;
}

CharacterPolynomial charpoly_wedge3cn() {
    auto X1 = CharacterPolynomial::var_x(1), Y1 = CharacterPolynomial::var_y(1);
    auto X2 = CharacterPolynomial::var_x(2), Y2 = CharacterPolynomial::var_y(2);
    auto X3 = CharacterPolynomial::var_x(3), Y3 = CharacterPolynomial::var_y(3);
    return binom_single(true, 1, 3) - binom_single(false, 1, 3) + X1 * binom_single(false, 1, 2) -
           Y1 * binom_single(true, 1, 2) - X1 * X2 + X2 * Y1 + Y2 * X1 - Y1 * Y2 + X3 - Y3;
}

CharacterPolynomial ring_inv(const CharacterPolynomial& x) {
    Rational c = x.constant_term();
    if (x != CharacterPolynomial(c) || c.is_zero()) {
        throw std::domain_error("CharacterPolynomial: only nonzero constants are invertible");
    }
    return CharacterPolynomial(Rational(1) / c);
}

// ---------------------------------------------------------------------------
// Text syntax parser
// ---------------------------------------------------------------------------

namespace {

class CharPolyParser {
public:
    explicit CharPolyParser(const std::string& text) : s_(text) {}

    CharacterPolynomial parse() {
        CharacterPolynomial p = parse_expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("charpoly parse error at byte " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    CharacterPolynomial parse_expr() {
        CharacterPolynomial p;
        bool negate = false;
        if (eat('-')) {
            negate = true;
        } else {
            eat('+');
        }
        p = parse_term();
        if (negate) p = -p;
        while (true) {
            if (eat('+')) {
                p += parse_term();
            } else if (eat('-')) {
                p -= parse_term();
            } else {
                break;
            }
        }
        return p;
    }

    CharacterPolynomial parse_term() {
        CharacterPolynomial p = parse_factor();
        while (eat('*')) p *= parse_factor();
        return p;
    }

    CharacterPolynomial parse_factor() {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return CharacterPolynomial(parse_rational());
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_symbol();
        fail("expected a coefficient, variable, preset, or binom:...");
    }

    Rational parse_rational() {
        Integer num = parse_integer();
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            skip_ws();
            Integer den = parse_integer();
            if (den == 0) fail("zero denominator");
            return Rational(num, den);
        }
        return Rational(num);
    }

    Integer parse_integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected an integer");
        return Integer(s_.substr(start, pos_ - start));
    }

    int parse_small_int(const char* what) {
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail(std::string("expected ") + what);
        return std::stoi(s_.substr(start, pos_ - start));
    }

    CharacterPolynomial parse_symbol() {
        skip_ws();
        size_t start = pos_;
        // X<r>[^e] / Y<r>[^e]
        if ((s_[pos_] == 'X' || s_[pos_] == 'Y') && pos_ + 1 < s_.size() &&
            std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
            bool is_x = s_[pos_] == 'X';
            ++pos_;
            int r = parse_small_int("a variable index");
            if (r < 1) fail("variable index must be >= 1");
            int e = 1;
            if (pos_ < s_.size() && s_[pos_] == '^') {
                ++pos_;
                e = parse_small_int("an exponent");
            }
            std::vector<Monomial::VarPow> entry = {{r, is_x ? e : 0, is_x ? 0 : e}};
            return CharacterPolynomial::term(Monomial(std::move(entry)), Rational(1));
        }
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
            ++pos_;
        }
        std::string name = s_.substr(start, pos_ - start);
        if (name == "binom") {
            if (pos_ >= s_.size() || s_[pos_] != ':') fail("expected ':' after binom");
            ++pos_;
            size_t end = pos_;
            while (end < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[end])) ||
                                       s_[end] == ',' || s_[end] == '|')) {
                ++end;
            }
            std::string label = s_.substr(pos_, end - pos_);
            DoublePartition dp;
            try {
                dp = DoublePartition::parse(label);
            } catch (const std::invalid_argument& e) {
                fail(e.what());
            }
            pos_ = end;
            return binom_basis_element(dp.positive, dp.negative);
        }
        if (name == "Cn") return charpoly_cn();
        if (name == "Sym2Cn") return charpoly_sym2cn();
        if (name == "Wedge2Cn") return charpoly_wedge2cn();
        if (name == "Wedge3Cn") return charpoly_wedge3cn();
        pos_ = start;
        fail("unknown name '" + name + "'");
    }
};

} // namespace

CharacterPolynomial parse_charpoly(const std::string& text) {
    return CharPolyParser(text).parse();
}

} // namespace torilab
