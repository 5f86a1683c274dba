#include "frieze/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "frieze/errors.hpp"

namespace frieze {

long total_degree(const Exponents& e) {
    long d = 0;
    for (int x : e) d += x;
    return d;
}

bool grlex_less(const Exponents& a, const Exponents& b) {
    long da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

LaurentPolynomial LaurentPolynomial::constant(int nvars, const Rational& value) {
    LaurentPolynomial p(nvars);
    if (value != 0) p.terms_.emplace(Exponents(nvars, 0), value);
    return p;
}

LaurentPolynomial LaurentPolynomial::variable(int nvars, int index) {
    if (index < 1 || index > nvars)
        throw InvalidInput("variable index " + std::to_string(index) + " out of range 1.." +
                           std::to_string(nvars));
    Exponents e(nvars, 0);
    e[index - 1] = 1;
    return monomial(nvars, e, Rational(1));
}

LaurentPolynomial LaurentPolynomial::monomial(int nvars, const Exponents& exps,
                                              const Rational& coef) {
    if (static_cast<int>(exps.size()) != nvars)
        throw InvalidInput("exponent vector length does not match variable count");
    LaurentPolynomial p(nvars);
    if (coef != 0) p.terms_.emplace(exps, coef);
    return p;
}

bool LaurentPolynomial::is_one() const {
    if (terms_.size() != 1) return false;
    const auto& [e, c] = *terms_.begin();
    return c == 1 && total_degree(e) == 0 &&
           std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

bool LaurentPolynomial::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const Exponents& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

void LaurentPolynomial::add_term(const Exponents& exps, const Rational& coef) {
    if (static_cast<int>(exps.size()) != nvars_)
        throw InvalidInput("exponent vector length does not match variable count");
    if (coef == 0) return;
    auto [it, inserted] = terms_.emplace(exps, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == 0) terms_.erase(it);
    }
}

const std::pair<const Exponents, Rational>& LaurentPolynomial::leading_term() const {
    if (terms_.empty()) throw Error("leading term of the zero polynomial");
    return *terms_.begin();
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
    LaurentPolynomial r = *this;
    r += o;
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
    LaurentPolynomial r = *this;
    r -= o;
    return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    LaurentPolynomial r(nvars_);
    Exponents e(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const Rational& c) const {
    LaurentPolynomial r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& c) {
    *this = *this * c;
    return *this;
}

bool LaurentPolynomial::operator==(const LaurentPolynomial& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
}

LaurentPolynomial LaurentPolynomial::pow(long e) const {
    if (e < 0) throw InvalidInput("negative power of a Laurent polynomial");
    LaurentPolynomial result = constant(nvars_, Rational(1));
    LaurentPolynomial base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = (e >>= 1) ? base * base : base;
    }
    return result;
}

LaurentPolynomial LaurentPolynomial::shifted(const Exponents& by) const {
    LaurentPolynomial r(nvars_);
    Exponents e(nvars_);
    for (const auto& [ea, c] : terms_) {
        for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + by[i];
        r.terms_.emplace(e, c);
    }
    return r;
}

Exponents LaurentPolynomial::min_exponents() const {
    Exponents m(nvars_, 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        for (int i = 0; i < nvars_; ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
        first = false;
    }
    return m;
}

Exponents LaurentPolynomial::negative_part() const {
    Exponents m = min_exponents();
    for (int& x : m) x = std::min(x, 0);
    return m;
}

bool LaurentPolynomial::has_negative_exponents() const {
    for (const auto& [e, c] : terms_)
        for (int x : e)
            if (x < 0) return true;
    return false;
}

long LaurentPolynomial::degree() const {
    if (terms_.empty()) return 0;
    return total_degree(terms_.begin()->first);
}

Rational LaurentPolynomial::signed_content() const {
    if (terms_.empty()) return Rational(1);
    mpz_class g = 0, l = 1;
    for (const auto& [e, c] : terms_) {
        g = gcd(g, mpz_class(abs(c.get_num())));
        l = lcm(l, c.get_den());
    }
    Rational content(g, l);
    content.canonicalize();
    if (terms_.begin()->second < 0) content = -content;
    return content;
}

Rational LaurentPolynomial::evaluate(std::span<const Rational> point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw InvalidInput("point dimension does not match variable count");
    Rational sum(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (point[i] == 0) {
                if (e[i] < 0) throw PoleAtPoint("zero coordinate under a negative exponent");
                term = 0;
                break;
            }
            term *= rational_pow(point[i], e[i]);
        }
        sum += term;
    }
    return sum;
}

LaurentPolynomial LaurentPolynomial::derivative(int var) const {
    if (var < 1 || var > nvars_) throw InvalidInput("derivative variable out of range");
    LaurentPolynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var - 1] == 0) continue;
        Exponents d = e;
        d[var - 1] -= 1;
        r.add_term(d, c * Rational(e[var - 1]));
    }
    return r;
}

std::string LaurentPolynomial::to_text() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        std::string mono;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << "*";
            out << mono;
        }
        first = false;
    }
    return out.str();
}

namespace {

// Greedy division of ordinary polynomials under graded-lex.  Succeeds exactly
// when b divides a, provided both have monomial content zero.
std::optional<LaurentPolynomial> divide_ordinary(const LaurentPolynomial& a,
                                                 const LaurentPolynomial& b) {
    const int n = a.nvars();
    LaurentPolynomial quotient(n);
    LaurentPolynomial rem = a;
    const auto& [lead_b, coef_b] = b.leading_term();
    while (!rem.is_zero()) {
        const auto& [lead_r, coef_r] = rem.leading_term();
        Exponents q(n);
        for (int i = 0; i < n; ++i) {
            q[i] = lead_r[i] - lead_b[i];
            if (q[i] < 0) return std::nullopt;
        }
        LaurentPolynomial t = LaurentPolynomial::monomial(n, q, coef_r / coef_b);
        quotient += t;
        rem -= t * b;
    }
    return quotient;
}

}  // namespace

std::optional<LaurentPolynomial> exact_divide(const LaurentPolynomial& a,
                                              const LaurentPolynomial& b) {
    if (b.is_zero()) throw DivisionByZero("exact division by the zero polynomial");
    if (a.nvars() != b.nvars()) throw InvalidInput("variable counts differ in exact_divide");
    if (a.is_zero()) return LaurentPolynomial(a.nvars());

    Exponents sa = a.min_exponents();
    Exponents sb = b.min_exponents();
    Exponents neg_sa = sa, neg_sb = sb, delta(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) {
        neg_sa[i] = -sa[i];
        neg_sb[i] = -sb[i];
        delta[i] = sa[i] - sb[i];
    }
    auto q = divide_ordinary(a.shifted(neg_sa), b.shifted(neg_sb));
    if (!q) return std::nullopt;
    return q->shifted(delta);
}

}  // namespace frieze
