#include "frieze/rational_function.hpp"

#include <map>

#include "frieze/errors.hpp"

namespace frieze {

RationalFunction::RationalFunction(LaurentPolynomial num, LaurentPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (num_.nvars() != den_.nvars())
        throw InvalidInput("numerator and denominator have different variable counts");
    canonicalize();
}

void RationalFunction::canonicalize() {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    const int n = num_.nvars();
    if (num_.is_zero()) {
        den_ = LaurentPolynomial::constant(n, Rational(1));
        return;
    }
    Exponents shift = den_.min_exponents();
    bool nontrivial = false;
    for (int& x : shift) {
        if (x != 0) nontrivial = true;
        x = -x;
    }
    if (nontrivial) {
        den_ = den_.shifted(shift);
        num_ = num_.shifted(shift);
    }
    Rational content = den_.signed_content();
    if (content != 1) {
        Rational inv = Rational(1) / content;
        den_ *= inv;
        num_ *= inv;
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw DivisionByZero("division by the zero function");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::reciprocal() const {
    if (is_zero()) throw DivisionByZero("reciprocal of the zero function");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(long e) const {
    if (e < 0) return reciprocal().pow(-e);
    RationalFunction result = constant(nvars(), Rational(1));
    RationalFunction base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = (e >>= 1) ? base * base : base;
    }
    return result;
}

Rational RationalFunction::evaluate(std::span<const Rational> point) const {
    Rational d = den_.evaluate(point);
    if (d == 0) throw PoleAtPoint("denominator vanishes at the point");
    return num_.evaluate(point) / d;
}

std::string RationalFunction::to_text() const {
    if (is_laurent()) return num_.to_text();
    return "(" + num_.to_text() + ")/(" + den_.to_text() + ")";
}

bool ratfunc_eq(const RationalFunction& a, const RationalFunction& b) {
    if (a.nvars() != b.nvars()) throw InvalidInput("variable counts differ in ratfunc_eq");
    return a.num() * b.den() == b.num() * a.den();
}

LaurentPolynomial numerator_normal_form(const RationalFunction& f) {
    if (f.is_zero()) return LaurentPolynomial(f.nvars());
    Exponents neg = f.num().negative_part();
    for (int& x : neg) x = -x;
    LaurentPolynomial p = f.num().shifted(neg);
    Rational content = p.signed_content();
    if (content != 1) p *= Rational(1) / content;
    return p;
}

namespace {

void check_terms(std::size_t a, std::size_t b, std::size_t budget) {
    // The budget bounds stored results; 64x slack caps the transient work.
    if (a != 0 && b != 0 && a > (64 * budget) / b)
        throw TermBudgetExceeded("term budget exceeded while substituting (" +
                                 std::to_string(a) + " x " + std::to_string(b) + " terms)");
}

RationalFunction checked_mul(const RationalFunction& a, const RationalFunction& b,
                             std::size_t budget) {
    check_terms(a.num().term_count(), b.num().term_count(), budget);
    check_terms(a.den().term_count(), b.den().term_count(), budget);
    RationalFunction r = a * b;
    if (r.num().term_count() > budget || r.den().term_count() > budget)
        throw TermBudgetExceeded("term budget exceeded while substituting");
    return r;
}

struct PowerCache {
    const RationalFunction* base;
    std::map<long, RationalFunction> powers;

    const RationalFunction& get(long e, std::size_t budget) {
        auto it = powers.find(e);
        if (it != powers.end()) return it->second;
        RationalFunction value = RationalFunction::constant(base->nvars(), Rational(1));
        if (e == 1) {
            value = *base;
        } else {
            const RationalFunction& half = get(e / 2, budget);
            value = checked_mul(half, half, budget);
            if (e & 1) value = checked_mul(value, *base, budget);
        }
        return powers.emplace(e, std::move(value)).first->second;
    }
};

}  // namespace

RationalFunction substitute(const LaurentPolynomial& f,
                            std::span<const RationalFunction> values,
                            std::size_t term_budget) {
    const int n = f.nvars();
    if (static_cast<int>(values.size()) != n)
        throw InvalidInput("substitution value count does not match variable count");
    if (n == 0 || f.is_zero()) return RationalFunction(f);
    int target_vars = values[0].nvars();

    Exponents neg = f.negative_part();
    Exponents clear = neg;
    for (int& x : clear) x = -x;
    LaurentPolynomial shifted = f.shifted(clear);  // non-negative exponents now

    std::vector<PowerCache> caches(n);
    for (int i = 0; i < n; ++i) caches[i].base = &values[i];

    RationalFunction sum(target_vars);
    for (const auto& [e, c] : shifted.terms()) {
        RationalFunction prod = RationalFunction::constant(target_vars, c);
        for (int i = 0; i < n; ++i)
            if (e[i] != 0) prod = checked_mul(prod, caches[i].get(e[i], term_budget), term_budget);
        sum = sum + prod;
        if (sum.num().term_count() > term_budget || sum.den().term_count() > term_budget)
            throw TermBudgetExceeded("term budget exceeded while substituting");
    }
    // Divide back by the clearing monomial evaluated at the values.
    RationalFunction divisor = RationalFunction::constant(target_vars, Rational(1));
    for (int i = 0; i < n; ++i)
        if (neg[i] != 0) divisor = checked_mul(divisor, caches[i].get(-neg[i], term_budget),
                                               term_budget);
    RationalFunction result = sum / divisor;
    // Canonicalization extracts no polynomial factors, so a composition that
    // is actually Laurent (h' of an invariant, a pullback, ...) would keep a
    // removable denominator.  One exact-division attempt recovers it.
    if (!result.is_laurent()) {
        if (auto quotient = exact_divide(result.num(), result.den()))
            return RationalFunction(std::move(*quotient));
    }
    return result;
}

RationalFunction substitute(const RationalFunction& f,
                            std::span<const RationalFunction> values,
                            std::size_t term_budget) {
    RationalFunction num = substitute(f.num(), values, term_budget);
    RationalFunction den = substitute(f.den(), values, term_budget);
    if (den.is_zero()) throw DivisionByZero("substituted denominator is identically zero");
    return num / den;
}

}  // namespace frieze
