#pragma once

#include <span>
#include <string>

#include "frieze/laurent.hpp"

namespace frieze {

/*
 * Quotient of Laurent polynomials in canonical form:
 *   - den is never zero; the zero function is 0/1;
 *   - den has monomial content zero (any monomial factor of the denominator
 *     is folded into the numerator, so a Laurent polynomial has den = 1);
 *   - den is integer-primitive with positive leading coefficient.
 * Only monomial and scalar content are extracted; equality of values is
 * decided by cross multiplication, not by reducing to lowest terms.
 */
class RationalFunction {
public:
    explicit RationalFunction(int nvars = 0)
        : num_(nvars), den_(LaurentPolynomial::constant(nvars, Rational(1))) {}
    explicit RationalFunction(LaurentPolynomial num)
        : num_(std::move(num)), den_(LaurentPolynomial::constant(num_.nvars(), Rational(1))) {}
    RationalFunction(LaurentPolynomial num, LaurentPolynomial den);

    static RationalFunction constant(int nvars, const Rational& value) {
        return RationalFunction(LaurentPolynomial::constant(nvars, value));
    }
    static RationalFunction variable(int nvars, int index) {
        return RationalFunction(LaurentPolynomial::variable(nvars, index));
    }

    int nvars() const { return num_.nvars(); }
    const LaurentPolynomial& num() const { return num_; }
    const LaurentPolynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    // True when the value is a Laurent polynomial, i.e. den = 1.
    bool is_laurent() const { return den_.is_one(); }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;

    RationalFunction reciprocal() const;
    RationalFunction pow(long e) const;

    // Structural equality of the canonical representation.
    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    Rational evaluate(std::span<const Rational> point) const;

    std::string to_text() const;

private:
    void canonicalize();

    LaurentPolynomial num_;
    LaurentPolynomial den_;
};

// Equality as rational functions: a.num*b.den = b.num*a.den as term maps.
bool ratfunc_eq(const RationalFunction& a, const RationalFunction& b);

// Num(f): the numerator of f as an ordinary polynomial.  Clears negative
// exponents of f.num with a monomial, divides out integer content and fixes
// the sign so the graded-lex leading coefficient is positive.
LaurentPolynomial numerator_normal_form(const RationalFunction& f);

// Substitutes values[i] for x_{i+1}.  Negative exponents are cleared first so
// values enter only through non-negative powers and one monomial denominator.
RationalFunction substitute(const LaurentPolynomial& f,
                            std::span<const RationalFunction> values,
                            std::size_t term_budget = kDefaultTermBudget);
RationalFunction substitute(const RationalFunction& f,
                            std::span<const RationalFunction> values,
                            std::size_t term_budget = kDefaultTermBudget);

}  // namespace frieze
