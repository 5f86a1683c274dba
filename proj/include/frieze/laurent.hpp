#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "frieze/rational.hpp"

namespace frieze {

// Exponent vector of a Laurent monomial; entries may be negative.
using Exponents = std::vector<int>;

long total_degree(const Exponents& e);

// Graded lexicographic order with x1 > x2 > ... > xn.
bool grlex_less(const Exponents& a, const Exponents& b);

struct GrlexDescending {
    bool operator()(const Exponents& a, const Exponents& b) const { return grlex_less(b, a); }
};

/*
 * Sparse multivariate Laurent polynomial over Rational.  Terms are kept in a
 * map ordered graded-lex descending, so begin() is the leading term and
 * iteration order matches the printed and serialized form.  No stored
 * coefficient is zero; the zero polynomial has an empty map.
 */
class LaurentPolynomial {
public:
    using TermMap = std::map<Exponents, Rational, GrlexDescending>;

    explicit LaurentPolynomial(int nvars = 0) : nvars_(nvars) {}

    static LaurentPolynomial constant(int nvars, const Rational& value);
    static LaurentPolynomial variable(int nvars, int index);  // index is 1-based
    static LaurentPolynomial monomial(int nvars, const Exponents& exps, const Rational& coef);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    // The unique monomial x^e with coefficient 1, if this is one.
    bool is_monomial() const { return terms_.size() == 1; }

    void add_term(const Exponents& exps, const Rational& coef);

    const std::pair<const Exponents, Rational>& leading_term() const;

    LaurentPolynomial operator-() const;
    LaurentPolynomial operator+(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-(const LaurentPolynomial& o) const;
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;
    LaurentPolynomial operator*(const Rational& c) const;
    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    LaurentPolynomial& operator-=(const LaurentPolynomial& o);
    LaurentPolynomial& operator*=(const Rational& c);

    bool operator==(const LaurentPolynomial& o) const;
    bool operator!=(const LaurentPolynomial& o) const { return !(*this == o); }

    LaurentPolynomial pow(long e) const;  // e >= 0

    // Multiplies by the monomial x^by.
    LaurentPolynomial shifted(const Exponents& by) const;

    // Per-variable minimum exponent over all terms (zero vector for 0).
    Exponents min_exponents() const;
    // min(0, min exponent) per variable: the shift that clears denominators.
    Exponents negative_part() const;
    bool has_negative_exponents() const;

    // Maximum total degree over terms; 0 for the zero polynomial.
    long degree() const;

    // gcd of coefficient numerators over lcm of denominators, carrying the
    // sign of the leading coefficient.  Dividing by it gives the primitive
    // integer form with positive leading coefficient.  Returns 1 for 0.
    Rational signed_content() const;

    Rational evaluate(std::span<const Rational> point) const;

    LaurentPolynomial derivative(int var) const;  // var is 1-based

    std::string to_text() const;

private:
    int nvars_;
    TermMap terms_;
};

inline LaurentPolynomial operator*(const Rational& c, const LaurentPolynomial& p) { return p * c; }

// Exact Laurent division: returns q with a = q*b, or nullopt when no Laurent
// quotient exists.  Deterministic: both operands are shifted to monomial
// content zero and divided greedily under graded-lex.
std::optional<LaurentPolynomial> exact_divide(const LaurentPolynomial& a,
                                              const LaurentPolynomial& b);

}  // namespace frieze
