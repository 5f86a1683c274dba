#pragma once

#include <optional>
#include <vector>

#include "frieze/laurent.hpp"
#include "frieze/orbit.hpp"
#include "frieze/quiver.hpp"

namespace frieze {

/*
 * All monomials of total degree <= degree_bound in nvars variables, ordered
 * by ascending degree and, within a degree, by descending lex (so n = 2,
 * d = 3 lists 1, x, y, x^2, xy, y^2, x^3, x^2 y, x y^2, y^3).
 */
struct MonomialBasis {
    int nvars;
    int degree_bound;
    std::vector<Exponents> monomials;
};

MonomialBasis monomial_basis(int nvars, int degree);

// Row r, column c holds basis.monomials[c] evaluated at points[r].
struct EvaluationMatrix {
    MonomialBasis basis;
    std::vector<std::vector<Rational>> rows;
};

EvaluationMatrix evaluation_matrix(const std::vector<Point>& points, const MonomialBasis& basis);

/*
 * Degree-bounded vanishing space of a point set.
 *   basis      - full reduced kernel of the evaluation matrix: every
 *                polynomial of degree <= degree_bound vanishing on the
 *                points, in reduced echelon form under graded-lex.
 *   generators - minimal generating subset: kernel rows (smallest leading
 *                monomial first) that are not in the span of bounded-degree
 *                monomial multiples of earlier generators.  Their multiples
 *                span the whole kernel.
 */
struct VanishingSpace {
    int degree_bound = 0;
    std::vector<LaurentPolynomial> basis;
    std::vector<LaurentPolynomial> generators;
    long points_used = 0;
    bool stabilized = false;
};

VanishingSpace nullspace(const EvaluationMatrix& m);

struct VarietyOptions {
    std::size_t bit_budget = kDefaultBitBudget;
    std::size_t term_budget = kDefaultTermBudget;
};

// Feeds orbit points P_offset, P_{offset+stride}, ... into the evaluation
// matrix until the kernel provably stops moving: rank hit the full width
// (certified cheaply by modular rank when coordinates are large), the orbit
// turned out periodic (all class points used, exact), or the kernel stayed
// unchanged for 3 extra points after width + 3 points were tried.
VanishingSpace stabilized_vanishing_space(const Quiver& q, const Point& start, int degree,
                                          long offset, long stride,
                                          const VarietyOptions& options = {});

// Numerator of F composed with the Coxeter-mutated cluster: for any point p
// with nonzero coordinates, the Coxeter image of p lies in Z(F) exactly when
// this polynomial vanishes at p.
LaurentPolynomial pullback_numerator(const LaurentPolynomial& f, const Quiver& q,
                                     std::size_t term_budget = kDefaultTermBudget);

struct DimensionEstimate {
    int value;          // nvars - jacobian_rank; an upper bound for the local
                        // dimension at the (possibly singular) point
    int jacobian_rank;
};

// Exact rank of the Jacobian of the space's generators at a point of the
// variety.  Multiples of a vanishing polynomial contribute proportional
// gradients on the variety, so generators suffice.
DimensionEstimate dimension_estimate(const VanishingSpace& space, const Point& point);

struct ComponentClass {
    int residue;
    VanishingSpace space;
    DimensionEstimate dim;
    Point base_point;                 // P_residue
    std::vector<Point> sample_points; // points behind `space`
};

struct ComponentDecomposition {
    long m;
    std::vector<ComponentClass> classes;
    bool verified_cycle;
};

// Residue-class decomposition.  Periodic orbits short-circuit to m = period
// with singleton classes.  Otherwise, among all m <= m_max whose residue
// classes each have a strictly larger vanishing space than the whole orbit,
// the m with the largest minimal class-kernel dimension wins (smallest such
// m on ties); m = 1 when no candidate improves.  verified_cycle is true when
// every class-(r+1) basis polynomial pulls back to zero on class r's samples.
ComponentDecomposition detect_components(const Quiver& q, const Point& start, int degree,
                                         long m_max, const VarietyOptions& options = {});

// Span of all monomial multiples g * x^a with deg <= degree of the given
// polynomials, as canonical reduced rows over the monomial basis.  Two
// generating sets define the same degree-slice exactly when these agree.
std::vector<LaurentPolynomial> ideal_slice_basis(const std::vector<LaurentPolynomial>& gens,
                                                 int nvars, int degree);

// Membership of f in the row span of a canonical basis (e.g. a kernel or an
// ideal slice).
bool in_poly_span(const LaurentPolynomial& f, const std::vector<LaurentPolynomial>& basis,
                  int nvars, int degree);

}  // namespace frieze
