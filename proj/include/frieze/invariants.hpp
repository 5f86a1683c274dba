#pragma once

#include <optional>
#include <vector>

#include "frieze/cluster.hpp"
#include "frieze/orbit.hpp"
#include "frieze/quiver.hpp"

namespace frieze {

struct InvariantBudgets {
    std::size_t term_budget = kDefaultTermBudget;
    std::size_t bit_budget = kDefaultBitBudget;
};

// Smallest k <= k_max with h(mu_*^k(x)) = h(x) as rational functions, decided
// by symbolic cross multiplication (a returned period is a proof).
std::optional<int> check_invariant(const Quiver& q, const RationalFunction& h, int k_max,
                                   std::size_t term_budget = kDefaultTermBudget);

// c_t = h(P_t) for t = 0..k-1, with c_{t+k} = c_t re-checked at t = k..2k-1.
std::vector<Rational> constants(const Quiver& q, const RationalFunction& h, const Point& start,
                                int period, std::size_t bit_budget = kDefaultBitBudget);

/*
 * Everything an invariant Laurent polynomial generates: its iterates
 * f_t/g_t = h(mu_*^t(x)), the orbit constants c_t, and the k x k grid of
 * component equations  equations[j][t] = Num(h(mu_*^t(x)) - c_{t+j})
 * (indices mod k).  Every orbit point P_{j+ks} satisfies
 * equations[j][t] = 0 for all t.
 */
struct InvariantCertificate {
    RationalFunction h;
    int period;
    std::vector<RationalFunction> iterates;
    std::vector<Rational> orbit_constants;
    std::vector<std::vector<LaurentPolynomial>> equations;
};

InvariantCertificate component_equations(const Quiver& q, const RationalFunction& h,
                                         const Point& start, int k_max = 8,
                                         const InvariantBudgets& budgets = {});

/*
 * Invariant from a sink/source symmetry pair:
 *   h = (1 + prod_k x_k^{n_k}) / (x_sink * x_source)
 * with the two hypersurface equations written exactly as
 *   f0 = 1 - 2 x_sink x_source + prod_k x_k^{n_k}
 *   f1 = 2 -   x_sink x_source + 2 prod_k x_k^{n_k}.
 * The empty product (no k with n_k > 0) makes h constant over a monomial and
 * is rejected as degenerate.
 */
struct SymmetryInvariant {
    SymmetryPair pair;
    RationalFunction h;
    LaurentPolynomial f0;
    LaurentPolynomial f1;
    int period;  // 2, or 1 in degenerate borderline cases
};

SymmetryInvariant symmetry_invariant(const Quiver& q,
                                     std::size_t term_budget = kDefaultTermBudget);

// x_{sigma(k)} / x_k for the smallest k moved by a quiver automorphism; the
// Coxeter mutation inverts it, so its period divides 2.
RationalFunction automorphism_invariant(const Quiver& q, const std::vector<int>& sigma);

}  // namespace frieze
