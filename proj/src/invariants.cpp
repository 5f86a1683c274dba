#include "frieze/invariants.hpp"

#include <algorithm>

#include "frieze/rational_function.hpp"

namespace frieze {

std::optional<int> check_invariant(const Quiver& q, const RationalFunction& h, int k_max,
                                   std::size_t term_budget) {
    if (h.nvars() != q.n())
        throw InvalidInput("function and quiver have different variable counts");
    ClusterState state = initial_state(q);
    for (int k = 1; k <= k_max; ++k) {
        state = coxeter_mutate_cluster(state, term_budget);
        if (ratfunc_eq(compose(h, state, term_budget), h)) return k;
    }
    return std::nullopt;
}

std::vector<Rational> constants(const Quiver& q, const RationalFunction& h, const Point& start,
                                int period, std::size_t bit_budget) {
    if (period < 1) throw InvalidInput("period must be positive");
    OrbitRecord record = iterate(q, start, 2L * period - 1, bit_budget);
    if (record.failure)
        throw NonGenericSpecialization("start is not generic to horizon 2k-1",
                                       record.failure->step, record.failure->vertex);
    std::vector<Rational> values;
    for (int t = 0; t < period; ++t) values.push_back(h.evaluate(record.points[t]));
    for (int t = period; t <= 2 * period - 1; ++t) {
        if (h.evaluate(record.points[t]) != values[t - period])
            throw NotInvariant("orbit constants are not periodic with the claimed period");
    }
    return values;
}

InvariantCertificate component_equations(const Quiver& q, const RationalFunction& h,
                                         const Point& start, int k_max,
                                         const InvariantBudgets& budgets) {
    auto period = check_invariant(q, h, k_max, budgets.term_budget);
    if (!period)
        throw NotInvariant("function is not invariant under any Coxeter power up to " +
                           std::to_string(k_max));
    const int k = *period;

    InvariantCertificate cert;
    cert.h = h;
    cert.period = k;
    cert.iterates.push_back(h);
    ClusterState state = initial_state(q);
    for (int t = 1; t < k; ++t) {
        state = coxeter_mutate_cluster(state, budgets.term_budget);
        cert.iterates.push_back(compose(h, state, budgets.term_budget));
    }
    cert.orbit_constants = constants(q, h, start, k, budgets.bit_budget);

    cert.equations.assign(k, std::vector<LaurentPolynomial>(k, LaurentPolynomial(q.n())));
    for (int j = 0; j < k; ++j) {
        for (int t = 0; t < k; ++t) {
            RationalFunction diff =
                cert.iterates[t] -
                RationalFunction::constant(q.n(), cert.orbit_constants[(t + j) % k]);
            if (diff.is_zero())
                throw DegenerateInvariant("h is constant along the orbit: equation (" +
                                          std::to_string(j) + "," + std::to_string(t) +
                                          ") vanishes identically");
            cert.equations[j][t] = numerator_normal_form(diff);
        }
    }
    return cert;
}

SymmetryInvariant symmetry_invariant(const Quiver& q, std::size_t term_budget) {
    auto pair = find_symmetry_pair(q);
    if (!pair) throw NoSymmetryPair("no sink/source symmetry pair in this quiver");
    if (pair->multiplicities.empty())
        throw DegenerateInvariant("symmetry pair has an empty arrow product; the induced "
                                  "function is constant over a monomial");
    const int n = q.n();
    Exponents prod_exp(n, 0);
    for (const auto& [vertex, mult] : pair->multiplicities) prod_exp[vertex - 1] = mult;
    LaurentPolynomial product = LaurentPolynomial::monomial(n, prod_exp, Rational(1));
    LaurentPolynomial one = LaurentPolynomial::constant(n, Rational(1));
    Exponents denom_exp(n, 0);
    denom_exp[pair->sink - 1] += 1;
    denom_exp[pair->source - 1] += 1;
    LaurentPolynomial cross = LaurentPolynomial::monomial(n, denom_exp, Rational(1));

    SymmetryInvariant result{*pair,
                             RationalFunction(one + product, cross),
                             one + product - cross * Rational(2),
                             one * Rational(2) + product * Rational(2) - cross,
                             0};
    auto period = check_invariant(q, result.h, 2, term_budget);
    if (!period)
        throw NotInvariant("symmetry-pair function is not invariant under mu_*^2; the pair "
                           "does not satisfy the full hypothesis");
    result.period = *period;
    return result;
}

RationalFunction automorphism_invariant(const Quiver& q, const std::vector<int>& sigma) {
    const int n = q.n();
    if (static_cast<int>(sigma.size()) != n) throw InvalidInput("permutation size mismatch");
    std::vector<bool> seen(n, false);
    for (int v : sigma) {
        if (v < 1 || v > n || seen[v - 1]) throw InvalidInput("not a permutation");
        seen[v - 1] = true;
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (q.b(sigma[i - 1], sigma[j - 1]) != q.b(i, j))
                throw InvalidInput("permutation is not a quiver automorphism");
    int moved = 0;
    for (int i = 1; i <= n; ++i)
        if (sigma[i - 1] != i) {
            moved = i;
            break;
        }
    if (moved == 0) throw IdentityAutomorphism("the identity automorphism gives no invariant");
    return RationalFunction(LaurentPolynomial::variable(n, sigma[moved - 1]),
                            LaurentPolynomial::variable(n, moved));
}

}  // namespace frieze
