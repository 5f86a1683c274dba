#include "frieze/cluster.hpp"

namespace frieze {

ClusterState initial_state(const Quiver& q) {
    std::vector<RationalFunction> vars;
    vars.reserve(q.n());
    for (int i = 1; i <= q.n(); ++i) vars.push_back(RationalFunction::variable(q.n(), i));
    return {q, std::move(vars), {}};
}

namespace {

LaurentPolynomial checked_poly_mul(const LaurentPolynomial& a, const LaurentPolynomial& b,
                                   std::size_t budget) {
    std::size_t ta = a.term_count(), tb = b.term_count();
    // The budget bounds stored results; cap the pairwise work as well so a
    // runaway product is refused before it is expanded.
    if (ta != 0 && tb != 0 && ta > (64 * budget) / tb)
        throw TermBudgetExceeded("term budget exceeded during cluster mutation");
    LaurentPolynomial r = a * b;
    if (r.term_count() > budget)
        throw TermBudgetExceeded("term budget exceeded during cluster mutation");
    return r;
}

LaurentPolynomial poly_power(const LaurentPolynomial& base, int e, std::size_t budget) {
    LaurentPolynomial result = LaurentPolynomial::constant(base.nvars(), Rational(1));
    LaurentPolynomial sq = base;
    int k = e;
    while (k > 0) {
        if (k & 1) result = checked_poly_mul(result, sq, budget);
        k >>= 1;
        if (k) sq = checked_poly_mul(sq, sq, budget);
    }
    return result;
}

}  // namespace

ClusterState mutate_cluster(const ClusterState& s, int k, std::size_t term_budget) {
    const int n = s.quiver.n();
    if (k < 1 || k > n) throw InvalidInput("mutation vertex out of range");

    LaurentPolynomial in_product = LaurentPolynomial::constant(n, Rational(1));
    LaurentPolynomial out_product = LaurentPolynomial::constant(n, Rational(1));
    for (int j = 1; j <= n; ++j) {
        int into_k = s.quiver.b(j, k);
        if (into_k > 0)
            in_product = checked_poly_mul(in_product, poly_power(s.vars[j - 1].num(), into_k,
                                                                 term_budget), term_budget);
        int out_of_k = s.quiver.b(k, j);
        if (out_of_k > 0)
            out_product = checked_poly_mul(out_product, poly_power(s.vars[j - 1].num(), out_of_k,
                                                                   term_budget), term_budget);
    }
    LaurentPolynomial exchange = in_product + out_product;
    auto quotient = exact_divide(exchange, s.vars[k - 1].num());
    if (!quotient)
        throw LaurentCertificationFailed("exchange numerator is not divisible by the old variable"
                                         " (mutating vertex " + std::to_string(k) + ")");

    ClusterState next{mutate_quiver(s.quiver, k), s.vars, s.history};
    next.vars[k - 1] = RationalFunction(std::move(*quotient));
    next.history.push_back(k);
    return next;
}

ClusterState coxeter_mutate_cluster(const ClusterState& s, std::size_t term_budget) {
    if (!s.quiver.is_admissible())
        throw InvalidInput("Coxeter mutation requires an admissibly labeled quiver");
    ClusterState cur = s;
    for (int k = 1; k <= s.quiver.n(); ++k) cur = mutate_cluster(cur, k, term_budget);
    return cur;
}

RationalFunction compose(const RationalFunction& h, const ClusterState& s,
                         std::size_t term_budget) {
    if (h.nvars() != s.quiver.n())
        throw InvalidInput("function and cluster state have different variable counts");
    return substitute(h, std::span<const RationalFunction>(s.vars), term_budget);
}

}  // namespace frieze
