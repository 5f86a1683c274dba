#pragma once

#include <vector>

#include "frieze/quiver.hpp"
#include "frieze/rational_function.hpp"

namespace frieze {

/*
 * Cluster after a sequence of mutations.  Each variable is stored fully
 * expanded as a Laurent polynomial in the initial variables x1..xn (the
 * Laurent phenomenon; every mutation re-certifies it by exact division).
 */
struct ClusterState {
    Quiver quiver;
    std::vector<RationalFunction> vars;
    std::vector<int> history;
};

ClusterState initial_state(const Quiver& q);

// Exchange relation at vertex k:
//   new_k = (prod_{j->k} vars[j]^m + prod_{k->j} vars[j]^m) / vars[k]
// with the exact division certified; throws LaurentCertificationFailed if it
// fails and TermBudgetExceeded when intermediates outgrow the budget.
ClusterState mutate_cluster(const ClusterState& s, int k,
                            std::size_t term_budget = kDefaultTermBudget);

// mu_n o ... o mu_1 (mutate at 1 first); requires an admissibly labeled quiver.
ClusterState coxeter_mutate_cluster(const ClusterState& s,
                                    std::size_t term_budget = kDefaultTermBudget);

// h with the state's cluster variables substituted for x1..xn.
RationalFunction compose(const RationalFunction& h, const ClusterState& s,
                         std::size_t term_budget = kDefaultTermBudget);

}  // namespace frieze
