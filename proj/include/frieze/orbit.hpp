#pragma once

#include <optional>
#include <vector>

#include "frieze/quiver.hpp"
#include "frieze/rational.hpp"

namespace frieze {

using Point = std::vector<Rational>;

struct OrbitFailure {
    long step;   // first step whose point has a zero coordinate
    int vertex;  // 1-based vertex that became zero
};

/*
 * Exact Coxeter-mutation orbit.  points[t] is P_t; points stop early when a
 * coordinate becomes zero, in which case `failure` is set and only points
 * with all coordinates nonzero are recorded.  generic_up_to is the requested
 * horizon on success, or the failing step.
 */
struct OrbitRecord {
    Quiver quiver;
    std::vector<Point> points;
    long generic_up_to;
    std::optional<long> period;
    std::optional<OrbitFailure> failure;
};

// Runs the recurrence
//   f_i(t+1) = (1 + prod_{j->i} f_j(t)^m * prod_{i->j} f_j(t+1)^m) / f_i(t)
// for i = 1..n in order; requires an admissible quiver and a start with all
// coordinates nonzero.  `period` is filled when P_t returns to P_0 within the
// horizon.  Throws BudgetExceeded when a coordinate outgrows bit_budget.
OrbitRecord iterate(const Quiver& q, const Point& start, long steps,
                    std::size_t bit_budget = kDefaultBitBudget);

// Smallest p with P_p = P_0 and P_{t+p} = P_t for all recorded t.
std::optional<long> detect_period(const OrbitRecord& record);

// One inverse Coxeter step (mu_1 o ... o mu_n applied backwards); the same
// exchange relations solved in descending vertex order.
Point inverse_step(const Quiver& q, const Point& point);

}  // namespace frieze
