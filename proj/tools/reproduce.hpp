#pragma once

#include <string>

#include "frieze/json_io.hpp"

namespace frieze_cli {

struct ReproduceOptions {
    int n = 3;        // ring size for the extended-A family
    int degree = 2;   // degree bound for the vanishing-space checks
    bool pretty = false;
    std::size_t term_budget = frieze::kDefaultTermBudget;
    std::size_t bit_budget = frieze::kDefaultBitBudget;
};

// Runs one named case (a2, kronecker, a3double, atilde2, atilden, qa5),
// prints its report to stdout and returns true when every golden comparison
// passed.
bool run_reproduce_case(const std::string& name, const ReproduceOptions& options);

}  // namespace frieze_cli
