#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tensorsat/csp.hpp"
#include "tensorsat/digraph.hpp"

namespace tensorsat {

/// Caps on the brute-force routines. `force` overrides them (a warning is
/// printed to stderr); chromatic_exact is additionally hard-limited to 64
/// nodes by its bitset representation.
struct OracleBudget {
    int max_nodes = 12;
    std::uint64_t max_search_space = 1ULL << 24;
    bool force = false;
};

class BudgetExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SolveResult {
    bool satisfiable = false;
    std::optional<std::vector<int>> witness;
};

/// Exhaustive backtracking over all k^n assignments. Ground truth for the
/// incomplete methods; deliberately simple and independent of them.
SolveResult solve_exhaustive(const BinaryCsp& csp, const OracleBudget& budget = {});

/// Same, for k-ary CSPs (validates the dual encoding).
SolveResult solve_exhaustive(const KaryCsp& csp, const OracleBudget& budget = {});

/// Exact chromatic number of the underlying graph by branch and bound over
/// color classes. Loops are an error.
int chromatic_exact(const Digraph& g, const OracleBudget& budget = {});

}  // namespace tensorsat
