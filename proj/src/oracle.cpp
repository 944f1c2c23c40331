#include "tensorsat/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

namespace tensorsat {

namespace {

void check_search_space(int n, int k, const OracleBudget& budget) {
    const double log_space = n * std::log2(static_cast<double>(k));
    const double log_cap = std::log2(static_cast<double>(budget.max_search_space));
    if (log_space <= log_cap) return;
    if (!budget.force)
        throw BudgetExceededError("search space " + std::to_string(k) + "^" +
                                  std::to_string(n) + " exceeds the oracle budget");
    std::cerr << "warning: oracle budget exceeded (" << k << "^" << n
              << " assignments), forced anyway\n";
}

}  // namespace

SolveResult solve_exhaustive(const BinaryCsp& csp, const OracleBudget& budget) {
    const int n = csp.variable_count();
    const int k = csp.domain_size();
    check_search_space(n, k, budget);

    // Constraints touching variable x with all lower-numbered variables.
    struct Check {
        int other;
        const Digraph* rel;
    };
    std::vector<std::vector<Check>> checks(static_cast<std::size_t>(n));
    for (const auto& [pair, id] : csp.constraints())
        checks[static_cast<std::size_t>(pair.second)].push_back(
            {pair.first, &csp.relation(id).graph});

    std::vector<int> assignment(static_cast<std::size_t>(n), 0);
    int x = 0;
    while (true) {
        if (x == n) return {true, assignment};
        bool ok = true;
        for (const auto& check : checks[static_cast<std::size_t>(x)]) {
            // Stored orientation is (other < x), so the relation reads
            // (value of other, value of x).
            if (!check.rel->has_arc(assignment[static_cast<std::size_t>(check.other)],
                                    assignment[static_cast<std::size_t>(x)])) {
                ok = false;
                break;
            }
        }
        if (ok) {
            ++x;
            if (x < n) assignment[static_cast<std::size_t>(x)] = 0;
            continue;
        }
        // Advance, backtracking past exhausted variables.
        while (x >= 0 && ++assignment[static_cast<std::size_t>(x)] == k) --x;
        if (x < 0) return {false, std::nullopt};
        for (int y = x + 1; y < n; ++y) assignment[static_cast<std::size_t>(y)] = 0;
    }
}

SolveResult solve_exhaustive(const KaryCsp& csp, const OracleBudget& budget) {
    validate(csp);
    check_search_space(csp.variable_count, csp.domain_size, budget);

    const int n = csp.variable_count;
    const int k = csp.domain_size;
    std::vector<int> assignment(static_cast<std::size_t>(n), 0);

    auto satisfied = [&]() {
        for (const auto& c : csp.constraints) {
            std::vector<int> projected;
            projected.reserve(c.scope.size());
            for (int x : c.scope)
                projected.push_back(assignment[static_cast<std::size_t>(x)]);
            if (std::find(c.allowed.begin(), c.allowed.end(), projected) ==
                c.allowed.end())
                return false;
        }
        return true;
    };

    while (true) {
        if (satisfied()) return {true, assignment};
        int x = n - 1;
        while (x >= 0 && ++assignment[static_cast<std::size_t>(x)] == k) {
            assignment[static_cast<std::size_t>(x)] = 0;
            --x;
        }
        if (x < 0) return {false, std::nullopt};
    }
}

namespace {

struct ChromaticSearch {
    int n;
    std::vector<std::uint64_t> adj;
    std::vector<int> order;
    int best;

    void recurse(int idx, std::vector<std::uint64_t>& class_conflicts, int used) {
        if (used >= best) return;
        if (idx == n) {
            best = used;
            return;
        }
        const int v = order[static_cast<std::size_t>(idx)];
        for (int c = 0; c < used; ++c) {
            if (class_conflicts[static_cast<std::size_t>(c)] >> v & 1ULL) continue;
            const std::uint64_t saved = class_conflicts[static_cast<std::size_t>(c)];
            class_conflicts[static_cast<std::size_t>(c)] |= adj[static_cast<std::size_t>(v)];
            recurse(idx + 1, class_conflicts, used);
            class_conflicts[static_cast<std::size_t>(c)] = saved;
        }
        if (used + 1 < best) {
            // Color classes are interchangeable; opening one new class
            // covers all of them.
            class_conflicts.push_back(adj[static_cast<std::size_t>(v)]);
            recurse(idx + 1, class_conflicts, used + 1);
            class_conflicts.pop_back();
        }
    }
};

}  // namespace

int chromatic_exact(const Digraph& g, const OracleBudget& budget) {
    if (!g.loopless())
        throw std::invalid_argument("chromatic_exact: graph has a loop");
    const int n = g.node_count();
    if (n > budget.max_nodes) {
        if (!budget.force)
            throw BudgetExceededError("graph has " + std::to_string(n) +
                                      " nodes, oracle budget is " +
                                      std::to_string(budget.max_nodes));
        std::cerr << "warning: chromatic oracle budget exceeded (" << n
                  << " nodes), forced anyway\n";
    }
    if (n > 64)
        throw BudgetExceededError("chromatic oracle supports at most 64 nodes");
    if (n == 0) return 0;

    ChromaticSearch search;
    search.n = n;
    search.adj.assign(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u) {
        for (int v : g.out_neighbors(u)) {
            search.adj[static_cast<std::size_t>(u)] |= 1ULL << v;
            search.adj[static_cast<std::size_t>(v)] |= 1ULL << u;
        }
    }
    for (int u = 0; u < n; ++u)
        search.adj[static_cast<std::size_t>(u)] &= ~(1ULL << u);

    search.order.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) search.order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(search.order.begin(), search.order.end(), [&](int a, int b) {
        return __builtin_popcountll(search.adj[static_cast<std::size_t>(a)]) >
               __builtin_popcountll(search.adj[static_cast<std::size_t>(b)]);
    });

    search.best = n;
    std::vector<std::uint64_t> classes;
    classes.reserve(static_cast<std::size_t>(n));
    // best starts at n, which the all-singletons coloring always attains.
    search.recurse(0, classes, 0);
    return search.best;
}

}  // namespace tensorsat
