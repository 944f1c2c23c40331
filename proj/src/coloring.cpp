#include "tensorsat/coloring.hpp"

#include <algorithm>
#include <stdexcept>

#include "tensorsat/rng.hpp"

namespace tensorsat {

Coloring greedy_color(const Digraph& g, std::span<const int> order) {
    const int n = g.node_count();
    if (!g.loopless())
        throw std::invalid_argument("greedy_color: graph has a loop");
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("greedy_color: order is not a permutation");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : order) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("greedy_color: order is not a permutation");
        seen[static_cast<std::size_t>(v)] = 1;
    }

    Coloring result;
    result.assignment.assign(static_cast<std::size_t>(n), -1);
    // used_by[c] == v marks color c as taken by a neighbor of the node
    // currently being colored.
    std::vector<int> used_by(static_cast<std::size_t>(n) + 1, -1);
    auto& color = result.assignment;

    for (int v : order) {
        for (int w : g.out_neighbors(v))
            if (color[static_cast<std::size_t>(w)] >= 0)
                used_by[static_cast<std::size_t>(color[static_cast<std::size_t>(w)])] = v;
        for (int w : g.in_neighbors(v))
            if (color[static_cast<std::size_t>(w)] >= 0)
                used_by[static_cast<std::size_t>(color[static_cast<std::size_t>(w)])] = v;
        int c = 0;
        while (used_by[static_cast<std::size_t>(c)] == v) ++c;
        color[static_cast<std::size_t>(v)] = c;
        result.colors_used = std::max(result.colors_used, c + 1);
    }
    return result;
}

std::vector<int> degree_order(const Digraph& g) {
    std::vector<int> order(static_cast<std::size_t>(g.node_count()));
    for (int v = 0; v < g.node_count(); ++v) order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return g.degree(a) > g.degree(b);
    });
    return order;
}

Coloring best_coloring(const Digraph& g, int random_orders, std::uint64_t seed) {
    if (random_orders < 0)
        throw std::invalid_argument("best_coloring: negative random_orders");

    Coloring best = greedy_color(g, degree_order(g));
    best.order_tag = "degree";

    for (int i = 1; i <= random_orders; ++i) {
        SplitMix64 rng(mix64(seed) + static_cast<std::uint64_t>(i));
        auto perm = shuffled_identity(g.node_count(), rng);
        Coloring candidate = greedy_color(g, perm);
        if (candidate.colors_used < best.colors_used) {
            candidate.order_tag = "random-" + std::to_string(i);
            best = std::move(candidate);
        }
    }
    return best;
}

}  // namespace tensorsat
