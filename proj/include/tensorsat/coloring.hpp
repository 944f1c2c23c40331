#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tensorsat/digraph.hpp"

namespace tensorsat {

/// A proper coloring of the underlying graph of some digraph. Colors are
/// 0-based; colors_used is an upper bound on the chromatic number.
struct Coloring {
    std::vector<int> assignment;
    int colors_used = 0;
    std::string order_tag;
};

/// Sequential greedy coloring: each node, taken in the given order, receives
/// the smallest color not used by an already-colored neighbor (neighbors in
/// either arc direction, so a digraph is colored as its underlying graph).
/// A loop makes proper coloring impossible and is an error.
Coloring greedy_color(const Digraph& g, std::span<const int> order);

/// Nodes by decreasing degree, ties broken by ascending node id.
std::vector<int> degree_order(const Digraph& g);

/// Best greedy result over the degree ordering plus `random_orders` seeded
/// Fisher-Yates permutations (splitmix64 streams mix64(seed) + i). Ties go
/// to the earliest ordering evaluated; fixed inputs give a fixed result.
Coloring best_coloring(const Digraph& g, int random_orders, std::uint64_t seed);

}  // namespace tensorsat
