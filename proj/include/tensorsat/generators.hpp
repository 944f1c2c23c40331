#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tensorsat/csp.hpp"
#include "tensorsat/digraph.hpp"

namespace tensorsat {

/// Seeded Erdos-Renyi graph: each of the C(n,2) unordered pairs is included
/// independently with probability p. Pairs are drawn in ascending (u, v)
/// order from a splitmix64 stream, so a fixed seed gives a fixed graph on
/// every platform.
Digraph gen_gnp(int n, double p, std::uint64_t seed);

/// Random not-all-equal CSP: constraint graph gen_gnp(n, p, seed), every
/// edge carrying the single relation N_k. Arc-consistent for all k >= 2.
BinaryCsp gen_neq_csp(int n, double p, int k, std::uint64_t seed);

/// The (n+1) x n clique matrix: rows are cliques of size n over the values
/// 1..n(n+1)/2, any two rows sharing exactly one value.
std::vector<std::vector<int>> clique_union_matrix(int n);

/// Coloring CSP of the union of n+1 cliques of size n: one variable per
/// matrix value (0-rebased), domain n, relation N_n on every clique edge.
/// Unsatisfiable for even n.
BinaryCsp gen_clique_union_csp(int n);

/// c disjoint cliques of size s under the N_k relation; unsatisfiable
/// whenever s > k, and provable by the fast tensor method whenever
/// k^2 * chi(G') < c*s.
BinaryCsp gen_disjoint_cliques_csp(int cliques, int clique_size, int k);

enum class Family { GnpNeq, CliqueUnion, DisjointCliques };

std::string family_name(Family f);
Family family_from_name(std::string_view name);

/// One cell of the experiment grid: enough to rebuild the instance and its
/// coloring seed from the master seed alone.
struct GenSpec {
    Family family = Family::GnpNeq;
    int n = 0;
    double p = 0.0;
    int k = 0;
    int cliques = 0;
    int clique_size = 0;
    std::uint64_t master_seed = 0;
    int replicate = 0;

    /// mix64 fold of (master_seed, family tag, n, round(p*1e6), k, cliques,
    /// clique_size, replicate); used both to generate the instance and to
    /// seed its colorings.
    std::uint64_t derived_seed() const;

    BinaryCsp build() const;
};

}  // namespace tensorsat
