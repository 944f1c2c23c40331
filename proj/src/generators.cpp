#include "tensorsat/generators.hpp"

#include <cmath>
#include <stdexcept>

#include "tensorsat/rng.hpp"

namespace tensorsat {

Digraph gen_gnp(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("gen_gnp: negative n");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("gen_gnp: p outside [0,1]");
    SplitMix64 rng(seed);
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng.next_unit() < p) {
                arcs.emplace_back(u, v);
                arcs.emplace_back(v, u);
            }
        }
    }
    return Digraph(n, std::move(arcs));
}

BinaryCsp gen_neq_csp(int n, double p, int k, std::uint64_t seed) {
    if (k < 2)
        throw std::invalid_argument("gen_neq_csp: the != relation is empty for k < 2");
    Digraph g = gen_gnp(n, p, seed);
    BinaryCsp csp(n, k);
    csp.add_relation(neq_relation(0, k));
    for (auto [u, v] : g.arcs())
        if (u < v) csp.add_constraint(u, v, 0);
    return csp;
}

std::vector<std::vector<int>> clique_union_matrix(int n) {
    if (n < 2) throw std::invalid_argument("clique_union_matrix: n must be >= 2");
    std::vector<std::vector<int>> mat(static_cast<std::size_t>(n) + 1,
                                      std::vector<int>(static_cast<std::size_t>(n), 0));
    int elem = 1;
    for (int j = 1; j <= n; ++j) {
        for (int i = 1; i <= j; ++i) {
            mat[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1] = elem;
            mat[static_cast<std::size_t>(j)][static_cast<std::size_t>(i) - 1] = elem;
            ++elem;
        }
    }
    return mat;
}

BinaryCsp gen_clique_union_csp(int n) {
    auto mat = clique_union_matrix(n);
    const int vars = n * (n + 1) / 2;
    BinaryCsp csp(vars, n);
    csp.add_relation(neq_relation(0, n));
    for (const auto& row : mat) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            for (std::size_t j = i + 1; j < row.size(); ++j) {
                const int a = row[i] - 1;
                const int b = row[j] - 1;
                csp.add_constraint(std::min(a, b), std::max(a, b), 0);
            }
        }
    }
    return csp;
}

BinaryCsp gen_disjoint_cliques_csp(int cliques, int clique_size, int k) {
    if (cliques < 1 || clique_size < 2 || k < 2)
        throw std::invalid_argument("gen_disjoint_cliques_csp: need c >= 1, s >= 2, k >= 2");
    const int n = cliques * clique_size;
    BinaryCsp csp(n, k);
    csp.add_relation(neq_relation(0, k));
    for (int c = 0; c < cliques; ++c) {
        const int base = c * clique_size;
        for (int i = 0; i < clique_size; ++i)
            for (int j = i + 1; j < clique_size; ++j)
                csp.add_constraint(base + i, base + j, 0);
    }
    return csp;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::GnpNeq: return "gnp-neq";
        case Family::CliqueUnion: return "clique-union";
        case Family::DisjointCliques: return "disjoint-cliques";
    }
    return "?";
}

Family family_from_name(std::string_view name) {
    if (name == "gnp-neq") return Family::GnpNeq;
    if (name == "clique-union") return Family::CliqueUnion;
    if (name == "disjoint-cliques") return Family::DisjointCliques;
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

std::uint64_t GenSpec::derived_seed() const {
    std::uint64_t s = master_seed;
    auto fold = [&s](std::uint64_t v) { s = mix64(s ^ v); };
    switch (family) {
        case Family::GnpNeq: fold(1); break;
        case Family::CliqueUnion: fold(2); break;
        case Family::DisjointCliques: fold(3); break;
    }
    fold(static_cast<std::uint64_t>(n));
    fold(static_cast<std::uint64_t>(std::llround(p * 1e6)));
    fold(static_cast<std::uint64_t>(k));
    fold(static_cast<std::uint64_t>(cliques));
    fold(static_cast<std::uint64_t>(clique_size));
    fold(static_cast<std::uint64_t>(replicate));
    return s;
}

BinaryCsp GenSpec::build() const {
    switch (family) {
        case Family::GnpNeq: return gen_neq_csp(n, p, k, derived_seed());
        case Family::CliqueUnion: return gen_clique_union_csp(n);
        case Family::DisjointCliques:
            return gen_disjoint_cliques_csp(cliques, clique_size, k);
    }
    throw std::logic_error("unreachable");
}

}  // namespace tensorsat
