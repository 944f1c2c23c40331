#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tensorsat {

/// Thrown when a text file does not conform to the graph/CSP formats.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Arc = std::pair<int, int>;

/// Directed graph over nodes 0..n-1. Loops are allowed, parallel arcs are
/// not (set semantics). An undirected graph is represented as a symmetric
/// digraph holding both orientations of every edge; a loop is the single
/// arc (u, u). Instances are immutable after construction and safe to share
/// across threads.
class Digraph {
public:
    Digraph() = default;

    /// Edgeless graph on `node_count` nodes.
    explicit Digraph(int node_count);

    /// Builds the graph from an arc list. Duplicates are collapsed; ids
    /// outside [0, node_count) are an error.
    Digraph(int node_count, std::vector<Arc> arc_list);

    int node_count() const noexcept { return n_; }
    std::size_t arc_count() const noexcept { return out_nbrs_.size(); }

    bool has_arc(int u, int v) const;
    bool has_loop(int u) const;

    /// Out-neighbors of u in ascending order.
    std::span<const int> out_neighbors(int u) const;
    /// In-neighbors of u in ascending order.
    std::span<const int> in_neighbors(int u) const;

    int out_degree(int u) const;
    int in_degree(int u) const;
    /// Number of arcs meeting u, a loop counted twice (once as source, once
    /// as target).
    int degree(int u) const { return out_degree(u) + in_degree(u); }

    /// True iff for every arc (u,v) the reverse arc (v,u) is present.
    bool symmetric() const noexcept { return symmetric_; }
    bool loopless() const noexcept { return loop_count_ == 0; }
    std::size_t loop_count() const noexcept { return loop_count_; }

    /// All arcs in lexicographic order.
    std::vector<Arc> arcs() const;

    /// Nodes incident to at least one arc.
    int active_node_count() const;

    friend bool operator==(const Digraph& a, const Digraph& b) {
        return a.n_ == b.n_ && a.out_offsets_ == b.out_offsets_ &&
               a.out_nbrs_ == b.out_nbrs_;
    }

private:
    void build_in_adjacency();

    int n_ = 0;
    // CSR adjacency, out and in, both with sorted neighbor lists.
    std::vector<int> out_offsets_{0};
    std::vector<int> out_nbrs_;
    std::vector<int> in_offsets_{0};
    std::vector<int> in_nbrs_;
    bool symmetric_ = true;
    std::size_t loop_count_ = 0;
};

/// Tensor product. Node a_b of the result is indexed a*|V(h)|+b; the arc
/// (a_b, c_d) exists iff (a,c) is an arc of g and (b,d) an arc of h. The
/// result is loopless whenever either operand is.
Digraph tensor_product(const Digraph& g, const Digraph& h);

/// Arc-set union of two graphs on the same node count.
Digraph graph_union(const Digraph& g, const Digraph& h);

/// Complement of a loopless symmetric graph: edge (u,v), u != v, iff absent
/// from g. Loops or asymmetry are an error, not a silent fixup.
Digraph complement(const Digraph& g);

/// Symmetric closure: both orientations of every arc; loops preserved.
Digraph underlying_graph(const Digraph& g);

/// All arcs reversed.
Digraph transpose(const Digraph& g);

/// Complete loopless graph on n nodes (the not-all-equal relation N_n).
Digraph complete_graph(int n);
/// Complete graph with a loop on every node (the universal relation C_n).
Digraph complete_with_loops(int n);
/// Loops only (the equality relation I_n).
Digraph loops_only(int n);

/// Line-oriented text format:
///   c <comment>
///   p graph N M     followed by M lines  "e u v"  (one per undirected edge,
///                   u <= v, loops as "e u u")
///   p digraph N M   followed by M lines  "a u v"  (one per arc)
/// Node ids are 0-based decimal. serialize_graph picks the `graph` form for
/// symmetric inputs and round-trips bit-exactly.
Digraph parse_graph(std::string_view text);
std::string serialize_graph(const Digraph& g);

}  // namespace tensorsat
