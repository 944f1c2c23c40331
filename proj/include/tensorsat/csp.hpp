#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tensorsat/digraph.hpp"

namespace tensorsat {

/// A binary relation over the value domain: arc (u, w) of `graph` means the
/// value pair (u, w) is compatible.
struct Relation {
    int id = 0;
    Digraph graph;

    int domain_size() const { return graph.node_count(); }
};

/// The not-all-equal relation over k values (complete loopless graph).
Relation neq_relation(int id, int k);
/// The equality relation over k values (loops only).
Relation eq_relation(int id, int k);
/// The universal relation over k values (complete graph with loops).
Relation universal_relation(int id, int k);

/// Binary CSP over n variables with a common domain of size k. Constraints
/// live on ordered pairs x < y; the relation applies as (value of x, value
/// of y), and the reverse direction is its transpose. Unconstrained pairs
/// are implicitly universal. Instances are immutable once built.
class BinaryCsp {
public:
    BinaryCsp(int variable_count, int domain_size);

    void add_relation(Relation rel);
    void add_constraint(int x, int y, int rel_id);

    int variable_count() const noexcept { return n_; }
    int domain_size() const noexcept { return k_; }

    const std::vector<Relation>& relations() const noexcept { return relations_; }
    bool has_relation(int id) const;
    const Relation& relation(int id) const;

    /// Constraint map keyed by (x, y) with x < y, in ascending order.
    const std::map<std::pair<int, int>, int>& constraints() const noexcept {
        return constraints_;
    }

    /// Relation ids that label at least one constraint, ascending.
    std::vector<int> used_relation_ids() const;

private:
    int n_ = 0;
    int k_ = 0;
    std::vector<Relation> relations_;
    std::map<int, std::size_t> relation_index_;
    std::map<std::pair<int, int>, int> constraints_;
};

/// k-ary CSP used as input to the dual encoding. Scopes list distinct
/// variables; every allowed tuple has the scope's arity.
struct KaryConstraint {
    std::vector<int> scope;
    std::vector<std::vector<int>> allowed;
};

struct KaryCsp {
    int variable_count = 0;
    int domain_size = 0;
    std::vector<KaryConstraint> constraints;
};

void validate(const KaryCsp& csp);

/// Thrown by dualize when a constraint allows no tuple at all: the instance
/// is trivially unsatisfiable and there is nothing to encode.
class EmptyConstraintError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Loopless symmetric graph on the variables; edge (x,y) iff the pair is
/// constrained.
Digraph constraint_graph(const BinaryCsp& csp);

/// Subgraph of the constraint graph keeping only edges labelled rel_id.
Digraph relation_subgraph(const BinaryCsp& csp, int rel_id);

/// Microstructure digraph on n*k nodes, node x_v indexed x*k+v. Arc
/// (x_u, y_w) iff x != y and (u, w) lies in R_xy, where unconstrained pairs
/// carry the universal relation and the reverse of a stored pair carries
/// the transposed relation. Always loopless; each variable's value nodes
/// form an independent set.
Digraph microstructure(const BinaryCsp& csp);

/// Same graph assembled from tensor products: each relation contributes
/// the term D_i (x) R_i together with its reverse orientation paired with
/// the transposed relation, and the complement of the constraint graph
/// contributes G' (x) C_k. Arc-for-arc equal to microstructure().
Digraph microstructure_via_tensors(const BinaryCsp& csp);

/// True iff every value of every constrained variable has a compatible
/// partner value on each of its constraints.
bool is_arc_consistent(const BinaryCsp& csp);

/// Dual encoding of a k-ary CSP: one dual variable per constraint, dual
/// values are that constraint's allowed tuples (sorted), and two dual
/// values are compatible iff the underlying assignments agree on shared
/// variables. Constraints with fewer tuples than the largest one are padded
/// to a uniform dual domain; padded values are incompatible with every
/// value of every other dual variable. Satisfiability is preserved.
BinaryCsp dualize(const KaryCsp& kcsp);

/// Text format, one BinaryCsp per file:
///   p csp N K
///   r ID T        relation block: T following lines "t u w", one per
///   t u w         compatible value pair
///   e x y ID      constraint on x < y labelled by a declared relation
/// Comment lines start with 'c'. serialize_csp emits relations sorted by id
/// with sorted tuples and constraints sorted by (x, y); parse(serialize(csp))
/// is the identity.
BinaryCsp parse_csp(std::string_view text);
std::string serialize_csp(const BinaryCsp& csp);

}  // namespace tensorsat
