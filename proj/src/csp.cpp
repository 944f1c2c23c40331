#include "tensorsat/csp.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace tensorsat {

Relation neq_relation(int id, int k) { return Relation{id, complete_graph(k)}; }
Relation eq_relation(int id, int k) { return Relation{id, loops_only(k)}; }
Relation universal_relation(int id, int k) {
    return Relation{id, complete_with_loops(k)};
}

BinaryCsp::BinaryCsp(int variable_count, int domain_size)
    : n_(variable_count), k_(domain_size) {
    if (n_ < 1) throw std::invalid_argument("BinaryCsp: need at least one variable");
    if (k_ < 1) throw std::invalid_argument("BinaryCsp: need a nonempty domain");
}

void BinaryCsp::add_relation(Relation rel) {
    if (rel.domain_size() != k_)
        throw std::invalid_argument("add_relation: domain size mismatch");
    if (relation_index_.count(rel.id))
        throw std::invalid_argument("add_relation: duplicate relation id " +
                                    std::to_string(rel.id));
    relation_index_[rel.id] = relations_.size();
    relations_.push_back(std::move(rel));
}

void BinaryCsp::add_constraint(int x, int y, int rel_id) {
    if (x < 0 || y < 0 || x >= n_ || y >= n_)
        throw std::invalid_argument("add_constraint: variable out of range");
    if (x >= y)
        throw std::invalid_argument("add_constraint: constraints live on pairs x < y");
    if (!has_relation(rel_id))
        throw std::invalid_argument("add_constraint: unknown relation id " +
                                    std::to_string(rel_id));
    auto key = std::pair{x, y};
    if (constraints_.count(key))
        throw std::invalid_argument("add_constraint: duplicate constraint on pair");
    constraints_[key] = rel_id;
}

bool BinaryCsp::has_relation(int id) const { return relation_index_.count(id) > 0; }

const Relation& BinaryCsp::relation(int id) const {
    auto it = relation_index_.find(id);
    if (it == relation_index_.end())
        throw std::invalid_argument("unknown relation id " + std::to_string(id));
    return relations_[it->second];
}

std::vector<int> BinaryCsp::used_relation_ids() const {
    std::set<int> ids;
    for (const auto& [pair, id] : constraints_) ids.insert(id);
    return {ids.begin(), ids.end()};
}

void validate(const KaryCsp& csp) {
    if (csp.variable_count < 1 || csp.domain_size < 1)
        throw std::invalid_argument("KaryCsp: empty variable set or domain");
    for (const auto& c : csp.constraints) {
        if (c.scope.empty()) throw std::invalid_argument("KaryCsp: empty scope");
        std::set<int> distinct(c.scope.begin(), c.scope.end());
        if (distinct.size() != c.scope.size())
            throw std::invalid_argument("KaryCsp: repeated variable in scope");
        for (int x : c.scope)
            if (x < 0 || x >= csp.variable_count)
                throw std::invalid_argument("KaryCsp: scope variable out of range");
        for (const auto& tuple : c.allowed) {
            if (tuple.size() != c.scope.size())
                throw std::invalid_argument("KaryCsp: tuple arity mismatch");
            for (int v : tuple)
                if (v < 0 || v >= csp.domain_size)
                    throw std::invalid_argument("KaryCsp: tuple value out of domain");
        }
    }
}

Digraph constraint_graph(const BinaryCsp& csp) {
    std::vector<Arc> arcs;
    arcs.reserve(2 * csp.constraints().size());
    for (const auto& [pair, id] : csp.constraints()) {
        arcs.emplace_back(pair.first, pair.second);
        arcs.emplace_back(pair.second, pair.first);
    }
    return Digraph(csp.variable_count(), std::move(arcs));
}

Digraph relation_subgraph(const BinaryCsp& csp, int rel_id) {
    if (!csp.has_relation(rel_id))
        throw std::invalid_argument("relation_subgraph: unknown relation id " +
                                    std::to_string(rel_id));
    std::vector<Arc> arcs;
    for (const auto& [pair, id] : csp.constraints()) {
        if (id != rel_id) continue;
        arcs.emplace_back(pair.first, pair.second);
        arcs.emplace_back(pair.second, pair.first);
    }
    return Digraph(csp.variable_count(), std::move(arcs));
}

Digraph microstructure(const BinaryCsp& csp) {
    const int n = csp.variable_count();
    const int k = csp.domain_size();
    std::vector<Arc> arcs;

    auto emit = [&](int x, int y, const Digraph& rel, bool transposed) {
        for (int u = 0; u < k; ++u) {
            for (int w : rel.out_neighbors(u)) {
                if (transposed)
                    arcs.emplace_back(x * k + w, y * k + u);
                else
                    arcs.emplace_back(x * k + u, y * k + w);
            }
        }
    };

    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            const int lo = std::min(x, y), hi = std::max(x, y);
            auto it = csp.constraints().find({lo, hi});
            if (it == csp.constraints().end()) {
                // Unconstrained pair: universal relation.
                for (int u = 0; u < k; ++u)
                    for (int w = 0; w < k; ++w) arcs.emplace_back(x * k + u, y * k + w);
            } else {
                const Digraph& rel = csp.relation(it->second).graph;
                // Stored orientation is (lo, hi); the reverse uses the
                // transpose, which emit() applies by swapping value roles.
                emit(x, y, rel, /*transposed=*/x > y);
            }
        }
    }
    return Digraph(n * k, std::move(arcs));
}

Digraph microstructure_via_tensors(const BinaryCsp& csp) {
    const int n = csp.variable_count();
    const int k = csp.domain_size();

    Digraph acc(n * k);
    for (int rel_id : csp.used_relation_ids()) {
        // Arcs of G in the stored x < y orientation, labelled rel_id.
        std::vector<Arc> forward;
        for (const auto& [pair, id] : csp.constraints())
            if (id == rel_id) forward.emplace_back(pair.first, pair.second);
        Digraph oriented(n, std::move(forward));

        const Digraph& rel = csp.relation(rel_id).graph;
        acc = graph_union(acc, tensor_product(oriented, rel));
        acc = graph_union(acc, tensor_product(transpose(oriented), transpose(rel)));
    }
    acc = graph_union(
        acc, tensor_product(complement(constraint_graph(csp)), complete_with_loops(k)));
    return acc;
}

bool is_arc_consistent(const BinaryCsp& csp) {
    for (const auto& [pair, id] : csp.constraints()) {
        const Digraph& rel = csp.relation(id).graph;
        for (int u = 0; u < csp.domain_size(); ++u)
            if (rel.out_degree(u) == 0 || rel.in_degree(u) == 0) return false;
    }
    return true;
}

BinaryCsp dualize(const KaryCsp& kcsp) {
    validate(kcsp);
    if (kcsp.constraints.empty())
        throw std::invalid_argument("dualize: no constraints to encode");

    const int m = static_cast<int>(kcsp.constraints.size());
    std::vector<std::vector<std::vector<int>>> tuples(static_cast<std::size_t>(m));
    std::size_t dual_domain = 0;
    for (int i = 0; i < m; ++i) {
        const auto& c = kcsp.constraints[static_cast<std::size_t>(i)];
        if (c.allowed.empty())
            throw EmptyConstraintError("dualize: constraint " + std::to_string(i) +
                                       " allows no tuple");
        auto sorted = c.allowed;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        dual_domain = std::max(dual_domain, sorted.size());
        tuples[static_cast<std::size_t>(i)] = std::move(sorted);
    }

    BinaryCsp dual(m, static_cast<int>(dual_domain));

    // Shared original variables between two scopes, as index pairs.
    auto shared_positions = [&](int i, int j) {
        std::vector<std::pair<std::size_t, std::size_t>> shared;
        const auto& si = kcsp.constraints[static_cast<std::size_t>(i)].scope;
        const auto& sj = kcsp.constraints[static_cast<std::size_t>(j)].scope;
        for (std::size_t a = 0; a < si.size(); ++a)
            for (std::size_t b = 0; b < sj.size(); ++b)
                if (si[a] == sj[b]) shared.emplace_back(a, b);
        return shared;
    };

    int next_rel_id = 0;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            const auto& ti = tuples[static_cast<std::size_t>(i)];
            const auto& tj = tuples[static_cast<std::size_t>(j)];
            auto shared = shared_positions(i, j);
            const bool padded = ti.size() < dual_domain || tj.size() < dual_domain;
            if (shared.empty() && !padded) continue;  // implicitly universal

            std::vector<Arc> arcs;
            for (std::size_t a = 0; a < ti.size(); ++a) {
                for (std::size_t b = 0; b < tj.size(); ++b) {
                    bool agree = true;
                    for (auto [pa, pb] : shared)
                        if (ti[a][pa] != tj[b][pb]) { agree = false; break; }
                    if (agree)
                        arcs.emplace_back(static_cast<int>(a), static_cast<int>(b));
                }
            }
            const int rel_id = next_rel_id++;
            dual.add_relation(
                Relation{rel_id, Digraph(static_cast<int>(dual_domain), std::move(arcs))});
            dual.add_constraint(i, j, rel_id);
        }
    }
    return dual;
}

namespace {

// Same lightweight scanner as the graph reader; kept local to each parser.
struct CspLineScanner {
    std::string_view text;
    std::size_t pos = 0;
    int line_no = 0;

    std::string_view next() {
        while (pos < text.size()) {
            std::size_t eol = text.find('\n', pos);
            if (eol == std::string_view::npos) eol = text.size();
            std::string_view line = text.substr(pos, eol - pos);
            pos = eol + 1;
            ++line_no;
            while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
                line.remove_suffix(1);
            while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
            if (line.empty() || line.front() == 'c') continue;
            return line;
        }
        return {};
    }
};

std::vector<std::string_view> fields_of(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) fields.push_back(line.substr(start, i - start));
    }
    return fields;
}

int to_int(std::string_view field, int line_no) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw ParseError("line " + std::to_string(line_no) + ": bad integer '" +
                         std::string(field) + "'");
    return value;
}

}  // namespace

BinaryCsp parse_csp(std::string_view text) {
    CspLineScanner scan{text};

    auto hf = fields_of(scan.next());
    if (hf.size() != 4 || hf[0] != "p" || hf[1] != "csp")
        throw ParseError("malformed header: expected 'p csp N K'");
    const int n = to_int(hf[2], scan.line_no);
    const int k = to_int(hf[3], scan.line_no);
    BinaryCsp csp(n, k);

    std::string_view line = scan.next();
    while (!line.empty()) {
        auto f = fields_of(line);
        if (f[0] == "r") {
            if (f.size() != 3)
                throw ParseError("line " + std::to_string(scan.line_no) +
                                 ": expected 'r ID T'");
            const int id = to_int(f[1], scan.line_no);
            const int tuple_count = to_int(f[2], scan.line_no);
            if (tuple_count < 0)
                throw ParseError("line " + std::to_string(scan.line_no) +
                                 ": negative tuple count");
            std::vector<Arc> arcs;
            for (int t = 0; t < tuple_count; ++t) {
                auto tf = fields_of(scan.next());
                if (tf.size() != 3 || tf[0] != "t")
                    throw ParseError("line " + std::to_string(scan.line_no) +
                                     ": expected 't u w'");
                const int u = to_int(tf[1], scan.line_no);
                const int w = to_int(tf[2], scan.line_no);
                if (u < 0 || u >= k || w < 0 || w >= k)
                    throw ParseError("line " + std::to_string(scan.line_no) +
                                     ": value out of domain");
                arcs.emplace_back(u, w);
            }
            try {
                csp.add_relation(Relation{id, Digraph(k, std::move(arcs))});
            } catch (const std::invalid_argument& e) {
                throw ParseError("line " + std::to_string(scan.line_no) + ": " +
                                 e.what());
            }
        } else if (f[0] == "e") {
            if (f.size() != 4)
                throw ParseError("line " + std::to_string(scan.line_no) +
                                 ": expected 'e x y ID'");
            const int x = to_int(f[1], scan.line_no);
            const int y = to_int(f[2], scan.line_no);
            const int id = to_int(f[3], scan.line_no);
            if (!csp.has_relation(id))
                throw ParseError("line " + std::to_string(scan.line_no) +
                                 ": undeclared relation id " + std::to_string(id));
            try {
                csp.add_constraint(x, y, id);
            } catch (const std::invalid_argument& e) {
                throw ParseError("line " + std::to_string(scan.line_no) + ": " +
                                 e.what());
            }
        } else {
            throw ParseError("line " + std::to_string(scan.line_no) +
                             ": unknown line type '" + std::string(f[0]) + "'");
        }
        line = scan.next();
    }
    return csp;
}

std::string serialize_csp(const BinaryCsp& csp) {
    std::ostringstream out;
    out << "p csp " << csp.variable_count() << ' ' << csp.domain_size() << '\n';

    std::vector<const Relation*> rels;
    for (const auto& rel : csp.relations()) rels.push_back(&rel);
    std::sort(rels.begin(), rels.end(),
              [](const Relation* a, const Relation* b) { return a->id < b->id; });
    for (const Relation* rel : rels) {
        out << "r " << rel->id << ' ' << rel->graph.arc_count() << '\n';
        for (auto [u, w] : rel->graph.arcs()) out << "t " << u << ' ' << w << '\n';
    }
    for (const auto& [pair, id] : csp.constraints())
        out << "e " << pair.first << ' ' << pair.second << ' ' << id << '\n';
    return std::move(out).str();
}

}  // namespace tensorsat
