#include "tensorsat/digraph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace tensorsat {

Digraph::Digraph(int node_count) : Digraph(node_count, {}) {}

Digraph::Digraph(int node_count, std::vector<Arc> arc_list) {
    if (node_count < 0) throw std::invalid_argument("negative node count");
    n_ = node_count;

    std::sort(arc_list.begin(), arc_list.end());
    arc_list.erase(std::unique(arc_list.begin(), arc_list.end()),
                   arc_list.end());
    for (auto [u, v] : arc_list) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("arc endpoint out of range");
        if (u == v) ++loop_count_;
    }

    out_offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
    out_nbrs_.reserve(arc_list.size());
    {
        std::size_t pos = 0;
        for (int u = 0; u < n_; ++u) {
            while (pos < arc_list.size() && arc_list[pos].first == u) {
                out_nbrs_.push_back(arc_list[pos].second);
                ++pos;
            }
            out_offsets_[static_cast<std::size_t>(u) + 1] =
                static_cast<int>(out_nbrs_.size());
        }
    }

    build_in_adjacency();

    symmetric_ = true;
    for (auto [u, v] : arc_list) {
        if (u != v && !has_arc(v, u)) {
            symmetric_ = false;
            break;
        }
    }
}

void Digraph::build_in_adjacency() {
    in_offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (int v : out_nbrs_) ++in_offsets_[static_cast<std::size_t>(v) + 1];
    for (int v = 0; v < n_; ++v)
        in_offsets_[static_cast<std::size_t>(v) + 1] +=
            in_offsets_[static_cast<std::size_t>(v)];
    in_nbrs_.resize(out_nbrs_.size());
    std::vector<int> cursor(in_offsets_.begin(), in_offsets_.end() - 1);
    for (int u = 0; u < n_; ++u) {
        for (int v : out_neighbors(u))
            in_nbrs_[static_cast<std::size_t>(
                cursor[static_cast<std::size_t>(v)]++)] = u;
    }
    // Sources were visited in ascending order, so each in-list is sorted.
}

bool Digraph::has_arc(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    auto nbrs = out_neighbors(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

bool Digraph::has_loop(int u) const { return has_arc(u, u); }

std::span<const int> Digraph::out_neighbors(int u) const {
    auto begin = static_cast<std::size_t>(out_offsets_[static_cast<std::size_t>(u)]);
    auto end = static_cast<std::size_t>(out_offsets_[static_cast<std::size_t>(u) + 1]);
    return {out_nbrs_.data() + begin, end - begin};
}

std::span<const int> Digraph::in_neighbors(int u) const {
    auto begin = static_cast<std::size_t>(in_offsets_[static_cast<std::size_t>(u)]);
    auto end = static_cast<std::size_t>(in_offsets_[static_cast<std::size_t>(u) + 1]);
    return {in_nbrs_.data() + begin, end - begin};
}

int Digraph::out_degree(int u) const {
    return out_offsets_[static_cast<std::size_t>(u) + 1] -
           out_offsets_[static_cast<std::size_t>(u)];
}

int Digraph::in_degree(int u) const {
    return in_offsets_[static_cast<std::size_t>(u) + 1] -
           in_offsets_[static_cast<std::size_t>(u)];
}

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> result;
    result.reserve(arc_count());
    for (int u = 0; u < n_; ++u)
        for (int v : out_neighbors(u)) result.emplace_back(u, v);
    return result;
}

int Digraph::active_node_count() const {
    int count = 0;
    for (int u = 0; u < n_; ++u)
        if (out_degree(u) > 0 || in_degree(u) > 0) ++count;
    return count;
}

Digraph tensor_product(const Digraph& g, const Digraph& h) {
    const int nh = h.node_count();
    const long long nodes =
        static_cast<long long>(g.node_count()) * nh;
    if (nodes > (1LL << 30)) throw std::invalid_argument("tensor product too large");

    std::vector<Arc> arcs;
    arcs.reserve(g.arc_count() * h.arc_count());
    for (int a = 0; a < g.node_count(); ++a) {
        for (int c : g.out_neighbors(a)) {
            for (int b = 0; b < nh; ++b) {
                const int src = a * nh + b;
                for (int d : h.out_neighbors(b)) arcs.emplace_back(src, c * nh + d);
            }
        }
    }
    return Digraph(static_cast<int>(nodes), std::move(arcs));
}

Digraph graph_union(const Digraph& g, const Digraph& h) {
    if (g.node_count() != h.node_count())
        throw std::invalid_argument("union: node counts differ");
    std::vector<Arc> arcs = g.arcs();
    auto more = h.arcs();
    arcs.insert(arcs.end(), more.begin(), more.end());
    return Digraph(g.node_count(), std::move(arcs));
}

Digraph complement(const Digraph& g) {
    if (!g.loopless()) throw std::invalid_argument("complement: graph has loops");
    if (!g.symmetric()) throw std::invalid_argument("complement: graph is not symmetric");
    std::vector<Arc> arcs;
    const int n = g.node_count();
    for (int u = 0; u < n; ++u) {
        auto nbrs = g.out_neighbors(u);
        std::size_t pos = 0;
        for (int v = 0; v < n; ++v) {
            while (pos < nbrs.size() && nbrs[pos] < v) ++pos;
            const bool adjacent = pos < nbrs.size() && nbrs[pos] == v;
            if (!adjacent && u != v) arcs.emplace_back(u, v);
        }
    }
    return Digraph(n, std::move(arcs));
}

Digraph underlying_graph(const Digraph& g) {
    if (g.symmetric()) return g;
    std::vector<Arc> arcs;
    arcs.reserve(2 * g.arc_count());
    for (auto [u, v] : g.arcs()) {
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    }
    return Digraph(g.node_count(), std::move(arcs));
}

Digraph transpose(const Digraph& g) {
    if (g.symmetric()) return g;
    std::vector<Arc> arcs;
    arcs.reserve(g.arc_count());
    for (auto [u, v] : g.arcs()) arcs.emplace_back(v, u);
    return Digraph(g.node_count(), std::move(arcs));
}

Digraph complete_graph(int n) {
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(n) * (n - 1));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) arcs.emplace_back(u, v);
    return Digraph(n, std::move(arcs));
}

Digraph complete_with_loops(int n) {
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(n) * n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) arcs.emplace_back(u, v);
    return Digraph(n, std::move(arcs));
}

Digraph loops_only(int n) {
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) arcs.emplace_back(u, u);
    return Digraph(n, std::move(arcs));
}

namespace {

struct LineScanner {
    std::string_view text;
    std::size_t pos = 0;
    int line_no = 0;

    // Next non-blank, non-comment line; empty view at end of input.
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

std::vector<std::string_view> split_fields(std::string_view line) {
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

int parse_int_field(std::string_view field, int line_no, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw ParseError("line " + std::to_string(line_no) + ": bad " + what +
                         " '" + std::string(field) + "'");
    return value;
}

}  // namespace

Digraph parse_graph(std::string_view text) {
    LineScanner scan{text};

    std::string_view header = scan.next();
    auto hf = split_fields(header);
    if (hf.size() != 4 || hf[0] != "p" || (hf[1] != "graph" && hf[1] != "digraph"))
        throw ParseError("malformed header: expected 'p graph N M' or 'p digraph N M'");
    const bool directed = hf[1] == "digraph";
    const int n = parse_int_field(hf[2], scan.line_no, "node count");
    const int m = parse_int_field(hf[3], scan.line_no, "arc count");
    if (n < 0 || m < 0) throw ParseError("malformed header: negative count");

    std::vector<Arc> arcs;
    std::vector<Arc> seen;
    seen.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        std::string_view line = scan.next();
        if (line.empty())
            throw ParseError("unexpected end of input: expected " +
                             std::to_string(m) + " arc lines");
        auto f = split_fields(line);
        const char* tag = directed ? "a" : "e";
        if (f.size() != 3 || f[0] != std::string_view(tag))
            throw ParseError("line " + std::to_string(scan.line_no) +
                             ": expected '" + tag + " u v'");
        int u = parse_int_field(f[1], scan.line_no, "node id");
        int v = parse_int_field(f[2], scan.line_no, "node id");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("line " + std::to_string(scan.line_no) +
                             ": node id out of range");
        Arc key = directed ? Arc{u, v} : Arc{std::min(u, v), std::max(u, v)};
        if (std::find(seen.begin(), seen.end(), key) != seen.end())
            throw ParseError("line " + std::to_string(scan.line_no) +
                             ": duplicate arc");
        seen.push_back(key);
        arcs.emplace_back(u, v);
        if (!directed && u != v) arcs.emplace_back(v, u);
    }
    if (!scan.next().empty()) throw ParseError("trailing content after arc list");
    return Digraph(n, std::move(arcs));
}

std::string serialize_graph(const Digraph& g) {
    std::ostringstream out;
    if (g.symmetric()) {
        const std::size_t edges = (g.arc_count() - g.loop_count()) / 2 + g.loop_count();
        out << "p graph " << g.node_count() << ' ' << edges << '\n';
        for (auto [u, v] : g.arcs())
            if (u <= v) out << "e " << u << ' ' << v << '\n';
    } else {
        out << "p digraph " << g.node_count() << ' ' << g.arc_count() << '\n';
        for (auto [u, v] : g.arcs()) out << "a " << u << ' ' << v << '\n';
    }
    return std::move(out).str();
}

}  // namespace tensorsat
