#include "tensorsat/methods.hpp"

#include <chrono>
#include <future>
#include <limits>

namespace tensorsat {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        return std::numeric_limits<std::uint64_t>::max();
    return r;
}

std::uint64_t product(const std::vector<FactorTerm>& factors) {
    std::uint64_t bound = 1;
    for (const auto& f : factors) bound = saturating_mul(bound, f.value);
    return bound;
}

}  // namespace

std::string method_name(Method m) {
    switch (m) {
        case Method::Mu: return "mu";
        case Method::Tensor: return "tensor";
        case Method::TensorFast: return "tensor-fast";
    }
    return "?";
}

Method method_from_name(std::string_view name) {
    if (name == "mu") return Method::Mu;
    if (name == "tensor") return Method::Tensor;
    if (name == "tensor-fast") return Method::TensorFast;
    throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

ProofReport prove_mu(const BinaryCsp& csp, const ColoringConfig& cfg) {
    const auto start = Clock::now();
    Coloring col = best_coloring(microstructure(csp), cfg.random_orders, cfg.seed);

    ProofReport report;
    report.method = Method::Mu;
    report.bound = static_cast<std::uint64_t>(col.colors_used);
    report.factors = {{"G_mu", report.bound}};
    report.proved_unsat =
        report.bound < static_cast<std::uint64_t>(csp.variable_count());
    report.seed = cfg.seed;
    report.elapsed_ms = ms_since(start);
    return report;
}

std::uint64_t relation_factor(const BinaryCsp& csp, int rel_id,
                              const ColoringConfig& cfg) {
    const Relation& rel = csp.relation(rel_id);

    Digraph sub = relation_subgraph(csp, rel_id);
    if (sub.arc_count() == 0)
        throw std::invalid_argument("relation_factor: relation " +
                                    std::to_string(rel_id) +
                                    " labels no constraint");
    if (rel.graph.loopless()) {
        const auto k = static_cast<std::uint64_t>(csp.domain_size());
        if (cfg.tight_factors) {
            auto colors = static_cast<std::uint64_t>(
                best_coloring(sub, cfg.random_orders, cfg.seed).colors_used);
            return std::min(colors, k);
        }
        return std::min(static_cast<std::uint64_t>(sub.active_node_count()), k);
    }
    return static_cast<std::uint64_t>(
        best_coloring(tensor_product(sub, rel.graph), cfg.random_orders, cfg.seed)
            .colors_used);
}

ProofReport prove_tensor(const BinaryCsp& csp, const ColoringConfig& cfg) {
    const auto start = Clock::now();
    const auto used = csp.used_relation_ids();

    auto complement_factor = [&]() -> std::uint64_t {
        Digraph term = tensor_product(complement(constraint_graph(csp)),
                                      complete_with_loops(csp.domain_size()));
        return static_cast<std::uint64_t>(
            best_coloring(term, cfg.random_orders, cfg.seed).colors_used);
    };

    ProofReport report;
    report.method = Method::Tensor;
    if (cfg.workers > 1) {
        std::vector<std::future<std::uint64_t>> tasks;
        tasks.reserve(used.size() + 1);
        for (int id : used)
            tasks.push_back(std::async(std::launch::async, [&, id] {
                return relation_factor(csp, id, cfg);
            }));
        tasks.push_back(std::async(std::launch::async, complement_factor));
        for (std::size_t i = 0; i < used.size(); ++i)
            report.factors.push_back({"R" + std::to_string(used[i]), tasks[i].get()});
        report.factors.push_back({"G'xC_k", tasks.back().get()});
    } else {
        for (int id : used)
            report.factors.push_back(
                {"R" + std::to_string(id), relation_factor(csp, id, cfg)});
        report.factors.push_back({"G'xC_k", complement_factor()});
    }

    report.bound = product(report.factors);
    report.proved_unsat =
        report.bound < static_cast<std::uint64_t>(csp.variable_count());
    report.seed = cfg.seed;
    report.elapsed_ms = ms_since(start);
    return report;
}

ProofReport prove_tensor_fast(const BinaryCsp& csp, const ColoringConfig& cfg) {
    const auto start = Clock::now();
    const auto k = static_cast<std::uint64_t>(csp.domain_size());

    ProofReport report;
    report.method = Method::TensorFast;
    for (int id : csp.used_relation_ids()) {
        const Relation& rel = csp.relation(id);
        if (!rel.graph.loopless())
            throw MethodInapplicableError("relation " + std::to_string(id) +
                                          " has a loop");
        Digraph sub = relation_subgraph(csp, id);
        report.factors.push_back(
            {"R" + std::to_string(id),
             std::min(static_cast<std::uint64_t>(sub.active_node_count()), k)});
    }
    // C_k = I_k u N_k: the N_k part is bounded by k, the I_k part is k
    // disjoint copies of G' and needs only a coloring of G' itself.
    report.factors.push_back({"G'xN_k", k});
    Digraph gp = complement(constraint_graph(csp));
    report.factors.push_back(
        {"G'xI_k", static_cast<std::uint64_t>(
                       best_coloring(gp, cfg.random_orders, cfg.seed).colors_used)});

    report.bound = product(report.factors);
    report.proved_unsat =
        report.bound < static_cast<std::uint64_t>(csp.variable_count());
    report.seed = cfg.seed;
    report.elapsed_ms = ms_since(start);
    return report;
}

}  // namespace tensorsat
