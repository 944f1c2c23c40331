#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tensorsat/coloring.hpp"
#include "tensorsat/csp.hpp"

namespace tensorsat {

enum class Method { Mu, Tensor, TensorFast };

std::string method_name(Method m);
Method method_from_name(std::string_view name);

/// Knobs shared by the three proving methods.
struct ColoringConfig {
    std::uint64_t seed = 0;
    int random_orders = 5;   // random greedy orderings beside the degree one
    bool tight_factors = false;  // color G(R_i) instead of counting its nodes
    int workers = 1;         // concurrent tensor-factor tasks
};

/// One multiplicative term of a chromatic bound.
struct FactorTerm {
    std::string label;
    std::uint64_t value = 0;
};

/// Outcome of one proving method on one instance. The bound is an upper
/// bound on the chromatic number of the microstructure; bound < n proves
/// the CSP unsatisfiable.
struct ProofReport {
    Method method = Method::Mu;
    std::uint64_t bound = 0;
    bool proved_unsat = false;
    std::vector<FactorTerm> factors;
    double elapsed_ms = 0.0;
    std::uint64_t seed = 0;
};

/// Thrown by prove_tensor_fast when a used relation has a loop; callers
/// wanting a verdict anyway should fall back to prove_tensor.
class MethodInapplicableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Builds the microstructure and colors it greedily; the color count is the
/// bound.
ProofReport prove_mu(const BinaryCsp& csp, const ColoringConfig& cfg = {});

/// Chromatic bound contributed by one relation's tensor term. Loopless
/// relations cost O(1): min of the active node count of G(R_i) and k.
/// Looped relations fall back to coloring G(R_i) (x) R_i.
std::uint64_t relation_factor(const BinaryCsp& csp, int rel_id,
                              const ColoringConfig& cfg = {});

/// Colors the tensor factors of the microstructure decomposition and
/// multiplies the per-term bounds: one factor per used relation plus the
/// G' (x) C_k term. Factor tasks are pure and run concurrently when
/// cfg.workers > 1 with an identical result.
ProofReport prove_tensor(const BinaryCsp& csp, const ColoringConfig& cfg = {});

/// Splits C_k into I_k and N_k so that only the complement of the
/// constraint graph needs coloring: bound = prod min{active(G(R_i)), k}
/// * k * colors(G'). Requires every used relation to be loopless.
ProofReport prove_tensor_fast(const BinaryCsp& csp, const ColoringConfig& cfg = {});

}  // namespace tensorsat
