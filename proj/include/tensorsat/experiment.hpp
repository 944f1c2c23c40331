#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "tensorsat/generators.hpp"
#include "tensorsat/methods.hpp"

namespace tensorsat {

/// One (instance, method) outcome; the atom the result tables aggregate.
struct ExperimentRecord {
    std::string family;
    int n = 0;
    double p = 0.0;
    int k = 0;
    int replicate = 0;
    std::uint64_t seed = 0;
    std::string method;
    std::uint64_t bound = 0;
    bool proved_unsat = false;
    std::string colors_metadata;
    double elapsed_ms = 0.0;
};

/// Experiment grid over the gnp-neq family. p is stepped in permille so the
/// enumeration is exact; the per-n domain-size rule caps k at
/// min(k_cap, ceil(n/8) + 2) unless an explicit k_max overrides it.
struct GridSpec {
    int n_min = 10, n_max = 50, n_step = 10;
    int p_min_permille = 100, p_max_permille = 1000, p_step_permille = 100;
    int k_min = 2;
    int k_cap = 6;
    int k_max_override = -1;
    int replicates = 20;
    std::uint64_t master_seed = 1;
    std::vector<Method> methods = {Method::Mu, Method::Tensor, Method::TensorFast};
    int workers = 1;
    int random_orders = 5;

    int k_max(int n) const;
    std::vector<GenSpec> cells() const;  // replicate 0 of every (n, p, k) cell
};

/// Runs every (cell, replicate, method), appending records to `out_path`
/// cell by cell in canonical order. If the file already holds complete
/// cells from an earlier run they are kept and skipped. Worker parallelism
/// never changes record content, only elapsed_ms.
std::vector<ExperimentRecord> run_experiment(const GridSpec& grid,
                                             const std::string& out_path);

/// CSV with the fixed column set
/// family,n,p,k,replicate,seed,method,bound,proved_unsat,elapsed_ms and a
/// deterministic metadata preamble in '#' comments.
void write_records_csv(std::span<const ExperimentRecord> records,
                       const std::string& path);
std::string records_csv_header();
std::string record_csv_line(const ExperimentRecord& record);
std::vector<ExperimentRecord> parse_records_csv(const std::string& path);

struct Aggregates {
    std::vector<std::string> method_order;  // canonical: mu, tensor, tensor-fast
    /// verdict pattern (one flag per method in method_order) -> instance count
    std::map<std::vector<bool>, int> truth_table;

    struct GroupCell {
        int instances = 0;
        std::map<std::string, int> proved;  // method -> count
    };
    std::map<int, GroupCell> by_n;
    std::map<int, GroupCell> by_p_permille;
    std::map<int, GroupCell> by_k;

    /// n -> method -> mean elapsed ms
    std::map<int, std::map<std::string, double>> mean_elapsed_by_n;

    int instances_complete = 0;
    int instances_skipped = 0;  // missing at least one method's record
};

/// Groups records by instance, drops instances missing a method (with a
/// warning on stderr), and builds the verdict truth table, the per-n/p/k
/// counts and the runtime summary.
Aggregates aggregate(std::span<const ExperimentRecord> records);

/// Human-readable tables (verdict combinations, per-n/p/k counts with 'X'
/// for empty cells, mean runtimes).
void write_aggregate_text(const Aggregates& agg, std::ostream& out);

/// Plot-data CSVs under `dir`: fraction-proved scatter series
/// (mu vs tensor, tensor vs tensor-fast, grouped by each of n, p, k) and
/// the mean-runtime-per-n series.
void write_plot_data(const Aggregates& agg, const std::string& dir);

/// Formats a double the way all CSV output does (shortest %g form).
std::string format_double(double value);

}  // namespace tensorsat
