#pragma once

#include "disc/exact_oracle.hpp"
#include "disc/instance_io.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace disc {

enum class Algorithm { exact, approx2, ptas, cont2d, disc2d };

Algorithm parse_algorithm(const std::string& name);
std::string algorithm_name(Algorithm a);

struct SolveOptions {
    double eps = 0.5;
    std::size_t swap = 3;
    bool fallback = true;
    bool dump_lp = false;
    OracleBudget budget = OracleBudget::from_env();
};

struct SolveOutcome {
    std::size_t size = 0;
    nlohmann::json solution;      // verified before it is returned
    nlohmann::json certificate;
};

/// True when the algorithm is defined on this kind of instance.
bool applicable(Algorithm a, const Instance& inst);

/// Runs one algorithm and verifies its output. Throws InputError when the algorithm does not
/// apply, Infeasible for instances with twins, BudgetExceeded when the exact search gives up, and
/// std::logic_error if a solver ever returns something that is not a discriminating code.
SolveOutcome solve_instance(const Instance& inst, Algorithm algo, const SolveOptions& options);

/// Exact reference value for an algorithm's ratio: the minimum stabbing set for cont2d (its
/// guarantee is stated against that), the minimum code otherwise. Empty when the budget runs out.
std::optional<std::size_t> reference_optimum(const Instance& inst, Algorithm algo, const OracleBudget& budget);

/// Guaranteed ratio against the reference optimum.
double ratio_bound(Algorithm algo, double eps, std::size_t opt);

struct RunRecord {
    std::string instance;
    std::string algorithm;
    std::size_t n = 0;
    std::optional<std::size_t> size;
    std::optional<std::size_t> oracle;
    std::optional<double> ratio;
    std::optional<double> bound;
    std::string status;  // valid | flagged | infeasible | budget | error | n/a
    double wall_ms = 0.0;
};

struct BenchOptions {
    std::vector<Algorithm> algorithms{Algorithm::approx2, Algorithm::ptas, Algorithm::cont2d, Algorithm::disc2d};
    double eps = 0.5;
    std::size_t swap = 3;
    std::size_t jobs = 1;
    bool timing = false;
    OracleBudget budget = OracleBudget::from_env();
};

struct NamedInstance {
    std::string id;
    Instance instance;
};

/// Every *.json instance in the directory, ordered by file name. Unreadable files become
/// entries with no instance and are reported as errors by the bench.
std::vector<std::pair<std::string, std::optional<Instance>>> load_suite(const std::filesystem::path& dir);

/// kind: 1d | unit | cont2d | disc2d.
std::vector<NamedInstance> random_suite(const std::string& kind, std::size_t count, std::uint64_t seed);

/// One record per (instance, algorithm), in input order regardless of `jobs`.
std::vector<RunRecord> run_bench(const std::vector<std::pair<std::string, std::optional<Instance>>>& suite,
                                 const BenchOptions& options);

/// instance,algorithm,n,size,oracle,ratio,bound,status[,wall_ms]
void write_csv(std::ostream& out, const std::vector<RunRecord>& records, bool timing);

} // namespace disc
