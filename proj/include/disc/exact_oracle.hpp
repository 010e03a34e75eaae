#pragma once

#include "disc/instance.hpp"

#include <cstdint>
#include <vector>

namespace disc {

struct OracleBudget {
    std::size_t max_candidates = 4096;
    std::size_t max_subset_size = 12;
    double time_limit = 60.0;  // seconds

    /// Defaults, with the time limit overridden by DISC_ORACLE_BUDGET_SECS when set.
    static OracleBudget from_env();
};

enum class OracleStatus { optimal, infeasible, budget_exceeded };

struct OracleStats {
    std::uint64_t nodes = 0;
    std::size_t start_size = 0;       // first subset size tried
    std::size_t elements = 0;         // candidates searched after reduction
    std::size_t requirements = 0;     // requirements after reduction
    /// Subsets accounted for (visited or pruned with their whole subtree) per exhausted size.
    std::vector<std::pair<std::size_t, std::uint64_t>> accounted;
};

struct OracleResult {
    OracleStatus status = OracleStatus::optimal;
    IndexSet chosen;
    std::optional<Witness> witness;
    OracleStats stats;

    [[nodiscard]] bool optimal() const { return status == OracleStatus::optimal; }
};

struct HittingOptions {
    std::size_t start_size = 0;
    /// Drop candidates whose requirement set is contained in another's. Keeps the optimum value.
    bool reduce_dominated = true;
};

/// Minimum subset of elements 0..elements-1 meeting every requirement (a bitset of elements).
/// Iterative deepening on the subset size; within one size, include/exclude depth-first search
/// over elements in index order that abandons a branch once some unmet requirement has no
/// undecided candidate left, or once a disjoint packing of unmet requirements exceeds the
/// remaining slots. An empty requirement yields `infeasible` with its index in `witness.first`.
OracleResult min_hitting_set_exact(const std::vector<Bitset>& requirements, std::size_t elements,
                                   const OracleBudget& budget, HittingOptions options = {});

/// Rectilinear objects hit by candidate points.
OracleResult min_hitting_set_exact(const std::vector<std::vector<Rect>>& objects,
                                   const std::vector<Point2>& candidates, const OracleBudget& budget);

/// ceil(log2(n + 1)): no code with fewer objects can label n points distinctly and nonempty.
std::size_t disc_code_lower_bound(std::size_t n);

/// Minimum discriminating code over the objects of an incidence table.
OracleResult min_disc_code_exact(const Incidence& inc, const OracleBudget& budget,
                                 HittingOptions options = {});
OracleResult min_disc_code_exact(const Instance1D& inst, const OracleBudget& budget);

struct CentersResult {
    OracleResult result;
    Coord scale = 1;                 // scale of `centers`
    std::vector<Point2> centers;
};

/// Discrete instances choose among their squares; continuous ones among one square per
/// realizable point subset (centers expressed at 4x the instance scale).
CentersResult min_disc_code_exact(const Instance2D& inst, const OracleBudget& budget);

/// Minimum set of squares such that every point pair has a square holding exactly one of the
/// two (coverage not required). Candidates are the instance squares when discrete, otherwise one
/// center per point subset a closed unit square can hold.
CentersResult min_stab_exact(const Instance2D& inst, const OracleBudget& budget);

} // namespace disc
