#pragma once

#include "disc/instance.hpp"
#include "disc/matching.hpp"

#include <vector>

namespace disc {

/// Points grouped by their code under a selection that already separates consecutive points.
struct PointClassification {
    IndexSet unique;                // U: points whose code nobody else shares
    IndexSet uncovered;             // Q0: empty code
    std::vector<IndexSet> classes;  // Q1..Qk: shared nonempty codes, each of size >= 2
    std::size_t lemma3_bound = 0;   // sum over Q0..Qk of max(0, |Q| - 1), plus one

    /// Q0 followed by Q1..Qk.
    [[nodiscard]] std::vector<IndexSet> all_classes() const;
};

/// Throws std::logic_error when a class has two consecutive points or two class spans cross.
PointClassification classify_points(const Instance1D& inst, const IndexSet& chosen);

/// Adds intervals until every class is split, then covers a leftover point if needed.
IndexSet augment(const Instance1D& inst, const IndexSet& chosen, const PointClassification& cls);

struct Approx2Certificate {
    std::size_t s_prime = 0;
    std::size_t lemma3_bound = 0;
    std::size_t final_size = 0;
};

struct Approx2Result {
    IndexSet chosen;     // original interval indices
    IndexSet s_prime;    // edge-cover selection, original indices
    PointClassification classification;
    Approx2Certificate certificate;
    std::size_t pruned_intervals = 0;
};

/// prune -> gap graph -> minimum edge cover -> classify -> augment. Throws Infeasible when the
/// instance is not twin-free.
Approx2Result approx2(const Instance1D& inst);

} // namespace disc
