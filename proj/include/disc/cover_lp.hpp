#pragma once

#include "disc/types.hpp"

#include <iosfwd>
#include <vector>

namespace disc {

inline constexpr double lp_tolerance = 1e-9;

/// sigma_a + sigma_b >= 1, where each sigma sums the variables listed on that side.
struct CoverConstraint {
    IndexSet side_a;
    IndexSet side_b;
};

/// minimize sum(x) subject to cover constraints and 0 <= x <= 1.
struct CoverLP {
    std::size_t variables = 0;
    std::vector<CoverConstraint> constraints;
};

struct LPSolution {
    std::vector<double> values;
    double objective = 0.0;
    std::vector<std::pair<double, double>> sigma;  // per constraint: (sigma_a, sigma_b)
    std::size_t pivots = 0;
};

/// Solves the relaxation through its packing dual (max sum(y), A^T y <= 1, y >= 0) with a dense
/// primal simplex under Bland's rule; the cover values are read off the final reduced costs.
/// Throws Infeasible (witness.first = constraint index) for a constraint with no variables.
LPSolution solve_lp(const CoverLP& lp);

enum class Side { a, b, both };

/// The side carrying more mass; both when |sigma_a - sigma_b| <= lp_tolerance.
Side side_split(const LPSolution& sol, std::size_t constraint);

double sigma(const std::vector<double>& values, const IndexSet& vars);
/// min(2x, 1) componentwise.
std::vector<double> doubled(const std::vector<double>& values);

/// True when every listed constraint's selected sum reaches 1 - tolerance.
bool covers_all(const std::vector<double>& values, const std::vector<IndexSet>& sets,
                double tolerance = 1e-7);

/// Plain-text dump of the program (and the solution when given).
void dump_lp(std::ostream& out, const CoverLP& lp, const LPSolution* sol = nullptr);

} // namespace disc
