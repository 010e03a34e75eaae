#pragma once

#include "disc/instance.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace disc {

/// A code that does not have the shape a reduction's converse direction expects.
class ExtractionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Literal {
    std::size_t var = 0;  // 0-based
    bool negated = false;

    bool operator==(const Literal&) const = default;
};

/// 3-SAT where every literal occurs once or twice.
struct Formula {
    std::size_t variables = 0;
    std::vector<std::vector<Literal>> clauses;

    [[nodiscard]] bool satisfied_by(const std::vector<bool>& assignment) const;
};

/// DIMACS CNF. Throws InputError naming the clause or literal that breaks a rule: clause width
/// above 3, a repeated literal, a literal used more than twice or never.
Formula parse_cnf(const std::string& text);
std::string to_dimacs(const Formula& f);

/// Three intervals I, J, K and four points p1..p4 with codes {I}, {I,J}, {I,J,K}, {J,K}.
struct CoveringGadget {
    std::size_t i = 0, j = 0, k = 0;
    std::array<std::size_t, 4> points{};
};

struct VariableGadget {
    CoveringGadget cover;
    std::array<std::size_t, 5> points{};
    // Index 0: positive literal, 1: negative literal.
    std::array<std::size_t, 2> zero{}, one{}, two{};
};

struct ClauseGadget {
    CoveringGadget cover;
    std::size_t p = 0;
    std::size_t p_prime = 0;
};

struct GadgetLayout {
    std::vector<VariableGadget> variables;
    std::vector<ClauseGadget> clauses;
    std::vector<std::pair<std::size_t, std::size_t>> critical_pairs;

    /// 6n + 3m.
    [[nodiscard]] std::size_t target_size() const { return 6 * variables.size() + 3 * clauses.size(); }
    /// I, J, K of every covering gadget.
    [[nodiscard]] IndexSet covering_intervals() const;
};

struct SatReduction {
    Instance1D instance;
    GadgetLayout layout;
};

/// Gadgets in 32-unit frames at scale 1: variables first, then clauses. Runs the self-audit.
SatReduction sat_to_1d(const Formula& f);

/// Checks the covering-gadget property, the exact set of critical pairs and twin-freeness.
/// Throws std::logic_error on failure.
void audit(const SatReduction& red);

/// Covering intervals plus the three intervals of each variable's true literal.
IndexSet code_from_assignment(const SatReduction& red, const std::vector<bool>& assignment);

/// Reads a truth assignment off a code of size 6n + 3m. Throws ExtractionError when the code is
/// invalid, has the wrong size or shape, or the assignment does not satisfy `f`.
std::vector<bool> extract_assignment(const SatReduction& red, const Formula& f, const IndexSet& code);

} // namespace disc
