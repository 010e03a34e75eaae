#include "disc/cover_lp.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace disc {

LPSolution solve_lp(const CoverLP& lp) {
    const std::size_t rows = lp.variables;           // one dual row per cover variable
    const std::size_t duals = lp.constraints.size();  // one dual column per cover constraint
    const std::size_t cols = duals + rows;

    for (std::size_t r = 0; r < duals; ++r) {
        const auto& c = lp.constraints[r];
        if (c.side_a.empty() && c.side_b.empty())
            throw Infeasible("constraint " + std::to_string(r) + " has no variables", Witness{r, std::nullopt});
        for (auto v : c.side_a)
            if (v >= rows)
                throw InputError("constraint variable out of range");
        for (auto v : c.side_b)
            if (v >= rows)
                throw InputError("constraint variable out of range");
    }

    // Row-major tableau [rows x cols] plus rhs; objective row holds reduced costs.
    std::vector<double> t(rows * cols, 0.0);
    std::vector<double> rhs(rows, 1.0);
    std::vector<double> obj(cols, 0.0);
    auto at = [&](std::size_t i, std::size_t j) -> double& { return t[i * cols + j]; };
    for (std::size_t r = 0; r < duals; ++r) {
        for (auto v : lp.constraints[r].side_a)
            at(v, r) += 1.0;
        for (auto v : lp.constraints[r].side_b)
            at(v, r) += 1.0;
        obj[r] = -1.0;
    }
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        at(i, duals + i) = 1.0;
        basis[i] = duals + i;
    }

    LPSolution sol;
    for (;;) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j)
            if (obj[j] < -lp_tolerance) {
                enter = j;
                break;
            }
        if (enter == cols)
            break;

        std::size_t leave = rows;
        double best = 0.0;
        for (std::size_t i = 0; i < rows; ++i) {
            double a = at(i, enter);
            if (a <= lp_tolerance)
                continue;
            double ratio = rhs[i] / a;
            if (leave == rows || ratio < best - lp_tolerance ||
                (std::abs(ratio - best) <= lp_tolerance && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == rows)
            throw std::logic_error("cover LP dual unbounded despite nonempty constraints");

        double p = at(leave, enter);
        for (std::size_t j = 0; j < cols; ++j)
            at(leave, j) /= p;
        rhs[leave] /= p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leave)
                continue;
            double f = at(i, enter);
            if (f == 0.0)
                continue;
            for (std::size_t j = 0; j < cols; ++j)
                at(i, j) -= f * at(leave, j);
            rhs[i] -= f * rhs[leave];
        }
        double f = obj[enter];
        for (std::size_t j = 0; j < cols; ++j)
            obj[j] -= f * at(leave, j);
        basis[leave] = enter;
        ++sol.pivots;
    }

    sol.values.resize(rows);
    for (std::size_t v = 0; v < rows; ++v) {
        double x = obj[duals + v];
        if (std::abs(x) <= lp_tolerance)
            x = 0.0;
        sol.values[v] = std::clamp(x, 0.0, 1.0);
    }
    sol.objective = 0.0;
    for (double x : sol.values)
        sol.objective += x;
    for (const auto& c : lp.constraints)
        sol.sigma.emplace_back(sigma(sol.values, c.side_a), sigma(sol.values, c.side_b));
    return sol;
}

Side side_split(const LPSolution& sol, std::size_t constraint) {
    auto [a, b] = sol.sigma.at(constraint);
    if (std::abs(a - b) <= lp_tolerance)
        return Side::both;
    return a > b ? Side::a : Side::b;
}

double sigma(const std::vector<double>& values, const IndexSet& vars) {
    double s = 0.0;
    for (auto v : vars)
        s += values[v];
    return s;
}

std::vector<double> doubled(const std::vector<double>& values) {
    std::vector<double> out(values.size());
    std::transform(values.begin(), values.end(), out.begin(), [](double x) { return std::min(2.0 * x, 1.0); });
    return out;
}

bool covers_all(const std::vector<double>& values, const std::vector<IndexSet>& sets, double tolerance) {
    return std::all_of(sets.begin(), sets.end(),
                       [&](const IndexSet& s) { return sigma(values, s) >= 1.0 - tolerance; });
}

void dump_lp(std::ostream& out, const CoverLP& lp, const LPSolution* sol) {
    out << "variables " << lp.variables << "\n";
    out << "constraints " << lp.constraints.size() << "\n";
    for (std::size_t r = 0; r < lp.constraints.size(); ++r) {
        out << "c" << r << " A:";
        for (auto v : lp.constraints[r].side_a)
            out << ' ' << v;
        out << " | B:";
        for (auto v : lp.constraints[r].side_b)
            out << ' ' << v;
        if (sol)
            out << " | sigma " << sol->sigma[r].first << ' ' << sol->sigma[r].second;
        out << "\n";
    }
    if (sol) {
        out << "objective " << sol->objective << "\n";
        for (std::size_t v = 0; v < sol->values.size(); ++v)
            if (sol->values[v] != 0.0)
                out << "x" << v << " = " << sol->values[v] << "\n";
    }
}

} // namespace disc
