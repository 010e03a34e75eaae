#include "disc/sat_reduction.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace disc {

namespace {

constexpr Coord frame_width = 32;

// Offsets inside one frame.
constexpr std::array<Coord, 4> cover_points{2, 4, 6, 10};
constexpr Interval cover_i{1, 7}, cover_j{3, 11}, cover_k{5, 30};
constexpr std::array<Coord, 5> variable_points{14, 17, 20, 23, 26};
constexpr Interval zero_pos{15, 21}, zero_neg{18, 24};
constexpr Coord one_pos = 19, two_pos = 25, one_neg = 16, two_neg = 22;
constexpr Coord clause_p = 13, clause_p_prime = 27;
constexpr std::array<Coord, 6> clause_slots{15, 17, 19, 21, 23, 25};

std::string literal_name(const Literal& l) {
    return (l.negated ? "-" : "") + std::to_string(l.var + 1);
}

} // namespace

bool Formula::satisfied_by(const std::vector<bool>& assignment) const {
    return std::all_of(clauses.begin(), clauses.end(), [&](const auto& c) {
        return std::any_of(c.begin(), c.end(), [&](const Literal& l) { return assignment.at(l.var) != l.negated; });
    });
}

Formula parse_cnf(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    Formula f;
    long declared_clauses = -1;
    std::vector<Literal> current;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head) || head[0] == 'c' || head[0] == '%')
            continue;
        if (head == "p") {
            std::string fmt;
            long v = 0, c = 0;
            if (!(ls >> fmt >> v >> c) || fmt != "cnf" || v < 0 || c < 0)
                throw InputError("line " + std::to_string(line_no) + ": malformed problem line");
            f.variables = static_cast<std::size_t>(v);
            declared_clauses = c;
            continue;
        }
        if (declared_clauses < 0)
            throw InputError("line " + std::to_string(line_no) + ": clause before problem line");
        std::istringstream toks(line);
        long lit = 0;
        std::string tok;
        while (toks >> tok) {
            try {
                std::size_t used = 0;
                lit = std::stol(tok, &used);
                if (used != tok.size())
                    throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw InputError("line " + std::to_string(line_no) + ": bad token '" + tok + "'");
            }
            if (lit == 0) {
                if (current.empty())
                    throw InputError("clause " + std::to_string(f.clauses.size() + 1) + " is empty");
                f.clauses.push_back(std::move(current));
                current.clear();
                continue;
            }
            std::size_t var = static_cast<std::size_t>(lit < 0 ? -lit : lit);
            if (var > f.variables)
                throw InputError("clause " + std::to_string(f.clauses.size() + 1) + ": variable " +
                                 std::to_string(var) + " exceeds the declared count");
            Literal l{var - 1, lit < 0};
            if (std::find(current.begin(), current.end(), l) != current.end())
                throw InputError("clause " + std::to_string(f.clauses.size() + 1) + ": literal " + literal_name(l) +
                                 " repeated");
            current.push_back(l);
            if (current.size() > 3)
                throw InputError("clause " + std::to_string(f.clauses.size() + 1) + " has more than 3 literals");
        }
    }
    if (!current.empty())
        throw InputError("last clause is not terminated by 0");
    if (declared_clauses < 0)
        throw InputError("missing problem line");
    if (static_cast<std::size_t>(declared_clauses) != f.clauses.size())
        throw InputError("problem line declares " + std::to_string(declared_clauses) + " clauses, found " +
                         std::to_string(f.clauses.size()));

    std::vector<std::array<std::size_t, 2>> uses(f.variables, {0, 0});
    for (std::size_t c = 0; c < f.clauses.size(); ++c)
        for (const auto& l : f.clauses[c])
            if (++uses[l.var][l.negated] > 2)
                throw InputError("clause " + std::to_string(c + 1) + ": literal " + literal_name(l) +
                                 " occurs more than twice");
    for (std::size_t v = 0; v < f.variables; ++v)
        for (int s = 0; s < 2; ++s)
            if (uses[v][s] == 0)
                throw InputError("literal " + literal_name({v, s == 1}) + " never occurs");
    return f;
}

std::string to_dimacs(const Formula& f) {
    std::ostringstream out;
    out << "p cnf " << f.variables << ' ' << f.clauses.size() << '\n';
    for (const auto& c : f.clauses) {
        for (const auto& l : c)
            out << literal_name(l) << ' ';
        out << "0\n";
    }
    return out.str();
}

IndexSet GadgetLayout::covering_intervals() const {
    IndexSet out;
    for (const auto& v : variables)
        out.insert(out.end(), {v.cover.i, v.cover.j, v.cover.k});
    for (const auto& c : clauses)
        out.insert(out.end(), {c.cover.i, c.cover.j, c.cover.k});
    std::sort(out.begin(), out.end());
    return out;
}

SatReduction sat_to_1d(const Formula& f) {
    SatReduction red;
    auto& inst = red.instance;
    auto& lay = red.layout;
    inst.scale = 1;

    auto add_interval = [&](Coord l, Coord r) {
        inst.intervals.push_back({l, r});
        return inst.intervals.size() - 1;
    };
    auto add_point = [&](Coord x) {
        inst.points.push_back(x);
        return inst.points.size() - 1;
    };
    auto add_cover = [&](Coord base) {
        CoveringGadget g;
        for (std::size_t t = 0; t < 4; ++t)
            g.points[t] = add_point(base + cover_points[t]);
        g.i = add_interval(base + cover_i.left, base + cover_i.right);
        g.j = add_interval(base + cover_j.left, base + cover_j.right);
        g.k = add_interval(base + cover_k.left, base + cover_k.right);
        return g;
    };

    // Clause frames the four literal intervals of each variable end in.
    std::vector<std::array<std::vector<std::size_t>, 2>> occurs(f.variables);
    for (std::size_t c = 0; c < f.clauses.size(); ++c)
        for (const auto& l : f.clauses[c])
            occurs[l.var][l.negated].push_back(c);
    std::vector<std::size_t> next_slot(f.clauses.size(), 0);
    auto clause_end = [&](std::size_t c) {
        if (next_slot[c] >= clause_slots.size())
            throw std::logic_error("clause gadget out of end slots");
        return frame_width * static_cast<Coord>(f.variables + c) + clause_slots[next_slot[c]++];
    };

    for (std::size_t v = 0; v < f.variables; ++v) {
        Coord base = frame_width * static_cast<Coord>(v);
        VariableGadget g;
        g.cover = add_cover(base);
        for (std::size_t t = 0; t < 5; ++t)
            g.points[t] = add_point(base + variable_points[t]);
        for (int s = 0; s < 2; ++s) {
            const auto& occ = occurs[v][s];
            if (occ.empty() || occ.size() > 2)
                throw InputError("every literal must occur once or twice");
            std::size_t first = occ.front(), second = occ.back();
            const Interval& zero = s == 0 ? zero_pos : zero_neg;
            g.zero[s] = add_interval(base + zero.left, base + zero.right);
            g.one[s] = add_interval(base + (s == 0 ? one_pos : one_neg), clause_end(first));
            g.two[s] = add_interval(base + (s == 0 ? two_pos : two_neg), clause_end(second));
        }
        for (std::size_t a = 0; a < 5; ++a)
            for (std::size_t b = a + 1; b < 5; ++b)
                lay.critical_pairs.emplace_back(g.points[a], g.points[b]);
        lay.variables.push_back(g);
    }
    for (std::size_t c = 0; c < f.clauses.size(); ++c) {
        Coord base = frame_width * static_cast<Coord>(f.variables + c);
        ClauseGadget g;
        g.cover = add_cover(base);
        g.p = add_point(base + clause_p);
        g.p_prime = add_point(base + clause_p_prime);
        lay.critical_pairs.emplace_back(g.p, g.p_prime);
        lay.clauses.push_back(g);
    }
    audit(red);
    return red;
}

void audit(const SatReduction& red) {
    const auto& inst = red.instance;
    const auto& lay = red.layout;
    const std::size_t n = lay.variables.size(), m = lay.clauses.size();
    if (inst.n() != 9 * n + 6 * m || inst.m() != 9 * n + 3 * m)
        throw std::logic_error("gadget counts are off");
    auto inc = incidence(inst);

    std::vector<CoveringGadget> covers;
    for (const auto& v : lay.variables)
        covers.push_back(v.cover);
    for (const auto& c : lay.clauses)
        covers.push_back(c.cover);
    for (const auto& g : covers) {
        for (std::size_t s = 0; s < inst.m(); ++s) {
            if (s == g.i || s == g.j || s == g.k)
                continue;
            std::size_t in = 0;
            for (auto p : g.points)
                in += inc.contains(s, p);
            if (in != 0 && in != 4)
                throw std::logic_error("an interval splits a covering gadget");
        }
        for (auto drop : {g.i, g.j, g.k}) {
            std::set<Bitset> codes;
            Bitset mask(inst.m());
            mask.set();
            mask.reset(drop);
            for (auto p : g.points)
                codes.insert(inc.row(p) & mask);
            if (codes.size() == 4)
                throw std::logic_error("a covering gadget stays separated without one of its intervals");
        }
    }

    Bitset cover_mask(inst.m());
    for (auto s : lay.covering_intervals())
        cover_mask.set(s);
    std::set<std::pair<std::size_t, std::size_t>> expected(lay.critical_pairs.begin(), lay.critical_pairs.end());
    for (std::size_t a = 0; a < inst.n(); ++a)
        for (std::size_t b = a + 1; b < inst.n(); ++b) {
            bool same = (inc.row(a) & cover_mask) == (inc.row(b) & cover_mask);
            if (same != expected.count({a, b}))
                throw std::logic_error("critical pairs differ from the expected set at points " + std::to_string(a) +
                                       ", " + std::to_string(b));
        }
    if (auto tf = check_twin_free(inc); !tf)
        throw std::logic_error("reduction instance is not twin-free");
}

IndexSet code_from_assignment(const SatReduction& red, const std::vector<bool>& assignment) {
    IndexSet code = red.layout.covering_intervals();
    for (std::size_t v = 0; v < red.layout.variables.size(); ++v) {
        const auto& g = red.layout.variables[v];
        int s = assignment.at(v) ? 0 : 1;
        code.insert(code.end(), {g.zero[s], g.one[s], g.two[s]});
    }
    std::sort(code.begin(), code.end());
    return code;
}

std::vector<bool> extract_assignment(const SatReduction& red, const Formula& f, const IndexSet& code) {
    const auto& lay = red.layout;
    if (code.size() != lay.target_size())
        throw ExtractionError("code has size " + std::to_string(code.size()) + ", expected " +
                              std::to_string(lay.target_size()));
    if (auto ok = is_disc_code(red.instance, code); !ok)
        throw ExtractionError("not a discriminating code: " + ok.witness->describe());
    std::set<std::size_t> in(code.begin(), code.end());
    for (auto s : lay.covering_intervals())
        if (!in.count(s))
            throw ExtractionError("covering interval " + std::to_string(s) + " missing");

    std::vector<bool> assignment(lay.variables.size());
    for (std::size_t v = 0; v < lay.variables.size(); ++v) {
        const auto& g = lay.variables[v];
        bool pos = in.count(g.zero[0]), neg = in.count(g.zero[1]);
        if (!pos && !neg)
            throw ExtractionError("variable " + std::to_string(v + 1) + " has neither zero interval");
        if (pos && neg)
            assignment[v] = in.count(g.one[0]) || in.count(g.two[0]);
        else
            assignment[v] = pos;
    }
    if (!f.satisfied_by(assignment))
        throw ExtractionError("extracted assignment does not satisfy the formula");
    return assignment;
}

} // namespace disc
