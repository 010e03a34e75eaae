#include "disc/exact_oracle.hpp"

#include "disc/stab.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <numeric>

namespace disc {

OracleBudget OracleBudget::from_env() {
    OracleBudget b;
    if (const char* s = std::getenv("DISC_ORACLE_BUDGET_SECS")) {
        char* end = nullptr;
        double v = std::strtod(s, &end);
        if (end != s && v > 0)
            b.time_limit = v;
    }
    return b;
}

std::size_t disc_code_lower_bound(std::size_t n) {
    std::size_t k = 0;
    while ((std::size_t{1} << k) < n + 1)
        ++k;
    return k;
}

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    return s < a ? UINT64_MAX : s;
}

class HittingSearch {
public:
    HittingSearch(std::vector<Bitset> reqs, std::size_t elements, const OracleBudget& budget)
        : reqs_(std::move(reqs)), elements_(elements), budget_(budget), start_(Clock::now()) {
        elem_reqs_.assign(elements_, Bitset(reqs_.size()));
        for (std::size_t r = 0; r < reqs_.size(); ++r)
            for (auto e = reqs_[r].find_first(); e != Bitset::npos; e = reqs_[r].find_next(e))
                elem_reqs_[e].set(r);
        suffix_.assign(elements_ + 1, Bitset(elements_));
        for (std::size_t i = elements_; i-- > 0;) {
            suffix_[i] = suffix_[i + 1];
            suffix_[i].set(i);
        }
        by_size_.resize(reqs_.size());
        std::iota(by_size_.begin(), by_size_.end(), 0);
        std::stable_sort(by_size_.begin(), by_size_.end(),
                         [&](std::size_t a, std::size_t b) { return reqs_[a].count() < reqs_[b].count(); });
        binom_.assign(elements_ + 1, std::vector<std::uint64_t>(elements_ + 1, 0));
        for (std::size_t n = 0; n <= elements_; ++n) {
            binom_[n][0] = 1;
            for (std::size_t k = 1; k <= n; ++k)
                binom_[n][k] = saturating_add(binom_[n - 1][k - 1], k <= n - 1 ? binom_[n - 1][k] : 0);
        }
    }

    /// Runs one size; returns true with `chosen()` filled on success.
    bool run(std::size_t k) {
        accounted_ = 0;
        chosen_.clear();
        Bitset unsat(reqs_.size());
        unsat.set();
        return dfs(0, k, unsat);
    }

    [[nodiscard]] const IndexSet& chosen() const { return chosen_; }
    [[nodiscard]] std::uint64_t accounted() const { return accounted_; }
    [[nodiscard]] std::uint64_t nodes() const { return nodes_; }

private:
    std::uint64_t choose(std::size_t n, std::size_t k) const { return k > n ? 0 : binom_[n][k]; }

    void check_clock() {
        if ((nodes_ & 0xfff) == 0) {
            double secs = std::chrono::duration<double>(Clock::now() - start_).count();
            if (secs > budget_.time_limit)
                throw BudgetExceeded("oracle time limit exceeded");
        }
    }

    bool dfs(std::size_t i, std::size_t slots, const Bitset& unsat) {
        ++nodes_;
        check_clock();
        if (unsat.none()) {
            accounted_ = saturating_add(accounted_, 1);
            return true;
        }
        if (slots == 0) {
            accounted_ = saturating_add(accounted_, 1);
            return false;
        }
        std::size_t remaining = elements_ - i;
        if (remaining < slots)
            return false;

        const Bitset& open = suffix_[i];
        std::size_t packed = 0;
        Bitset used(elements_);
        for (auto r : by_size_) {
            if (!unsat[r])
                continue;
            Bitset cand = reqs_[r] & open;
            if (cand.none() || (packed < slots + 1 && !cand.intersects(used) && ++packed > slots)) {
                accounted_ = saturating_add(accounted_, choose(remaining, slots));
                return false;
            }
            used |= cand;
        }

        chosen_.push_back(i);
        if (dfs(i + 1, slots - 1, unsat - elem_reqs_[i]))
            return true;
        chosen_.pop_back();
        return dfs(i + 1, slots, unsat);
    }

    std::vector<Bitset> reqs_;
    std::size_t elements_;
    OracleBudget budget_;
    Clock::time_point start_;
    std::vector<Bitset> elem_reqs_;
    std::vector<Bitset> suffix_;
    std::vector<std::size_t> by_size_;
    std::vector<std::vector<std::uint64_t>> binom_;
    IndexSet chosen_;
    std::uint64_t accounted_ = 0;
    std::uint64_t nodes_ = 0;
};

/// Keeps one copy of each requirement and drops those containing another.
std::vector<Bitset> minimal_requirements(std::vector<Bitset> reqs) {
    std::stable_sort(reqs.begin(), reqs.end(), [](const Bitset& a, const Bitset& b) { return a.count() < b.count(); });
    std::vector<Bitset> kept;
    for (auto& r : reqs) {
        bool dominated = std::any_of(kept.begin(), kept.end(), [&](const Bitset& k) { return k.is_subset_of(r); });
        if (!dominated)
            kept.push_back(std::move(r));
    }
    return kept;
}

std::vector<Bitset> pair_requirements(const Incidence& inc, bool with_cover) {
    std::vector<Bitset> reqs;
    if (with_cover)
        for (std::size_t p = 0; p < inc.points(); ++p)
            reqs.push_back(inc.row(p));
    for (std::size_t p = 0; p < inc.points(); ++p)
        for (std::size_t q = p + 1; q < inc.points(); ++q)
            reqs.push_back(inc.row(p) ^ inc.row(q));
    return reqs;
}

Witness requirement_witness(std::size_t req, std::size_t n, bool with_cover) {
    if (with_cover && req < n)
        return {req, std::nullopt};
    std::size_t k = with_cover ? req - n : req;
    for (std::size_t p = 0; p < n; ++p) {
        std::size_t row = n - p - 1;
        if (k < row)
            return {p, p + 1 + k};
        k -= row;
    }
    return {0, std::nullopt};
}

} // namespace

OracleResult min_hitting_set_exact(const std::vector<Bitset>& requirements, std::size_t elements,
                                   const OracleBudget& budget, HittingOptions options) {
    OracleResult res;
    for (std::size_t r = 0; r < requirements.size(); ++r)
        if (requirements[r].none()) {
            res.status = OracleStatus::infeasible;
            res.witness = Witness{r, std::nullopt};
            return res;
        }
    auto reqs = minimal_requirements(requirements);

    // Element index map; optionally drop candidates dominated by another candidate.
    std::vector<std::size_t> keep(elements);
    std::iota(keep.begin(), keep.end(), 0);
    if (options.reduce_dominated) {
        std::vector<Bitset> cover(elements, Bitset(reqs.size()));
        for (std::size_t r = 0; r < reqs.size(); ++r)
            for (auto e = reqs[r].find_first(); e != Bitset::npos; e = reqs[r].find_next(e))
                cover[e].set(r);
        keep.clear();
        for (std::size_t e = 0; e < elements; ++e) {
            if (cover[e].none())
                continue;
            bool dominated = false;
            for (std::size_t f = 0; f < elements && !dominated; ++f) {
                if (f == e || !cover[e].is_subset_of(cover[f]))
                    continue;
                dominated = cover[e] != cover[f] || f < e;
            }
            if (!dominated)
                keep.push_back(e);
        }
        for (auto& r : reqs) {
            Bitset nr(keep.size());
            for (std::size_t k = 0; k < keep.size(); ++k)
                if (r[keep[k]])
                    nr.set(k);
            r = std::move(nr);
        }
    }
    res.stats.elements = keep.size();
    res.stats.requirements = reqs.size();
    res.stats.start_size = options.start_size;
    if (keep.size() > budget.max_candidates) {
        res.status = OracleStatus::budget_exceeded;
        return res;
    }

    HittingSearch search(std::move(reqs), keep.size(), budget);
    try {
        for (std::size_t k = options.start_size; k <= keep.size(); ++k) {
            if (k > budget.max_subset_size) {
                res.status = OracleStatus::budget_exceeded;
                res.stats.nodes = search.nodes();
                return res;
            }
            if (search.run(k)) {
                for (auto i : search.chosen())
                    res.chosen.push_back(keep[i]);
                std::sort(res.chosen.begin(), res.chosen.end());
                res.stats.nodes = search.nodes();
                return res;
            }
            res.stats.accounted.emplace_back(k, search.accounted());
        }
    } catch (const BudgetExceeded&) {
        res.status = OracleStatus::budget_exceeded;
        res.stats.nodes = search.nodes();
        return res;
    }
    // Requirements are nonempty, so choosing every element succeeds before this point.
    res.status = OracleStatus::infeasible;
    return res;
}

OracleResult min_hitting_set_exact(const std::vector<std::vector<Rect>>& objects,
                                   const std::vector<Point2>& candidates, const OracleBudget& budget) {
    std::vector<Bitset> reqs;
    for (const auto& obj : objects) {
        Bitset r(candidates.size());
        for (std::size_t q = 0; q < candidates.size(); ++q)
            if (std::any_of(obj.begin(), obj.end(), [&](const Rect& rect) { return rect.contains(candidates[q]); }))
                r.set(q);
        reqs.push_back(std::move(r));
    }
    HittingOptions opts;
    opts.start_size = objects.empty() ? 0 : 1;
    return min_hitting_set_exact(reqs, candidates.size(), budget, opts);
}

OracleResult min_disc_code_exact(const Incidence& inc, const OracleBudget& budget, HittingOptions options) {
    auto reqs = pair_requirements(inc, true);
    options.start_size = std::max(options.start_size, disc_code_lower_bound(inc.points()));
    auto res = min_hitting_set_exact(reqs, inc.objects(), budget, options);
    if (res.status == OracleStatus::infeasible && res.witness)
        res.witness = requirement_witness(res.witness->first, inc.points(), true);
    return res;
}

OracleResult min_disc_code_exact(const Instance1D& inst, const OracleBudget& budget) {
    return min_disc_code_exact(incidence(inst), budget);
}

CentersResult min_disc_code_exact(const Instance2D& inst, const OracleBudget& budget) {
    CentersResult out;
    if (inst.discrete()) {
        out.result = min_disc_code_exact(incidence(inst), budget);
        out.scale = inst.scale;
        for (auto j : out.result.chosen)
            out.centers.push_back((*inst.squares)[j]);
        return out;
    }
    auto frame = WorkingFrame::from(inst);
    auto faces = face_candidates(frame);
    Instance2D work{frame.scale, frame.points, std::nullopt};
    out.result = min_disc_code_exact(incidence(work, faces), budget);
    out.scale = frame.scale;
    for (auto j : out.result.chosen)
        out.centers.push_back(faces[j]);
    return out;
}

CentersResult min_stab_exact(const Instance2D& inst, const OracleBudget& budget) {
    CentersResult out;
    Incidence inc;
    std::vector<Point2> centers;
    if (inst.discrete()) {
        inc = incidence(inst);
        centers = *inst.squares;
        out.scale = inst.scale;
    } else {
        // Open cells alone miss squares that touch two points exactly at their boundary.
        auto frame = WorkingFrame::from(inst);
        centers = face_candidates(frame);
        inc = incidence(Instance2D{frame.scale, frame.points, std::nullopt}, centers);
        out.scale = frame.scale;
    }
    HittingOptions opts;
    opts.start_size = inst.n() > 1 ? disc_code_lower_bound(inst.n() - 1) : 0;
    out.result = min_hitting_set_exact(pair_requirements(inc, false), inc.objects(), budget, opts);
    if (out.result.status == OracleStatus::infeasible && out.result.witness)
        out.result.witness = requirement_witness(out.result.witness->first, inst.n(), false);
    for (auto j : out.result.chosen)
        out.centers.push_back(centers[j]);
    return out;
}

} // namespace disc
