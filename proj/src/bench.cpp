#include "disc/bench.hpp"

#include "disc/approx2.hpp"
#include "disc/continuous2d.hpp"
#include "disc/discrete2d.hpp"
#include "disc/ptas.hpp"
#include "disc/random_instances.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <thread>

namespace disc {

namespace {

using nlohmann::json;

bool unit_intervals(const Instance1D& inst) {
    return std::all_of(inst.intervals.begin(), inst.intervals.end(),
                       [&](const Interval& s) { return s.right - s.left == inst.scale; });
}

json opt_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

void require_valid(const DiscCheck& ok, const char* who) {
    if (!ok)
        throw std::logic_error(std::string(who) + " produced an invalid code: " + ok.witness->describe());
}

void verify_centers(const Instance2D& inst, Coord scale, const std::vector<Point2>& centers, const char* who) {
    if (scale % inst.scale != 0)
        throw std::logic_error(std::string(who) + " reported centers at an incompatible scale");
    Instance2D work = inst.rescaled(scale / inst.scale);
    work.squares.reset();
    require_valid(is_disc_code(work, centers), who);
}

void raise(const OracleResult& r) {
    if (r.status == OracleStatus::budget_exceeded)
        throw BudgetExceeded("exact search exceeded its budget");
    if (r.status == OracleStatus::infeasible)
        throw Infeasible("no discriminating code exists: " + r.witness->describe(), *r.witness);
}

json oracle_certificate(const OracleResult& r, std::size_t n) {
    return {{"nodes", r.stats.nodes},
            {"start_size", r.stats.start_size},
            {"elements", r.stats.elements},
            {"requirements", r.stats.requirements},
            {"lower_bound", disc_code_lower_bound(n)}};
}

SolveOutcome solve_1d(const Instance1D& inst, Algorithm algo, const SolveOptions& o) {
    SolveOutcome out;
    IndexSet chosen;
    switch (algo) {
    case Algorithm::exact: {
        auto r = min_disc_code_exact(inst, o.budget);
        raise(r);
        chosen = r.chosen;
        out.certificate = oracle_certificate(r, inst.n());
        break;
    }
    case Algorithm::approx2: {
        auto r = approx2(inst);
        chosen = r.chosen;
        json classes = json::array();
        for (const auto& q : r.classification.all_classes())
            classes.push_back(q.size());
        out.certificate = {{"s_prime", r.certificate.s_prime},
                           {"lemma3_bound", r.certificate.lemma3_bound},
                           {"final_size", r.certificate.final_size},
                           {"pruned_intervals", r.pruned_intervals},
                           {"class_sizes", classes}};
        break;
    }
    case Algorithm::ptas: {
        auto r = ptas_solve(inst, {o.eps, 20});
        chosen = r.chosen;
        out.certificate = {{"eps", o.eps},
                           {"path_weight", r.path_weight},
                           {"references", r.references},
                           {"blocks", r.decomposition.blocks.size()},
                           {"layer_sizes", r.layer_sizes}};
        break;
    }
    default:
        throw InputError(algorithm_name(algo) + " needs a 2D instance");
    }
    require_valid(is_disc_code(inst, chosen), algorithm_name(algo).c_str());
    out.size = chosen.size();
    out.solution = chosen_solution_json(chosen);
    return out;
}

SolveOutcome solve_2d(const Instance2D& inst, Algorithm algo, const SolveOptions& o) {
    SolveOutcome out;
    const auto name = algorithm_name(algo);
    switch (algo) {
    case Algorithm::exact: {
        auto r = min_disc_code_exact(inst, o.budget);
        raise(r.result);
        out.certificate = oracle_certificate(r.result, inst.n());
        if (inst.discrete()) {
            require_valid(is_disc_code(inst, r.result.chosen), name.c_str());
            out.solution = chosen_solution_json(r.result.chosen);
        } else {
            verify_centers(inst, r.scale, r.centers, name.c_str());
            out.solution = centers_solution_json(r.scale, r.centers);
        }
        out.size = r.result.chosen.size();
        return out;
    }
    case Algorithm::cont2d: {
        if (inst.discrete())
            throw InputError("cont2d needs a continuous instance");
        auto r = continuous_disc_code(inst, {o.eps, o.swap, o.fallback, o.budget});
        verify_centers(inst, r.scale, r.centers, name.c_str());
        out.certificate = {{"exact", r.exact},        {"family_a", r.family_a}, {"family_b", r.family_b},
                           {"hits_a", r.hits_a},      {"hits_b", r.hits_b},     {"cover_added", r.cover_added}};
        if (o.dump_lp)
            out.certificate["lp"] = {{"z0", opt_json(r.z0_objective)}, {"z1", opt_json(r.z1_objective)}};
        out.size = r.centers.size();
        out.solution = centers_solution_json(r.scale, r.centers);
        return out;
    }
    case Algorithm::disc2d: {
        if (!inst.discrete())
            throw InputError("disc2d needs a discrete instance");
        auto r = discrete_disc_code(inst, {o.eps, o.fallback, o.budget});
        require_valid(is_disc_code(inst, r.chosen), name.c_str());
        json lines = json::array();
        for (const auto& l : r.lines) {
            json line = {{"family", std::string(1, l.family)},
                         {"lambda", l.problem.lambda},
                         {"rects", l.problem.rects.size()},
                         {"size", l.solution.points.size()}};
            if (o.dump_lp)
                line["lp_objective"] = l.solution.lp_objective;
            lines.push_back(line);
        }
        out.certificate = {{"exact", r.exact}, {"lines", lines}, {"cover_added", r.cover_added}};
        if (o.dump_lp)
            out.certificate["lp"] = {{"z0", opt_json(r.z0_objective)}, {"z1", opt_json(r.z1_objective)}};
        out.size = r.chosen.size();
        out.solution = chosen_solution_json(r.chosen);
        return out;
    }
    default:
        throw InputError(name + " needs a 1D instance");
    }
}

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

RunRecord run_one(const std::string& id, const Instance& inst, Algorithm algo, const BenchOptions& o,
                  std::optional<std::size_t>& opt_cache, bool& opt_done, std::optional<std::size_t>& stab_cache,
                  bool& stab_done) {
    RunRecord rec;
    rec.instance = id;
    rec.algorithm = algorithm_name(algo);
    rec.n = std::visit([](const auto& i) { return i.n(); }, inst);
    if (!applicable(algo, inst)) {
        rec.status = "n/a";
        return rec;
    }
    SolveOptions so;
    so.eps = o.eps;
    so.swap = o.swap;
    so.budget = o.budget;
    auto start = std::chrono::steady_clock::now();
    try {
        rec.size = solve_instance(inst, algo, so).size;
        rec.status = "valid";
    } catch (const Infeasible&) {
        rec.status = "infeasible";
    } catch (const BudgetExceeded&) {
        rec.status = "budget";
    } catch (const std::exception&) {
        rec.status = "error";
    }
    rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (rec.status != "valid")
        return rec;

    bool stab = algo == Algorithm::cont2d;
    auto& cache = stab ? stab_cache : opt_cache;
    auto& done = stab ? stab_done : opt_done;
    if (!done) {
        cache = reference_optimum(inst, algo, o.budget);
        done = true;
    }
    rec.oracle = cache;
    if (rec.oracle && *rec.oracle > 0) {
        rec.ratio = static_cast<double>(*rec.size) / static_cast<double>(*rec.oracle);
        rec.bound = ratio_bound(algo, o.eps, *rec.oracle);
        if (*rec.ratio > *rec.bound + 1e-9)
            rec.status = "flagged";
    }
    return rec;
}

} // namespace

Algorithm parse_algorithm(const std::string& name) {
    if (name == "exact")
        return Algorithm::exact;
    if (name == "approx2")
        return Algorithm::approx2;
    if (name == "ptas")
        return Algorithm::ptas;
    if (name == "cont2d")
        return Algorithm::cont2d;
    if (name == "disc2d")
        return Algorithm::disc2d;
    throw InputError("unknown algorithm '" + name + "'");
}

std::string algorithm_name(Algorithm a) {
    switch (a) {
    case Algorithm::exact: return "exact";
    case Algorithm::approx2: return "approx2";
    case Algorithm::ptas: return "ptas";
    case Algorithm::cont2d: return "cont2d";
    case Algorithm::disc2d: return "disc2d";
    }
    return "?";
}

bool applicable(Algorithm a, const Instance& inst) {
    if (a == Algorithm::exact)
        return true;
    if (const auto* one = std::get_if<Instance1D>(&inst))
        return a == Algorithm::approx2 || (a == Algorithm::ptas && unit_intervals(*one));
    const auto& two = std::get<Instance2D>(inst);
    return (a == Algorithm::cont2d && !two.discrete()) || (a == Algorithm::disc2d && two.discrete());
}

SolveOutcome solve_instance(const Instance& inst, Algorithm algo, const SolveOptions& options) {
    if (!applicable(algo, inst))
        throw InputError(algorithm_name(algo) + " does not apply to this instance");
    if (const auto* one = std::get_if<Instance1D>(&inst))
        return solve_1d(*one, algo, options);
    return solve_2d(std::get<Instance2D>(inst), algo, options);
}

std::optional<std::size_t> reference_optimum(const Instance& inst, Algorithm algo, const OracleBudget& budget) {
    OracleResult r;
    if (const auto* one = std::get_if<Instance1D>(&inst))
        r = min_disc_code_exact(*one, budget);
    else if (algo == Algorithm::cont2d)
        r = min_stab_exact(std::get<Instance2D>(inst), budget).result;
    else
        r = min_disc_code_exact(std::get<Instance2D>(inst), budget).result;
    if (!r.optimal())
        return std::nullopt;
    return r.chosen.size();
}

double ratio_bound(Algorithm algo, double eps, std::size_t opt) {
    double inv = opt ? 1.0 / static_cast<double>(opt) : 0.0;
    switch (algo) {
    case Algorithm::exact: return 1.0;
    case Algorithm::approx2: return 2.0;
    case Algorithm::ptas: return 1.0 + eps;
    case Algorithm::cont2d: return 4.0 + eps + inv;
    case Algorithm::disc2d: return 32.0 + eps + inv;
    }
    return 0.0;
}

std::vector<std::pair<std::string, std::optional<Instance>>> load_suite(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir))
        throw InputError("suite directory '" + dir.string() + "' not found");
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".json")
            files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<std::pair<std::string, std::optional<Instance>>> out;
    for (const auto& f : files) {
        std::optional<Instance> inst;
        try {
            inst = read_instance(f);
        } catch (const std::exception&) {
        }
        out.emplace_back(f.stem().string(), std::move(inst));
    }
    return out;
}

std::vector<NamedInstance> random_suite(const std::string& kind, std::size_t count, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<NamedInstance> out;
    for (std::size_t i = 0; i < count; ++i) {
        char id[64];
        std::snprintf(id, sizeof id, "%s-%03zu", kind.c_str(), i);
        Instance inst;
        if (kind == "1d") {
            Random1DSpec spec;
            spec.n = static_cast<std::size_t>(uniform(rng, 2, 10));
            spec.m = static_cast<std::size_t>(uniform(rng, static_cast<Coord>(spec.n), 16));
            inst = random_1d(rng, spec);
        } else if (kind == "unit") {
            Random1DSpec spec;
            spec.unit = true;
            spec.n = static_cast<std::size_t>(uniform(rng, 2, 10));
            spec.m = 2 * spec.n;
            inst = random_1d(rng, spec);
        } else if (kind == "cont2d") {
            Random2DSpec spec;
            spec.n = static_cast<std::size_t>(uniform(rng, 2, 6));
            inst = random_2d(rng, spec);
        } else if (kind == "disc2d") {
            Random2DSpec spec;
            spec.n = static_cast<std::size_t>(uniform(rng, 2, 6));
            spec.squares = static_cast<std::size_t>(uniform(rng, static_cast<Coord>(spec.n), 12));
            inst = random_2d(rng, spec);
        } else {
            throw InputError("unknown random kind '" + kind + "' (expected 1d, unit, cont2d or disc2d)");
        }
        out.push_back({id, std::move(inst)});
    }
    return out;
}

std::vector<RunRecord> run_bench(const std::vector<std::pair<std::string, std::optional<Instance>>>& suite,
                                 const BenchOptions& options) {
    const std::size_t k = options.algorithms.size();
    std::vector<RunRecord> records(suite.size() * k);
    auto work = [&](std::size_t i) {
        const auto& [id, inst] = suite[i];
        if (!inst) {
            for (std::size_t a = 0; a < k; ++a) {
                auto& rec = records[i * k + a];
                rec.instance = id;
                rec.algorithm = algorithm_name(options.algorithms[a]);
                rec.status = "error";
            }
            return;
        }
        std::optional<std::size_t> opt, stab;
        bool opt_done = false, stab_done = false;
        for (std::size_t a = 0; a < k; ++a)
            records[i * k + a] = run_one(id, *inst, options.algorithms[a], options, opt, opt_done, stab, stab_done);
    };
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < suite.size();)
            work(i);
    };
    std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, suite.size()));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < jobs; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    return records;
}

void write_csv(std::ostream& out, const std::vector<RunRecord>& records, bool timing) {
    out << "instance,algorithm,n,size,oracle,ratio,bound,status";
    if (timing)
        out << ",wall_ms";
    out << '\n';
    for (const auto& r : records) {
        out << r.instance << ',' << r.algorithm << ',' << r.n << ',' << (r.size ? std::to_string(*r.size) : "")
            << ',' << (r.oracle ? std::to_string(*r.oracle) : "") << ',' << (r.ratio ? fixed(*r.ratio) : "") << ','
            << (r.bound ? fixed(*r.bound) : "") << ',' << r.status;
        if (timing)
            out << ',' << fixed(r.wall_ms);
        out << '\n';
    }
}

} // namespace disc
