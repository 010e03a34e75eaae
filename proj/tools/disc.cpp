#include "disc/bench.hpp"
#include "disc/grid_reduction.hpp"
#include "disc/ptas.hpp"
#include "disc/random_instances.hpp"
#include "disc/sat_reduction.hpp"
#include "disc/stab.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace disc;
using nlohmann::json;

enum Exit { ok = 0, usage = 1, infeasible = 2, budget = 3 };

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const json& j, const std::string& out) {
    if (out.empty())
        std::cout << j.dump(2) << '\n';
    else
        write_json(out, j);
}

void warn(const Instance& inst) {
    auto w = std::visit([](const auto& i) { return validate(i); }, inst);
    for (const auto& msg : w)
        std::cerr << "warning: " << msg << '\n';
}

int cmd_check(const std::string& file) {
    Instance inst = read_instance(file);
    warn(inst);
    auto verdict = std::visit([](const auto& i) { return check_twin_free(i); }, inst);
    if (verdict) {
        std::cout << "twin-free\n";
        return ok;
    }
    std::cout << "not twin-free: " << verdict.witness->describe() << '\n';
    return infeasible;
}

struct SolveArgs {
    std::string file;
    std::string algo = "exact";
    double eps = 0.5;
    std::size_t swap = 3;
    bool continuous = false;
    bool dump_lp = false;
    bool no_fallback = false;
    std::string out;
};

// Recomputes the deterministic LP cascade of a 2D pipeline and writes both programs to stderr.
void dump_cascade(const Instance& inst, Algorithm algo) {
    const auto* two = std::get_if<Instance2D>(&inst);
    if (!two || two->n() < 2 || (algo != Algorithm::cont2d && algo != Algorithm::disc2d))
        return;
    auto frame = WorkingFrame::from(*two);
    std::vector<Point2> centers;
    if (two->discrete())
        for (auto c : *two->squares)
            centers.push_back({c.x * working_factor, c.y * working_factor});
    auto c = cascade_round(frame, centers);
    std::cerr << "# Z0: one constraint per point pair\n";
    dump_lp(std::cerr, c.z0, &c.z0_solution);
    std::cerr << "# Z1: one constraint per chosen region\n";
    dump_lp(std::cerr, c.z1, &c.z1_solution);
}

int cmd_solve(const SolveArgs& a) {
    Instance inst = read_instance(a.file);
    warn(inst);
    if (a.continuous) {
        auto* one = std::get_if<Instance1D>(&inst);
        if (!one)
            throw InputError("--continuous applies to 1D instances");
        inst = continuous_to_discrete_1d(one->points, one->scale);
    }
    SolveOptions o;
    o.eps = a.eps;
    o.swap = a.swap;
    o.dump_lp = a.dump_lp;
    o.fallback = !a.no_fallback;
    auto algo = parse_algorithm(a.algo);
    auto res = solve_instance(inst, algo, o);
    if (a.dump_lp)
        dump_cascade(inst, algo);
    json j = res.solution;
    j["algorithm"] = a.algo;
    j["size"] = res.size;
    j["certificate"] = res.certificate;
    if (a.continuous)
        j["instance"] = to_json(inst);
    emit(j, a.out);
    return ok;
}

struct GenArgs {
    std::string cnf;
    std::string grid;
    bool discrete = false;
    std::string random;
    std::size_t count = 1;
    std::uint64_t seed = 1;
    std::string out_dir;
    std::string out;
};

int cmd_gen(const GenArgs& a) {
    int sources = !a.cnf.empty() + !a.grid.empty() + !a.random.empty();
    if (sources != 1)
        throw CLI::ValidationError("gen", "give exactly one of --from-cnf, --grid, --random");
    if (!a.cnf.empty()) {
        auto f = parse_cnf(slurp(a.cnf));
        auto red = sat_to_1d(f);
        json j = to_json(red.instance);
        j["target_size"] = red.layout.target_size();
        emit(j, a.out);
        return ok;
    }
    if (!a.grid.empty()) {
        auto g = grid_from_json(json::parse(slurp(a.grid)));
        emit(to_json(grid_to_2d(g, a.discrete)), a.out);
        return ok;
    }
    auto suite = random_suite(a.random, a.count, a.seed);
    if (a.out_dir.empty()) {
        if (suite.size() != 1)
            throw CLI::ValidationError("gen", "--count > 1 needs --out-dir");
        emit(to_json(suite.front().instance), a.out);
        return ok;
    }
    std::filesystem::create_directories(a.out_dir);
    for (const auto& s : suite)
        write_json(std::filesystem::path(a.out_dir) / (s.id + ".json"), to_json(s.instance));
    return ok;
}

struct BenchArgs {
    std::string suite;
    std::string random;
    std::size_t count = 10;
    std::uint64_t seed = 1;
    std::vector<std::string> algos{"approx2", "ptas", "cont2d", "disc2d"};
    double eps = 0.5;
    std::size_t swap = 3;
    std::size_t jobs = 1;
    bool timing = false;
    std::string out;
};

int cmd_bench(const BenchArgs& a) {
    if (a.suite.empty() == a.random.empty())
        throw CLI::ValidationError("bench", "give exactly one of --suite, --random");
    BenchOptions o;
    o.algorithms.clear();
    for (const auto& s : a.algos)
        o.algorithms.push_back(parse_algorithm(s));
    o.eps = a.eps;
    o.swap = a.swap;
    o.jobs = a.jobs;
    o.timing = a.timing;
    std::vector<std::pair<std::string, std::optional<Instance>>> suite;
    if (!a.suite.empty()) {
        suite = load_suite(a.suite);
    } else {
        for (auto& s : random_suite(a.random, a.count, a.seed))
            suite.emplace_back(s.id, std::move(s.instance));
    }
    auto records = run_bench(suite, o);
    if (a.out.empty()) {
        write_csv(std::cout, records, a.timing);
    } else {
        std::ofstream f(a.out, std::ios::binary);
        if (!f)
            throw InputError("cannot write '" + a.out + "'");
        write_csv(f, records, a.timing);
    }
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discriminating codes for points and intervals or unit squares"};
    app.require_subcommand(1);

    std::string check_file;
    auto* check = app.add_subcommand("check", "Report whether an instance is twin-free");
    check->add_option("instance", check_file)->required()->check(CLI::ExistingFile);

    SolveArgs sa;
    auto* solve = app.add_subcommand("solve", "Compute a verified discriminating code");
    solve->add_option("instance", sa.file)->required()->check(CLI::ExistingFile);
    solve->add_option("--algo", sa.algo, "exact, approx2, ptas, cont2d or disc2d")
        ->check(CLI::IsMember({"exact", "approx2", "ptas", "cont2d", "disc2d"}))
        ->capture_default_str();
    solve->add_option("--eps", sa.eps)->check(CLI::Range(1e-6, 1.0))->capture_default_str();
    solve->add_option("--swap", sa.swap, "local search swap size for cont2d")->check(CLI::Range(1, 6))
        ->capture_default_str();
    solve->add_flag("--continuous", sa.continuous, "1D: ignore the intervals and allow any unit interval");
    solve->add_flag("--dump-lp", sa.dump_lp, "write the LP cascade to stderr and its objectives to the certificate");
    solve->add_flag("--no-fallback", sa.no_fallback, "2D: skip the exact search on small inputs");
    solve->add_option("-o,--output", sa.out, "solution file (default: stdout)");

    GenArgs ga;
    auto* gen = app.add_subcommand("gen", "Write instances");
    gen->add_option("--from-cnf", ga.cnf, "DIMACS formula, each literal at most twice")->check(CLI::ExistingFile);
    gen->add_option("--grid", ga.grid, "{\"vertices\": [[x,y],...]}")->check(CLI::ExistingFile);
    gen->add_flag("--discrete", ga.discrete, "with --grid: one square per grid edge");
    gen->add_option("--random", ga.random, "1d, unit, cont2d or disc2d");
    gen->add_option("--count", ga.count)->capture_default_str();
    gen->add_option("--seed", ga.seed)->capture_default_str();
    gen->add_option("--out-dir", ga.out_dir);
    gen->add_option("-o,--output", ga.out);

    BenchArgs ba;
    auto* bench = app.add_subcommand("bench", "Run algorithms over a suite and write CSV");
    bench->add_option("--suite", ba.suite, "directory of instance files")->check(CLI::ExistingDirectory);
    bench->add_option("--random", ba.random, "1d, unit, cont2d or disc2d");
    bench->add_option("--count", ba.count)->capture_default_str();
    bench->add_option("--seed", ba.seed)->capture_default_str();
    bench->add_option("--algos", ba.algos)->delimiter(',')->capture_default_str();
    bench->add_option("--eps", ba.eps)->check(CLI::Range(1e-6, 1.0))->capture_default_str();
    bench->add_option("--swap", ba.swap)->check(CLI::Range(1, 6))->capture_default_str();
    bench->add_option("--jobs", ba.jobs)->check(CLI::PositiveNumber)->capture_default_str();
    bench->add_flag("--timing", ba.timing, "add a wall_ms column (output is then not reproducible)");
    bench->add_option("-o,--output", ba.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        if (*check)
            return cmd_check(check_file);
        if (*solve)
            return cmd_solve(sa);
        if (*gen)
            return cmd_gen(ga);
        return cmd_bench(ba);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const Infeasible& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return infeasible;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return budget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    }
}
