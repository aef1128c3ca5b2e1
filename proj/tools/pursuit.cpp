// pursuit: command-line front end for the solver and claim harness.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pursuit/errors.hpp"
#include "pursuit/families.hpp"
#include "pursuit/graph_io.hpp"
#include "pursuit/harness.hpp"
#include "pursuit/solver.hpp"
#include "pursuit/strategies.hpp"
#include "pursuit/structure.hpp"

using namespace pursuit;
using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kClaimFailed = 1, kBudget = 2, kInput = 3 };

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string part; std::getline(ss, part, sep);)
        if (!part.empty()) out.push_back(part);
    return out;
}

int to_int(const std::string& s) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw InvalidParameter("not an integer: " + s);
}

std::vector<int> ints(const std::vector<std::string>& args, std::size_t from = 0) {
    std::vector<int> out;
    for (std::size_t i = from; i < args.size(); ++i) out.push_back(to_int(args[i]));
    return out;
}

// <family> [params], e.g. {"hypercube", "6"} or {"grid", "7", "7"}.
Graph family_graph(const std::vector<std::string>& spec) {
    if (spec.empty()) throw InvalidParameter("missing family name");
    const std::string& f = spec[0];
    auto p = ints(spec, f == "random" ? spec.size() : 1);
    auto need = [&](std::size_t n) {
        if (p.size() != n) throw InvalidParameter(f + " takes " + std::to_string(n) + " integer parameter(s)");
    };
    auto product_of = [&](Graph (*factor)(int)) {
        if (p.empty()) throw InvalidParameter(f + " needs at least one factor size");
        Graph g = factor(p[0]);
        for (std::size_t i = 1; i < p.size(); ++i) g = cartesian_product(g, factor(p[i]));
        return g;
    };
    if (f == "path") return need(1), path(p[0]);
    if (f == "cycle") return need(1), cycle(p[0]);
    if (f == "complete") return need(1), complete(p[0]);
    if (f == "star") return need(1), star(p[0]);
    if (f == "hypercube") return need(1), hypercube(p[0]);
    if (f == "petersen") return need(0), petersen();
    if (f == "grid") return product_of(path);
    if (f == "torus") return product_of(cycle);
    if (f == "subdivided-complete") return need(2), subdivide(complete(p[0]), p[1]);
    if (f == "plane") return need(1), incidence_graph_pg2(p[0]);
    if (f == "plane-product") {
        need(1);
        Graph g = incidence_graph_pg2(p[0]);
        return cartesian_product(g, g);
    }
    if (f == "strong-cycles") return need(2), cycle_strong_power_product(p[0], p[1]);
    if (f == "realizer") return sequence_realizer(p);
    if (f == "capture-family") return need(1), capture_family(p[0]);
    if (f == "random") {
        if (spec.size() != 4) throw InvalidParameter("random takes n p seed");
        return random_connected(to_int(spec[1]), std::stod(spec[2]), std::stoull(spec[3]));
    }
    throw InvalidParameter("unknown family: " + f);
}

struct GraphSource {
    std::string file;
    std::string family;  // "hypercube:6" or "grid:7,7"

    void add(CLI::App* app) {
        app->add_option("--graph", file, "graph file (.g6 or edge list)");
        app->add_option("--family", family, "generated graph, e.g. hypercube:6 or grid:7,7");
    }

    Graph load() const {
        if (!file.empty() && !family.empty()) throw InvalidParameter("give --graph or --family, not both");
        if (!file.empty()) return read_graph_file(file);
        if (family.empty()) throw InvalidParameter("no graph given (--graph or --family)");
        auto colon = family.find(':');
        std::vector<std::string> spec{family.substr(0, colon)};
        if (colon != std::string::npos)
            for (auto& a : split(family.substr(colon + 1), ',')) spec.push_back(a);
        return family_graph(spec);
    }
};

struct GameArgs {
    int cops = 1;
    int cop_speed = 1;
    int robber_speed = 1;
    int speed = 0;  // sets both when given
    std::string variant = "standard";
    int radius = 0;

    void add(CLI::App* app, bool with_cops) {
        if (with_cops) app->add_option("--cops,-k", cops, "number of cops");
        app->add_option("-s,--speed", speed, "cop and robber speed");
        app->add_option("--cop-speed", cop_speed);
        app->add_option("--robber-speed", robber_speed);
        app->add_option("--variant", variant, "standard, active, semi_active, restricted");
        app->add_option("--radius", radius, "capture radius");
    }

    GameConfig config() const {
        int s = speed > 0 ? speed : cop_speed;
        int t = speed > 0 ? speed : robber_speed;
        GameConfig c = speeds(s, t, cops, parse_variant(variant), radius);
        c.validate();
        return c;
    }
};

struct SolverArgs {
    std::string kernel = "auto";
    std::uint64_t budget = kDefaultBudget;
    bool no_cache = false;

    void add(CLI::App* app) {
        app->add_option("--kernel", kernel, "auto, serial or parallel");
        app->add_option("--budget", budget, "maximum solver states");
        app->add_flag("--no-cache", no_cache, "bypass the result cache");
    }

    SolveOptions options() const {
        SolveOptions o;
        o.budget = budget;
        if (kernel == "serial") o.kernel = Kernel::serial;
        else if (kernel == "parallel") o.kernel = Kernel::parallel;
        else if (kernel != "auto") throw InvalidParameter("unknown kernel: " + kernel);
        return o;
    }

    std::unique_ptr<ResultCache> cache() const {
        return no_cache ? nullptr : std::make_unique<ResultCache>(ResultCache::default_dir());
    }
};

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

// Human robber on the terminal: reads a vertex index or label per turn.
class TerminalRobber : public RobberPolicy {
public:
    std::string name() const override { return "terminal"; }

    Vertex place(const PlayView& view) override {
        show(view);
        return ask(view, "place the robber");
    }

    Vertex move(const PlayView& view) override {
        auto moves = robber_moves(view.graph, view.config, view.cops, view.robber);
        if (moves.empty()) {
            std::cout << "no legal move\n";
            return kNoMove;
        }
        show(view);
        std::cout << "moves:";
        for (Vertex v : moves) std::cout << ' ' << label(view.graph, v);
        std::cout << '\n';
        for (;;) {
            Vertex v = ask(view, "move");
            if (std::binary_search(moves.begin(), moves.end(), v)) return v;
            std::cout << "not a legal move\n";
        }
    }

private:
    static std::string label(const Graph& g, Vertex v) {
        return g.has_labels() ? g.label(v) : std::to_string(v);
    }

    static void show(const PlayView& view) {
        std::cout << "round " << view.round << ": cops at";
        for (Vertex c : view.cops) std::cout << ' ' << label(view.graph, c);
        if (view.robber != kNoMove) std::cout << ", robber at " << label(view.graph, view.robber);
        std::cout << '\n';
    }

    static Vertex ask(const PlayView& view, const char* prompt) {
        for (;;) {
            std::cout << prompt << "> " << std::flush;
            std::string line;
            if (!std::getline(std::cin, line)) throw PolicyError("input closed");
            line.erase(0, line.find_first_not_of(" \t"));
            line.erase(line.find_last_not_of(" \t\r") + 1);
            if (view.graph.has_labels())
                if (auto v = view.graph.find_label(line)) return *v;
            try {
                Vertex v = to_int(line);
                if (view.graph.in_range(v)) return v;
            } catch (const InvalidParameter&) {
            }
            std::cout << "unknown vertex: " << line << '\n';
        }
    }
};

std::unique_ptr<RobberPolicy> robber_by_name(const std::string& name, std::shared_ptr<const SolvedGame> game,
                                             std::uint64_t seed) {
    if (name == "human") return std::make_unique<TerminalRobber>();
    if (name == "optimal") return optimal_robber(game);
    if (name == "greedy") return greedy_robber();
    if (name == "random") return random_robber(seed);
    throw InvalidParameter("unknown robber policy: " + name);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Speed-(s,t) cops and robbers: solver, strategies and claim checks"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);
    int code = kOk;

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph family");
    std::vector<std::string> gen_spec;
    std::string gen_out;
    gen->add_option("spec", gen_spec, "family and parameters, e.g. hypercube 6")->required();
    gen->add_option("--out", gen_out, "output file: .g6 for graph6, anything else for an edge list");
    gen->callback([&] {
        Graph g = family_graph(gen_spec);
        if (gen_out.empty()) std::cout << write_graph6(g) << '\n';
        else write_graph_file(g, gen_out);
    });

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "solve one game");
    GraphSource solve_src;
    GameArgs solve_game;
    SolverArgs solve_opt;
    solve_src.add(solve_cmd);
    solve_game.add(solve_cmd, true);
    solve_opt.add(solve_cmd);
    solve_cmd->callback([&] {
        Graph g = solve_src.load();
        auto c = solve_game.config();
        auto cache = solve_opt.cache();
        auto r = cached_solve(g, c, solve_opt.options(), cache.get());
        auto j = solve_report(g, c, r);
        j["placement"] = r.placement;
        print(j);
    });

    // copnumber
    auto* cn_cmd = app.add_subcommand("copnumber", "least number of cops that win");
    GraphSource cn_src;
    GameArgs cn_game;
    SolverArgs cn_opt;
    int cn_kmax = 4;
    cn_src.add(cn_cmd);
    cn_game.add(cn_cmd, false);
    cn_opt.add(cn_cmd);
    cn_cmd->add_option("--k-max", cn_kmax, "largest team to try");
    cn_cmd->callback([&] {
        Graph g = cn_src.load();
        auto c = cn_game.config();
        c.cop_count = 1;
        auto cache = cn_opt.cache();
        json j = {{"graph_hash", g.hash()}, {"config", to_json(c)}, {"k_max", cn_kmax}};
        try {
            j["cop_number"] = cached_cop_number(g, c, cn_kmax, cn_opt.options(), cache.get());
        } catch (const CopNumberExceeded&) {
            j["cop_number"] = nullptr;
        }
        print(j);
    });

    // capttime
    auto* ct_cmd = app.add_subcommand("capttime", "capture time under optimal play");
    GraphSource ct_src;
    GameArgs ct_game;
    SolverArgs ct_opt;
    ct_src.add(ct_cmd);
    ct_game.add(ct_cmd, true);
    ct_opt.add(ct_cmd);
    ct_cmd->callback([&] {
        Graph g = ct_src.load();
        auto c = ct_game.config();
        auto cache = ct_opt.cache();
        auto r = cached_solve(g, c, ct_opt.options(), cache.get());
        print({{"graph_hash", g.hash()},
               {"config", to_json(c)},
               {"capture_time", r.capture_time ? json(*r.capture_time) : json(nullptr)}});
    });

    // partition
    auto* part_cmd = app.add_subcommand("partition", "cop-win partition and classic capture time");
    GraphSource part_src;
    part_src.add(part_cmd);
    part_cmd->callback([&] { print(partition_report(part_src.load())); });

    // verify
    auto* verify = app.add_subcommand("verify", "run registered claims");
    std::string verify_id = "all", verify_csv, verify_json, catalog_dir;
    std::uint64_t seed = HarnessOptions{}.seed;
    SolverArgs verify_opt;
    bool list = false;
    verify->add_option("claim", verify_id, "claim id, substring filter, or all");
    verify->add_option("--csv", verify_csv, "write a CSV report");
    verify->add_option("--json", verify_json, "write a JSON report");
    verify->add_option("--catalog-dir", catalog_dir, "directory holding connected<n>.g6");
    verify->add_option("--seed", seed);
    verify->add_flag("--list", list, "list claim ids and exit");
    verify_opt.add(verify);
    verify->callback([&] {
        if (list) {
            for (const auto& c : claim_registry())
                std::cout << c.id << "  [" << (c.kind == ClaimKind::theorem ? "theorem" : "conjecture") << "]  "
                          << c.statement << '\n';
            return;
        }
        HarnessOptions o;
        o.solve = verify_opt.options();
        auto cache = verify_opt.cache();
        o.cache = cache.get();
        o.catalog_dir = catalog_dir;
        o.seed = seed;
        std::vector<ClaimRecord> recs;
        bool single = find_claim(verify_id) != nullptr;
        if (single) recs.push_back(run_claim(verify_id, o));
        else recs = run_all(verify_id, o);
        if (recs.empty()) throw InvalidParameter("no claim matches: " + verify_id);
        for (const auto& r : recs) {
            char ms[32];
            std::snprintf(ms, sizeof ms, "%.1f", r.millis);
            std::cout << r.id << ": " << to_string(r.status) << (r.kind == ClaimKind::conjecture ? " (conjecture)" : "")
                      << "  " << ms << " ms\n";
            if (r.status != ClaimStatus::holds) std::cout << "  expected " << r.expected << "\n  computed " << r.computed << '\n';
        }
        if (!verify_csv.empty()) {
            std::ofstream out(verify_csv);
            if (!out) throw IoError("cannot write", verify_csv);
            write_csv(out, recs);
        }
        if (!verify_json.empty()) {
            std::ofstream out(verify_json);
            if (!out) throw IoError("cannot write", verify_json);
            write_json(out, recs);
        }
        if (run_failed(recs)) code = kClaimFailed;
        else if (single && recs[0].status == ClaimStatus::skipped) code = kBudget;
    });

    // explore-monotone
    auto* mono = app.add_subcommand("explore-monotone", "c_{s,s} for s = 1..min(s_max, radius)");
    GraphSource mono_src;
    SolverArgs mono_opt;
    int s_max = 4, mono_kmax = 4;
    mono_src.add(mono);
    mono_opt.add(mono);
    mono->add_option("--s-max", s_max);
    mono->add_option("--k-max", mono_kmax);
    mono->callback([&] {
        Graph g = mono_src.load();
        auto cache = mono_opt.cache();
        std::string name = mono_src.file.empty() ? mono_src.family : mono_src.file;
        auto row = explore_monotone(name, g, s_max, mono_kmax, mono_opt.options(), cache.get());
        print(to_json(row));
    });

    // scan
    auto* scan = app.add_subcommand("scan", "maximum capture time over a graph6 catalog");
    std::string scan_file;
    int scan_n = 0, scan_s = 1;
    std::size_t spot_every = 1000;
    scan->add_option("--g6", scan_file, "graph6 catalog, one graph per line ('-' for stdin)")->required();
    scan->add_option("-n", scan_n, "order of the catalog graphs")->required();
    scan->add_option("-s", scan_s, "speed");
    scan->add_option("--spot-every", spot_every, "re-solve every k-th graph with the solver");
    scan->callback([&] {
        ScanReport rep;
        if (scan_file == "-") {
            rep = scan_graph6(std::cin, scan_s, scan_n, {}, spot_every);
        } else {
            std::ifstream in(scan_file);
            if (!in) throw IoError("cannot read", scan_file);
            rep = scan_graph6(in, scan_s, scan_n, {}, spot_every);
        }
        print(to_json(rep));
    });

    // play
    auto* play = app.add_subcommand("play", "play the robber against solver-optimal cops");
    GraphSource play_src;
    GameArgs play_game;
    SolverArgs play_opt;
    std::string robber = "human", trace_out;
    int horizon = kDefaultHorizon;
    std::uint64_t play_seed = 1;
    play_src.add(play);
    play_game.add(play, true);
    play_opt.add(play);
    play->add_option("--robber", robber, "human, optimal, greedy or random");
    play->add_option("--trace", trace_out, "write the game as JSON lines");
    play->add_option("--horizon", horizon);
    play->add_option("--seed", play_seed);
    play->callback([&] {
        Graph g = play_src.load();
        auto c = play_game.config();
        auto game = std::make_shared<const SolvedGame>(g, c, play_opt.options());
        std::cout << (game->result().cop_win ? "cops win in " + std::to_string(*game->result().capture_time) + " rounds"
                                             : std::string("robber wins"))
                  << " under optimal play\n";
        auto cops = optimal_cops(game);
        auto rob = robber_by_name(robber, game, play_seed);
        auto t = simulate(g, c, *cops, *rob, horizon);
        validate_trace(g, t);
        std::cout << (t.captured() ? "captured in round " + std::to_string(t.end_round)
                                   : "survived " + std::to_string(t.end_round) + " rounds")
                  << '\n';
        if (!trace_out.empty()) {
            std::ofstream out(trace_out);
            if (!out) throw IoError("cannot write", trace_out);
            write_trace_jsonl(out, t);
        }
    });

    // replay
    auto* replay = app.add_subcommand("replay", "validate a recorded trace");
    GraphSource replay_src;
    std::string trace_in;
    replay_src.add(replay);
    replay->add_option("--trace", trace_in, "JSON-lines trace")->required();
    replay->callback([&] {
        Graph g = replay_src.load();
        std::ifstream in(trace_in);
        if (!in) throw IoError("cannot read", trace_in);
        auto t = read_trace_jsonl(in);
        validate_trace(g, t);
        print({{"rounds", t.rounds.size()},
               {"captured", t.captured()},
               {"end_round", t.end_round},
               {"invariants_held", t.invariants_held()}});
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kInput;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInput;
    }
    return code;
}
