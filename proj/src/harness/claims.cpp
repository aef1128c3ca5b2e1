#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <random>

#include "pursuit/errors.hpp"
#include "pursuit/families.hpp"
#include "pursuit/graph_io.hpp"
#include "pursuit/harness.hpp"
#include "pursuit/strategies.hpp"
#include "pursuit/structure.hpp"

namespace pursuit {

namespace {

using json = nlohmann::json;

std::string show(std::optional<int> v, int k_max) {
    return v ? std::to_string(*v) : ">" + std::to_string(k_max);
}

json witness(const Graph& g, const GameConfig& c, const HarnessOptions& o) {
    json w = {{"graph6", write_graph6(g)}, {"config", to_json(c)}};
    if (substate_count(g.order(), c) <= o.solve.budget) w["solver"] = solve_report(g, c, cached_solve(g, c, o.solve, o.cache));
    return w;
}

std::optional<int> copnum(const Graph& g, GameConfig c, int k_max, const HarnessOptions& o) {
    try {
        return cached_cop_number(g, c, k_max, o.solve, o.cache);
    } catch (const CopNumberExceeded&) {
        return std::nullopt;
    }
}

SolveResult solved(const Graph& g, const GameConfig& c, const HarnessOptions& o) {
    return cached_solve(g, c, o.solve, o.cache);
}

// Claims that cannot fit the budget throw before allocating anything.
void require_budget(int order, const GameConfig& c, const HarnessOptions& o) {
    auto n = substate_count(order, c);
    if (n > o.solve.budget) throw BudgetExceeded(n, o.solve.budget);
}

// Accumulates checked items into one record.
class Rec {
public:
    explicit Rec(std::string relation) { r_.relation = std::move(relation); }

    void param(const std::string& k, json v) { r_.parameters[k] = std::move(v); }

    void item(const std::string& label, const std::string& e, const std::string& c, bool ok, json w = nullptr) {
        exp_.push_back(label + ": " + e);
        got_.push_back(label + ": " + c);
        fail(ok, label, std::move(w));
    }

    // Many instances summarized as a count.
    void tally(const std::string& label, std::size_t passed, std::size_t total, json w = nullptr) {
        exp_.push_back(label + ": " + std::to_string(total) + "/" + std::to_string(total));
        got_.push_back(label + ": " + std::to_string(passed) + "/" + std::to_string(total));
        fail(passed == total, label, std::move(w));
    }

    void note(const std::string& k, json v) { notes_[k] = std::move(v); }

    ClaimRecord finish() {
        auto join = [](const std::vector<std::string>& v) {
            std::string out;
            for (const auto& s : v) out += (out.empty() ? "" : "; ") + s;
            return out;
        };
        r_.expected = join(exp_);
        r_.computed = join(got_);
        r_.status = failed_ ? ClaimStatus::fails : ClaimStatus::holds;
        if (!notes_.empty()) r_.witness["notes"] = notes_;
        return r_;
    }

private:
    void fail(bool ok, const std::string& label, json w) {
        if (ok) return;
        if (!failed_) {
            r_.witness = w.is_object() ? std::move(w) : json::object();
            r_.witness["item"] = label;
        }
        failed_ = true;
    }

    ClaimRecord r_;
    std::vector<std::string> exp_, got_;
    json notes_ = json::object();
    bool failed_ = false;
};

Graph random_graph(std::mt19937_64& rng, int lo, int hi) {
    int n = std::uniform_int_distribution<int>(lo, hi)(rng);
    double p = std::uniform_real_distribution<double>(0.1, 0.6)(rng);
    return random_connected(n, p, rng());
}

std::optional<std::vector<Graph>> load_catalog(const HarnessOptions& o, int n) {
    if (o.catalog_dir.empty()) return std::nullopt;
    auto file = std::filesystem::path(o.catalog_dir) / ("connected" + std::to_string(n) + ".g6");
    std::ifstream in(file);
    if (!in) return std::nullopt;
    std::vector<Graph> gs;
    for_each_graph6(in, [&](const Graph& g, std::size_t) { gs.push_back(g); });
    return gs;
}

std::vector<Graph> small_catalog(const HarnessOptions& o, int max_n, std::mt19937_64& rng, int fallback) {
    std::vector<Graph> gs;
    for (int n = 1; n <= max_n; ++n)
        if (auto c = load_catalog(o, n)) gs.insert(gs.end(), c->begin(), c->end());
    if (gs.empty())
        for (int i = 0; i < fallback; ++i) gs.push_back(random_graph(rng, 1, max_n));
    return gs;
}

std::string sim_label(const StrategyTrace& t) {
    return t.cop_policy + " vs " + t.robber_policy;
}

json trace_witness(const StrategyTrace& t) {
    json w = {{"cop_policy", t.cop_policy},
              {"robber_policy", t.robber_policy},
              {"config", to_json(t.config)},
              {"end_round", t.end_round},
              {"captured", t.captured()}};
    if (auto v = t.first_violation()) w["violation"] = *v;
    return w;
}

// A robber strategy survives the horizon with its invariants intact.
void expect_escape(Rec& rec, const Graph& g, const GameConfig& c, CopPolicy& cops, RobberPolicy& robber, int horizon) {
    auto t = simulate(g, c, cops, robber, horizon);
    bool ok = !t.captured() && t.invariants_held();
    std::string got = t.captured() ? "captured at " + std::to_string(t.end_round) : "survived " + std::to_string(horizon);
    if (!t.invariants_held()) got += ", " + *t.first_violation();
    rec.item(sim_label(t), "survived " + std::to_string(horizon), got, ok, trace_witness(t));
}

// A cop strategy captures within the horizon with its invariants intact.
void expect_capture(Rec& rec, const Graph& g, const GameConfig& c, CopPolicy& cops, RobberPolicy& robber, int horizon) {
    auto t = simulate(g, c, cops, robber, horizon);
    bool ok = t.captured() && t.invariants_held();
    std::string got = t.captured() ? "captured at " + std::to_string(t.end_round) : "survived " + std::to_string(horizon);
    if (!t.invariants_held()) got += ", " + *t.first_violation();
    rec.item(sim_label(t), "captured", got, ok, trace_witness(t));
}

std::shared_ptr<const SolvedGame> solve_game(const Graph& g, const GameConfig& c, const HarnessOptions& o) {
    return std::make_shared<const SolvedGame>(g, c, o.solve);
}

// Cop number of G with speed (s, s) equal to `want`.
void expect_copnum(Rec& rec, const std::string& label, const Graph& g, const GameConfig& c, int want, int k_max,
                   const HarnessOptions& o) {
    auto k = copnum(g, c, k_max, o);
    GameConfig wc = c;
    wc.cop_count = k ? *k : k_max;
    rec.item(label, std::to_string(want), show(k, k_max), k == want, k == want ? json(nullptr) : witness(g, wc, o));
}

void expect_copnum_at_most(Rec& rec, const std::string& label, const Graph& g, const GameConfig& c, int bound,
                           const HarnessOptions& o) {
    auto k = copnum(g, c, bound, o);
    GameConfig wc = c;
    wc.cop_count = bound;
    rec.item(label, "<= " + std::to_string(bound), show(k, bound), k.has_value(), k ? json(nullptr) : witness(g, wc, o));
}

// `cops` cops lose on g.
void expect_robber_win(Rec& rec, const std::string& label, const Graph& g, GameConfig c, const HarnessOptions& o) {
    auto r = solved(g, c, o);
    rec.item(label, "robber wins", r.cop_win ? "cops win" : "robber wins", !r.cop_win,
             r.cop_win ? witness(g, c, o) : json(nullptr));
}

// --- claim bodies ------------------------------------------------------------

ClaimRecord power_equivalence(const HarnessOptions& o) {
    Rec rec("equal");
    std::mt19937_64 rng(o.seed);
    rec.param("graphs", 200);
    rec.param("order", "2..10");
    rec.param("speeds", {2, 3});
    rec.param("cops", {1, 2});
    std::size_t total = 0, agree = 0;
    json first = nullptr;
    for (int i = 0; i < 200; ++i) {
        Graph g = random_graph(rng, 2, 10);
        for (int s : {2, 3}) {
            Graph p = power(g, s);
            for (int k : {1, 2}) {
                ++total;
                auto a = solved(g, speeds(s, s, k), o);
                auto b = solved(p, speeds(1, 1, k), o);
                bool ok = a.cop_win == b.cop_win && (k != 1 || a.capture_time == b.capture_time);
                agree += ok;
                if (!ok && first.is_null()) first = witness(g, speeds(s, s, k), o);
            }
        }
    }
    rec.tally("win and capture time agree", agree, total, first);
    return rec.finish();
}

ClaimRecord retract_monotone(const HarnessOptions& o) {
    Rec rec("at_least");
    std::vector<std::pair<std::string, VertexMap>> maps;
    maps.emplace_back("K4^(2) -> K3^(2)", complete_subdivision_retraction(4, 2));
    maps.emplace_back("K5^(2) -> K4^(2)", complete_subdivision_retraction(5, 2));
    maps.emplace_back("K4^(3) -> K3^(3)", complete_subdivision_retraction(4, 3));
    std::vector<int> r21{2, 1}, r331{3, 3, 1};
    maps.emplace_back("realizer[2,1] -> block 1", realizer_retraction(r21, 1));
    maps.emplace_back("realizer[3,3,1] -> block 1", realizer_retraction(r331, 1));
    maps.emplace_back("K4^(2) x P3 -> K3^(2) x P3",
                      product_map(complete_subdivision_retraction(4, 2), identity_map(path(3))));
    for (const auto& [name, m] : maps) {
        bool retr = is_retraction(m);
        rec.item(name + " retraction", "true", retr ? "true" : "false", retr, map_report(m));
        for (int s = 1; s <= 2; ++s) {
            auto a = copnum(m.source, speeds(s, s, 1), 4, o);
            auto b = copnum(m.target, speeds(s, s, 1), 4, o);
            bool ok = a && b && *a >= *b;
            rec.item(name + " s=" + std::to_string(s), "source >= target", show(a, 4) + " vs " + show(b, 4), ok);
        }
    }
    return rec.finish();
}

ClaimRecord subdivision_sandwich(const HarnessOptions& o) {
    Rec rec("interval");
    std::mt19937_64 rng(o.seed + 1);
    rec.param("graphs", 200);
    rec.param("order", "2..6");
    rec.param("s", 2);
    std::size_t ok_count = 0;
    json first = nullptr;
    for (int i = 0; i < 200; ++i) {
        Graph g = random_graph(rng, 2, 6);
        int c = *copnum(g, speeds(1, 1, 1), 4, o);
        Graph sub = subdivide(g, 2);
        auto c2 = copnum(sub, speeds(2, 2, 1), c + 1, o);
        bool ok = c2 && *c2 >= c && *c2 <= c + 1;
        ok_count += ok;
        if (!ok && first.is_null()) first = witness(sub, speeds(2, 2, c2 ? *c2 : c + 1), o);
    }
    rec.tally("c(G) <= c_{2,2}(G^(2)) <= c(G)+1", ok_count, 200, first);
    return rec.finish();
}

ClaimRecord complete_subdivision(const HarnessOptions& o) {
    Rec rec("equal");
    for (int n = 3; n <= 6; ++n) {
        Graph g = subdivide(complete(n), 2);
        expect_copnum(rec, "c_{2,2}(K" + std::to_string(n) + "^(2))", g, speeds(2, 2, 1), 2, 3, o);
    }
    expect_copnum(rec, "c_{3,3}(K4^(3))", subdivide(complete(4), 3), speeds(3, 3, 1), 2, 3, o);
    for (auto [n, s] : {std::pair{4, 2}, {5, 2}, {6, 2}, {4, 3}}) {
        auto m = complete_subdivision_retraction(n, s);
        bool r = is_retraction(m);
        rec.item("K" + std::to_string(n) + "^(" + std::to_string(s) + ") retracts", "true", r ? "true" : "false", r,
                 map_report(m));
    }
    return rec.finish();
}

ClaimRecord variant_chain(const HarnessOptions& o) {
    Rec rec("at_most");
    std::mt19937_64 rng(o.seed + 2);
    rec.param("graphs", 100);
    rec.param("order", "2..9");
    rec.param("speeds", {2, 3});
    std::size_t total = 0, ok_count = 0;
    json first = nullptr;
    // nullopt is "more than k_max", ordered above every number.
    auto le = [](std::optional<int> a, std::optional<int> b) { return !b || (a && *a <= *b); };
    for (int i = 0; i < 100; ++i) {
        Graph g = random_graph(rng, 2, 9);
        for (int s : {2, 3}) {
            auto plain = copnum(g, speeds(s, s, 1), 4, o);
            auto semi = copnum(g, speeds(1, 1, 1, Variant::semi_active), 4, o);
            auto act = copnum(g, speeds(1, 1, 1, Variant::active), 4, o);
            bool ok = le(plain, semi) && le(semi, act);
            ++total;
            ok_count += ok;
            if (!ok && first.is_null()) {
                first = {{"graph6", write_graph6(g)}, {"s", s}, {"standard", show(plain, 4)},
                         {"semi_active", show(semi, 4)}, {"active", show(act, 4)}};
            }
        }
    }
    rec.tally("c_{s,s} <= c^- <= c'", ok_count, total, first);
    return rec.finish();
}

ClaimRecord speed_multiple_monotone(const HarnessOptions& o) {
    Rec rec("at_least");
    std::mt19937_64 rng(o.seed + 3);
    rec.param("graphs", 100);
    rec.param("order", "2..9");
    std::size_t total = 0, ok_count = 0;
    json first = nullptr;
    for (int i = 0; i < 100; ++i) {
        Graph g = random_graph(rng, 2, 9);
        for (int s : {1, 2})
            for (int k : {2, 3}) {
                auto a = copnum(g, speeds(s, s, 1), 4, o);
                auto b = copnum(g, speeds(k * s, k * s, 1), 4, o);
                bool ok = !a || (b && *b <= *a);
                ++total;
                ok_count += ok;
                if (!ok && first.is_null())
                    first = {{"graph6", write_graph6(g)}, {"s", s}, {"k", k}, {"c_s", show(a, 4)}, {"c_ks", show(b, 4)}};
            }
    }
    rec.tally("c_{s,s} >= c_{ks,ks}", ok_count, total, first);
    return rec.finish();
}

ClaimRecord monotone_conjecture(const HarnessOptions& o) {
    Rec rec("predicate");
    std::vector<std::pair<std::string, Graph>> gs;
    gs.emplace_back("petersen", petersen());
    gs.emplace_back("Q3", hypercube(3));
    gs.emplace_back("Q4", hypercube(4));
    gs.emplace_back("P5xP5", cartesian_product(path(5), path(5)));
    gs.emplace_back("C6xC6 strong", cycle_strong_power_product(2, 2));
    std::vector<int> r331{3, 3, 1};
    gs.emplace_back("realizer[3,3,1]", sequence_realizer(r331));
    std::mt19937_64 rng(o.seed + 4);
    for (int i = 0; i < 5; ++i) gs.emplace_back("tree" + std::to_string(i), random_connected(10, 0.0, rng()));
    for (int i = 0; i < 30; ++i) gs.emplace_back("random" + std::to_string(i), random_graph(rng, 4, 9));
    json rows = json::array();
    std::size_t mono = 0;
    for (const auto& [name, g] : gs) {
        auto row = explore_monotone(name, g, 4, 4, o.solve, o.cache);
        mono += row.increases.empty();
        rows.push_back(to_json(row));
    }
    std::optional<int> pet1 = rows[0]["sequence"][0].is_null() ? std::nullopt : std::optional<int>(rows[0]["sequence"][0].get<int>());
    rec.item("c_{1,1}(petersen)", "3", show(pet1, 4), pet1 == 3);
    rec.tally("nonincreasing up to the radius", mono, gs.size(), json{{"rows", rows}});
    rec.note("rows", rows);
    return rec.finish();
}

ClaimRecord strong_cycle_gadget(const HarnessOptions& o) {
    Rec rec("equal");
    for (auto [k, s] : {std::pair{1, 1}, {1, 2}, {1, 3}, {2, 1}}) {
        Graph g = cycle_strong_power_product(k, s);
        for (int sp = 1; sp <= s + 1; ++sp) {
            int want = sp <= s ? k + 1 : 1;
            expect_copnum(rec, "k=" + std::to_string(k) + " s=" + std::to_string(s) + " c_{" + std::to_string(sp) + "," +
                                   std::to_string(sp) + "}",
                          g, speeds(sp, sp, 1), want, k + 2, o);
        }
    }
    return rec.finish();
}

ClaimRecord realizer_sequence(const HarnessOptions& o) {
    Rec rec("equal");
    for (const std::vector<int>& seq : {std::vector<int>{2, 1}, std::vector<int>{3, 3, 1}, std::vector<int>{2, 2, 1}}) {
        Graph g = sequence_realizer(seq);
        std::string tag = "[";
        for (int t : seq) tag += std::to_string(t) + ",";
        tag.back() = ']';
        for (std::size_t i = 0; i < seq.size(); ++i) {
            int s = static_cast<int>(i) + 1;
            expect_copnum(rec, tag + " c_{" + std::to_string(s) + "," + std::to_string(s) + "}", g, speeds(s, s, 1), seq[i],
                          seq.front() + 1, o);
        }
    }
    return rec.finish();
}

ClaimRecord realizer_long(const HarnessOptions& o) {
    Rec rec("equal");
    std::vector<int> seq{4, 4, 3, 1};
    Graph g = sequence_realizer(seq);
    rec.param("sequence", seq);
    rec.param("order", g.order());
    require_budget(g.order(), speeds(1, 1, 4), o);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        int s = static_cast<int>(i) + 1;
        expect_copnum(rec, "c_{" + std::to_string(s) + "," + std::to_string(s) + "}", g, speeds(s, s, 1), seq[i], 5, o);
    }
    return rec.finish();
}

ClaimRecord projective_plane_product(const HarnessOptions& o) {
    Rec rec("equal");
    for (int q : {2, 3, 5}) {
        int ax = first_failing_plane_axiom(projective_plane(q));
        rec.item("PG(2," + std::to_string(q) + ") axioms", "0", std::to_string(ax), ax == 0);
    }
    Graph p2 = incidence_graph_pg2(2);
    expect_copnum(rec, "c_{2,2}(P_2)", p2, speeds(2, 2, 1), 2, 3, o);
    expect_copnum(rec, "c_{2,2}(P_3)", incidence_graph_pg2(3), speeds(2, 2, 1), 2, 3, o);
    Graph pp = cartesian_product(p2, p2);
    expect_robber_win(rec, "2 cops on P_2 x P_2", pp, speeds(2, 2, 2), o);
    GameConfig c = speeds(2, 2, 2);
    {
        auto cops = greedy_cops(2);
        auto rob = projective_product_robber(p2);
        expect_escape(rec, pp, c, *cops, *rob, kDefaultHorizon);
    }
    for (std::uint64_t seed : {1, 2, 3}) {
        auto cops = random_cops(2, o.seed + seed);
        auto rob = projective_product_robber(p2);
        expect_escape(rec, pp, c, *cops, *rob, kDefaultHorizon);
    }
    Graph p3 = incidence_graph_pg2(3);
    Graph pp3 = cartesian_product(p3, p3);
    GameConfig c3 = speeds(2, 2, 3);
    {
        auto cops = greedy_cops(3);
        auto rob = projective_product_robber(p3);
        expect_escape(rec, pp3, c3, *cops, *rob, kDefaultHorizon);
    }
    for (std::uint64_t seed : {4, 5}) {
        auto cops = random_cops(3, o.seed + seed);
        auto rob = projective_product_robber(p3);
        expect_escape(rec, pp3, c3, *cops, *rob, kDefaultHorizon);
    }
    return rec.finish();
}

ClaimRecord cartesian_retract(const HarnessOptions& o) {
    Rec rec("predicate");
    std::vector<int> r21{2, 1};
    std::vector<std::pair<std::string, VertexMap>> maps;
    maps.emplace_back("K4^(2) x K4^(2)",
                      product_map(complete_subdivision_retraction(4, 2), complete_subdivision_retraction(4, 2)));
    maps.emplace_back("K4^(2) x realizer[2,1]",
                      product_map(complete_subdivision_retraction(4, 2), realizer_retraction(r21, 1)));
    maps.emplace_back("C4 x realizer[2,1]", product_map(identity_map(cycle(4)), realizer_retraction(r21, 1)));
    for (const auto& [name, m] : maps) {
        bool r = is_retraction(m);
        rec.item(name, "retraction", r ? "retraction" : "not a retraction", r, map_report(m));
    }
    // The retract of a product is no harder for the cops.
    const auto& m = maps[2].second;
    auto a = copnum(m.source, speeds(2, 2, 1), 4, o);
    auto b = copnum(m.target, speeds(2, 2, 1), 4, o);
    rec.item("c_{2,2} source >= target", "true", show(a, 4) + " vs " + show(b, 4), a && b && *a >= *b);
    (void)o;
    return rec.finish();
}

ClaimRecord tree_products_upper(const HarnessOptions& o) {
    Rec rec("at_most");
    struct Case {
        std::string name;
        Graph g;
        int d;
        int s;
    };
    std::vector<Case> cs;
    cs.push_back({"P3^3 s=2", cartesian_power(path(3), 3), 3, 2});
    cs.push_back({"P3^3 s=3", cartesian_power(path(3), 3), 3, 3});
    cs.push_back({"P5^3 s=2", cartesian_power(path(5), 3), 3, 2});
    cs.push_back({"Q3 s=2", hypercube(3), 3, 2});
    cs.push_back({"Q4 s=2", hypercube(4), 4, 2});
    cs.push_back({"Q4 s=3", hypercube(4), 4, 3});
    cs.push_back({"P3^4 s=2", cartesian_power(path(3), 4), 4, 2});
    cs.push_back({"K_{1,3} x P3 x P2 s=2", cartesian_product(cartesian_product(star(3), path(3)), path(2)), 3, 2});
    for (const auto& c : cs) expect_copnum_at_most(rec, c.name, c.g, speeds(c.s, c.s, 1), (c.d + 1) / 2, o);
    return rec.finish();
}

ClaimRecord active_and_change(const HarnessOptions& o) {
    Rec rec("at_most");
    struct Case {
        std::string name;
        Graph g, h;
        int s;
    };
    std::vector<Case> cs;
    cs.push_back({"Q2 x Q3 s=2", hypercube(2), hypercube(3), 2});
    cs.push_back({"Q2 x Q5 s=3", hypercube(2), hypercube(5), 3});
    cs.push_back({"(C3xC4) x P2 s=2", cartesian_product(cycle(3), cycle(4)), path(2), 2});
    for (const auto& c : cs) {
        auto m = copnum(c.g, speeds(1, 1, 1, Variant::semi_active), 4, o);
        auto k = copnum(c.h, speeds(c.s, c.s, 1, Variant::restricted), 4, o);
        if (!m || !k) {
            rec.item(c.name + " factor games", "finite", show(m, 4) + ", " + show(k, 4), false);
            continue;
        }
        Graph prod = cartesian_product(c.g, c.h);
        expect_copnum_at_most(rec, c.name + " (m=" + std::to_string(*m) + ", k=" + std::to_string(*k) + ")", prod,
                              speeds(c.s, c.s, 1), *m + *k, o);
    }
    // The strategy itself, on Q5 = Q2 x Q3.
    Graph g = hypercube(2), h = hypercube(3);
    Graph prod = cartesian_product(g, h);
    GameConfig c = speeds(2, 2, 2);
    auto game = solve_game(prod, c, o);
    {
        auto cops = two_phase_product_cops(g, h, 2, 1, 1);
        auto rob = optimal_robber(game);
        expect_capture(rec, prod, c, *cops, *rob, 100);
    }
    {
        auto cops = two_phase_product_cops(g, h, 2, 1, 1);
        auto rob = greedy_robber();
        expect_capture(rec, prod, c, *cops, *rob, 100);
    }
    for (std::uint64_t seed : {1, 2, 3}) {
        auto cops = two_phase_product_cops(g, h, 2, 1, 1);
        auto rob = random_robber(o.seed + seed);
        expect_capture(rec, prod, c, *cops, *rob, 100);
    }
    return rec.finish();
}

ClaimRecord distance_half(const HarnessOptions& o) {
    Rec rec("predicate");
    Graph g = cartesian_product(path(9), path(9));
    const int s = 2;
    rec.param("graph", "P9xP9");
    rec.param("s", s);
    std::size_t total = 0, held = 0;
    json first = nullptr;
    for (Vertex cop = 0; cop < g.order(); ++cop)
        for (Vertex r = 0; r < g.order(); ++r) {
            if (r == cop) continue;
            for (Vertex a : g.neighbors(r))
                for (Vertex b : g.neighbors(a)) {
                    std::vector<Vertex> walk{r, a, b};
                    ++total;
                    bool ok = distance_half_lemma_holds(g, s, cop, walk);
                    held += ok;
                    if (!ok && first.is_null()) first = {{"cop", cop}, {"walk", walk}};
                }
        }
    rec.tally("walks", held, total, first);
    (void)o;
    return rec.finish();
}

ClaimRecord large_grids_two_factors(const HarnessOptions& o) {
    Rec rec("equal");
    struct Case {
        std::string name;
        Graph g;
        int s;
    };
    std::vector<Case> cs;
    cs.push_back({"P5xP5 s=2", cartesian_product(path(5), path(5)), 2});
    cs.push_back({"P7xP7 s=2", cartesian_product(path(7), path(7)), 2});
    cs.push_back({"P9xP9 s=2", cartesian_product(path(9), path(9)), 2});
    cs.push_back({"P7xP7 s=3", cartesian_product(path(7), path(7)), 3});
    cs.push_back({"P9xP9 s=3", cartesian_product(path(9), path(9)), 3});
    cs.push_back({"K_{1,3}xP5 s=2", cartesian_product(star(3), path(5)), 2});
    for (const auto& c : cs) expect_copnum(rec, c.name, c.g, speeds(c.s, c.s, 1), 1, 3, o);
    for (const auto& c : cs) {
        if (!c.g.has_coords()) continue;
        GameConfig cfg = speeds(c.s, c.s, 1);
        {
            auto cop = grid_single_cop(c.s);
            auto rob = optimal_robber(solve_game(c.g, cfg, o));
            expect_capture(rec, c.g, cfg, *cop, *rob, kDefaultHorizon);
        }
        {
            auto cop = grid_single_cop(c.s);
            auto rob = greedy_robber();
            expect_capture(rec, c.g, cfg, *cop, *rob, kDefaultHorizon);
        }
    }
    return rec.finish();
}

ClaimRecord grid_3d_speed2(const HarnessOptions& o) {
    Rec rec("equal");
    Graph g = cartesian_power(path(5), 3);
    expect_copnum(rec, "c_{2,2}(P5^3)", g, speeds(2, 2, 1), 2, 3, o);
    GameConfig c = speeds(2, 2, 1);
    {
        auto cops = optimal_cops(solve_game(g, c, o));
        auto rob = grid_blocking_robber(2);
        expect_escape(rec, g, c, *cops, *rob, kDefaultHorizon);
    }
    Graph g5 = cartesian_power(path(9), 5);
    GameConfig c5 = speeds(2, 2, 2);
    {
        auto cops = greedy_cops(2);
        auto rob = grid_blocking_robber(2);
        expect_escape(rec, g5, c5, *cops, *rob, 100);
    }
    for (std::uint64_t seed : {1, 2}) {
        auto cops = random_cops(2, o.seed + seed);
        auto rob = grid_blocking_robber(2);
        expect_escape(rec, g5, c5, *cops, *rob, 100);
    }
    return rec.finish();
}

ClaimRecord hypercube_upper(const HarnessOptions& o) {
    Rec rec("at_most");
    for (auto [d, s] : {std::pair{4, 2}, {5, 2}, {6, 2}, {6, 3}, {7, 3}}) {
        int bound = (d - 2 * s + 4) / 2;  // ceil((d - 2s + 3) / 2)
        expect_copnum_at_most(rec, "Q" + std::to_string(d) + " s=" + std::to_string(s), hypercube(d), speeds(s, s, 1),
                              bound, o);
    }
    return rec.finish();
}

ClaimRecord tree_products_speed2_lower(const HarnessOptions& o) {
    Rec rec("at_least");
    auto at_least = [&](const std::string& name, const Graph& g, int bound) {
        auto k = copnum(g, speeds(2, 2, 1), bound, o);
        bool ok = !k || *k >= bound;
        rec.item(name, ">= " + std::to_string(bound), show(k, bound), ok, ok ? json(nullptr) : witness(g, speeds(2, 2, *k), o));
    };
    at_least("P3^4", cartesian_power(path(3), 4), 2);
    at_least("K_{1,3} x P3 x P3 x P2", cartesian_product(cartesian_product(star(3), path(3)), cartesian_product(path(3), path(2))), 2);
    for (int d = 4; d <= 6; ++d) at_least("Q" + std::to_string(d), hypercube(d), d / 2);
    GameConfig c2 = speeds(2, 2, 2);
    Graph q6 = hypercube(6);
    {
        auto cops = optimal_cops(solve_game(q6, c2, o));
        auto rob = hypercube_weight_robber();
        expect_escape(rec, q6, c2, *cops, *rob, kDefaultHorizon);
    }
    for (auto [d, k] : {std::pair{6, 2}, {8, 3}, {10, 4}}) {
        Graph q = hypercube(d);
        GameConfig c = speeds(2, 2, k);
        {
            auto cops = greedy_cops(k);
            auto rob = hypercube_weight_robber();
            expect_escape(rec, q, c, *cops, *rob, kDefaultHorizon);
        }
        for (std::uint64_t seed : {1, 2}) {
            auto cops = random_cops(k, o.seed + seed);
            auto rob = hypercube_weight_robber();
            expect_escape(rec, q, c, *cops, *rob, kDefaultHorizon);
        }
    }
    return rec.finish();
}

ClaimRecord hypercube_speed2(const HarnessOptions& o) {
    Rec rec("equal");
    const int want[] = {1, 2, 2, 2, 3};
    for (int d = 2; d <= 6; ++d)
        expect_copnum(rec, "c_{2,2}(Q" + std::to_string(d) + ")", hypercube(d), speeds(2, 2, 1), want[d - 2], 4, o);
    return rec.finish();
}

ClaimRecord q9_one_cop_escape(const HarnessOptions& o) {
    Rec rec("predicate");
    expect_robber_win(rec, "1 cop on Q9, s=2", hypercube(9), speeds(2, 2, 1), o);
    return rec.finish();
}

ClaimRecord hypercube_lower_bound_general(const HarnessOptions& o) {
    // Smallest instance with k = 2 at speed 2: d > 2s + 2k + k log2(2s+1).
    Rec rec("predicate");
    rec.param("d", 13);
    rec.param("k", 2);
    rec.param("s", 2);
    require_budget(1 << 13, speeds(2, 2, 2), o);
    expect_robber_win(rec, "2 cops on Q13, s=2", hypercube(13), speeds(2, 2, 2), o);
    return rec.finish();
}

ClaimRecord rel_prime(const HarnessOptions& o) {
    Rec rec("equal");
    for (auto [a, b] : {std::pair{3, 4}, {4, 5}, {5, 6}, {9, 10}}) {
        Graph g = cartesian_product(cycle(a), cycle(b));
        expect_copnum(rec, "c^-(C" + std::to_string(a) + "xC" + std::to_string(b) + ")", g,
                      speeds(1, 1, 1, Variant::semi_active), 2, 3, o);
    }
    return rec.finish();
}

ClaimRecord two_cycles(const HarnessOptions& o) {
    Rec rec("equal");
    expect_copnum(rec, "c_{2,2}(C9xC10)", cartesian_product(cycle(9), cycle(10)), speeds(2, 2, 1), 2, 3, o);
    expect_copnum(rec, "c_{3,3}(C13xC14)", cartesian_product(cycle(13), cycle(14)), speeds(3, 3, 1), 2, 3, o);
    return rec.finish();
}

ClaimRecord two_cycles_k2(const HarnessOptions& o) {
    Rec rec("at_least");
    Graph g = cartesian_product(cartesian_product(cycle(3), cycle(4)), cartesian_product(cycle(5), cycle(7)));
    rec.param("graph", "C3xC4xC5xC7");
    require_budget(g.order(), speeds(2, 2, 4), o);
    expect_copnum(rec, "c_{2,2}", g, speeds(2, 2, 1), 4, 4, o);
    return rec.finish();
}

ClaimRecord grid_three_cops(const HarnessOptions& o) {
    Rec rec("equal");
    for (int n : {7, 8, 9})
        expect_copnum(rec, "c_{2,2}(P" + std::to_string(n) + "xP" + std::to_string(n) + ")",
                      cartesian_product(path(n), path(n)), speeds(2, 2, 1), 3, 4, o);
    return rec.finish();
}

ClaimRecord torus_evidence(const HarnessOptions& o) {
    Rec rec("equal");
    for (int n : {7, 8, 9})
        expect_copnum(rec, "c_{2,2}(C" + std::to_string(n) + "xC" + std::to_string(n) + ")",
                      cartesian_product(cycle(n), cycle(n)), speeds(2, 2, 1), 3, 4, o);
    return rec.finish();
}

ClaimRecord copwin_characterization(const HarnessOptions& o) {
    Rec rec("equal");
    std::mt19937_64 rng(o.seed + 5);
    auto gs = small_catalog(o, 7, rng, 300);
    rec.param("graphs", gs.size());
    std::size_t agree = 0;
    json first = nullptr;
    for (const auto& g : gs) {
        bool solver = solved(g, speeds(1, 1, 1), o).cop_win;
        bool dism = copwin_ordering(g).has_value();
        agree += solver == dism;
        if (solver != dism && first.is_null()) first = witness(g, speeds(1, 1, 1), o);
    }
    rec.tally("cop-win iff dismantlable", agree, gs.size(), first);
    return rec.finish();
}

ClaimRecord capture_time_partition(const HarnessOptions& o) {
    Rec rec("equal");
    std::mt19937_64 rng(o.seed + 6);
    auto gs = small_catalog(o, 7, rng, 300);
    for (int i = 0; i < 100; ++i) gs.push_back(random_graph(rng, 8, 14));
    std::size_t total = 0, agree = 0;
    json first = nullptr;
    for (const auto& g : gs) {
        auto r = solved(g, speeds(1, 1, 1), o);
        if (!r.cop_win) continue;
        ++total;
        int p = capture_time_via_partition(g);
        agree += p == *r.capture_time;
        if (p != *r.capture_time && first.is_null()) {
            first = witness(g, speeds(1, 1, 1), o);
            first["partition"] = p;
        }
    }
    rec.tally("partition capture time = solver capture time", agree, total, first);
    return rec.finish();
}

ClaimRecord capture_time_unique_corner(const HarnessOptions& o) {
    Rec rec("equal");
    std::mt19937_64 rng(o.seed + 7);
    auto gs = small_catalog(o, 7, rng, 300);
    for (int n = 10; n <= 30; ++n) gs.push_back(power(capture_family(n), 2));
    std::size_t total = 0, agree = 0;
    json first = nullptr;
    for (const auto& g : gs) {
        if (g.order() < 3) continue;
        auto cs = corners(g);
        if (cs.size() != 1) continue;
        auto r = solved(g, speeds(1, 1, 1), o);
        if (!r.cop_win || *r.capture_time < 2) continue;
        Graph h = remove_vertex(g, cs[0]);
        auto rh = solved(h, speeds(1, 1, 1), o);
        ++total;
        bool ok = rh.cop_win && *r.capture_time == *rh.capture_time + 1;
        agree += ok;
        if (!ok && first.is_null()) first = witness(g, speeds(1, 1, 1), o);
    }
    rec.tally("capt(G) = capt(G - v) + 1", agree, total, first);
    return rec.finish();
}

ClaimRecord capture_family_speed2(const HarnessOptions& o) {
    Rec rec("equal");
    for (int n = 9; n <= 20; ++n) {
        Graph g = capture_family(n);
        auto r = solved(g, speeds(2, 2, 1), o);
        std::string got = r.cop_win ? std::to_string(*r.capture_time) : "robber wins";
        bool ok = r.cop_win && *r.capture_time == n - 7;
        rec.item("capt_2(G" + std::to_string(n) + ")", std::to_string(n - 7), got, ok,
                 ok ? json(nullptr) : witness(g, speeds(2, 2, 1), o));
    }
    std::size_t part_ok = 0, corner_ok = 0, corner_total = 0;
    json part_first = nullptr, corner_first = nullptr;
    for (int n = 9; n <= 60; ++n) {
        Graph g = capture_family(n);
        Graph p = power(g, 2);
        int c = capture_time_via_partition(p);
        part_ok += c == n - 7;
        if (c != n - 7 && part_first.is_null()) part_first = {{"n", n}, {"partition", c}};
        if (n < 10) continue;
        ++corner_total;
        auto cs = corners(p);
        Vertex vn = n - 1, vn2 = n - 3;
        auto by = cs.size() == 1 ? cornering_vertices(p, cs[0]) : std::vector<Vertex>{};
        bool ok = cs == std::vector<Vertex>{vn} && by == std::vector<Vertex>{vn2};
        corner_ok += ok;
        if (!ok && corner_first.is_null()) corner_first = {{"n", n}, {"corners", cs}, {"cornered_by", by}};
    }
    rec.tally("capt_1(G_n^2) = n - 7 for n = 9..60", part_ok, 52, part_first);
    rec.tally("v_n is the only corner of G_n^2, cornered only by v_{n-2}", corner_ok, corner_total, corner_first);

    Graph g9 = power(capture_family(9), 2);
    auto part = copwin_partition(g9);
    auto names = [&](const std::vector<Vertex>& vs) {
        std::vector<std::string> out;
        for (Vertex v : vs) out.push_back(g9.label(v));
        std::sort(out.begin(), out.end());
        std::string s = "{";
        for (const auto& x : out) s += (s.size() > 1 ? "," : "") + x;
        return s + "}";
    };
    std::vector<std::string> want{"{h2,v9}", "{h1,q,t,v8,w,y}", "{x}"};
    std::string got, exp;
    bool ok = part && part->layers.size() == 3;
    if (part)
        for (std::size_t i = 0; i < part->layers.size(); ++i) {
            got += (i ? " " : "") + names(part->layers[i]);
            if (i < want.size()) ok = ok && names(part->layers[i]) == want[i];
        }
    for (std::size_t i = 0; i < want.size(); ++i) exp += (i ? " " : "") + want[i];
    rec.item("partition of G9^2", exp, part ? got : "not cop-win", ok);
    return rec.finish();
}

ClaimRecord capt_power_identity(const HarnessOptions& o) {
    Rec rec("equal");
    std::mt19937_64 rng(o.seed + 8);
    std::size_t total = 0, agree = 0;
    json first = nullptr;
    for (int i = 0; i < 150; ++i) {
        Graph g = random_graph(rng, 2, 10);
        for (int s : {2, 3}) {
            auto a = solved(g, speeds(s, s, 1), o);
            if (!a.cop_win) continue;
            auto b = solved(power(g, s), speeds(1, 1, 1), o);
            ++total;
            bool ok = b.cop_win && a.capture_time == b.capture_time;
            agree += ok;
            if (!ok && first.is_null()) first = witness(g, speeds(s, s, 1), o);
        }
    }
    rec.tally("capt_s(G) = capt_1(G^s)", agree, total, first);
    return rec.finish();
}

ClaimRecord capt_speed_multiple(const HarnessOptions& o) {
    Rec rec("at_least");
    std::mt19937_64 rng(o.seed + 9);
    std::size_t total = 0, agree = 0;
    json first = nullptr;
    for (int i = 0; i < 150; ++i) {
        Graph g = random_graph(rng, 2, 10);
        for (auto [s, k] : {std::pair{1, 2}, {1, 3}, {2, 2}}) {
            auto a = solved(g, speeds(s, s, 1), o);
            if (!a.cop_win) continue;
            auto b = solved(g, speeds(k * s, k * s, 1), o);
            ++total;
            bool ok = b.cop_win && *a.capture_time >= *b.capture_time;
            agree += ok;
            if (!ok && first.is_null()) first = witness(g, speeds(k * s, k * s, 1), o);
        }
    }
    rec.tally("capt_s(G) >= capt_{ks}(G)", agree, total, first);
    return rec.finish();
}

ClaimRecord regular_product_of_trees(const HarnessOptions& o) {
    Rec rec("equal");
    struct Case {
        std::string name;
        Graph g;
        int factors;
    };
    std::vector<Case> cs;
    cs.push_back({"P2^2", cartesian_power(path(2), 2), 2});
    cs.push_back({"P2^3", cartesian_power(path(2), 3), 3});
    cs.push_back({"P2^4", cartesian_power(path(2), 4), 4});
    cs.push_back({"P3^2", cartesian_power(path(3), 2), 2});
    cs.push_back({"P3^3", cartesian_power(path(3), 3), 3});
    cs.push_back({"P3xP4", cartesian_product(path(3), path(4)), 2});
    cs.push_back({"K_{1,3}xP3", cartesian_product(star(3), path(3)), 2});
    for (const auto& c : cs) expect_copnum(rec, c.name, c.g, speeds(1, 1, 1), (c.factors + 2) / 2, 4, o);
    return rec.finish();
}

ClaimRecord cartesian_sum_bound(const HarnessOptions& o) {
    Rec rec("at_most");
    std::mt19937_64 rng(o.seed + 10);
    std::size_t ok_count = 0;
    json first = nullptr;
    for (int i = 0; i < 60; ++i) {
        Graph g = random_graph(rng, 2, 5), h = random_graph(rng, 2, 5);
        int a = *copnum(g, speeds(1, 1, 1), 3, o), b = *copnum(h, speeds(1, 1, 1), 3, o);
        Graph p = cartesian_product(g, h);
        auto c = copnum(p, speeds(1, 1, 1), a + b, o);
        ok_count += c.has_value();
        if (!c && first.is_null()) first = witness(p, speeds(1, 1, a + b), o);
    }
    rec.tally("c(GxH) <= c(G) + c(H)", ok_count, 60, first);
    return rec.finish();
}

ClaimRecord regular_product_of_cycles(const HarnessOptions& o) {
    Rec rec("equal");
    for (auto [a, b] : {std::pair{4, 4}, {4, 5}, {5, 5}})
        expect_copnum(rec, "C" + std::to_string(a) + "xC" + std::to_string(b), cartesian_product(cycle(a), cycle(b)),
                      speeds(1, 1, 1), 3, 4, o);
    return rec.finish();
}

// Maximum capture time over a catalog of connected graphs of one order.
ScanReport scan_catalog(const HarnessOptions& o, int n, int s, Rec& rec) {
    auto file = std::filesystem::path(o.catalog_dir) / ("connected" + std::to_string(n) + ".g6");
    std::ifstream in(file);
    if (o.catalog_dir.empty() || !in) throw IoError("catalog not found", file.string());
    auto rep = scan_graph6(in, s, n, o.solve, 1000);
    rec.param("catalog", file.filename().string());
    rec.param("records", rep.records);
    rec.note("scan", to_json(rep));
    if (rep.spot_mismatches || rep.malformed || rep.wrong_order || rep.disconnected)
        rec.item("catalog integrity", "clean", "spot mismatches " + std::to_string(rep.spot_mismatches), false, to_json(rep));
    return rep;
}

ClaimRecord capt1_star_7(const HarnessOptions& o) {
    Rec rec("equal");
    rec.param("s", 1);
    auto rep = scan_catalog(o, 7, 1, rec);
    auto m = rep.max_capture_time;
    rec.item("capt*_1(7)", "3", m ? std::to_string(*m) : "none", m == 3, to_json(rep));
    return rec.finish();
}

ClaimRecord capt2_star_9(const HarnessOptions& o) {
    Rec rec("interval");
    rec.param("s", 2);
    auto rep = scan_catalog(o, 9, 2, rec);
    auto m = rep.max_capture_time;
    rec.item("capt*_2(9)", "[2,5]", m ? std::to_string(*m) : "none", m && *m >= 2 && *m <= 5, to_json(rep));
    return rec.finish();
}

ClaimRecord capt2_star_10(const HarnessOptions& o) {
    Rec rec("interval");
    rec.param("s", 2);
    auto file = std::filesystem::path(o.catalog_dir) / "connected10.g6";
    if (o.catalog_dir.empty() || !std::filesystem::exists(file)) {
        // About 11.7 million graphs; counted as the state budget of a full scan.
        std::uint64_t need = std::uint64_t{11716571} * substate_count(10, speeds(2, 2, 1));
        throw BudgetExceeded(need, o.solve.budget);
    }
    auto rep = scan_catalog(o, 10, 2, rec);
    auto m = rep.max_capture_time;
    rec.item("capt*_2(10)", "[3,6]", m ? std::to_string(*m) : "none", m && *m >= 3 && *m <= 6, to_json(rep));
    return rec.finish();
}

ClaimRecord distance_variant(const HarnessOptions& o) {
    Rec rec("at_most");
    std::mt19937_64 rng(o.seed + 11);
    std::size_t total = 0, ok_count = 0;
    json first = nullptr;
    for (int i = 0; i < 100; ++i) {
        Graph g = random_graph(rng, 2, 9);
        for (int s : {2, 3}) {
            auto a = copnum(g, speeds(1, 1, 1, Variant::standard, s - 1), 4, o);
            auto b = copnum(g, speeds(s, s, 1), 4, o);
            ++total;
            bool ok = !b || (a && *a <= *b);
            ok_count += ok;
            if (!ok && first.is_null()) first = {{"graph6", write_graph6(g)}, {"s", s}, {"radius_game", show(a, 4)}, {"speed_game", show(b, 4)}};
        }
    }
    rec.tally("c_{1,1} with radius s-1 <= c_{s,s}", ok_count, total, first);
    return rec.finish();
}

ClaimRecord asymptotic_statements(const HarnessOptions& o) {
    // No finite instance decides a statement about n -> infinity; the closest
    // computable instance is the 2-cop game on Q13 at speed 2.
    require_budget(1 << 13, speeds(2, 2, 2), o);
    Rec rec("predicate");
    expect_robber_win(rec, "2 cops on Q13, s=2", hypercube(13), speeds(2, 2, 2), o);
    return rec.finish();
}

std::vector<ClaimSpec> build_registry() {
    using K = ClaimKind;
    std::vector<ClaimSpec> r;
    auto add = [&](std::string id, K kind, std::string statement, ClaimRecord (*fn)(const HarnessOptions&)) {
        r.push_back({std::move(id), std::move(statement), kind, "", fn});
    };
    add("power_equivalence", K::theorem, "c_{s,s}(G) = c(G^s), and capt_s(G) = capt(G^s) when G^s is cop-win", power_equivalence);
    add("retract_monotone", K::theorem, "H a retract of G implies c_{s,s}(H) <= c_{s,s}(G)", retract_monotone);
    add("subdivision_sandwich", K::theorem, "c(G) <= c_{s,s}(G^(s)) <= c(G) + 1", subdivision_sandwich);
    add("complete_subdivision", K::theorem, "c_{s,s}(K_n^(s)) = 2 for n >= 3", complete_subdivision);
    add("variant_chain", K::theorem, "c_{s,s}(G) <= c^-(G) <= c'(G) for s >= 2", variant_chain);
    add("speed_multiple_monotone", K::theorem, "c_{s,s}(G) >= c_{ks,ks}(G)", speed_multiple_monotone);
    add("monotone_conjecture", K::conjecture, "c_{s,s}(G) >= c_{s+1,s+1}(G) for every s", monotone_conjecture);
    add("strong_cycle_gadget", K::theorem,
        "for H the k-fold strong power of C_{2s+2}: c_{s',s'}(H) = k+1 for s' <= s and 1 for s' = s+1",
        strong_cycle_gadget);
    add("realizer_sequence", K::theorem, "every nonincreasing sequence ending in 1 is (c_{s,s}(G))_s for some G",
        realizer_sequence);
    add("realizer_long", K::theorem, "the realizer of (4,4,3,1) has c_{s,s} = 4,4,3,1", realizer_long);
    add("projective_plane_product", K::theorem,
        "for P the incidence graph of a projective plane of order q: c_{2,2}(P) = 2 and c_{2,2}(P x P) >= q+1", projective_plane_product);
    add("cartesian_retract", K::theorem, "retractions of factors give a retraction of the Cartesian product",
        cartesian_retract);
    add("tree_products_upper", K::theorem, "c_{s,s}(T_1 x ... x T_d) <= ceil(d/2) for trees, d >= 3, s >= 2",
        tree_products_upper);
    add("active_and_change", K::theorem, "c_{s,s}(G x H) <= c^-(G) + k when k cops win on H against a robber confined to moves of length s-1 or s",
        active_and_change);
    add("distance_half", K::theorem,
        "an s-step robber walk ending within s of a cop moves toward it at least x/2 times", distance_half);
    add("large_grids_two_factors", K::theorem, "c_{s,s}(T_1 x T_2) = 1 for trees T_1, T_2 and s >= 2",
        large_grids_two_factors);
    add("grid_3d_speed2", K::theorem, "c_{s,s}(T_1 x ... x T_d) = ceil(d/2) for d >= 3 and trees of diameter >= 2s",
        grid_3d_speed2);
    add("hypercube_upper", K::theorem, "c_{s,s}(Q_d) <= ceil((d-2s+3)/2) for d >= 2s", hypercube_upper);
    add("tree_products_speed2_lower", K::theorem, "c_{2,2}(T_1 x ... x T_d) >= floor(d/2) for nontrivial trees",
        tree_products_speed2_lower);
    add("hypercube_speed2", K::theorem, "c_{2,2}(Q_d) for d = 2..6 is 1, 2, 2, 2, 3", hypercube_speed2);
    add("q9_one_cop_escape", K::theorem, "one speed-2 cop loses on Q_9", q9_one_cop_escape);
    add("hypercube_lower_bound_general", K::theorem, "k speed-s cops lose on Q_d when d > 2s + 2k + k log2(2s+1)",
        hypercube_lower_bound_general);
    add("rel_prime", K::theorem, "c^-(C_m x C_n) = 2 for coprime m, n", rel_prime);
    add("two_cycles", K::theorem, "c_{s,s}(C_m x C_n) = 2 for coprime m, n >= 4s+1", two_cycles);
    add("two_cycles_k2", K::theorem, "c_{s,s} of a product of k coprime cycle pairs is 2k", two_cycles_k2);
    add("grid_three_cops", K::theorem, "c_{2,2}(P_n x P_n) = 3 for n = 7, 8, 9", grid_three_cops);
    add("torus_evidence", K::conjecture, "c_{2,2}(C_n x C_n) for n = 7, 8, 9", torus_evidence);
    add("copwin_characterization", K::theorem, "G is cop-win iff G is dismantlable", copwin_characterization);
    add("capture_time_partition", K::theorem, "capt(G) equals the length of the cop-win partition, less one when its last two layers are fully joined",
        capture_time_partition);
    add("capture_time_unique_corner", K::theorem, "a unique corner v of a cop-win G with capt(G) >= 2 gives capt(G) = capt(G-v) + 1",
        capture_time_unique_corner);
    add("capture_family_speed2", K::theorem, "capt_2(G_n) = n - 7 for the family G_n, n >= 9", capture_family_speed2);
    add("capt_power_identity", K::theorem, "capt_s(G) = capt(G^s) when c_{s,s}(G) = 1", capt_power_identity);
    add("capt_speed_multiple", K::theorem, "capt_s(G) >= capt_{ks}(G) when c_{s,s}(G) = 1", capt_speed_multiple);
    add("regular_product_of_trees", K::theorem, "c(T_1 x ... x T_n) = ceil((n+1)/2) for nontrivial trees",
        regular_product_of_trees);
    add("cartesian_sum_bound", K::theorem, "c(G x H) <= c(G) + c(H)", cartesian_sum_bound);
    add("regular_product_of_cycles", K::theorem, "c(C_m x C_n) = 3 for m, n >= 4", regular_product_of_cycles);
    add("capt1_star_7", K::theorem, "the largest capture time of a 7-vertex cop-win graph is 3", capt1_star_7);
    add("capt2_star_9", K::theorem, "capt*_2(9) lies in [2, 5]", capt2_star_9);
    add("capt2_star_10", K::theorem, "capt*_2(10) lies in [3, 6]", capt2_star_10);
    add("distance_variant", K::theorem, "radius s-1 with speed 1 needs at most c_{s,s}(G) cops", distance_variant);
    add("asymptotic_statements", K::theorem, "capt*_s(n) and c_{s,s}(Q_d) for n, d -> infinity", asymptotic_statements);
    return r;
}

}  // namespace

const std::vector<ClaimSpec>& claim_registry() {
    static const std::vector<ClaimSpec> registry = build_registry();
    return registry;
}

const ClaimSpec* find_claim(std::string_view id) {
    for (const auto& c : claim_registry())
        if (c.id == id) return &c;
    return nullptr;
}

ClaimRecord run_claim(std::string_view id, const HarnessOptions& opt) {
    const ClaimSpec* spec = find_claim(id);
    if (!spec) throw InvalidParameter("unknown claim: " + std::string(id));
    auto t0 = std::chrono::steady_clock::now();
    ClaimRecord rec;
    try {
        rec = spec->run(opt);
    } catch (const BudgetExceeded& e) {
        rec = ClaimRecord{};
        rec.relation = "predicate";
        rec.status = ClaimStatus::skipped;
        rec.expected = "within budget";
        rec.computed = std::to_string(e.states()) + " states";
        rec.witness = {{"states", e.states()}, {"budget", opt.solve.budget}};
    } catch (const IoError& e) {
        rec = ClaimRecord{};
        rec.relation = "predicate";
        rec.status = ClaimStatus::skipped;
        rec.expected = "catalog";
        rec.computed = "missing";
        rec.witness = {{"reason", e.what()}};
    }
    rec.id = spec->id;
    rec.statement = spec->statement;
    rec.kind = spec->kind;
    rec.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

std::vector<ClaimRecord> run_all(std::string_view filter, const HarnessOptions& opt) {
    std::vector<const ClaimSpec*> chosen;
    for (const auto& c : claim_registry())
        if (filter.empty() || filter == "all" || c.id.find(filter) != std::string::npos) chosen.push_back(&c);
    std::vector<ClaimRecord> out(chosen.size());
    const auto m = static_cast<long long>(chosen.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < m; ++i) out[static_cast<std::size_t>(i)] = run_claim(chosen[static_cast<std::size_t>(i)]->id, opt);
    return out;
}

}  // namespace pursuit
