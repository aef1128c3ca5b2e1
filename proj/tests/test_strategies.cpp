#include <doctest.h>

#include <memory>
#include <sstream>

#include "pursuit/errors.hpp"
#include "pursuit/families.hpp"
#include "pursuit/strategies.hpp"

using namespace pursuit;

namespace {

std::shared_ptr<const SolvedGame> solved(const Graph& g, const GameConfig& c) {
    return std::make_shared<const SolvedGame>(g, c);
}

bool every_check(const StrategyTrace& t, const std::string& name) {
    for (const auto& r : t.rounds)
        for (const auto& c : r.checks)
            if (c.name == name && !c.ok) return false;
    return true;
}

}  // namespace

TEST_CASE("optimal against optimal matches the solver") {
    Graph q3 = hypercube(3);
    GameConfig c = speeds(2, 2, 2);
    auto game = solved(q3, c);
    auto cops = optimal_cops(game);
    auto rob = optimal_robber(game);
    auto t = simulate(q3, c, *cops, *rob);
    CHECK(t.captured());
    CHECK(t.end_round == *game->result().capture_time);
    CHECK_NOTHROW(validate_trace(q3, t));
    CHECK(t.rounds.front().round == 0);
}

TEST_CASE("torus robber") {
    Graph c6 = cycle_strong_power_product(1, 2);
    GameConfig c = speeds(2, 2, 1);
    auto cops = optimal_cops(solved(c6, c));
    auto rob = torus_coordinate_robber(2);
    auto t = simulate(c6, c, *cops, *rob);
    CHECK(!t.captured());
    CHECK(t.end_round == kDefaultHorizon);
    CHECK(t.invariants_held());

    Graph c66 = cycle_strong_power_product(2, 2);
    GameConfig c2 = speeds(2, 2, 2);
    auto cops2 = optimal_cops(solved(c66, c2));
    auto rob2 = torus_coordinate_robber(2);
    auto t2 = simulate(c66, c2, *cops2, *rob2);
    CHECK(!t2.captured());
    CHECK(every_check(t2, "offset_s_plus_1"));
    CHECK_NOTHROW(validate_trace(c66, t2));
}

TEST_CASE("grid single cop") {
    for (int n : {7, 9}) {
        Graph g = cartesian_product(path(n), path(n));
        GameConfig c = speeds(2, 2, 1);
        auto game = solved(g, c);
        for (int which = 0; which < 3; ++which) {
            auto cop = grid_single_cop(2);
            std::unique_ptr<RobberPolicy> rob = which == 0   ? optimal_robber(game)
                                                : which == 1 ? greedy_robber()
                                                             : random_robber(7);
            auto t = simulate(g, c, *cop, *rob);
            CAPTURE(t.robber_policy);
            CHECK(t.captured());
            CHECK(every_check(t, "phi_nonincreasing"));
            CHECK_NOTHROW(validate_trace(g, t));
        }
    }
}

TEST_CASE("blocking robber on a five-dimensional grid") {
    Graph g = cartesian_power(path(9), 5);
    GameConfig c = speeds(2, 2, 2);
    auto cops = greedy_cops(2);
    auto rob = grid_blocking_robber(2);
    auto t = simulate(g, c, *cops, *rob, 100);
    CHECK(!t.captured());
    CHECK(every_check(t, "cops_beyond_s"));

    Graph line = path(9);
    auto one = greedy_cops(1);
    auto rob1 = grid_blocking_robber(2);
    CHECK_THROWS_AS(simulate(line, speeds(2, 2, 1), *one, *rob1), PolicyError);
}

TEST_CASE("hypercube weight robber") {
    Graph q6 = hypercube(6);
    GameConfig c = speeds(2, 2, 2);
    {
        auto cops = optimal_cops(solved(q6, c));
        auto rob = hypercube_weight_robber();
        auto t = simulate(q6, c, *cops, *rob);
        CHECK(!t.captured());
        CHECK(every_check(t, "safe_distance_3"));
    }
    Graph q8 = hypercube(8);
    GameConfig c3 = speeds(2, 2, 3);
    for (std::uint64_t seed : {1, 2, 3}) {
        auto cops = random_cops(3, seed);
        auto rob = hypercube_weight_robber();
        auto t = simulate(q8, c3, *cops, *rob);
        CHECK(!t.captured());
        CHECK(t.invariants_held());
    }
    auto cops = greedy_cops(3);
    auto rob = hypercube_weight_robber();
    auto t = simulate(q8, c3, *cops, *rob);
    CHECK(!t.captured());
    CHECK(t.invariants_held());
}

TEST_CASE("projective product robber") {
    Graph p = incidence_graph_pg2(2);
    Graph pp = cartesian_product(p, p);
    GameConfig c = speeds(2, 2, 2);
    for (int which = 0; which < 3; ++which) {
        std::unique_ptr<CopPolicy> cops = which == 0 ? greedy_cops(2) : random_cops(2, static_cast<std::uint64_t>(which));
        auto rob = projective_product_robber(p);
        auto t = simulate(pp, c, *cops, *rob);
        CHECK(!t.captured());
        CHECK(every_check(t, "safe_distance_3"));
    }
}

TEST_CASE("two-phase product cops") {
    Graph g = hypercube(2), h = hypercube(3);
    Graph prod = cartesian_product(g, h);
    GameConfig c = speeds(2, 2, 2);
    auto game = solved(prod, c);
    for (int which = 0; which < 3; ++which) {
        auto cops = two_phase_product_cops(g, h, 2, 1, 1);
        std::unique_ptr<RobberPolicy> rob = which == 0   ? optimal_robber(game)
                                            : which == 1 ? greedy_robber()
                                                         : random_robber(5);
        auto t = simulate(prod, c, *cops, *rob, 100);
        CHECK(t.captured());
        CHECK(t.invariants_held());
    }
}

TEST_CASE("trace json round trip and validation") {
    Graph g = cartesian_product(path(5), path(5));
    GameConfig c = speeds(2, 2, 1);
    auto cop = grid_single_cop(2);
    auto rob = greedy_robber();
    auto t = simulate(g, c, *cop, *rob);
    std::stringstream ss;
    write_trace_jsonl(ss, t);
    auto back = read_trace_jsonl(ss);
    CHECK(back.rounds.size() == t.rounds.size());
    CHECK(back.captured() == t.captured());
    CHECK(back.end_round == t.end_round);
    CHECK(back.config == t.config);
    CHECK_NOTHROW(validate_trace(g, back));

    // A cop that jumps too far is rejected with the round number.
    auto bad = t;
    REQUIRE(bad.rounds.size() >= 2);
    bad.rounds[1].cops[0] = bad.rounds[0].cops[0] == 0 ? 24 : 0;
    CHECK_THROWS_AS(validate_trace(g, bad), TraceError);
}

TEST_CASE("distance lemma predicate") {
    Graph g = cartesian_product(path(9), path(9));
    // Cop at (4,4) = 40, robber at (4,7) = 43 moving away then sideways.
    std::vector<Vertex> away{43, 44, 53};
    CHECK(distance_half_lemma_holds(g, 2, 40, away));
    std::vector<Vertex> toward{43, 42, 41};
    CHECK(distance_half_lemma_holds(g, 2, 40, toward));
    // Not an s-step walk: vacuous.
    std::vector<Vertex> short_walk{43, 44};
    CHECK(distance_half_lemma_holds(g, 2, 40, short_walk));
}
