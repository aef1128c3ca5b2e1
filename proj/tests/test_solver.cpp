#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "pursuit/errors.hpp"
#include "pursuit/families.hpp"
#include "pursuit/solver.hpp"

using namespace pursuit;

namespace {

SolveOptions serial() {
    SolveOptions o;
    o.kernel = Kernel::serial;
    return o;
}

SolveOptions parallel() {
    SolveOptions o;
    o.kernel = Kernel::parallel;
    return o;
}

}  // namespace

TEST_CASE("small anchors") {
    auto k5 = solve(complete(5), speeds(1, 1, 1));
    CHECK(k5.cop_win);
    CHECK(*k5.capture_time == 1);
    CHECK(!solve(cycle(6), speeds(2, 2, 1)).cop_win);
    auto k1 = solve(path(1), speeds(1, 1, 1));
    CHECK(k1.cop_win);
    CHECK(*k1.capture_time == 0);
    CHECK(capture_time(path(2), speeds(1, 1, 1)) == 1);
    CHECK_THROWS_AS(capture_time(cycle(4), speeds(1, 1, 1)), DomainError);
}

TEST_CASE("cop numbers") {
    CHECK(cop_number(hypercube(3), speeds(2, 2, 1), 3) == 2);
    CHECK(cop_number(petersen(), speeds(1, 1, 1), 4) == 3);
    CHECK(cop_number(petersen(), speeds(2, 2, 1), 4) == 1);
    std::mt19937_64 rng(2);
    for (int i = 0; i < 10; ++i) CHECK(cop_number(random_connected(9, 0.0, rng()), speeds(1, 1, 1), 2) == 1);
    CHECK(cop_number_via_power(cycle(9), 2, 3) == cop_number(cycle(9), speeds(2, 2, 1), 3));
    CHECK(cop_number_via_power(petersen(), 1, 4) == cop_number(petersen(), speeds(1, 1, 1), 4));
    CHECK_THROWS_AS(cop_number(cycle(5), speeds(1, 1, 1), 1), CopNumberExceeded);
}

TEST_CASE("capture family at speed 2") {
    CHECK(capture_time(capture_family(9), speeds(2, 2, 1)) == 2);
    CHECK(capture_time(capture_family(11), speeds(2, 2, 1)) == 4);
}

TEST_CASE("P7 x P7 at speed 2: one cop wins, confirmed by the oracle") {
    Graph g = cartesian_product(path(7), path(7));
    auto r = solve(g, speeds(2, 2, 1));
    auto ref = oracle::solve(g, speeds(2, 2, 1));
    CHECK(r.cop_win);
    CHECK(ref.cop_win);
    CHECK(r.capture_time == ref.capture_time);
}

TEST_CASE("solver agrees with the brute-force oracle") {
    std::mt19937_64 rng(99);
    int instances = 0;
    for (int i = 0; i < 160; ++i) {
        int n = 1 + static_cast<int>(rng() % 6);
        Graph g = random_connected(n, std::uniform_real_distribution<double>(0.0, 0.6)(rng), rng());
        int k = 1 + static_cast<int>(rng() % (n <= 4 ? 3 : 2));
        int s = 1 + static_cast<int>(rng() % 3), t = 1 + static_cast<int>(rng() % 3);
        auto v = static_cast<Variant>(rng() % 4);
        int radius = static_cast<int>(rng() % 4 == 0);
        GameConfig c = speeds(s, t, k, v, radius);
        CAPTURE(i);
        CAPTURE(to_json(c).dump());
        auto ref = oracle::solve(g, c);
        auto a = solve(g, c, serial());
        auto b = solve(g, c, parallel());
        REQUIRE(a.cop_win == ref.cop_win);
        CHECK(a.capture_time == ref.capture_time);
        CHECK(b.cop_win == a.cop_win);
        CHECK(b.capture_time == a.capture_time);
        CHECK(b.placement == a.placement);
        ++instances;
    }
    CHECK(instances == 160);
}

TEST_CASE("oracle agreement on named graphs") {
    for (auto [g, c] : {std::pair{cycle(4), speeds(1, 1, 2)}, {cycle(5), speeds(1, 1, 2, Variant::active)},
                        {hypercube(3), speeds(2, 2, 2)}, {petersen(), speeds(2, 2, 1)},
                        {cycle(6), speeds(1, 1, 1, Variant::semi_active)}, {path(5), speeds(3, 3, 1, Variant::restricted)},
                        {petersen(), speeds(1, 1, 2, Variant::standard, 1)}}) {
        CAPTURE(to_json(c).dump());
        auto ref = oracle::solve(g, c);
        auto r = solve(g, c);
        CHECK(r.cop_win == ref.cop_win);
        CHECK(r.capture_time == ref.capture_time);
    }
}

TEST_CASE("serial and parallel kernels agree on larger games") {
    for (auto [g, c] : {std::pair{hypercube(5), speeds(2, 2, 2)}, {cartesian_product(cycle(5), cycle(6)), speeds(1, 1, 2)},
                        {incidence_graph_pg2(2), speeds(2, 2, 2, Variant::active)}}) {
        auto a = solve(g, c, serial());
        auto b = solve(g, c, parallel());
        CHECK(a.cop_win == b.cop_win);
        CHECK(a.capture_time == b.capture_time);
        CHECK(a.placement == b.placement);
        CHECK(a.stats.resolved == b.stats.resolved);
        CHECK(a.stats.states == b.stats.states);
    }
}

TEST_CASE("budget") {
    SolveOptions o;
    o.budget = 1000;
    CHECK_THROWS_AS(solve(hypercube(6), speeds(2, 2, 3), o), BudgetExceeded);
    CHECK(substate_count(8, speeds(1, 1, 1)) == 128);
}

TEST_CASE("policy queries are value-consistent") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 12; ++i) {
        Graph g = random_connected(5 + i % 4, 0.3, rng());
        GameConfig c = speeds(1 + i % 2, 1 + i % 2, 1 + i % 2);
        SolvedGame game(g, c);
        std::vector<Vertex> cops(static_cast<std::size_t>(c.cop_count), 0);
        for (;;) {
            for (Vertex r = 0; r < g.order(); ++r) {
                if (game.cop_value(cops, r) && *game.cop_value(cops, r) > 0) {
                    int v = *game.cop_value(cops, r);
                    auto mv = game.optimal_cop_move(cops, r);
                    // A capturing sub-move ends the turn early.
                    CHECK(mv.steps.size() <= cops.size());
                    if (!mv.captures) CHECK(mv.steps.size() == cops.size());
                    if (mv.captures) CHECK(v == 1);
                    else CHECK(game.robber_value(mv.after, r) == v - 1);
                }
                if (auto w = game.robber_value(cops, r); w && *w > 0) {
                    auto to = game.optimal_robber_move(cops, r);
                    REQUIRE(to.has_value());
                    CHECK(game.cop_value(cops, *to) == w);
                }
            }
            int j = static_cast<int>(cops.size()) - 1;
            while (j >= 0 && cops[static_cast<std::size_t>(j)] == g.order() - 1) --j;
            if (j < 0) break;
            int nv = cops[static_cast<std::size_t>(j)] + 1;
            for (std::size_t q = static_cast<std::size_t>(j); q < cops.size(); ++q) cops[q] = nv;
        }
        if (game.result().cop_win) {
            auto r = game.optimal_robber_placement(game.result().placement);
            if (r) CHECK(game.cop_value(game.result().placement, *r) == game.result().capture_time);
        }
    }
}

TEST_CASE("optimal cop move refuses a finished position") {
    SolvedGame game(path(3), speeds(1, 1, 1));
    std::vector<Vertex> cop{1};
    CHECK_THROWS_AS(game.optimal_cop_move(cop, 1), InvalidParameter);
}
