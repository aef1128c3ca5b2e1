#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "pursuit/errors.hpp"
#include "pursuit/families.hpp"
#include "pursuit/game.hpp"

using namespace pursuit;

TEST_CASE("allowed end distances") {
    CHECK(speeds(1, 3, 1).allowed_end_distances() == std::vector<int>{0, 1, 2, 3});
    CHECK(speeds(1, 3, 1, Variant::semi_active).allowed_end_distances() == std::vector<int>{1, 2, 3});
    CHECK(speeds(1, 3, 1, Variant::active).allowed_end_distances() == std::vector<int>{1, 2, 3});
    CHECK(speeds(3, 3, 1, Variant::restricted).allowed_end_distances() == std::vector<int>{2, 3});
    CHECK(parse_variant("semi-active") == Variant::semi_active);
    CHECK_THROWS_AS(parse_variant("lazy"), InvalidParameter);
    CHECK_THROWS_AS(speeds(0, 1, 1).validate(), InvalidParameter);
    CHECK_THROWS_AS(speeds(1, 1, kMaxCops + 1).validate(), InvalidParameter);
}

TEST_CASE("config json round trip") {
    GameConfig c = speeds(2, 3, 2, Variant::restricted, 1);
    CHECK(config_from_json(to_json(c)) == c);
}

TEST_CASE("robber moves respect blocking") {
    Graph p5 = path(5);
    std::vector<Vertex> cop{1};
    CHECK(robber_moves(p5, speeds(1, 2, 1), cop, 2) == std::vector<Vertex>{2, 3, 4});
    Graph pet = petersen();
    auto all = robber_moves(pet, speeds(1, 2, 1), {}, 0);
    auto b = ball(pet, 0, 2);
    std::sort(b.begin(), b.end());
    CHECK(all == b);
    CHECK(robber_moves(path(2), speeds(1, 1, 1, Variant::semi_active), {}, 0) == std::vector<Vertex>{1});
    CHECK_THROWS_AS(robber_moves(p5, speeds(1, 2, 1), cop, 1), InvalidParameter);
}

TEST_CASE("blocked robber measures end distance in G") {
    // On C_6 with a cop at 1, the robber at 0 reaches 4 only the long way;
    // its graph distance 2 is still what the variant sees.
    Graph c6 = cycle(6);
    std::vector<Vertex> cop{1};
    auto m = robber_moves(c6, speeds(1, 2, 1), cop, 0);
    CHECK(m == std::vector<Vertex>{0, 4, 5});
    auto r = robber_moves(c6, speeds(3, 3, 1, Variant::restricted), cop, 0);
    CHECK(r == std::vector<Vertex>{3, 4});
}

TEST_CASE("capture test") {
    Graph p3 = path(3);
    std::vector<Vertex> at0{0};
    CHECK(is_capture(p3, speeds(1, 1, 1), at0, 0));
    CHECK(!is_capture(p3, speeds(1, 1, 1), at0, 1));
    CHECK(is_capture(p3, speeds(1, 1, 1, Variant::standard, 1), at0, 1));
    CHECK(!is_capture(p3, speeds(1, 1, 1, Variant::standard, 1), at0, 2));
}

TEST_CASE("cop turn successors") {
    GameState k1{{0}, 0, Phase::cop_turn};
    CHECK(cop_turn_successors(path(1), speeds(1, 1, 1), k1).size() == 1);
    GameState mid{{2}, 0, Phase::cop_turn};
    CHECK(cop_turn_successors(path(5), speeds(2, 2, 1), mid).size() == 5);

    // Two cops on distinct vertices of P_4, each with 3 or 2 choices: the
    // active rule drops only the stay-stay multiset.
    Graph p4 = path(4);
    GameState two{{0, 3}, 1, Phase::cop_turn};
    auto plain = cop_turn_successors(p4, speeds(1, 1, 2), two);
    auto active = cop_turn_successors(p4, speeds(1, 1, 2, Variant::active), two);
    CHECK(plain.size() == 4);
    CHECK(active.size() == plain.size() - 1);
    CHECK(std::find(active.begin(), active.end(), std::vector<Vertex>{0, 3}) == active.end());
}

TEST_CASE("sequential decomposition yields the same successor sets") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 60; ++i) {
        Graph g = random_connected(3 + i % 6, 0.3, rng());
        int k = 1 + i % 3;
        for (Variant v : {Variant::standard, Variant::active}) {
            GameConfig c = speeds(1 + i % 2, 1, k, v);
            std::vector<Vertex> cops;
            for (int j = 0; j < k; ++j) cops.push_back(static_cast<Vertex>(rng() % static_cast<unsigned>(g.order())));
            std::sort(cops.begin(), cops.end());
            GameState s{cops, 0, Phase::cop_turn};
            CHECK(cop_turn_successors(g, c, s) == cop_turn_successors_sequential(g, c, s));
        }
    }
}

TEST_CASE("multiset ranks are a bijection") {
    Binomials c(40);
    for (int n : {1, 4, 7})
        for (int k = 1; k <= 4; ++k) {
            std::uint64_t total = multiset_count(n, k);
            std::set<std::uint64_t> seen;
            std::vector<int> buf(static_cast<std::size_t>(k));
            for (std::uint64_t r = 0; r < total; ++r) {
                multiset_unrank(r, k, c, buf.data());
                CHECK(std::is_sorted(buf.begin(), buf.end()));
                CHECK(multiset_rank(buf, c) == r);
                seen.insert(r);
            }
            CHECK(seen.size() == total);
        }
}

TEST_CASE("state codec") {
    CHECK(StateCodec(49, 2).size() == 120050);
    CHECK(StateCodec(8, 1).size() == 128);
    // Exhaustive count at small n.
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= 3; ++k) {
            StateCodec codec(n, k);
            std::uint64_t count = 0;
            std::vector<Vertex> cops(static_cast<std::size_t>(k), 0);
            for (;;) {
                for (Vertex r = 0; r < n; ++r)
                    for (Phase p : {Phase::cop_turn, Phase::robber_turn}) {
                        GameState s{cops, r, p};
                        CHECK(codec.decode(codec.encode(s)) == s);
                        ++count;
                    }
                int i = k - 1;
                while (i >= 0 && cops[static_cast<std::size_t>(i)] == n - 1) --i;
                if (i < 0) break;
                int v = cops[static_cast<std::size_t>(i)] + 1;
                for (int j = i; j < k; ++j) cops[static_cast<std::size_t>(j)] = v;
            }
            CHECK(count == codec.size());
        }
    CHECK_THROWS_AS(StateCodec(4, 2).encode(GameState{{3, 1}, 0, Phase::cop_turn}), InvalidParameter);
}
