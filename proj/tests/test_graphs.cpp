#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "pursuit/errors.hpp"
#include "pursuit/families.hpp"
#include "pursuit/graph.hpp"
#include "pursuit/graph_io.hpp"

using namespace pursuit;

namespace {

bool regular(const Graph& g, int d) {
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) != d) return false;
    return true;
}

int girth(const Graph& g) {
    int best = kUnreachable;
    for (Vertex s = 0; s < g.order(); ++s) {
        std::vector<int> d(g.order(), -1), parent(g.order(), -1);
        std::vector<Vertex> q{s};
        d[s] = 0;
        for (std::size_t i = 0; i < q.size(); ++i) {
            Vertex v = q[i];
            for (Vertex u : g.neighbors(v)) {
                if (d[u] < 0) {
                    d[u] = d[v] + 1;
                    parent[u] = v;
                    q.push_back(u);
                } else if (parent[v] != u) {
                    best = std::min(best, d[u] + d[v] + 1);
                }
            }
        }
    }
    return best;
}

}  // namespace

TEST_CASE("basic families") {
    Graph q3 = hypercube(3);
    CHECK(q3.order() == 8);
    CHECK(q3.size() == 12);
    CHECK(regular(q3, 3));
    CHECK(cycle(3) == complete(3));
    CHECK(path(1).order() == 1);
    CHECK(path(1).size() == 0);
    Graph pet = petersen();
    CHECK(pet.order() == 10);
    CHECK(pet.size() == 15);
    CHECK(regular(pet, 3));
    CHECK(girth(pet) == 5);
    CHECK(star(3).order() == 4);
    CHECK(star(3).degree(0) == 3);
}

TEST_CASE("products") {
    CHECK(cartesian_product(complete(2), complete(2)).size() == 4);
    CHECK(regular(cartesian_product(complete(2), complete(2)), 2));
    Graph s = strong_product(cycle(4), cycle(4));
    CHECK(s.order() == 16);
    CHECK(regular(s, 8));
    Graph ladder = cartesian_product(path(2), path(3));
    CHECK(ladder.order() == 6);
    CHECK(ladder.size() == 7);
    CHECK(cartesian_power(path(2), 4) == hypercube(4));
    CHECK(ladder.has_coords());
}

TEST_CASE("powers and subdivisions") {
    Graph c6 = cycle(6);
    CHECK(power(c6, 1) == c6);
    CHECK(power(c6, 3) == complete(6));
    Graph p4 = power(path(4), 2);
    CHECK(p4.size() == 5);
    CHECK(p4.adjacent(0, 2));
    CHECK(p4.adjacent(1, 3));
    CHECK(!p4.adjacent(0, 3));
    Graph k3s = subdivide(complete(3), 2);
    CHECK(k3s.order() == 6);
    CHECK(regular(k3s, 2));
    CHECK(is_connected(k3s));
    CHECK(subdivide(petersen(), 1) == petersen());
    Graph k4s = subdivide(complete(4), 2);
    CHECK(k4s.order() == 10);
    CHECK(k4s.size() == 12);
}

TEST_CASE("subdivision vertices sit on their edge") {
    Graph k4 = complete(4);
    Graph k4s = subdivide(k4, 3);
    for (auto [u, v] : k4.edges()) {
        Vertex a = subdivision_vertex(k4, 3, u, v, 1);
        Vertex b = subdivision_vertex(k4, 3, u, v, 2);
        CHECK(k4s.adjacent(u, a));
        CHECK(k4s.adjacent(a, b));
        CHECK(k4s.adjacent(b, v));
        CHECK(subdivision_vertex(k4, 3, v, u, 1) == b);
    }
}

TEST_CASE("projective planes") {
    for (int q : {2, 3, 5}) {
        CAPTURE(q);
        auto plane = projective_plane(q);
        CHECK(first_failing_plane_axiom(plane) == 0);
        Graph g = incidence_graph_pg2(q);
        int n = q * q + q + 1;
        CHECK(g.order() == 2 * n);
        CHECK(static_cast<int>(g.size()) == n * (q + 1));
        CHECK(regular(g, q + 1));
        CHECK(girth(g) == 6);
    }
    CHECK_THROWS_AS(incidence_graph_pg2(4), UnsupportedOrder);
    CHECK_THROWS_AS(projective_plane(6), UnsupportedOrder);
}

TEST_CASE("plane axiom oracle rejects a broken plane") {
    auto plane = projective_plane(2);
    plane.lines[0] = plane.lines[1];
    CHECK(first_failing_plane_axiom(plane) != 0);
}

TEST_CASE("strong cycle powers") {
    CHECK(cycle_strong_power_product(1, 2) == cycle(6));
    CHECK(cycle_strong_power_product(1, 1) == cycle(4));
    Graph g = cycle_strong_power_product(2, 1);
    CHECK(g.order() == 16);
    CHECK(regular(g, 8));
}

TEST_CASE("sequence realizer layout") {
    std::vector<int> a{2, 1};
    Graph g = sequence_realizer(a);
    CHECK(g.order() == 5);
    auto lay = realizer_layout(a);
    REQUIRE(lay.blocks.size() == 1);
    CHECK(lay.blocks[0].descent_index == 1);
    CHECK(g.degree(lay.apex) == 1);
    std::vector<int> one{1};
    CHECK(sequence_realizer(one).order() == 1);
    std::vector<int> b{3, 3, 1};
    Graph h = sequence_realizer(b);
    CHECK(h.order() == 37);
    auto lb = realizer_layout(b);
    REQUIRE(lb.blocks.size() == 1);
    CHECK(lb.blocks[0].descent_index == 2);
    CHECK(lb.blocks[0].size == 36);
    std::vector<int> bad{1, 2};
    CHECK_THROWS_AS(sequence_realizer(bad), InvalidParameter);
}

TEST_CASE("capture family") {
    Graph g9 = capture_family(9);
    CHECK(g9.order() == 9);
    CHECK(g9.size() == 13);
    auto v = [&](const Graph& g, const char* name) { return *g.find_label(name); };
    std::set<std::pair<std::string, std::string>> want = {
        {"h1", "q"}, {"q", "x"},  {"q", "w"},  {"h1", "t"},  {"h1", "v9"}, {"t", "x"},  {"t", "v8"},
        {"x", "y"},  {"w", "y"},  {"v8", "y"}, {"v8", "v9"}, {"h2", "v8"}, {"h2", "w"}};
    std::set<std::pair<std::string, std::string>> got;
    for (auto [a, b] : g9.edges()) {
        auto x = g9.label(a), y = g9.label(b);
        got.insert(x < y ? std::pair{x, y} : std::pair{y, x});
    }
    CHECK(got == want);
    Graph g10 = capture_family(10);
    CHECK(g10.degree(v(g10, "v10")) == 2);
    CHECK(g10.adjacent(v(g10, "v10"), v(g10, "v9")));
    CHECK(g10.adjacent(v(g10, "v10"), v(g10, "h2")));
    Graph g11 = capture_family(11);
    CHECK(g11.adjacent(v(g11, "v11"), v(g11, "v10")));
    CHECK(g11.adjacent(v(g11, "v11"), v(g11, "h1")));
    CHECK_THROWS_AS(capture_family(8), InvalidParameter);
}

TEST_CASE("distances") {
    CHECK(dist(cycle(6), 0, 3) == 3);
    CHECK(ball(path(5), 2, 1).size() == 3);
    CHECK(radius(hypercube(3)) == 3);
    CHECK(diameter(petersen()) == 2);
    Graph two(2, std::vector<Edge>{});
    CHECK(!is_connected(two));
    CHECK(dist(two, 0, 1) == kUnreachable);
}

TEST_CASE("random_connected is connected and reproducible") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Graph g = random_connected(1 + static_cast<int>(seed % 12), 0.2, seed);
        CHECK(is_connected(g));
        CHECK(g == random_connected(1 + static_cast<int>(seed % 12), 0.2, seed));
    }
    CHECK(random_connected(8, 0.0, 3).size() == 7);
    CHECK(random_connected(6, 1.0, 3) == complete(6));
}

TEST_CASE("graph6 round trip") {
    Graph q4 = hypercube(4);
    CHECK(parse_graph6(write_graph6(q4)) == q4);
    CHECK(write_graph6(complete(4)) == "C~");
    CHECK(write_graph6(path(1)) == "@");
    CHECK_THROWS_AS(parse_graph6("C"), ParseError);
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        int n = std::uniform_int_distribution<int>(1, 70)(rng);
        Graph g = random_connected(n, std::uniform_real_distribution<double>(0, 0.5)(rng), rng());
        REQUIRE(parse_graph6(write_graph6(g)) == g);
    }
}

TEST_CASE("edge list round trip") {
    Graph g = petersen();
    CHECK(parse_edge_list(write_edge_list(g)) == g);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 7\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);
}

TEST_CASE("for_each_graph6 skips blank lines") {
    std::istringstream in("C~\nBw\n\n@\n");
    std::vector<int> orders;
    auto skipped = for_each_graph6(in, [&](const Graph& g, std::size_t) { orders.push_back(g.order()); });
    CHECK(skipped == 0);
    CHECK(orders == std::vector<int>{4, 3, 1});
}

TEST_CASE("graph hash is labeled") {
    CHECK(hypercube(3).hash() == hypercube(3).hash());
    CHECK(path(4).hash() != cycle(4).hash());
}
