#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracle.hpp"
#include "pursuit/errors.hpp"
#include "pursuit/families.hpp"
#include "pursuit/structure.hpp"

using namespace pursuit;

namespace {

std::vector<std::string> names(const Graph& g, std::vector<Vertex> vs) {
    std::vector<std::string> out;
    for (Vertex v : vs) out.push_back(g.label(v));
    std::sort(out.begin(), out.end());
    return out;
}

// An ordering is valid when each vertex is a corner of what remains.
bool valid_ordering(const Graph& g, const std::vector<Vertex>& order) {
    std::vector<Vertex> alive(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) alive[static_cast<std::size_t>(v)] = v;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        Graph h = induced_subgraph(g, alive);
        auto pos = std::find(alive.begin(), alive.end(), order[i]);
        if (pos == alive.end()) return false;
        if (!is_corner(h, static_cast<Vertex>(pos - alive.begin()))) return false;
        alive.erase(pos);
    }
    return alive.size() == 1 && alive[0] == order.back();
}

}  // namespace

TEST_CASE("corners") {
    CHECK(is_corner(complete(2), 0));
    CHECK(is_corner(complete(2), 1));
    for (Vertex v = 0; v < 4; ++v) CHECK(!is_corner(cycle(4), v));
    CHECK(is_corner(path(3), 0));
    CHECK(cornering_vertices(path(3), 0) == std::vector<Vertex>{1});
    CHECK(corners(path(3)) == std::vector<Vertex>{0, 2});
}

TEST_CASE("twin classes and quotient") {
    auto q = quotient(complete(5));
    CHECK(q.graph.order() == 1);
    CHECK(quotient(cycle(5)).graph == cycle(5));
    CHECK(quotient(path(3)).graph.order() == 3);
    CHECK(twin_classes(star(2)).size() == 3);
}

TEST_CASE("cop-win orderings") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        Graph t = random_connected(2 + i % 9, 0.0, rng());
        auto o = copwin_ordering(t);
        REQUIRE(o.has_value());
        CHECK(valid_ordering(t, *o));
    }
    CHECK(!copwin_ordering(cycle(4)).has_value());
    Graph g9 = power(capture_family(9), 2);
    auto o = copwin_ordering(g9);
    REQUIRE(o.has_value());
    CHECK(valid_ordering(g9, *o));
}

TEST_CASE("cop-win partition") {
    Graph g9 = power(capture_family(9), 2);
    g9.set_labels(capture_family(9).labels());
    auto p = copwin_partition(g9);
    REQUIRE(p.has_value());
    REQUIRE(p->layers.size() == 3);
    CHECK(names(g9, p->layers[0]) == std::vector<std::string>{"h2", "v9"});
    CHECK(names(g9, p->layers[1]) == std::vector<std::string>{"h1", "q", "t", "v8", "w", "y"});
    CHECK(names(g9, p->layers[2]) == std::vector<std::string>{"x"});
    CHECK(p->last_layers_fully_adjacent);

    auto p3 = copwin_partition(path(3));
    REQUIRE(p3.has_value());
    REQUIRE(p3->layers.size() == 2);
    CHECK(p3->layers[0] == std::vector<Vertex>{0, 2});
    CHECK(p3->layers[1] == std::vector<Vertex>{1});
    CHECK(!copwin_partition(cycle(5)).has_value());
    CHECK_THROWS_AS(copwin_partition(complete(3)), DomainError);
}

TEST_CASE("capture time via partition") {
    CHECK(capture_time_via_partition(power(capture_family(9), 2)) == 2);
    CHECK(capture_time_via_partition(path(1)) == 0);
    CHECK(capture_time_via_partition(complete(4)) == 1);
    for (int n = 10; n <= 16; ++n) CHECK(capture_time_via_partition(power(capture_family(n), 2)) == n - 7);
    CHECK_THROWS_AS(capture_time_via_partition(cycle(5)), DomainError);
}

TEST_CASE("partition capture time agrees with the brute-force oracle") {
    std::mt19937_64 rng(17);
    int checked = 0;
    for (int i = 0; i < 300; ++i) {
        Graph g = random_connected(1 + i % 8, 0.35, rng());
        auto ref = oracle::solve(g, speeds(1, 1, 1));
        CHECK(ref.cop_win == copwin_ordering(g).has_value());
        if (!ref.cop_win) continue;
        ++checked;
        CHECK(capture_time_via_partition(g) == *ref.capture_time);
    }
    CHECK(checked > 100);
}

TEST_CASE("retractions") {
    CHECK(is_retraction(identity_map(petersen())));
    auto m = complete_subdivision_retraction(4, 2);
    CHECK(is_retraction(m));
    CHECK(m.source.order() == 10);
    CHECK(m.target.order() == 6);
    for (auto [n, s] : {std::pair{5, 2}, {4, 3}, {6, 3}}) CHECK(is_retraction(complete_subdivision_retraction(n, s)));

    VertexMap bad{cycle(5), cycle(5), {0, 1, 2, 3, 4}, {}};
    bad.image[0] = 2;  // 0 ~ 4 but 2 and 4 are not adjacent
    CHECK(!is_homomorphism(bad));

    auto id = product_map(identity_map(path(3)), identity_map(cycle(4)));
    CHECK(id.source == cartesian_product(path(3), cycle(4)));
    for (Vertex v = 0; v < id.source.order(); ++v) CHECK(id.image[static_cast<std::size_t>(v)] == v);
    CHECK(is_retraction(id));

    std::vector<int> seq{3, 3, 1};
    auto r = realizer_retraction(seq, 1);
    CHECK(r.source.order() == 37);
    CHECK(r.target.order() == 36);
    CHECK(is_retraction(r));
    CHECK(is_retraction(product_map(complete_subdivision_retraction(4, 2), r)));
}
