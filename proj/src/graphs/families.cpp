#include "pursuit/families.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <string>

#include "pursuit/errors.hpp"

namespace pursuit {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw InvalidParameter(msg);
}

std::vector<std::vector<int>> index_coords(int n) {
    std::vector<std::vector<int>> c(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = {i};
    return c;
}

std::vector<int> coords_or_index(const Graph& g, Vertex v) {
    if (g.has_coords()) {
        auto c = g.coord(v);
        return {c.begin(), c.end()};
    }
    return {v};
}

std::vector<std::vector<int>> product_coords(const Graph& g, const Graph& h) {
    std::vector<std::vector<int>> out;
    out.reserve(static_cast<std::size_t>(g.order()) * static_cast<std::size_t>(h.order()));
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = 0; v < h.order(); ++v) {
            auto c = coords_or_index(g, u);
            auto d = coords_or_index(h, v);
            c.insert(c.end(), d.begin(), d.end());
            out.push_back(std::move(c));
        }
    return out;
}

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

}  // namespace

Graph path(int n) {
    require(n >= 1, "path needs n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    Graph g(n, e);
    g.set_coords(index_coords(n));
    return g;
}

Graph cycle(int n) {
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    Graph g(n, e);
    g.set_coords(index_coords(n));
    return g;
}

Graph complete(int n) {
    require(n >= 1, "complete graph needs n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

Graph hypercube(int d) {
    require(d >= 1 && d <= 20, "hypercube needs 1 <= d <= 20");
    const int n = 1 << d;
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int b = 0; b < d; ++b)
            if (int j = i ^ (1 << b); i < j) e.emplace_back(i, j);
    Graph g(n, e);
    std::vector<std::vector<int>> c(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(d)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < d; ++j) c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i >> (d - 1 - j)) & 1;
    g.set_coords(std::move(c));
    return g;
}

Graph star(int leaves) {
    require(leaves >= 1, "star needs at least one leaf");
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph(leaves + 1, e);
}

Graph petersen() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, e);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    require(g.order() > 0 && h.order() > 0, "product factors must be nonempty");
    const int nh = h.order();
    std::vector<Edge> e;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = 0; v < nh; ++v) {
            for (Vertex w : h.neighbors(v))
                if (v < w) e.emplace_back(u * nh + v, u * nh + w);
            for (Vertex w : g.neighbors(u))
                if (u < w) e.emplace_back(u * nh + v, w * nh + v);
        }
    Graph out(g.order() * nh, e);
    out.set_coords(product_coords(g, h));
    return out;
}

Graph strong_product(const Graph& g, const Graph& h) {
    require(g.order() > 0 && h.order() > 0, "product factors must be nonempty");
    const int nh = h.order();
    std::vector<Edge> e;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = 0; v < nh; ++v) {
            const int a = u * nh + v;
            for (Vertex u2 : g.closed_neighborhood(u))
                for (Vertex v2 : h.closed_neighborhood(v))
                    if (int b = u2 * nh + v2; a < b) e.emplace_back(a, b);
        }
    Graph out(g.order() * nh, e);
    out.set_coords(product_coords(g, h));
    return out;
}

Graph cartesian_power(const Graph& g, int d) {
    require(d >= 1, "cartesian power needs d >= 1");
    Graph out = g;
    for (int i = 1; i < d; ++i) out = cartesian_product(out, g);
    return out;
}

Graph power(const Graph& g, int s) {
    require(s >= 1, "graph power needs s >= 1");
    std::vector<Edge> e;
    for (Vertex u = 0; u < g.order(); ++u) {
        auto d = bfs_distances(g, u, s);
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (d[static_cast<std::size_t>(v)] <= s) e.emplace_back(u, v);
    }
    Graph out(g.order(), e);
    out.set_coords(g.coords());
    out.set_labels(g.labels());
    return out;
}

Graph subdivide(const Graph& g, int s) {
    require(s >= 1, "subdivision needs s >= 1");
    const int n = g.order();
    const auto base_edges = g.edges();
    const int total = n + (s - 1) * static_cast<int>(base_edges.size());
    std::vector<Edge> e;
    std::vector<std::vector<int>> coords(static_cast<std::size_t>(total));
    for (int v = 0; v < n; ++v) coords[static_cast<std::size_t>(v)] = {v};
    for (std::size_t k = 0; k < base_edges.size(); ++k) {
        auto [a, b] = base_edges[k];
        Vertex prev = a;
        for (int i = 1; i < s; ++i) {
            Vertex x = n + static_cast<int>(k) * (s - 1) + (i - 1);
            coords[static_cast<std::size_t>(x)] = {a, b, i};
            e.emplace_back(prev, x);
            prev = x;
        }
        e.emplace_back(prev, b);
    }
    Graph out(total, e);
    out.set_coords(std::move(coords));
    return out;
}

Vertex subdivision_vertex(const Graph& base, int s, Vertex from, Vertex to, int i) {
    require(i >= 1 && i < s, "subdivision position out of range");
    require(base.adjacent(from, to), "not an edge of the base graph");
    const auto edges = base.edges();
    const Edge key{std::min(from, to), std::max(from, to)};
    const auto k = static_cast<int>(std::lower_bound(edges.begin(), edges.end(), key) - edges.begin());
    const int pos = from < to ? i : s - i;
    return base.order() + k * (s - 1) + (pos - 1);
}

ProjectivePlane projective_plane(int q) {
    if (!is_prime(q)) throw UnsupportedOrder("projective plane order must be prime (got " + std::to_string(q) + ")");
    ProjectivePlane p;
    p.q = q;
    // Normalized representatives: first nonzero coordinate equals 1.
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            for (int c = 0; c < q; ++c) {
                std::array<int, 3> v{a, b, c};
                auto nz = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
                if (nz != v.end() && *nz == 1) p.point_vectors.push_back({a, b, c});
            }
    const auto& pts = p.point_vectors;
    for (const auto& l : pts) {
        std::vector<int> line;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            int dot = l[0] * pts[i][0] + l[1] * pts[i][1] + l[2] * pts[i][2];
            if (dot % q == 0) line.push_back(static_cast<int>(i));
        }
        p.lines.push_back(std::move(line));
    }
    return p;
}

int first_failing_plane_axiom(const ProjectivePlane& plane) {
    const int q = plane.q;
    const int np = static_cast<int>(plane.point_vectors.size());
    const int nl = static_cast<int>(plane.lines.size());
    std::vector<std::vector<char>> inc(static_cast<std::size_t>(nl), std::vector<char>(static_cast<std::size_t>(np), 0));
    for (int l = 0; l < nl; ++l)
        for (int p : plane.lines[static_cast<std::size_t>(l)]) {
            if (p < 0 || p >= np) return 1;
            inc[static_cast<std::size_t>(l)][static_cast<std::size_t>(p)] = 1;
        }
    auto on = [&](int p, int l) { return inc[static_cast<std::size_t>(l)][static_cast<std::size_t>(p)] != 0; };

    for (int l = 0; l < nl; ++l) {
        int c = 0;
        for (int p = 0; p < np; ++p) c += on(p, l);
        if (c != q + 1) return 1;
    }
    for (int p = 0; p < np; ++p) {
        int c = 0;
        for (int l = 0; l < nl; ++l) c += on(p, l);
        if (c != q + 1) return 2;
    }
    for (int l1 = 0; l1 < nl; ++l1)
        for (int l2 = l1 + 1; l2 < nl; ++l2) {
            int c = 0;
            for (int p = 0; p < np; ++p) c += on(p, l1) && on(p, l2);
            if (c != 1) return 3;
        }
    for (int p1 = 0; p1 < np; ++p1)
        for (int p2 = p1 + 1; p2 < np; ++p2) {
            int c = 0;
            for (int l = 0; l < nl; ++l) c += on(p1, l) && on(p2, l);
            if (c != 1) return 4;
        }
    // Some 4 points with no 3 collinear.
    auto collinear = [&](int a, int b, int c) {
        for (int l = 0; l < nl; ++l)
            if (on(a, l) && on(b, l) && on(c, l)) return true;
        return false;
    };
    for (int a = 0; a < np; ++a)
        for (int b = a + 1; b < np; ++b)
            for (int c = b + 1; c < np; ++c) {
                if (collinear(a, b, c)) continue;
                for (int d = c + 1; d < np; ++d)
                    if (!collinear(a, b, d) && !collinear(a, c, d) && !collinear(b, c, d)) return 0;
            }
    return 5;
}

Graph incidence_graph_pg2(int q) {
    auto plane = projective_plane(q);
    if (int bad = first_failing_plane_axiom(plane); bad != 0)
        throw StructuralError("constructed plane violates axiom " + std::to_string(bad));
    const int n = static_cast<int>(plane.point_vectors.size());
    std::vector<Edge> e;
    for (int l = 0; l < n; ++l)
        for (int p : plane.lines[static_cast<std::size_t>(l)]) e.emplace_back(p, n + l);
    Graph g(2 * n, e);
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    for (int j = 0; j < n; ++j) labels.push_back("L" + std::to_string(j));
    g.set_labels(std::move(labels));
    return g;
}

Graph cycle_strong_power_product(int k, int s) {
    require(k >= 1 && s >= 1, "strong cycle power needs k >= 1, s >= 1");
    Graph c = cycle(2 * s + 2);
    Graph out = c;
    for (int i = 1; i < k; ++i) out = strong_product(out, c);
    return out;
}

RealizerLayout realizer_layout(std::span<const int> seq) {
    require(!seq.empty(), "sequence must be nonempty");
    for (std::size_t i = 0; i < seq.size(); ++i) {
        require(seq[i] >= 1, "sequence terms must be positive");
        if (i + 1 < seq.size()) require(seq[i] >= seq[i + 1], "sequence must be nonincreasing");
    }
    require(seq.back() == 1, "sequence must end in 1");
    RealizerLayout lay;
    int offset = 0;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        if (seq[i] == seq[i + 1]) continue;
        const int idx = static_cast<int>(i) + 1;
        int size = 1;
        for (int f = 0; f < seq[i] - 1; ++f) size *= 2 * idx + 2;
        lay.blocks.push_back({idx, offset, size});
        offset += size;
    }
    lay.apex = offset;
    lay.order = offset + 1;
    return lay;
}

Graph sequence_realizer(std::span<const int> seq) {
    auto lay = realizer_layout(seq);
    std::vector<Edge> e;
    for (const auto& b : lay.blocks) {
        const int factors = seq[static_cast<std::size_t>(b.descent_index - 1)] - 1;
        Graph h = cycle_strong_power_product(factors, b.descent_index);
        for (auto [u, v] : h.edges()) e.emplace_back(b.offset + u, b.offset + v);
        e.emplace_back(lay.apex, b.offset);
    }
    return Graph(lay.order, e);
}

Graph capture_family(int n) {
    require(n >= 9, "capture family needs n >= 9");
    enum { q, t, w, x, y, h1, h2, v8, v9 };
    std::vector<Edge> e = {{q, h1}, {q, x},   {q, w},   {h1, t},  {h1, v9}, {t, x},  {t, v8},
                           {x, y},  {y, w},   {y, v8},  {v8, v9}, {v8, h2}, {h2, w}};
    std::vector<std::string> labels = {"q", "t", "w", "x", "y", "h1", "h2", "v8", "v9"};
    for (int j = 10; j <= n; ++j) {
        e.emplace_back(j - 1, j - 2);
        e.emplace_back(j - 1, j % 2 == 1 ? h1 : h2);
        labels.push_back("v" + std::to_string(j));
    }
    Graph g(n, e);
    g.set_labels(std::move(labels));
    return g;
}

Graph random_connected(int n, double p, std::uint64_t seed) {
    if (n < 1) throw InvalidParameter("random_connected needs n >= 1");
    if (p < 0 || p > 1) throw InvalidParameter("edge probability must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> pick(0, i - 1);
        edges.emplace_back(perm[static_cast<std::size_t>(pick(rng))], perm[static_cast<std::size_t>(i)]);
    }
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

}  // namespace pursuit
