#include "pursuit/structure.hpp"

#include <algorithm>
#include <map>

#include "pursuit/errors.hpp"
#include "pursuit/families.hpp"

namespace pursuit {

namespace {

// Closed neighborhoods as bit rows, restricted to an alive set on demand.
class ClosedRows {
public:
    explicit ClosedRows(const Graph& g) : n_(g.order()), w_((static_cast<std::size_t>(n_) + 63) / 64) {
        bits_.assign(w_ * static_cast<std::size_t>(n_), 0);
        for (Vertex v = 0; v < n_; ++v) {
            set(v, v);
            for (Vertex u : g.neighbors(v)) set(v, u);
        }
    }

    // N[u] ∩ alive ⊇ N[v] ∩ alive
    bool covers(Vertex u, Vertex v, const std::vector<std::uint64_t>& alive) const {
        const auto* ru = row(u);
        const auto* rv = row(v);
        for (std::size_t i = 0; i < w_; ++i)
            if ((rv[i] & alive[i]) & ~ru[i]) return false;
        return true;
    }

    bool same(Vertex u, Vertex v, const std::vector<std::uint64_t>& alive) const {
        const auto* ru = row(u);
        const auto* rv = row(v);
        for (std::size_t i = 0; i < w_; ++i)
            if ((ru[i] ^ rv[i]) & alive[i]) return false;
        return true;
    }

    std::vector<std::uint64_t> all() const {
        std::vector<std::uint64_t> a(w_, 0);
        for (Vertex v = 0; v < n_; ++v) a[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
        return a;
    }

private:
    void set(Vertex r, Vertex c) { bits_[static_cast<std::size_t>(r) * w_ + static_cast<std::size_t>(c) / 64] |= std::uint64_t{1} << (c % 64); }
    const std::uint64_t* row(Vertex v) const { return bits_.data() + static_cast<std::size_t>(v) * w_; }

    int n_;
    std::size_t w_;
    std::vector<std::uint64_t> bits_;
};

void clear_bit(std::vector<std::uint64_t>& a, Vertex v) { a[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t{1} << (v % 64)); }

bool is_complete(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    return g.size() == n * (n - 1) / 2;
}

}  // namespace

bool is_corner(const Graph& g, Vertex v) {
    if (!g.in_range(v)) throw InvalidParameter("vertex out of range: " + std::to_string(v));
    return !cornering_vertices(g, v).empty();
}

std::vector<Vertex> cornering_vertices(const Graph& g, Vertex v) {
    std::vector<Vertex> out;
    // Any u covering N[v] contains v in N[u], so u is a neighbor of v.
    auto nv = g.closed_neighborhood(v);
    for (Vertex u : g.neighbors(v)) {
        auto nu = g.closed_neighborhood(u);
        if (std::includes(nu.begin(), nu.end(), nv.begin(), nv.end())) out.push_back(u);
    }
    return out;
}

std::vector<Vertex> corners(const Graph& g) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (is_corner(g, v)) out.push_back(v);
    return out;
}

std::vector<std::vector<Vertex>> twin_classes(const Graph& g) {
    std::map<std::vector<Vertex>, std::size_t> index;
    std::vector<std::vector<Vertex>> classes;
    for (Vertex v = 0; v < g.order(); ++v) {
        auto [it, fresh] = index.try_emplace(g.closed_neighborhood(v), classes.size());
        if (fresh) classes.emplace_back();
        classes[it->second].push_back(v);
    }
    return classes;
}

Quotient quotient(const Graph& g) {
    auto classes = twin_classes(g);
    Quotient q;
    q.class_of.assign(static_cast<std::size_t>(g.order()), 0);
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (Vertex v : classes[c]) q.class_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        int a = q.class_of[static_cast<std::size_t>(u)], b = q.class_of[static_cast<std::size_t>(v)];
        if (a != b) edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    q.graph = Graph(static_cast<int>(classes.size()), edges);
    return q;
}

std::optional<std::vector<Vertex>> copwin_ordering(const Graph& g) {
    if (g.order() == 0) throw InvalidParameter("cop-win ordering of the empty graph");
    ClosedRows rows(g);
    auto alive = rows.all();
    std::vector<char> gone(static_cast<std::size_t>(g.order()), 0);
    std::vector<Vertex> order;
    for (int left = g.order(); left > 1; --left) {
        Vertex pick = -1;
        for (Vertex v = 0; v < g.order() && pick < 0; ++v) {
            if (gone[static_cast<std::size_t>(v)]) continue;
            for (Vertex u : g.neighbors(v))
                if (!gone[static_cast<std::size_t>(u)] && rows.covers(u, v, alive)) {
                    pick = v;
                    break;
                }
        }
        if (pick < 0) return std::nullopt;
        order.push_back(pick);
        gone[static_cast<std::size_t>(pick)] = 1;
        clear_bit(alive, pick);
    }
    for (Vertex v = 0; v < g.order(); ++v)
        if (!gone[static_cast<std::size_t>(v)]) order.push_back(v);
    return order;
}

std::optional<CopWinPartition> copwin_partition(const Graph& g) {
    if (!is_connected(g)) throw DomainError("cop-win partition needs a connected graph");
    if (is_complete(g)) throw DomainError("cop-win partition is undefined for complete graphs; use capture_time_via_partition");
    ClosedRows rows(g);
    auto alive = rows.all();
    std::vector<Vertex> rest(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) rest[static_cast<std::size_t>(v)] = v;

    CopWinPartition p;
    while (!rest.empty()) {
        // Quotient K_1: the remaining vertices are pairwise twins.
        bool one_class = std::all_of(rest.begin(), rest.end(), [&](Vertex v) { return rows.same(v, rest[0], alive); });
        if (one_class) {
            p.layers.push_back(rest);
            break;
        }
        // A twin class is a quotient corner iff a non-twin vertex covers it.
        std::vector<Vertex> layer, keep;
        for (Vertex v : rest) {
            bool corner = false;
            for (Vertex u : g.neighbors(v)) {
                if (!std::binary_search(rest.begin(), rest.end(), u)) continue;
                if (rows.covers(u, v, alive) && !rows.same(u, v, alive)) {
                    corner = true;
                    break;
                }
            }
            (corner ? layer : keep).push_back(v);
        }
        if (layer.empty()) return std::nullopt;
        for (Vertex v : layer) clear_bit(alive, v);
        p.layers.push_back(std::move(layer));
        rest = std::move(keep);
    }
    if (p.layers.size() >= 2) {
        const auto& last = p.layers.back();
        const auto& prev = p.layers[p.layers.size() - 2];
        p.last_layers_fully_adjacent = std::all_of(last.begin(), last.end(), [&](Vertex a) {
            return std::all_of(prev.begin(), prev.end(), [&](Vertex b) { return g.adjacent(a, b); });
        });
    }
    return p;
}

int capture_time_via_partition(const Graph& g) {
    if (g.order() == 0) throw InvalidParameter("capture time of the empty graph");
    if (!is_connected(g)) throw DomainError("capture time needs a connected graph");
    if (g.order() == 1) return 0;
    if (is_complete(g)) return 1;
    auto p = copwin_partition(g);
    if (!p) throw DomainError("graph is not cop-win");
    const int k = static_cast<int>(p->layers.size());
    return p->last_layers_fully_adjacent ? k - 1 : k;
}

VertexMap identity_map(const Graph& g) {
    VertexMap m{g, g, {}, {}};
    m.image.resize(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) m.image[static_cast<std::size_t>(v)] = v;
    return m;
}

bool is_homomorphism(const VertexMap& m) {
    if (m.image.size() != static_cast<std::size_t>(m.source.order())) return false;
    for (Vertex x : m.image)
        if (!m.target.in_range(x)) return false;
    for (auto [u, v] : m.source.edges())
        if (!m.target.closed_adjacent(m.image[static_cast<std::size_t>(u)], m.image[static_cast<std::size_t>(v)]))
            return false;
    return true;
}

bool is_retraction(const VertexMap& m) {
    const int nh = m.target.order();
    if (!m.embedding.empty() && m.embedding.size() != static_cast<std::size_t>(nh))
        throw StructuralError("embedding must cover every target vertex");
    if (nh > m.source.order()) throw StructuralError("target is larger than source");
    std::vector<char> used(static_cast<std::size_t>(m.source.order()), 0);
    for (Vertex h = 0; h < nh; ++h) {
        Vertex x = m.embed(h);
        if (!m.source.in_range(x) || used[static_cast<std::size_t>(x)]) throw StructuralError("embedding is not injective");
        used[static_cast<std::size_t>(x)] = 1;
    }
    for (auto [a, b] : m.target.edges())
        if (!m.source.adjacent(m.embed(a), m.embed(b)))
            throw StructuralError("target edge " + std::to_string(a) + "-" + std::to_string(b) + " missing from source");
    if (!is_homomorphism(m)) return false;
    for (Vertex h = 0; h < nh; ++h)
        if (m.image[static_cast<std::size_t>(m.embed(h))] != h) return false;
    return true;
}

VertexMap complete_subdivision_retraction(int n, int s) {
    if (n < 4) throw InvalidParameter("complete subdivision retraction needs n >= 4");
    if (s < 1) throw InvalidParameter("subdivision needs s >= 1");
    const Graph kn = complete(n), km = complete(n - 1);
    VertexMap m{subdivide(kn, s), subdivide(km, s), {}, {}};
    const Vertex u = n - 1, v = n - 2;

    m.embedding.resize(static_cast<std::size_t>(m.target.order()));
    std::vector<Vertex> back(static_cast<std::size_t>(m.source.order()), -1);
    for (Vertex b = 0; b < n - 1; ++b) m.embedding[static_cast<std::size_t>(b)] = b;
    for (auto [a, b] : km.edges())
        for (int i = 1; i < s; ++i)
            m.embedding[static_cast<std::size_t>(subdivision_vertex(km, s, a, b, i))] = subdivision_vertex(kn, s, a, b, i);
    for (Vertex h = 0; h < m.target.order(); ++h) back[static_cast<std::size_t>(m.embedding[static_cast<std::size_t>(h)])] = h;

    m.image.assign(static_cast<std::size_t>(m.source.order()), -1);
    for (Vertex x = 0; x < m.source.order(); ++x)
        if (back[static_cast<std::size_t>(x)] >= 0) m.image[static_cast<std::size_t>(x)] = back[static_cast<std::size_t>(x)];  // (d)
    m.image[static_cast<std::size_t>(u)] = v;                                                                                    // (a)
    for (int i = 1; i < s; ++i)
        m.image[static_cast<std::size_t>(subdivision_vertex(kn, s, u, v, i))] = v;  // (b)
    for (Vertex w = 0; w < n - 2; ++w)
        for (int i = 1; i < s; ++i)
            m.image[static_cast<std::size_t>(subdivision_vertex(kn, s, u, w, i))] = subdivision_vertex(km, s, v, w, i);  // (c)
    return m;
}

VertexMap product_map(const VertexMap& a, const VertexMap& b) {
    VertexMap m{cartesian_product(a.source, b.source), cartesian_product(a.target, b.target), {}, {}};
    const int ns = b.source.order(), nt = b.target.order();
    m.image.resize(static_cast<std::size_t>(m.source.order()));
    for (Vertex x = 0; x < a.source.order(); ++x)
        for (Vertex y = 0; y < ns; ++y)
            m.image[static_cast<std::size_t>(x * ns + y)] =
                a.image[static_cast<std::size_t>(x)] * nt + b.image[static_cast<std::size_t>(y)];
    if (!a.embedding.empty() || !b.embedding.empty()) {
        m.embedding.resize(static_cast<std::size_t>(m.target.order()));
        for (Vertex x = 0; x < a.target.order(); ++x)
            for (Vertex y = 0; y < nt; ++y)
                m.embedding[static_cast<std::size_t>(x * nt + y)] = a.embed(x) * ns + b.embed(y);
    } else if (nt != ns) {
        // The identity embedding of H□H' into G□G' shifts rows; spell it out.
        m.embedding.resize(static_cast<std::size_t>(m.target.order()));
        for (Vertex x = 0; x < a.target.order(); ++x)
            for (Vertex y = 0; y < nt; ++y) m.embedding[static_cast<std::size_t>(x * nt + y)] = x * ns + y;
    }
    return m;
}

VertexMap realizer_retraction(std::span<const int> seq, int j) {
    auto lay = realizer_layout(seq);
    if (j < 1 || j > static_cast<int>(lay.blocks.size()))
        throw InvalidParameter("realizer has no block " + std::to_string(j));
    const auto& blk = lay.blocks[static_cast<std::size_t>(j - 1)];
    const int factors = seq[static_cast<std::size_t>(blk.descent_index - 1)] - 1;
    VertexMap m{sequence_realizer(seq), cycle_strong_power_product(factors, blk.descent_index), {}, {}};
    m.image.assign(static_cast<std::size_t>(lay.order), 0);
    m.embedding.resize(static_cast<std::size_t>(blk.size));
    for (int h = 0; h < blk.size; ++h) {
        m.embedding[static_cast<std::size_t>(h)] = blk.offset + h;
        m.image[static_cast<std::size_t>(blk.offset + h)] = h;
    }
    return m;
}

nlohmann::json partition_report(const Graph& g) {
    if (g.order() == 0 || !is_connected(g)) throw DomainError("partition report needs a connected nonempty graph");
    nlohmann::json layers = nlohmann::json::array();
    if (!is_complete(g)) {
        if (auto p = copwin_partition(g))
            for (const auto& l : p->layers) layers.push_back(l);
        else
            return {{"layers", layers}, {"capture_time", nullptr}};
    } else {
        std::vector<Vertex> all(static_cast<std::size_t>(g.order()));
        for (Vertex v = 0; v < g.order(); ++v) all[static_cast<std::size_t>(v)] = v;
        layers.push_back(all);
    }
    return {{"layers", layers}, {"capture_time", capture_time_via_partition(g)}};
}

nlohmann::json map_report(const VertexMap& m) {
    bool ok = false;
    try {
        ok = is_retraction(m);
    } catch (const StructuralError&) {
        ok = false;
    }
    return {{"image", m.image}, {"is_retraction", ok}};
}

}  // namespace pursuit
