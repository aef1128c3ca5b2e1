#include "pursuit/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <queue>

#include "pursuit/errors.hpp"

namespace pursuit {

Graph::Graph(int order, std::span<const Edge> edges) {
    if (order < 0) throw InvalidParameter("graph order must be nonnegative");
    adj_.assign(static_cast<std::size_t>(order), {});
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= order || v >= order)
            throw InvalidParameter("edge endpoint out of range: " + std::to_string(u) + "-" +
                                   std::to_string(v));
        if (u == v) throw InvalidParameter("loops are not stored (vertex " + std::to_string(u) + ")");
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& row : adj_) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
        edge_count_ += row.size();
    }
    edge_count_ /= 2;

    if (order <= kDenseLimit) {
        words_ = (static_cast<std::size_t>(order) + 63) / 64;
        bits_.assign(words_ * static_cast<std::size_t>(order), 0);
        for (std::size_t u = 0; u < adj_.size(); ++u)
            for (Vertex v : adj_[u]) bits_[u * words_ + static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
    }
}

std::vector<Vertex> Graph::closed_neighborhood(Vertex v) const {
    const auto& row = adj_[static_cast<std::size_t>(v)];
    std::vector<Vertex> out;
    out.reserve(row.size() + 1);
    auto it = std::lower_bound(row.begin(), row.end(), v);
    out.insert(out.end(), row.begin(), it);
    out.push_back(v);
    out.insert(out.end(), it, row.end());
    return out;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    if (u == v) return false;
    if (!bits_.empty())
        return (bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1U;
    const auto& row = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < adj_.size(); ++u)
        for (Vertex v : adj_[u])
            if (static_cast<Vertex>(u) < v) out.emplace_back(static_cast<Vertex>(u), v);
    return out;
}

std::string Graph::hash() const {
    std::uint64_t h = 14695981039346656037ULL;
    auto mix = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xFF;
            h *= 1099511628211ULL;
        }
    };
    for (auto [u, v] : edges()) {
        mix(static_cast<std::uint64_t>(u));
        mix(static_cast<std::uint64_t>(v));
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%d-%016llx", order(), static_cast<unsigned long long>(h));
    return buf;
}

void Graph::set_coords(std::vector<std::vector<int>> coords) {
    if (!coords.empty() && coords.size() != adj_.size())
        throw InvalidParameter("coordinate annotations must cover every vertex");
    coords_ = std::move(coords);
}

void Graph::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != adj_.size())
        throw InvalidParameter("label annotations must cover every vertex");
    labels_ = std::move(labels);
}

std::optional<Vertex> Graph::find_label(std::string_view name) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == name) return static_cast<Vertex>(i);
    return std::nullopt;
}

std::vector<int> bfs_distances(const Graph& g, Vertex src) { return bfs_distances(g, src, kUnreachable); }

std::vector<int> bfs_distances(const Graph& g, Vertex src, int max_depth) {
    if (!g.in_range(src)) throw InvalidParameter("vertex out of range: " + std::to_string(src));
    std::vector<int> d(static_cast<std::size_t>(g.order()), kUnreachable);
    std::vector<Vertex> frontier{src}, next;
    d[static_cast<std::size_t>(src)] = 0;
    for (int depth = 0; !frontier.empty() && depth < max_depth; ++depth) {
        next.clear();
        for (Vertex u : frontier)
            for (Vertex w : g.neighbors(u))
                if (d[static_cast<std::size_t>(w)] == kUnreachable) {
                    d[static_cast<std::size_t>(w)] = depth + 1;
                    next.push_back(w);
                }
        frontier.swap(next);
    }
    return d;
}

int dist(const Graph& g, Vertex u, Vertex v) {
    if (!g.in_range(v)) throw InvalidParameter("vertex out of range: " + std::to_string(v));
    return bfs_distances(g, u)[static_cast<std::size_t>(v)];
}

std::vector<Vertex> ball(const Graph& g, Vertex v, int r) {
    if (r < 0) throw InvalidParameter("ball radius must be nonnegative");
    auto d = bfs_distances(g, v, r);
    std::vector<Vertex> out;
    for (Vertex w = 0; w < g.order(); ++w)
        if (d[static_cast<std::size_t>(w)] <= r) out.push_back(w);
    return out;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    auto d = bfs_distances(g, 0);
    return std::none_of(d.begin(), d.end(), [](int x) { return x == kUnreachable; });
}

int eccentricity(const Graph& g, Vertex v) {
    auto d = bfs_distances(g, v);
    return *std::max_element(d.begin(), d.end());
}

int diameter(const Graph& g) {
    if (g.order() == 0) throw InvalidParameter("diameter of the empty graph");
    int best = 0;
    for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, eccentricity(g, v));
    return best;
}

int radius(const Graph& g) {
    if (g.order() == 0) throw InvalidParameter("radius of the empty graph");
    int best = kUnreachable;
    for (Vertex v = 0; v < g.order(); ++v) best = std::min(best, eccentricity(g, v));
    return best;
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.order()) {
    d_.resize(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) {
        auto row = bfs_distances(g, v);
        std::copy(row.begin(), row.end(), d_.begin() + static_cast<std::ptrdiff_t>(v) * n_);
    }
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
    std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (!g.in_range(keep[i])) throw InvalidParameter("vertex out of range in induced_subgraph");
        pos[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (Vertex w : g.neighbors(keep[i])) {
            int j = pos[static_cast<std::size_t>(w)];
            if (j > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), j);
        }
    Graph out(static_cast<int>(keep.size()), edges);
    if (g.has_labels()) {
        std::vector<std::string> labels;
        for (Vertex v : keep) labels.push_back(g.label(v));
        out.set_labels(std::move(labels));
    }
    if (g.has_coords()) {
        std::vector<std::vector<int>> coords;
        for (Vertex v : keep) coords.push_back(g.coords()[static_cast<std::size_t>(v)]);
        out.set_coords(std::move(coords));
    }
    return out;
}

Graph remove_vertex(const Graph& g, Vertex v) {
    std::vector<Vertex> keep;
    for (Vertex w = 0; w < g.order(); ++w)
        if (w != v) keep.push_back(w);
    return induced_subgraph(g, keep);
}

}  // namespace pursuit
