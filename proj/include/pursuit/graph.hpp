#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pursuit {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Distance reported for vertex pairs in different components.
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

// Immutable simple undirected graph on vertices 0..n-1.
//
// No loops are stored. Every query that the game rules care about treats the
// graph as reflexive: closed_neighborhood(v) contains v, closed_adjacent(v, v)
// is true. Rows are kept both as sorted neighbor lists and, for graphs small
// enough to afford n^2 bits, as dense bit rows for O(1) membership tests.
class Graph {
public:
    Graph() = default;

    // Builds from an edge list. Duplicate edges are merged; loops and
    // out-of-range endpoints raise InvalidParameter.
    Graph(int order, std::span<const Edge> edges);

    int order() const noexcept { return static_cast<int>(adj_.size()); }
    std::size_t size() const noexcept { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    std::vector<Vertex> closed_neighborhood(Vertex v) const;
    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    bool adjacent(Vertex u, Vertex v) const;
    bool closed_adjacent(Vertex u, Vertex v) const { return u == v || adjacent(u, v); }

    // Sorted (u < v) edge list.
    std::vector<Edge> edges() const;

    // Order plus a 64-bit FNV-1a digest of the sorted edge list, as hex.
    // Labeled, not an isomorphism invariant.
    std::string hash() const;

    // Annotations. When present they cover every vertex.
    bool has_coords() const noexcept { return !coords_.empty(); }
    const std::vector<std::vector<int>>& coords() const noexcept { return coords_; }
    std::span<const int> coord(Vertex v) const { return coords_[static_cast<std::size_t>(v)]; }
    void set_coords(std::vector<std::vector<int>> coords);

    bool has_labels() const noexcept { return !labels_.empty(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(Vertex v) const { return labels_[static_cast<std::size_t>(v)]; }
    void set_labels(std::vector<std::string> labels);
    std::optional<Vertex> find_label(std::string_view name) const;

    bool in_range(Vertex v) const noexcept { return v >= 0 && v < order(); }

    // Same order and same edge set; annotations are ignored.
    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    static constexpr int kDenseLimit = 4096;

    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::uint64_t> bits_;
    std::size_t words_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<std::vector<int>> coords_;
    std::vector<std::string> labels_;
};

// Breadth-first distances from src; kUnreachable for other components.
std::vector<int> bfs_distances(const Graph& g, Vertex src);
// Same, but stops expanding at depth max_depth (farther vertices stay kUnreachable).
std::vector<int> bfs_distances(const Graph& g, Vertex src, int max_depth);

int dist(const Graph& g, Vertex u, Vertex v);

// Closed ball N_r[v], sorted ascending.
std::vector<Vertex> ball(const Graph& g, Vertex v, int r);

bool is_connected(const Graph& g);
int eccentricity(const Graph& g, Vertex v);
int diameter(const Graph& g);
int radius(const Graph& g);

// All-pairs distances, row-major, kUnreachable across components.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(const Graph& g);

    int operator()(Vertex u, Vertex v) const {
        return d_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)];
    }
    int order() const noexcept { return n_; }

private:
    int n_ = 0;
    std::vector<int> d_;
};

// Induced subgraph on `keep` (any order); vertex i of the result is keep[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

// g with vertex v deleted; vertices above v shift down by one.
Graph remove_vertex(const Graph& g, Vertex v);

}  // namespace pursuit
