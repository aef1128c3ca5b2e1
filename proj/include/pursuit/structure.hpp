#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pursuit/graph.hpp"

namespace pursuit {

// v is a corner iff N[u] ⊇ N[v] for some u != v.
bool is_corner(const Graph& g, Vertex v);
std::vector<Vertex> corners(const Graph& g);
// Every u != v with N[u] ⊇ N[v].
std::vector<Vertex> cornering_vertices(const Graph& g, Vertex v);

// Classes of the closed-twin relation N[u] = N[v], each sorted, ordered by
// smallest member.
std::vector<std::vector<Vertex>> twin_classes(const Graph& g);

struct Quotient {
    Graph graph;                  // one vertex per twin class
    std::vector<int> class_of;    // source vertex -> quotient vertex
};
Quotient quotient(const Graph& g);

// Repeatedly deletes the lowest-indexed corner. Returns the deletion order
// (the last vertex is the one left standing) or nullopt if at some stage no
// vertex is a corner.
std::optional<std::vector<Vertex>> copwin_ordering(const Graph& g);

struct CopWinPartition {
    std::vector<std::vector<Vertex>> layers;  // X_1..X_k, each sorted
    bool last_layers_fully_adjacent = false;  // every vertex of X_k adjacent to every vertex of X_{k-1}
};

// Layer i is the set of vertices of G_i whose twin class is a corner of
// G_i / Θ; when G_i is complete (quotient K_1) the rest of the graph forms
// the final layer. Throws DomainError for complete or disconnected input.
std::optional<CopWinPartition> copwin_partition(const Graph& g);

// Classic (one cop, speed 1) capture time from the partition. K_1 -> 0,
// other complete graphs -> 1; DomainError when g is not cop-win.
int capture_time_via_partition(const Graph& g);

// A vertex map from `source` onto `target`. `embedding` places the target
// inside the source (target vertex -> source vertex); empty means the
// identity on 0..|target|-1.
struct VertexMap {
    Graph source;
    Graph target;
    std::vector<Vertex> image;
    std::vector<Vertex> embedding;

    Vertex embed(Vertex h) const { return embedding.empty() ? h : embedding[static_cast<std::size_t>(h)]; }
};

VertexMap identity_map(const Graph& g);

// Reflexive homomorphism: adjacent source vertices go to equal or adjacent images.
bool is_homomorphism(const VertexMap& m);
// Homomorphism that fixes the embedded copy of target pointwise. Throws
// StructuralError if the embedding does not carry target into source as a
// subgraph.
bool is_retraction(const VertexMap& m);

// Retraction K_n^(s) -> K_{n-1}^(s) that deletes branch vertex u = n-1 and
// folds it onto v = n-2.
VertexMap complete_subdivision_retraction(int n, int s);

// φ1 × φ2 on G□G' -> H□H'.
VertexMap product_map(const VertexMap& a, const VertexMap& b);

// Retraction of sequence_realizer(seq) onto its j-th block (1-based): the
// block is fixed and everything else goes to the block's all-zero vertex.
VertexMap realizer_retraction(std::span<const int> seq, int j);

nlohmann::json partition_report(const Graph& g);
nlohmann::json map_report(const VertexMap& m);

}  // namespace pursuit
