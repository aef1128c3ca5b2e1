#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pursuit/graph.hpp"

namespace pursuit {

// Standard families, canonically numbered. Paths and cycles carry the
// coordinate {i} on vertex i; hypercube vertices carry their 0/1 tuple with
// coordinate 0 most significant (the same numbering the d-fold Cartesian
// product of K_2 produces).
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph hypercube(int d);
Graph star(int leaves);  // K_{1,leaves}, center 0
Graph petersen();

// Products number vertex (u, v) as u * |H| + v. When both factors carry
// coordinates the product carries their concatenation; an unannotated factor
// contributes its vertex index as a single coordinate.
Graph cartesian_product(const Graph& g, const Graph& h);
Graph strong_product(const Graph& g, const Graph& h);
Graph cartesian_power(const Graph& g, int d);

// G^s: same vertices, uv an edge iff 1 <= dist_G(u, v) <= s.
Graph power(const Graph& g, int s);

// G^(s): every edge replaced by a path of length s. Branch vertices keep
// their indices; the s-1 interior vertices of edge {a, b} (a < b, e-th edge in
// sorted order) are n + e(s-1) + (i-1) for i = 1..s-1 counted from a.
// Coordinates: branch v -> {v}; interior -> {a, b, i}.
Graph subdivide(const Graph& g, int s);

// Index of the i-th interior vertex (1 <= i <= s-1) on the subdivided edge
// from `from` toward `to`, counted from `from`.
Vertex subdivision_vertex(const Graph& base, int s, Vertex from, Vertex to, int i);

// Points and lines of PG(2, q) for prime q, from the 1- and 2-dimensional
// subspaces of GF(q)^3.
struct ProjectivePlane {
    int q = 0;
    std::vector<std::vector<int>> point_vectors;  // normalized representatives
    std::vector<std::vector<int>> lines;          // each line as sorted point indices
};

ProjectivePlane projective_plane(int q);

// Brute-force check of the five projective-plane axioms. Returns 0 when all
// hold, otherwise the number of the first failing axiom.
int first_failing_plane_axiom(const ProjectivePlane& plane);

// Incidence graph: points are vertices 0..N-1 (labels "p<i>"), lines are
// N..2N-1 (labels "L<j>"), N = q^2 + q + 1. Self-checks the axioms.
Graph incidence_graph_pg2(int q);

// k-fold strong product of C_{2s+2}; coordinates (x_1..x_k) in 0..2s+1.
Graph cycle_strong_power_product(int k, int s);

// Realizer of a nonincreasing sequence ending in 1: one block per descent
// index i (t_i > t_{i+1}), the block being the (t_i - 1)-fold strong power of
// C_{2i+2}, plus an apex adjacent to every block's all-zero vertex.
struct RealizerBlock {
    int descent_index = 0;  // i_j (1-based sequence index)
    int offset = 0;         // first vertex of the block
    int size = 0;
};

struct RealizerLayout {
    std::vector<RealizerBlock> blocks;
    Vertex apex = 0;  // last vertex
    int order = 0;
};

RealizerLayout realizer_layout(std::span<const int> seq);
Graph sequence_realizer(std::span<const int> seq);

// The capture-time family G_n (n >= 9) on named vertices
// q t w x y h1 h2 v8 v9 (indices 0..8), followed by v10, v11, ... ; vertex
// v_j sits at index j - 1 for j >= 8.
Graph capture_family(int n);

// A uniform random recursive spanning tree on shuffled labels plus every
// other pair independently with probability p. Always connected.
Graph random_connected(int n, double p, std::uint64_t seed);

}  // namespace pursuit
