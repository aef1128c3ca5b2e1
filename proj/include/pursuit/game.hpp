#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pursuit/graph.hpp"

namespace pursuit {

enum class Variant { standard, active, semi_active, restricted };

std::string to_string(Variant v);
Variant parse_variant(std::string_view name);  // InvalidParameter on unknown names

struct GameConfig {
    int cop_speed = 1;
    int robber_speed = 1;
    int cop_count = 1;
    Variant variant = Variant::standard;
    int capture_radius = 0;

    // Distances (measured in G, ignoring cops) at which a robber move may end.
    std::vector<int> allowed_end_distances() const;
    bool end_distance_allowed(int d) const;
    // Active variant: some cop must end the turn on a different vertex.
    bool cops_must_move() const { return variant == Variant::active; }
    void validate() const;  // InvalidParameter on out-of-range fields

    friend bool operator==(const GameConfig&, const GameConfig&) = default;
};

GameConfig speeds(int s, int t, int k, Variant v = Variant::standard, int radius = 0);

nlohmann::json to_json(const GameConfig& c);
GameConfig config_from_json(const nlohmann::json& j);

inline constexpr int kMaxCops = 8;

// Binomial coefficients C(a, b) for a < rows, b <= kMaxCops, saturating at
// UINT64_MAX.
class Binomials {
public:
    explicit Binomials(int rows);
    std::uint64_t operator()(int a, int b) const {
        if (b < 0 || a < b) return 0;
        return t_[static_cast<std::size_t>(a) * (kMaxCops + 1) + static_cast<std::size_t>(b)];
    }
    int rows() const noexcept { return rows_; }

private:
    int rows_;
    std::vector<std::uint64_t> t_;
};

// Number of size-k multisets over n symbols: C(n + k - 1, k).
std::uint64_t multiset_count(int n, int k);

// Colexicographic rank of a sorted multiset a_1 <= ... <= a_k:
// sum over i of C(a_i + i - 1, i).
std::uint64_t multiset_rank(std::span<const int> sorted, const Binomials& c);
void multiset_unrank(std::uint64_t rank, int k, const Binomials& c, int* out);

enum class Phase : std::uint8_t { cop_turn = 0, robber_turn = 1 };

struct GameState {
    std::vector<Vertex> cops;  // sorted ascending
    Vertex robber = 0;
    Phase phase = Phase::cop_turn;

    friend bool operator==(const GameState&, const GameState&) = default;
};

// Dense index over (cop multiset, robber vertex, phase):
// index = (rank(cops) * n + robber) * 2 + phase.
class StateCodec {
public:
    StateCodec(int order, int cops);
    std::uint64_t size() const noexcept { return size_; }
    std::uint64_t encode(const GameState& s) const;  // InvalidParameter on unsorted or out-of-range input
    GameState decode(std::uint64_t index) const;

private:
    int n_;
    int k_;
    Binomials c_;
    std::uint64_t size_;
};

// Vertices the robber can reach from `from` along a path of at most t edges
// that touches no cop vertex, whose graph distance from `from` is allowed by
// the variant. Sorted. InvalidParameter when `from` holds a cop.
std::vector<Vertex> robber_moves(const Graph& g, const GameConfig& c, std::span<const Vertex> cops, Vertex from);

// True iff some cop is within capture_radius of the robber.
bool is_capture(const Graph& g, const GameConfig& c, std::span<const Vertex> cops, Vertex robber);

// Every sorted cop multiset reachable in one cop turn: each cop independently
// moves within distance s; in the active variant at least one cop must end on
// a different vertex. Sorted, duplicate-free. state.phase must be cop_turn.
std::vector<std::vector<Vertex>> cop_turn_successors(const Graph& g, const GameConfig& c, const GameState& state);

// Same set, produced by k single-cop sub-moves taken in nondecreasing order of
// destination (the decomposition the solver uses).
std::vector<std::vector<Vertex>> cop_turn_successors_sequential(const Graph& g, const GameConfig& c,
                                                                const GameState& state);

// Shared move machinery for repeated queries on one graph: all-pairs distances,
// speed-s balls and a reusable blocked-BFS.
class MoveTables {
public:
    MoveTables(const Graph& g, const GameConfig& c);

    const Graph& graph() const noexcept { return *g_; }
    const GameConfig& config() const noexcept { return c_; }
    int dist(Vertex u, Vertex v) const { return d_(u, v); }
    const DistanceMatrix& distances() const noexcept { return d_; }
    std::span<const Vertex> cop_ball(Vertex v) const { return balls_[static_cast<std::size_t>(v)]; }

    bool safe(std::span<const int> cops, Vertex r) const {
        for (int c : cops)
            if (d_(c, r) <= c_.capture_radius) return false;
        return true;
    }

    struct Scratch {
        std::vector<std::uint32_t> mark;
        std::vector<Vertex> frontier, next;
        std::uint32_t stamp = 0;
    };
    Scratch make_scratch() const;

    // Robber moves as in robber_moves(); `out` is cleared and filled (unsorted).
    void robber_moves(std::span<const int> cops, Vertex from, Scratch& s, std::vector<Vertex>& out) const;

private:
    const Graph* g_;
    GameConfig c_;
    DistanceMatrix d_;
    std::vector<std::vector<Vertex>> balls_;
};

}  // namespace pursuit
