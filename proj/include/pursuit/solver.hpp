#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pursuit/game.hpp"
#include "pursuit/graph.hpp"

namespace pursuit {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 28;

enum class Kernel { automatic, serial, parallel };

struct SolveOptions {
    std::uint64_t budget = kDefaultBudget;
    Kernel kernel = Kernel::automatic;
};

struct SolveStats {
    std::uint64_t states = 0;         // encoded sub-move states
    std::uint64_t robber_states = 0;  // states with the robber to move
    std::uint64_t valid = 0;          // states with no cop within capture radius
    std::uint64_t resolved = 0;       // states with a finite value
    int levels = 0;                   // distinct value levels processed
    double millis = 0;
};

struct SolveResult {
    bool cop_win = false;
    std::optional<int> capture_time;  // cop turns under optimal play
    std::vector<Vertex> placement;    // an optimal cop placement (lowest index among ties)
    SolveStats stats;
};

// Index layout of the sub-move state space. A cop turn is split into k
// single-cop sub-moves; a state records the cops that have not moved yet (U),
// the destinations of those that have (M), an "some cop changed vertex" flag
// f for the active variant, and the robber vertex r. Block u = |U| holds
// C(n+u-1, u) * C(n+k-u-1, k-u) * F(u) * n states, where F(u) = 2 only for
// the active variant with 1 <= u <= k-1. Block 0 (robber to move) comes first.
class SubstateLayout {
public:
    SubstateLayout(int order, int cops, bool flagged);

    struct Sub {
        int u = 0;
        int f = 0;
        Vertex r = 0;
        int unmoved[kMaxCops] = {};
        int moved[kMaxCops] = {};
    };

    int order() const noexcept { return n_; }
    int cops() const noexcept { return k_; }
    int flags(int u) const noexcept { return flagged_ && u >= 1 && u <= k_ - 1 ? 2 : 1; }
    std::uint64_t size() const noexcept { return base_[static_cast<std::size_t>(k_) + 1]; }
    std::uint64_t block_begin(int u) const noexcept { return base_[static_cast<std::size_t>(u)]; }
    std::uint64_t multisets(int m) const noexcept { return count_[static_cast<std::size_t>(m)]; }
    const Binomials& binomials() const noexcept { return c_; }

    std::uint64_t index(int u, std::uint64_t rank_unmoved, std::uint64_t rank_moved, int f, Vertex r) const {
        return base_[static_cast<std::size_t>(u)] +
               ((rank_unmoved * count_[static_cast<std::size_t>(k_ - u)] + rank_moved) * static_cast<std::uint64_t>(flags(u)) +
                static_cast<std::uint64_t>(f)) *
                   static_cast<std::uint64_t>(n_) +
               static_cast<std::uint64_t>(r);
    }
    std::uint64_t rank(std::span<const int> sorted) const { return multiset_rank(sorted, c_); }
    void decode(std::uint64_t index, Sub& s) const;

private:
    int n_;
    int k_;
    bool flagged_;
    Binomials c_;
    std::vector<std::uint64_t> count_;  // count_[m] = C(n+m-1, m)
    std::vector<std::uint64_t> base_;
};

// Number of sub-move states solve() would allocate.
std::uint64_t substate_count(int order, const GameConfig& c);

// A solved game: values for every sub-move state plus policy queries.
class SolvedGame {
public:
    static constexpr std::uint16_t kUnresolved = 0xFFFF;
    static constexpr std::uint16_t kInvalid = 0xFFFE;

    SolvedGame(const Graph& g, const GameConfig& c, const SolveOptions& opt = {});

    const Graph& graph() const noexcept { return *graph_; }
    const GameConfig& config() const noexcept { return config_; }
    const SolveResult& result() const noexcept { return result_; }
    const SubstateLayout& layout() const noexcept { return layout_; }
    const MoveTables& tables() const noexcept { return *tables_; }
    std::span<const std::uint16_t> values() const noexcept { return values_; }

    // Cop turns still needed with the cops (sorted) to move; nullopt when the
    // robber escapes forever or the state is not a live position.
    std::optional<int> cop_value(std::span<const Vertex> cops, Vertex robber) const;
    // Same, robber to move.
    std::optional<int> robber_value(std::span<const Vertex> cops, Vertex robber) const;
    // Finite value, kUnresolved, or kInvalid, for either phase.
    std::uint16_t raw_value(std::span<const Vertex> cops, Vertex robber, Phase phase) const;

    struct CopMove {
        std::vector<std::pair<Vertex, Vertex>> steps;  // (from, to) per sub-move, in order
        std::vector<Vertex> after;                     // sorted cop positions after the turn
        bool captures = false;
    };

    // Value-optimal cop turn; ties go to the lowest encoded successor. In a
    // robber-won position, the lowest-index legal turn.
    CopMove optimal_cop_move(std::span<const Vertex> cops, Vertex robber) const;
    // Value-optimal robber move (unresolved counts as best); nullopt when the
    // robber has no move that avoids capture.
    std::optional<Vertex> optimal_robber_move(std::span<const Vertex> cops, Vertex robber) const;
    // Robber placement against the given cops; nullopt when every vertex is
    // within capture radius of a cop.
    std::optional<Vertex> optimal_robber_placement(std::span<const Vertex> cops) const;

private:
    void run_serial();
    void run_parallel();
    void initialize(std::vector<std::uint32_t>& level0, std::vector<std::uint32_t>& level1);
    void finish(double millis);

    std::shared_ptr<const Graph> graph_;
    GameConfig config_;
    SubstateLayout layout_;
    std::unique_ptr<MoveTables> tables_;
    std::vector<std::uint16_t> values_;
    std::vector<std::uint16_t> counters_;  // robber-to-move block only
    SolveResult result_;

    friend struct SolverKernels;
};

SolveResult solve(const Graph& g, const GameConfig& c, const SolveOptions& opt = {});
SolveResult solve_serial(const Graph& g, const GameConfig& c, const SolveOptions& opt = {});
SolveResult solve_parallel(const Graph& g, const GameConfig& c, const SolveOptions& opt = {});

// Least k in 1..k_max whose solve is a cop win; the cop_count field of `c`
// is ignored. Throws CopNumberExceeded when none is.
int cop_number(const Graph& g, GameConfig c, int k_max, const SolveOptions& opt = {});

// Classic cop number (speed 1, standard rules) of the s-th power of g.
int cop_number_via_power(const Graph& g, int s, int k_max, const SolveOptions& opt = {});

// Optimal capture time; DomainError when the robber wins.
int capture_time(const Graph& g, const GameConfig& c, const SolveOptions& opt = {});

// {"graph_hash", "config", "cop_win", "capture_time", "states", "millis"}
nlohmann::json solve_report(const Graph& g, const GameConfig& c, const SolveResult& r);

}  // namespace pursuit
