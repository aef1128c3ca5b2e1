#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "pursuit/game.hpp"
#include "pursuit/graph.hpp"
#include "pursuit/solver.hpp"

namespace pursuit {

inline constexpr int kDefaultHorizon = 200;
inline constexpr Vertex kNoMove = -1;

struct InvariantCheck {
    std::string name;
    bool ok = true;
    long long value = 0;  // the quantity the check was made on, when there is one
};

// What a policy sees. Cops are labeled: cops[i] is cop i's position.
struct PlayView {
    const Graph& graph;
    const GameConfig& config;
    int round = 0;  // cop turns played so far
    std::span<const Vertex> cops;
    Vertex robber = kNoMove;  // kNoMove while the robber has not been placed
};

class CopPolicy {
public:
    virtual ~CopPolicy() = default;
    virtual std::string name() const = 0;
    virtual std::vector<Vertex> place(const PlayView& view) = 0;
    // New labeled positions, each within cop_speed of the old one.
    virtual std::vector<Vertex> move(const PlayView& view) = 0;
    // Checks belonging to the most recent place/move call.
    virtual std::vector<InvariantCheck> checks() const { return {}; }
};

class RobberPolicy {
public:
    virtual ~RobberPolicy() = default;
    virtual std::string name() const = 0;
    virtual Vertex place(const PlayView& view) = 0;
    // A vertex from robber_moves(), or kNoMove when that set is empty.
    virtual Vertex move(const PlayView& view) = 0;
    virtual std::vector<InvariantCheck> checks() const { return {}; }
};

struct TraceRound {
    int round = 0;              // 0 holds the placements
    std::vector<Vertex> cops;   // labeled, after this round's cop turn
    Vertex robber = kNoMove;    // after this round's robber turn (the capture vertex on capture)
    bool captured = false;
    std::vector<InvariantCheck> checks;
};

struct StrategyTrace {
    enum class Outcome { captured, survived };

    std::string cop_policy;
    std::string robber_policy;
    GameConfig config;
    int horizon = 0;
    std::vector<TraceRound> rounds;
    Outcome outcome = Outcome::survived;
    int end_round = 0;  // capture round, or the horizon

    bool captured() const noexcept { return outcome == Outcome::captured; }
    // True iff every recorded check passed.
    bool invariants_held() const;
    // First failing check as "round r: name", if any.
    std::optional<std::string> first_violation() const;
};

// Placements, then alternating cop and robber turns until a cop is within
// capture radius of the robber or `horizon` cop turns have been played. A
// robber with no legal move is captured. Illegal policy output throws
// TraceError naming the round.
StrategyTrace simulate(const Graph& g, const GameConfig& c, CopPolicy& cops, RobberPolicy& robber,
                       int horizon = kDefaultHorizon);

// Replays a trace through gamecore; TraceError on the first illegal transition.
void validate_trace(const Graph& g, const StrategyTrace& t);

// One JSON object per round, preceded by a header record.
void write_trace_jsonl(std::ostream& out, const StrategyTrace& t);
StrategyTrace read_trace_jsonl(std::istream& in);
nlohmann::json to_json(const TraceRound& r);

// --- generic policies --------------------------------------------------------

// Optimal play read from a solved game; cop ties go to the lowest encoded
// successor, robber ties to the lowest vertex.
std::unique_ptr<CopPolicy> optimal_cops(std::shared_ptr<const SolvedGame> game);
std::unique_ptr<RobberPolicy> optimal_robber(std::shared_ptr<const SolvedGame> game);

// Each cop independently steps to the vertex of her speed-s ball closest to
// the robber (lowest index on ties). Placement: `start`, or cop i on vertex
// i * n / k when empty.
std::unique_ptr<CopPolicy> greedy_cops(int count, std::vector<Vertex> start = {});
// Each cop moves to a uniformly random vertex of her ball.
std::unique_ptr<CopPolicy> random_cops(int count, std::uint64_t seed, std::vector<Vertex> start = {});

// Maximizes the distance to the nearest cop (lowest index on ties).
std::unique_ptr<RobberPolicy> greedy_robber();
// Uniform over moves that leave every cop farther than cop_speed + radius,
// or over all legal moves when there are none.
std::unique_ptr<RobberPolicy> random_robber(std::uint64_t seed);

// --- scripted strategies -----------------------------------------------------

// Cartesian product of coordinate-annotated paths, each with diameter >= 2s,
// against at most (d-1)/2 cops. Each turn: find a dimension neither of whose
// directions is blocked (a cop at distance x blocks a direction when it lies
// that way at distance >= x/2 in that dimension) and move s steps along it.
// Records "cops_beyond_s" after every move.
std::unique_ptr<RobberPolicy> grid_blocking_robber(int s);

// Speed 2 on Q_d against at most d/2 - 1 cops, by dimension weights.
// Records "safe_distance_3".
std::unique_ptr<RobberPolicy> hypercube_weight_robber();

// Speed 2 on P box P for the incidence graph P of a plane of order q, against
// at most q cops: step to a neighbor in each factor that keeps distance >= 2
// from every cop shadow it does not share. Records "safe_distance_3".
std::unique_ptr<RobberPolicy> projective_product_robber(const Graph& factor);

// The k-fold strong product of C_{2s+2} against at most k cops: coordinate i
// sits s+1 (mod 2s+2) from cop i's coordinate i. Records "offset_s_plus_1".
std::unique_ptr<RobberPolicy> torus_coordinate_robber(int s);

// One cop on a product of two coordinate-annotated paths. Steps minimize the
// larger per-dimension distance without zeroing either; captures when in
// reach. Records "phi_nonincreasing" with the floored total max(D1+D2, 2).
std::unique_ptr<CopPolicy> grid_single_cop(int s);

// Cops on G box H (vertex (u, v) = u * |H| + v). The first m cops chase the
// robber's H-shadow, then play the solved semi-active game on G; the other k
// chase the G-shadow, then play the solved restricted game on H. Records the
// phase and progress counters.
std::unique_ptr<CopPolicy> two_phase_product_cops(const Graph& g_factor, const Graph& h_factor, int s, int m,
                                                   int k);

// The step lemma for tree products: true unless the walk has s steps, stays
// off cop vertices, makes fewer than x/2 of them toward the cop (x the
// distance before the walk) and still ends within s of the cop.
bool distance_half_lemma_holds(const Graph& g, int s, Vertex cop, std::span<const Vertex> walk);

}  // namespace pursuit
