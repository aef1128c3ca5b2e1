#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pursuit/game.hpp"
#include "pursuit/graph.hpp"
#include "pursuit/solver.hpp"

namespace pursuit {

inline constexpr const char* kToolVersion = "0.3.0";

// --- cache -------------------------------------------------------------------

// JSON-lines store of solve results keyed by (graph hash, config). Entries
// carry no timings, so a hit serializes byte-identically to a recompute.
class ResultCache {
public:
    explicit ResultCache(std::string dir);
    // $PURSUIT_CACHE_DIR, else $XDG_CACHE_HOME/pursuit, else ~/.cache/pursuit.
    static std::string default_dir();

    const std::string& dir() const noexcept { return dir_; }
    std::string file() const;

    std::optional<SolveResult> get(const Graph& g, const GameConfig& c);
    void put(const Graph& g, const GameConfig& c, const SolveResult& r);
    std::size_t size();

    static std::string key(const Graph& g, const GameConfig& c);
    // The cached form of a result (stats.millis dropped).
    static nlohmann::json result_json(const SolveResult& r);
    static SolveResult result_from_json(const nlohmann::json& j);

private:
    void load_locked();

    std::string dir_;
    std::mutex mu_;
    bool loaded_ = false;
    std::map<std::string, nlohmann::json> entries_;
};

// Solve through the cache when one is given.
SolveResult cached_solve(const Graph& g, const GameConfig& c, const SolveOptions& opt, ResultCache* cache);
int cached_cop_number(const Graph& g, GameConfig c, int k_max, const SolveOptions& opt, ResultCache* cache);

// --- claims ------------------------------------------------------------------

enum class ClaimStatus { holds, fails, skipped };
enum class ClaimKind { theorem, conjecture };

std::string to_string(ClaimStatus s);  // "holds", "fails", "skipped(budget)"

struct ClaimRecord {
    std::string id;
    std::string statement;  // plain-math statement the claim instantiates
    ClaimKind kind = ClaimKind::theorem;
    nlohmann::json parameters = nlohmann::json::object();
    std::string relation;  // "equal", "at_most", "at_least", "interval", "predicate"
    std::string expected;
    std::string computed;
    ClaimStatus status = ClaimStatus::holds;
    double millis = 0;
    // For "fails": graph, config and solver output. For "skipped": state counts.
    nlohmann::json witness = nlohmann::json::object();
};

nlohmann::json to_json(const ClaimRecord& r);

struct HarnessOptions {
    SolveOptions solve;
    ResultCache* cache = nullptr;
    std::string catalog_dir;  // holds connected<n>.g6 files; empty means skip catalog claims
    std::uint64_t seed = 20240601;
};

struct ClaimSpec {
    std::string id;
    std::string statement;
    ClaimKind kind = ClaimKind::theorem;
    std::string summary;
    std::function<ClaimRecord(const HarnessOptions&)> run;
};

const std::vector<ClaimSpec>& claim_registry();
const ClaimSpec* find_claim(std::string_view id);

// InvalidParameter for an unknown id. Budget overruns become "skipped".
ClaimRecord run_claim(std::string_view id, const HarnessOptions& opt);
// Claims whose id contains `filter` ("all" or empty selects every claim),
// OpenMP-parallel across claims, returned in registry order.
std::vector<ClaimRecord> run_all(std::string_view filter, const HarnessOptions& opt);

// Theorem failures make a run fail; conjecture records only report.
bool run_failed(const std::vector<ClaimRecord>& records);

void write_csv(std::ostream& out, const std::vector<ClaimRecord>& records);
void write_json(std::ostream& out, const std::vector<ClaimRecord>& records);
nlohmann::json summary_json(const std::vector<ClaimRecord>& records);

// --- monotonicity explorer ---------------------------------------------------

struct MonotoneRow {
    std::string name;
    int order = 0;
    int radius = 0;
    std::vector<std::optional<int>> sequence;  // c_{s,s} for s = 1..; nullopt past budget or k_max
    std::vector<int> increases;                // s with c_{s,s} < c_{s+1,s+1}
};

// c_{s,s}(G) for s = 1..min(s_max, rad G); increases are reported, never thrown.
MonotoneRow explore_monotone(const std::string& name, const Graph& g, int s_max, int k_max,
                             const SolveOptions& opt = {}, ResultCache* cache = nullptr);
nlohmann::json to_json(const MonotoneRow& r);

// --- catalog scan ------------------------------------------------------------

struct ScanReport {
    int speed = 1;
    int order = 0;
    std::size_t records = 0;
    std::size_t malformed = 0;
    std::size_t wrong_order = 0;
    std::size_t disconnected = 0;
    std::size_t cop_win = 0;
    std::optional<int> max_capture_time;
    std::vector<std::string> argmax;  // graph6 of maximizers, first 16 in input order
    std::size_t argmax_count = 0;
    std::size_t spot_checks = 0;
    std::size_t spot_mismatches = 0;
    std::vector<std::string> mismatch_witnesses;
    double millis = 0;
};

// For each connected record of order n with c_{s,s} = 1 (G^s dismantlable),
// capt_s(G) = capt_1(G^s) by the partition method. Every `spot_every`-th
// such graph (and the first) is re-solved with the speed-s solver.
ScanReport scan_graph6(std::istream& in, int s, int n, const SolveOptions& opt = {}, std::size_t spot_every = 1000);
nlohmann::json to_json(const ScanReport& r);

}  // namespace pursuit
