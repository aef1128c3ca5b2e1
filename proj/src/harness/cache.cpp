#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "pursuit/errors.hpp"
#include "pursuit/harness.hpp"

namespace pursuit {

namespace fs = std::filesystem;

ResultCache::ResultCache(std::string dir) : dir_(std::move(dir)) {}

std::string ResultCache::default_dir() {
    if (const char* d = std::getenv("PURSUIT_CACHE_DIR"); d && *d) return d;
    if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return (fs::path(x) / "pursuit").string();
    if (const char* h = std::getenv("HOME"); h && *h) return (fs::path(h) / ".cache" / "pursuit").string();
    return ".pursuit-cache";
}

std::string ResultCache::file() const { return (fs::path(dir_) / "solve.jsonl").string(); }

std::string ResultCache::key(const Graph& g, const GameConfig& c) { return g.hash() + "|" + to_json(c).dump(); }

nlohmann::json ResultCache::result_json(const SolveResult& r) {
    nlohmann::json ct = r.capture_time ? nlohmann::json(*r.capture_time) : nlohmann::json(nullptr);
    return {{"cop_win", r.cop_win},
            {"capture_time", ct},
            {"placement", r.placement},
            {"states", r.stats.states},
            {"robber_states", r.stats.robber_states},
            {"valid", r.stats.valid},
            {"resolved", r.stats.resolved},
            {"levels", r.stats.levels}};
}

SolveResult ResultCache::result_from_json(const nlohmann::json& j) {
    SolveResult r;
    r.cop_win = j.at("cop_win").get<bool>();
    if (!j.at("capture_time").is_null()) r.capture_time = j.at("capture_time").get<int>();
    r.placement = j.at("placement").get<std::vector<Vertex>>();
    r.stats.states = j.at("states").get<std::uint64_t>();
    r.stats.robber_states = j.at("robber_states").get<std::uint64_t>();
    r.stats.valid = j.at("valid").get<std::uint64_t>();
    r.stats.resolved = j.at("resolved").get<std::uint64_t>();
    r.stats.levels = j.at("levels").get<int>();
    return r;
}

void ResultCache::load_locked() {
    if (loaded_) return;
    loaded_ = true;
    std::ifstream in(file());
    if (!in) return;
    std::string line;
    while (std::getline(in, line)) {
        // A torn last line from an interrupted writer is dropped.
        auto j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object() || !j.contains("key") || !j.contains("result")) continue;
        if (j.value("version", "") != kToolVersion) continue;
        entries_[j["key"].get<std::string>()] = j["result"];
    }
}

std::optional<SolveResult> ResultCache::get(const Graph& g, const GameConfig& c) {
    std::lock_guard lock(mu_);
    load_locked();
    auto it = entries_.find(key(g, c));
    if (it == entries_.end()) return std::nullopt;
    return result_from_json(it->second);
}

void ResultCache::put(const Graph& g, const GameConfig& c, const SolveResult& r) {
    std::lock_guard lock(mu_);
    load_locked();
    auto k = key(g, c);
    auto res = result_json(r);
    entries_[k] = res;
    std::error_code ec;
    fs::create_directories(dir_, ec);
    std::ofstream out(file(), std::ios::app);
    if (!out) throw IoError("cannot append to cache", file());
    nlohmann::json rec = {{"key", k}, {"graph_hash", g.hash()}, {"config", to_json(c)}, {"result", res}, {"version", kToolVersion}};
    out << rec.dump() << '\n';
    out.flush();
    if (!out) throw IoError("write failed", file());
}

std::size_t ResultCache::size() {
    std::lock_guard lock(mu_);
    load_locked();
    return entries_.size();
}

SolveResult cached_solve(const Graph& g, const GameConfig& c, const SolveOptions& opt, ResultCache* cache) {
    if (cache)
        if (auto hit = cache->get(g, c)) return *hit;
    auto r = solve(g, c, opt);
    if (cache) cache->put(g, c, r);
    return r;
}

int cached_cop_number(const Graph& g, GameConfig c, int k_max, const SolveOptions& opt, ResultCache* cache) {
    for (int k = 1; k <= k_max; ++k) {
        c.cop_count = k;
        if (cached_solve(g, c, opt, cache).cop_win) return k;
    }
    throw CopNumberExceeded(k_max);
}

}  // namespace pursuit
