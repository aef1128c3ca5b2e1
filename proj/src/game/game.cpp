#include "pursuit/game.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "pursuit/errors.hpp"

namespace pursuit {

std::string to_string(Variant v) {
    switch (v) {
        case Variant::standard: return "standard";
        case Variant::active: return "active";
        case Variant::semi_active: return "semi_active";
        case Variant::restricted: return "restricted";
    }
    return "?";
}

Variant parse_variant(std::string_view name) {
    if (name == "standard") return Variant::standard;
    if (name == "active") return Variant::active;
    if (name == "semi_active" || name == "semi-active") return Variant::semi_active;
    if (name == "restricted") return Variant::restricted;
    throw InvalidParameter("unknown variant: " + std::string(name));
}

std::vector<int> GameConfig::allowed_end_distances() const {
    std::vector<int> out;
    for (int d = 0; d <= robber_speed; ++d)
        if (end_distance_allowed(d)) out.push_back(d);
    return out;
}

bool GameConfig::end_distance_allowed(int d) const {
    if (d < 0 || d > robber_speed) return false;
    switch (variant) {
        case Variant::standard: return true;
        case Variant::active:
        case Variant::semi_active: return d >= 1;
        case Variant::restricted: return d >= robber_speed - 1;
    }
    return false;
}

void GameConfig::validate() const {
    if (cop_speed < 1) throw InvalidParameter("cop speed must be >= 1");
    if (robber_speed < 1) throw InvalidParameter("robber speed must be >= 1");
    if (cop_count < 1 || cop_count > kMaxCops)
        throw InvalidParameter("cop count must be in 1.." + std::to_string(kMaxCops));
    if (capture_radius < 0) throw InvalidParameter("capture radius must be >= 0");
}

GameConfig speeds(int s, int t, int k, Variant v, int radius) {
    GameConfig c{s, t, k, v, radius};
    c.validate();
    return c;
}

nlohmann::json to_json(const GameConfig& c) {
    return {{"cop_speed", c.cop_speed},
            {"robber_speed", c.robber_speed},
            {"cops", c.cop_count},
            {"variant", to_string(c.variant)},
            {"radius", c.capture_radius}};
}

GameConfig config_from_json(const nlohmann::json& j) {
    GameConfig c;
    c.cop_speed = j.at("cop_speed").get<int>();
    c.robber_speed = j.at("robber_speed").get<int>();
    c.cop_count = j.at("cops").get<int>();
    c.variant = parse_variant(j.at("variant").get<std::string>());
    c.capture_radius = j.value("radius", 0);
    c.validate();
    return c;
}

Binomials::Binomials(int rows) : rows_(rows) {
    t_.assign(static_cast<std::size_t>(rows) * (kMaxCops + 1), 0);
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    for (int a = 0; a < rows; ++a) {
        auto* row = &t_[static_cast<std::size_t>(a) * (kMaxCops + 1)];
        row[0] = 1;
        if (a == 0) continue;
        const auto* up = &t_[static_cast<std::size_t>(a - 1) * (kMaxCops + 1)];
        for (int b = 1; b <= kMaxCops && b <= a; ++b)
            row[b] = (up[b - 1] > kMax - up[b]) ? kMax : up[b - 1] + up[b];
    }
}

std::uint64_t multiset_count(int n, int k) {
    if (k == 0) return 1;
    if (n <= 0) return 0;
    Binomials c(n + k);
    return c(n + k - 1, k);
}

std::uint64_t multiset_rank(std::span<const int> sorted, const Binomials& c) {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) r += c(sorted[i] + static_cast<int>(i), static_cast<int>(i) + 1);
    return r;
}

void multiset_unrank(std::uint64_t rank, int k, const Binomials& c, int* out) {
    // Invert b_i = a_i + i - 1 greedily from the top term down.
    int hi = c.rows() - 1;
    for (int i = k; i >= 1; --i) {
        int lo = i - 1;  // C(i-1, i) = 0 <= rank always
        int top = hi;
        while (lo < top) {
            int mid = lo + (top - lo + 1) / 2;
            if (c(mid, i) <= rank)
                lo = mid;
            else
                top = mid - 1;
        }
        rank -= c(lo, i);
        out[i - 1] = lo - (i - 1);
        hi = lo;
    }
}

StateCodec::StateCodec(int order, int cops) : n_(order), k_(cops), c_(order + cops + 1) {
    if (order < 1) throw InvalidParameter("state codec needs a nonempty graph");
    if (cops < 1 || cops > kMaxCops) throw InvalidParameter("state codec cop count out of range");
    size_ = c_(n_ + k_ - 1, k_) * static_cast<std::uint64_t>(n_) * 2;
}

std::uint64_t StateCodec::encode(const GameState& s) const {
    if (static_cast<int>(s.cops.size()) != k_) throw InvalidParameter("wrong number of cops");
    if (!std::is_sorted(s.cops.begin(), s.cops.end())) throw InvalidParameter("cop positions must be sorted");
    for (Vertex v : s.cops)
        if (v < 0 || v >= n_) throw InvalidParameter("cop position out of range");
    if (s.robber < 0 || s.robber >= n_) throw InvalidParameter("robber position out of range");
    return (multiset_rank(s.cops, c_) * static_cast<std::uint64_t>(n_) + static_cast<std::uint64_t>(s.robber)) * 2 +
           static_cast<std::uint64_t>(s.phase);
}

GameState StateCodec::decode(std::uint64_t index) const {
    if (index >= size_) throw InvalidParameter("state index out of range");
    GameState s;
    s.phase = static_cast<Phase>(index % 2);
    index /= 2;
    s.robber = static_cast<Vertex>(index % static_cast<std::uint64_t>(n_));
    index /= static_cast<std::uint64_t>(n_);
    s.cops.resize(static_cast<std::size_t>(k_));
    multiset_unrank(index, k_, c_, s.cops.data());
    return s;
}

MoveTables::MoveTables(const Graph& g, const GameConfig& c) : g_(&g), c_(c), d_(g) {
    c_.validate();
    balls_.resize(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v)
        for (Vertex w = 0; w < g.order(); ++w)
            if (d_(v, w) <= c_.cop_speed) balls_[static_cast<std::size_t>(v)].push_back(w);
}

MoveTables::Scratch MoveTables::make_scratch() const {
    Scratch s;
    s.mark.assign(static_cast<std::size_t>(g_->order()), 0);
    return s;
}

void MoveTables::robber_moves(std::span<const int> cops, Vertex from, Scratch& s, std::vector<Vertex>& out) const {
    out.clear();
    if (++s.stamp == 0) {
        std::fill(s.mark.begin(), s.mark.end(), 0);
        s.stamp = 1;
    }
    for (int c : cops) s.mark[static_cast<std::size_t>(c)] = s.stamp;
    if (s.mark[static_cast<std::size_t>(from)] == s.stamp) return;  // robber on a cop
    s.mark[static_cast<std::size_t>(from)] = s.stamp;
    s.frontier.assign(1, from);
    if (c_.end_distance_allowed(0)) out.push_back(from);
    for (int depth = 0; depth < c_.robber_speed && !s.frontier.empty(); ++depth) {
        s.next.clear();
        for (Vertex u : s.frontier)
            for (Vertex w : g_->neighbors(u))
                if (s.mark[static_cast<std::size_t>(w)] != s.stamp) {
                    s.mark[static_cast<std::size_t>(w)] = s.stamp;
                    s.next.push_back(w);
                    if (c_.end_distance_allowed(d_(from, w))) out.push_back(w);
                }
        s.frontier.swap(s.next);
    }
}

std::vector<Vertex> robber_moves(const Graph& g, const GameConfig& c, std::span<const Vertex> cops, Vertex from) {
    c.validate();
    if (!g.in_range(from)) throw InvalidParameter("robber vertex out of range");
    for (Vertex x : cops) {
        if (!g.in_range(x)) throw InvalidParameter("cop vertex out of range");
        if (x == from) throw InvalidParameter("robber shares a vertex with a cop");
    }
    auto dist_from = bfs_distances(g, from);
    std::vector<char> blocked(static_cast<std::size_t>(g.order()), 0);
    for (Vertex x : cops) blocked[static_cast<std::size_t>(x)] = 1;
    std::vector<int> reach(static_cast<std::size_t>(g.order()), kUnreachable);
    std::vector<Vertex> frontier{from}, next;
    reach[static_cast<std::size_t>(from)] = 0;
    for (int depth = 0; depth < c.robber_speed; ++depth) {
        next.clear();
        for (Vertex u : frontier)
            for (Vertex w : g.neighbors(u))
                if (!blocked[static_cast<std::size_t>(w)] && reach[static_cast<std::size_t>(w)] == kUnreachable) {
                    reach[static_cast<std::size_t>(w)] = depth + 1;
                    next.push_back(w);
                }
        frontier.swap(next);
    }
    std::vector<Vertex> out;
    for (Vertex w = 0; w < g.order(); ++w)
        if (reach[static_cast<std::size_t>(w)] != kUnreachable && c.end_distance_allowed(dist_from[static_cast<std::size_t>(w)]))
            out.push_back(w);
    return out;
}

bool is_capture(const Graph& g, const GameConfig& c, std::span<const Vertex> cops, Vertex robber) {
    if (cops.empty()) return false;
    auto d = bfs_distances(g, robber, c.capture_radius);
    return std::any_of(cops.begin(), cops.end(), [&](Vertex x) { return d[static_cast<std::size_t>(x)] <= c.capture_radius; });
}

namespace {

void check_cop_state(const Graph& g, const GameConfig& c, const GameState& s) {
    c.validate();
    if (s.phase != Phase::cop_turn) throw InvalidParameter("cop successors requested in a robber-turn state");
    if (static_cast<int>(s.cops.size()) != c.cop_count) throw InvalidParameter("wrong number of cops");
    for (Vertex x : s.cops)
        if (!g.in_range(x)) throw InvalidParameter("cop vertex out of range");
}

}  // namespace

std::vector<std::vector<Vertex>> cop_turn_successors(const Graph& g, const GameConfig& c, const GameState& state) {
    check_cop_state(g, c, state);
    const std::size_t k = state.cops.size();
    std::vector<std::vector<Vertex>> balls;
    for (Vertex x : state.cops) balls.push_back(ball(g, x, c.cop_speed));
    std::set<std::vector<Vertex>> found;
    std::vector<std::size_t> pick(k, 0);
    std::vector<Vertex> tuple(k);
    while (true) {
        bool moved = false;
        for (std::size_t i = 0; i < k; ++i) {
            tuple[i] = balls[i][pick[i]];
            moved = moved || tuple[i] != state.cops[i];
        }
        if (moved || !c.cops_must_move()) {
            auto sorted = tuple;
            std::sort(sorted.begin(), sorted.end());
            found.insert(std::move(sorted));
        }
        std::size_t i = 0;
        while (i < k && ++pick[i] == balls[i].size()) pick[i++] = 0;
        if (i == k) break;
    }
    return {found.begin(), found.end()};
}

std::vector<std::vector<Vertex>> cop_turn_successors_sequential(const Graph& g, const GameConfig& c,
                                                                const GameState& state) {
    check_cop_state(g, c, state);
    std::set<std::vector<Vertex>> found;
    // unmoved (sorted), moved (sorted), whether any cop changed vertex
    auto rec = [&](auto& self, std::vector<Vertex> unmoved, std::vector<Vertex> moved, bool changed) -> void {
        if (unmoved.empty()) {
            if (changed || !c.cops_must_move()) found.insert(moved);
            return;
        }
        const Vertex floor = moved.empty() ? 0 : moved.back();
        for (std::size_t i = 0; i < unmoved.size(); ++i) {
            if (i > 0 && unmoved[i] == unmoved[i - 1]) continue;
            auto rest = unmoved;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
            for (Vertex v : ball(g, unmoved[i], c.cop_speed)) {
                if (v < floor) continue;
                auto m = moved;
                m.push_back(v);
                self(self, rest, m, changed || v != unmoved[i]);
            }
        }
    };
    rec(rec, state.cops, {}, false);
    return {found.begin(), found.end()};
}

}  // namespace pursuit
