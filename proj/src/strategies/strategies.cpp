#include "pursuit/strategies.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "pursuit/errors.hpp"

namespace pursuit {

namespace {

std::size_t at(Vertex v) { return static_cast<std::size_t>(v); }

std::vector<Vertex> sorted_copy(std::span<const Vertex> v) {
    std::vector<Vertex> s(v.begin(), v.end());
    std::sort(s.begin(), s.end());
    return s;
}

bool within(const Graph& g, Vertex from, Vertex to, int s) {
    if (from == to) return true;
    auto d = bfs_distances(g, from, s);
    return d[at(to)] <= s;
}

// Distance from every vertex to the nearest cop.
std::vector<int> cop_field(const Graph& g, std::span<const Vertex> cops) {
    std::vector<int> out(at(g.order()), kUnreachable);
    for (Vertex c : cops) {
        auto d = bfs_distances(g, c);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::min(out[i], d[i]);
    }
    return out;
}

std::vector<Vertex> default_start(const Graph& g, int count) {
    std::vector<Vertex> s(at(count));
    for (int i = 0; i < count; ++i)
        s[at(i)] = static_cast<Vertex>(static_cast<long long>(i) * g.order() / std::max(count, 1));
    return s;
}

// Coordinate tuple -> vertex.
class CoordIndex {
public:
    void build(const Graph& g) {
        if (!g.has_coords()) throw PolicyError("graph carries no coordinates");
        map_.clear();
        for (Vertex v = 0; v < g.order(); ++v) {
            auto c = g.coord(v);
            map_.emplace(std::vector<int>(c.begin(), c.end()), v);
        }
        dims_ = static_cast<int>(g.coord(0).size());
    }
    Vertex find(const std::vector<int>& c) const {
        auto it = map_.find(c);
        if (it == map_.end()) throw PolicyError("coordinate tuple has no vertex");
        return it->second;
    }
    int dims() const noexcept { return dims_; }

private:
    std::map<std::vector<int>, Vertex> map_;
    int dims_ = 0;
};

std::vector<int> coords_of(const Graph& g, Vertex v) {
    auto c = g.coord(v);
    return {c.begin(), c.end()};
}

int l1(std::span<const int> a, std::span<const int> b) {
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += std::abs(a[i] - b[i]);
    return d;
}

}  // namespace

bool StrategyTrace::invariants_held() const { return !first_violation().has_value(); }

std::optional<std::string> StrategyTrace::first_violation() const {
    for (const auto& r : rounds)
        for (const auto& c : r.checks)
            if (!c.ok) return "round " + std::to_string(r.round) + ": " + c.name;
    return std::nullopt;
}

StrategyTrace simulate(const Graph& g, const GameConfig& c, CopPolicy& cops, RobberPolicy& robber, int horizon) {
    c.validate();
    if (horizon < 1) throw InvalidParameter("horizon must be at least 1");
    if (g.order() == 0) throw InvalidParameter("empty graph");

    StrategyTrace t;
    t.cop_policy = cops.name();
    t.robber_policy = robber.name();
    t.config = c;
    t.horizon = horizon;

    auto check_cops = [&](const std::vector<Vertex>& p, int round) {
        if (static_cast<int>(p.size()) != c.cop_count)
            throw TraceError("cop policy returned " + std::to_string(p.size()) + " positions", round);
        for (Vertex x : p)
            if (!g.in_range(x)) throw TraceError("cop position out of range", round);
    };
    auto finish = [&](TraceRound rec, bool captured, int round) {
        rec.captured = captured;
        t.rounds.push_back(std::move(rec));
        t.outcome = captured ? StrategyTrace::Outcome::captured : StrategyTrace::Outcome::survived;
        t.end_round = round;
        return t;
    };

    PlayView view{g, c, 0, {}, kNoMove};
    std::vector<Vertex> pos = cops.place(view);
    check_cops(pos, 0);
    TraceRound rec{0, pos, kNoMove, false, cops.checks()};
    view.cops = pos;
    Vertex r = robber.place(view);
    if (!g.in_range(r)) throw TraceError("robber placement out of range", 0);
    rec.robber = r;
    for (auto& x : robber.checks()) rec.checks.push_back(std::move(x));
    if (is_capture(g, c, pos, r)) return finish(std::move(rec), true, 0);
    t.rounds.push_back(std::move(rec));

    for (int round = 1; round <= horizon; ++round) {
        view.round = round - 1;
        view.cops = pos;
        view.robber = r;
        std::vector<Vertex> next = cops.move(view);
        check_cops(next, round);
        bool moved = false;
        for (std::size_t i = 0; i < next.size(); ++i) {
            if (!within(g, pos[i], next[i], c.cop_speed))
                throw TraceError("cop " + std::to_string(i) + " moved farther than her speed", round);
            moved = moved || next[i] != pos[i];
        }
        if (c.cops_must_move() && !moved) throw TraceError("active variant: no cop changed vertex", round);
        pos = std::move(next);
        TraceRound cur{round, pos, r, false, cops.checks()};
        if (is_capture(g, c, pos, r)) return finish(std::move(cur), true, round);

        view.round = round;
        view.cops = pos;
        auto legal = robber_moves(g, c, pos, r);
        Vertex nr = robber.move(view);
        for (auto& x : robber.checks()) cur.checks.push_back(std::move(x));
        if (legal.empty()) {
            if (nr != kNoMove) throw TraceError("robber moved although no move is legal", round);
            return finish(std::move(cur), true, round);
        }
        if (!std::binary_search(legal.begin(), legal.end(), nr))
            throw TraceError("illegal robber move to " + std::to_string(nr), round);
        r = nr;
        cur.robber = r;
        if (is_capture(g, c, pos, r)) return finish(std::move(cur), true, round);
        t.rounds.push_back(std::move(cur));
    }
    t.outcome = StrategyTrace::Outcome::survived;
    t.end_round = horizon;
    return t;
}

void validate_trace(const Graph& g, const StrategyTrace& t) {
    const GameConfig& c = t.config;
    if (t.rounds.empty()) throw TraceError("trace has no placement record", 0);
    const auto& first = t.rounds.front();
    if (first.round != 0 || static_cast<int>(first.cops.size()) != c.cop_count) throw TraceError("bad placement record", 0);
    for (Vertex x : first.cops)
        if (!g.in_range(x)) throw TraceError("cop position out of range", 0);
    if (!g.in_range(first.robber)) throw TraceError("robber position out of range", 0);
    bool over = is_capture(g, c, first.cops, first.robber);
    if (over != first.captured) throw TraceError("capture flag disagrees with positions", 0);
    for (std::size_t i = 1; i < t.rounds.size(); ++i) {
        const auto& prev = t.rounds[i - 1];
        const auto& cur = t.rounds[i];
        if (over) throw TraceError("play continues after capture", cur.round);
        if (cur.round != prev.round + 1) throw TraceError("rounds out of sequence", cur.round);
        if (cur.cops.size() != prev.cops.size()) throw TraceError("cop count changed", cur.round);
        bool moved = false;
        for (std::size_t j = 0; j < cur.cops.size(); ++j) {
            if (!g.in_range(cur.cops[j]) || !within(g, prev.cops[j], cur.cops[j], c.cop_speed))
                throw TraceError("cop " + std::to_string(j) + " moved illegally", cur.round);
            moved = moved || cur.cops[j] != prev.cops[j];
        }
        if (c.cops_must_move() && !moved) throw TraceError("active variant: no cop changed vertex", cur.round);
        if (is_capture(g, c, cur.cops, prev.robber)) {
            if (!cur.captured || cur.robber != prev.robber) throw TraceError("missed capture", cur.round);
            over = true;
            continue;
        }
        auto legal = robber_moves(g, c, cur.cops, prev.robber);
        if (legal.empty()) {
            if (!cur.captured) throw TraceError("stuck robber not scored as captured", cur.round);
            over = true;
            continue;
        }
        if (!std::binary_search(legal.begin(), legal.end(), cur.robber))
            throw TraceError("illegal robber move", cur.round);
        over = is_capture(g, c, cur.cops, cur.robber);
        if (over != cur.captured) throw TraceError("capture flag disagrees with positions", cur.round);
    }
    if (over != t.captured()) throw TraceError("outcome disagrees with the last round", t.rounds.back().round);
}

nlohmann::json to_json(const TraceRound& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"ok", c.ok}, {"value", c.value}});
    return {{"round", r.round}, {"cops", r.cops}, {"robber", r.robber}, {"captured", r.captured}, {"checks", checks}};
}

void write_trace_jsonl(std::ostream& out, const StrategyTrace& t) {
    nlohmann::json head = {{"type", "header"},
                           {"cop_policy", t.cop_policy},
                           {"robber_policy", t.robber_policy},
                           {"config", to_json(t.config)},
                           {"horizon", t.horizon},
                           {"outcome", t.captured() ? "captured" : "survived"},
                           {"end_round", t.end_round}};
    out << head.dump() << '\n';
    for (const auto& r : t.rounds) out << to_json(r).dump() << '\n';
}

StrategyTrace read_trace_jsonl(std::istream& in) {
    StrategyTrace t;
    std::string line;
    bool have_head = false;
    std::size_t offset = 0;
    while (std::getline(in, line)) {
        std::size_t here = offset;
        offset += line.size() + 1;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("bad trace record: ") + e.what(), here);
        }
        try {
            if (!have_head) {
                if (j.value("type", "") != "header") throw ParseError("trace must start with a header", here);
                t.cop_policy = j.at("cop_policy").get<std::string>();
                t.robber_policy = j.at("robber_policy").get<std::string>();
                t.config = config_from_json(j.at("config"));
                t.horizon = j.at("horizon").get<int>();
                t.outcome = j.at("outcome").get<std::string>() == "captured" ? StrategyTrace::Outcome::captured
                                                                            : StrategyTrace::Outcome::survived;
                t.end_round = j.at("end_round").get<int>();
                have_head = true;
                continue;
            }
            TraceRound r;
            r.round = j.at("round").get<int>();
            r.cops = j.at("cops").get<std::vector<Vertex>>();
            r.robber = j.at("robber").get<Vertex>();
            r.captured = j.at("captured").get<bool>();
            for (const auto& c : j.at("checks"))
                r.checks.push_back({c.at("name").get<std::string>(), c.at("ok").get<bool>(), c.at("value").get<long long>()});
            t.rounds.push_back(std::move(r));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("bad trace field: ") + e.what(), here);
        }
    }
    if (!have_head) throw ParseError("empty trace", 0);
    return t;
}

// --- generic policies --------------------------------------------------------

namespace {

class OptimalCops final : public CopPolicy {
public:
    explicit OptimalCops(std::shared_ptr<const SolvedGame> g) : game_(std::move(g)) {}
    std::string name() const override { return "optimal"; }
    std::vector<Vertex> place(const PlayView&) override { return game_->result().placement; }
    std::vector<Vertex> move(const PlayView& v) override {
        auto sorted = sorted_copy(v.cops);
        auto m = game_->optimal_cop_move(sorted, v.robber);
        std::vector<Vertex> next(v.cops.begin(), v.cops.end());
        std::vector<char> used(next.size(), 0);
        for (auto [from, to] : m.steps) {
            for (std::size_t i = 0; i < next.size(); ++i)
                if (!used[i] && v.cops[i] == from) {
                    used[i] = 1;
                    next[i] = to;
                    break;
                }
        }
        return next;
    }

private:
    std::shared_ptr<const SolvedGame> game_;
};

class OptimalRobber final : public RobberPolicy {
public:
    explicit OptimalRobber(std::shared_ptr<const SolvedGame> g) : game_(std::move(g)) {}
    std::string name() const override { return "optimal"; }
    Vertex place(const PlayView& v) override {
        auto sorted = sorted_copy(v.cops);
        if (auto p = game_->optimal_robber_placement(sorted)) return *p;
        for (Vertex x = 0; x < v.graph.order(); ++x)
            if (!std::binary_search(sorted.begin(), sorted.end(), x)) return x;
        return 0;
    }
    Vertex move(const PlayView& v) override {
        auto sorted = sorted_copy(v.cops);
        if (auto m = game_->optimal_robber_move(sorted, v.robber)) return *m;
        auto legal = robber_moves(v.graph, v.config, v.cops, v.robber);
        return legal.empty() ? kNoMove : legal.front();
    }

private:
    std::shared_ptr<const SolvedGame> game_;
};

class GreedyCops final : public CopPolicy {
public:
    GreedyCops(int count, std::vector<Vertex> start) : count_(count), start_(std::move(start)) {}
    std::string name() const override { return "greedy"; }
    std::vector<Vertex> place(const PlayView& v) override {
        return start_.empty() ? default_start(v.graph, count_) : start_;
    }
    std::vector<Vertex> move(const PlayView& v) override {
        auto d = bfs_distances(v.graph, v.robber);
        std::vector<Vertex> next(v.cops.begin(), v.cops.end());
        bool moved = false;
        for (auto& c : next) {
            Vertex best = c;
            for (Vertex w : ball(v.graph, c, v.config.cop_speed))
                if (d[at(w)] < d[at(best)]) best = w;
            moved = moved || best != c;
            c = best;
        }
        if (v.config.cops_must_move() && !moved && !next.empty()) {
            Vertex c = next[0], best = kNoMove;
            for (Vertex w : ball(v.graph, c, v.config.cop_speed))
                if (w != c && (best == kNoMove || d[at(w)] < d[at(best)])) best = w;
            if (best != kNoMove) next[0] = best;
        }
        return next;
    }

private:
    int count_;
    std::vector<Vertex> start_;
};

class RandomCops final : public CopPolicy {
public:
    RandomCops(int count, std::uint64_t seed, std::vector<Vertex> start)
        : count_(count), rng_(seed), start_(std::move(start)) {}
    std::string name() const override { return "random"; }
    std::vector<Vertex> place(const PlayView& v) override {
        if (!start_.empty()) return start_;
        std::uniform_int_distribution<int> pick(0, v.graph.order() - 1);
        std::vector<Vertex> p(at(count_));
        for (auto& x : p) x = pick(rng_);
        return p;
    }
    std::vector<Vertex> move(const PlayView& v) override {
        std::vector<Vertex> next(v.cops.begin(), v.cops.end());
        bool moved = false;
        for (auto& c : next) {
            auto b = ball(v.graph, c, v.config.cop_speed);
            std::uniform_int_distribution<std::size_t> pick(0, b.size() - 1);
            Vertex w = b[pick(rng_)];
            moved = moved || w != c;
            c = w;
        }
        if (v.config.cops_must_move() && !moved && !next.empty()) {
            auto b = ball(v.graph, next[0], v.config.cop_speed);
            b.erase(std::remove(b.begin(), b.end(), next[0]), b.end());
            if (!b.empty()) {
                std::uniform_int_distribution<std::size_t> pick(0, b.size() - 1);
                next[0] = b[pick(rng_)];
            }
        }
        return next;
    }

private:
    int count_;
    std::mt19937_64 rng_;
    std::vector<Vertex> start_;
};

class GreedyRobber final : public RobberPolicy {
public:
    std::string name() const override { return "greedy"; }
    Vertex place(const PlayView& v) override {
        auto f = cop_field(v.graph, v.cops);
        return static_cast<Vertex>(std::max_element(f.begin(), f.end()) - f.begin());
    }
    Vertex move(const PlayView& v) override {
        auto legal = robber_moves(v.graph, v.config, v.cops, v.robber);
        if (legal.empty()) return kNoMove;
        auto f = cop_field(v.graph, v.cops);
        Vertex best = legal.front();
        for (Vertex w : legal)
            if (f[at(w)] > f[at(best)]) best = w;
        return best;
    }
};

class RandomRobber final : public RobberPolicy {
public:
    explicit RandomRobber(std::uint64_t seed) : rng_(seed) {}
    std::string name() const override { return "random"; }
    Vertex place(const PlayView& v) override {
        auto f = cop_field(v.graph, v.cops);
        return pick_safe(v, f, [&] {
            std::vector<Vertex> all(at(v.graph.order()));
            for (Vertex x = 0; x < v.graph.order(); ++x) all[at(x)] = x;
            return all;
        }());
    }
    Vertex move(const PlayView& v) override {
        auto legal = robber_moves(v.graph, v.config, v.cops, v.robber);
        if (legal.empty()) return kNoMove;
        return pick_safe(v, cop_field(v.graph, v.cops), legal);
    }

private:
    Vertex pick_safe(const PlayView& v, const std::vector<int>& f, const std::vector<Vertex>& from) {
        std::vector<Vertex> safe;
        for (Vertex w : from)
            if (f[at(w)] > v.config.cop_speed + v.config.capture_radius) safe.push_back(w);
        const auto& pool = safe.empty() ? from : safe;
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        return pool[pick(rng_)];
    }
    std::mt19937_64 rng_;
};

}  // namespace

std::unique_ptr<CopPolicy> optimal_cops(std::shared_ptr<const SolvedGame> game) {
    return std::make_unique<OptimalCops>(std::move(game));
}
std::unique_ptr<RobberPolicy> optimal_robber(std::shared_ptr<const SolvedGame> game) {
    return std::make_unique<OptimalRobber>(std::move(game));
}
std::unique_ptr<CopPolicy> greedy_cops(int count, std::vector<Vertex> start) {
    return std::make_unique<GreedyCops>(count, std::move(start));
}
std::unique_ptr<CopPolicy> random_cops(int count, std::uint64_t seed, std::vector<Vertex> start) {
    return std::make_unique<RandomCops>(count, seed, std::move(start));
}
std::unique_ptr<RobberPolicy> greedy_robber() { return std::make_unique<GreedyRobber>(); }
std::unique_ptr<RobberPolicy> random_robber(std::uint64_t seed) { return std::make_unique<RandomRobber>(seed); }

// --- scripted strategies -----------------------------------------------------

namespace {

class GridBlockingRobber final : public RobberPolicy {
public:
    explicit GridBlockingRobber(int s) : s_(s) {
        if (s < 2) throw PolicyError("grid blocking robber needs s >= 2");
    }
    std::string name() const override { return "grid_blocking"; }

    Vertex place(const PlayView& v) override {
        setup(v);
        auto f = cop_field(v.graph, v.cops);
        Vertex best = static_cast<Vertex>(std::max_element(f.begin(), f.end()) - f.begin());
        checks_ = {{"cops_beyond_s", f[at(best)] > s_, f[at(best)]}};
        return best;
    }

    Vertex move(const PlayView& v) override {
        auto y = coords_of(v.graph, v.robber);
        const int d = index_.dims();
        std::vector<char> blocked(at(2 * d), 0);  // [2i] forward, [2i+1] backward
        for (Vertex c : v.cops) {
            auto z = v.graph.coord(c);
            int x = l1(z, y);
            for (int i = 0; i < d; ++i) {
                int gap = z[at(i)] - y[at(i)];
                if (gap != 0 && 2 * std::abs(gap) >= x) blocked[at(2 * i + (gap > 0 ? 0 : 1))] = 1;
            }
        }
        for (int i = 0; i < d; ++i) {
            if (blocked[at(2 * i)] || blocked[at(2 * i + 1)]) continue;
            int dir = y[at(i)] + s_ <= size_[at(i)] - 1 ? 1 : -1;
            if (y[at(i)] + dir * s_ < 0) continue;
            y[at(i)] += dir * s_;
            Vertex to = index_.find(y);
            int near = kUnreachable;
            for (Vertex c : v.cops) near = std::min(near, l1(v.graph.coord(c), v.graph.coord(to)));
            checks_ = {{"cops_beyond_s", near > s_, near}};
            return to;
        }
        throw PolicyError("every dimension has a blocked direction");
    }
    std::vector<InvariantCheck> checks() const override { return checks_; }

private:
    void setup(const PlayView& v) {
        index_.build(v.graph);
        const int d = index_.dims();
        size_.assign(at(d), 0);
        for (Vertex x = 0; x < v.graph.order(); ++x)
            for (int i = 0; i < d; ++i) size_[at(i)] = std::max(size_[at(i)], v.graph.coord(x)[at(i)] + 1);
        long long prod = 1;
        for (int n : size_) prod *= n;
        if (prod != v.graph.order()) throw PolicyError("graph is not a full product of paths");
        for (int n : size_)
            if (n - 1 < 2 * s_) throw PolicyError("a factor path has diameter below 2s");
        if (2 * static_cast<int>(v.cops.size()) > d - 1)
            throw PolicyError("grid blocking robber needs at most (d-1)/2 cops");
    }

    int s_;
    CoordIndex index_;
    std::vector<int> size_;
    std::vector<InvariantCheck> checks_;
};

class HypercubeWeightRobber final : public RobberPolicy {
public:
    std::string name() const override { return "hypercube_weight"; }

    Vertex place(const PlayView& v) override {
        setup(v);
        for (Vertex x = 0; x < v.graph.order(); ++x) {
            if (min_dist(v, x) >= 3) {
                checks_ = {{"safe_distance_3", true, min_dist(v, x)}};
                return x;
            }
        }
        throw PolicyError("no vertex at distance 3 from every cop");
    }

    Vertex move(const PlayView& v) override {
        const auto y = bits(v.graph, v.robber);
        // Weights in half units; half[i] records the cop that gave dimension i
        // its weight when that weight is exactly 1/2.
        std::vector<int> w(at(d_), 0), source(at(d_), -1);
        for (std::size_t j = 0; j < v.cops.size(); ++j) {
            auto z = bits(v.graph, v.cops[j]);
            int x = 0;
            for (int i = 0; i < d_; ++i) x += z[at(i)] != y[at(i)];
            int add = x <= 2 ? 2 : x <= 4 ? 1 : 0;
            if (add == 0) continue;
            for (int i = 0; i < d_; ++i)
                if (z[at(i)] != y[at(i)]) {
                    w[at(i)] += add;
                    source[at(i)] = static_cast<int>(j);
                }
        }
        std::vector<int> zero, half;
        for (int i = 0; i < d_; ++i) {
            if (w[at(i)] == 0) zero.push_back(i);
            if (w[at(i)] == 1) half.push_back(i);
        }
        std::vector<int> dims;
        bool exceptional = false;
        if (zero.size() >= 2) {
            dims = {zero[0], zero[1]};
        } else if (!zero.empty() && !half.empty()) {
            dims = {zero[0], half[0]};
        } else {
            for (std::size_t a = 0; a < half.size() && dims.empty(); ++a)
                for (std::size_t b = a + 1; b < half.size(); ++b)
                    if (source[at(half[a])] != source[at(half[b])]) {
                        dims = {half[a], half[b]};
                        break;
                    }
            if (dims.empty() && !half.empty()) {
                dims = {half[0]};
                exceptional = true;
            }
        }
        if (dims.empty()) throw PolicyError("no dimension pair of weight below 1");
        auto to_bits = y;
        for (int i : dims) to_bits[at(i)] ^= 1;
        Vertex to = index_.find(to_bits);
        int near = min_dist(v, to);
        checks_ = {{"safe_distance_3", near >= 3, near}};
        if (near < 3)
            throw PolicyError(std::string(exceptional ? "exceptional one-step case" : "two-step case") +
                              " ends within distance 2 of a cop");
        return to;
    }
    std::vector<InvariantCheck> checks() const override { return checks_; }

private:
    void setup(const PlayView& v) {
        index_.build(v.graph);
        d_ = index_.dims();
        if (d_ > 30 || v.graph.order() != (1 << d_)) throw PolicyError("graph is not a coordinate-annotated hypercube");
        if (2 * (static_cast<int>(v.cops.size()) + 1) > d_)
            throw PolicyError("hypercube weight robber needs at most d/2 - 1 cops");
    }
    static std::vector<int> bits(const Graph& g, Vertex x) { return coords_of(g, x); }
    int min_dist(const PlayView& v, Vertex x) const {
        int best = kUnreachable;
        for (Vertex c : v.cops) best = std::min(best, l1(v.graph.coord(c), v.graph.coord(x)));
        return best;
    }

    int d_ = 0;
    CoordIndex index_;
    std::vector<InvariantCheck> checks_;
};

class ProjectiveProductRobber final : public RobberPolicy {
public:
    explicit ProjectiveProductRobber(const Graph& factor) : p_(factor), d_(factor) {
        const int n = factor.order();
        for (int q = 1; 2 * (q * q + q + 1) <= n; ++q)
            if (2 * (q * q + q + 1) == n) q_ = q;
        if (q_ == 0) throw PolicyError("factor order is not that of a plane incidence graph");
    }
    std::string name() const override { return "projective_product"; }

    Vertex place(const PlayView& v) override {
        const int n = p_.order();
        if (v.graph.order() != n * n) throw PolicyError("graph is not the square of the factor");
        if (static_cast<int>(v.cops.size()) > q_) throw PolicyError("projective robber needs at most q cops");
        auto sorted = sorted_copy(v.cops);
        for (Vertex x = 0; x < v.graph.order(); ++x)
            if (!std::binary_search(sorted.begin(), sorted.end(), x)) return step(v, x);
        throw PolicyError("every vertex holds a cop");
    }
    Vertex move(const PlayView& v) override { return step(v, v.robber); }
    std::vector<InvariantCheck> checks() const override { return checks_; }

private:
    // A neighbor of `at_` at distance >= 2 from each cop shadow other than at_.
    Vertex shadow_step(Vertex at_, const std::vector<Vertex>& shadows) const {
        for (Vertex u : p_.neighbors(at_)) {
            bool ok = true;
            for (Vertex w : shadows)
                if (w != at_ && d_(u, w) < 2) ok = false;
            if (ok) return u;
        }
        throw PolicyError("no factor neighbor clear of the cop shadows");
    }
    Vertex step(const PlayView& v, Vertex from) {
        const int n = p_.order();
        std::vector<Vertex> ws, xs;
        for (Vertex c : v.cops) {
            ws.push_back(c / n);
            xs.push_back(c % n);
        }
        Vertex u = shadow_step(from / n, ws), w = shadow_step(from % n, xs);
        Vertex to = u * n + w;
        int near = kUnreachable;
        for (std::size_t i = 0; i < ws.size(); ++i) near = std::min(near, d_(u, ws[i]) + d_(w, xs[i]));
        checks_ = {{"safe_distance_3", near >= 3, near}};
        if (near < 3) throw PolicyError("projective robber ends within distance 2 of a cop");
        return to;
    }

    Graph p_;
    DistanceMatrix d_;
    int q_ = 0;
    std::vector<InvariantCheck> checks_;
};

class TorusCoordinateRobber final : public RobberPolicy {
public:
    explicit TorusCoordinateRobber(int s) : s_(s) {
        if (s < 1) throw PolicyError("torus robber needs s >= 1");
    }
    std::string name() const override { return "torus_coordinate"; }

    Vertex place(const PlayView& v) override {
        index_.build(v.graph);
        const int k = index_.dims();
        long long expect = 1;
        for (int i = 0; i < k; ++i) expect *= 2 * s_ + 2;
        if (expect != v.graph.order()) throw PolicyError("graph is not a strong power of C_{2s+2}");
        if (static_cast<int>(v.cops.size()) > k) throw PolicyError("torus robber needs at most k cops");
        return target(v, std::vector<int>(at(k), 0));
    }
    Vertex move(const PlayView& v) override { return target(v, coords_of(v.graph, v.robber)); }
    std::vector<InvariantCheck> checks() const override { return checks_; }

private:
    Vertex target(const PlayView& v, std::vector<int> y) {
        const int m = 2 * s_ + 2;
        for (std::size_t i = 0; i < v.cops.size(); ++i) y[i] = (v.graph.coord(v.cops[i])[i] + s_ + 1) % m;
        Vertex to = index_.find(y);
        bool ok = true;
        for (std::size_t i = 0; i < v.cops.size(); ++i)
            ok = ok && ((v.graph.coord(to)[i] - v.graph.coord(v.cops[i])[i] + m) % m == s_ + 1);
        checks_ = {{"offset_s_plus_1", ok, static_cast<long long>(v.cops.size())}};
        return to;
    }

    int s_;
    CoordIndex index_;
    std::vector<InvariantCheck> checks_;
};

class GridSingleCop final : public CopPolicy {
public:
    explicit GridSingleCop(int s) : s_(s) {
        if (s < 1) throw PolicyError("grid cop needs s >= 1");
    }
    std::string name() const override { return "grid_single"; }

    std::vector<Vertex> place(const PlayView& v) override {
        index_.build(v.graph);
        if (index_.dims() != 2) throw PolicyError("grid cop needs a product of two paths");
        if (v.config.cop_count != 1) throw PolicyError("grid cop plays alone");
        last_phi_ = -1;
        checks_.clear();
        return {0};
    }

    std::vector<Vertex> move(const PlayView& v) override {
        auto c = coords_of(v.graph, v.cops[0]);
        auto r = coords_of(v.graph, v.robber);
        if (l1(c, r) <= s_) {
            checks_.clear();
            return {v.robber};
        }
        for (int step = 0; step < s_; ++step) {
            int d0 = std::abs(c[0] - r[0]), d1 = std::abs(c[1] - r[1]);
            int i = d0 >= d1 ? 0 : 1;
            if (std::max(d0, d1) < 2) break;
            c[at(i)] += r[at(i)] > c[at(i)] ? 1 : -1;
        }
        int phi = std::max(l1(c, r), 2);
        bool ok = last_phi_ < 0 || phi <= last_phi_;
        checks_ = {{"phi_nonincreasing", ok, phi}};
        last_phi_ = phi;
        return {index_.find(c)};
    }
    std::vector<InvariantCheck> checks() const override { return checks_; }

private:
    int s_;
    int last_phi_ = -1;
    CoordIndex index_;
    std::vector<InvariantCheck> checks_;
};

// A shortest path from a to b in g as the list of vertices after a.
std::vector<Vertex> geodesic(const Graph& g, const DistanceMatrix& d, Vertex a, Vertex b) {
    std::vector<Vertex> out;
    while (a != b) {
        for (Vertex w : g.neighbors(a))
            if (d(w, b) == d(a, b) - 1) {
                a = w;
                break;
            }
        out.push_back(a);
    }
    return out;
}

// Up to `steps` steps from a toward b.
Vertex toward(const Graph& g, const DistanceMatrix& d, Vertex a, Vertex b, int steps) {
    auto path = geodesic(g, d, a, b);
    if (path.empty() || steps <= 0) return a;
    return path[std::min(path.size(), static_cast<std::size_t>(steps)) - 1];
}

class TwoPhaseProductCops final : public CopPolicy {
public:
    TwoPhaseProductCops(const Graph& gf, const Graph& hf, int s, int m, int k)
        : g_(gf), h_(hf), dg_(gf), dh_(hf), s_(s), m_(m), k_(k) {
        if (s < 2) throw PolicyError("two-phase cops need s >= 2");
        if (m < 0 || k < 0 || m + k < 1) throw PolicyError("two-phase cops need at least one cop");
        if (m > 0) semi_ = std::make_unique<SolvedGame>(g_, speeds(1, 1, m, Variant::semi_active));
        if (k > 0) restricted_ = std::make_unique<SolvedGame>(h_, speeds(s, s, k, Variant::restricted));
    }
    std::string name() const override { return "two_phase_product"; }

    std::vector<Vertex> place(const PlayView& v) override {
        if (v.graph.order() != g_.order() * h_.order()) throw PolicyError("graph is not the product of the factors");
        if (v.config.cop_count != m_ + k_) throw PolicyError("cop count differs from m + k");
        phase_two_.assign(at(m_ + k_), 0);
        g_progress_ = h_progress_ = 0;
        have_prev_ = false;
        std::vector<Vertex> p;
        for (int i = 0; i < m_; ++i) p.push_back(pack(semi_->result().placement[at(i)], 0));
        for (int i = 0; i < k_; ++i) p.push_back(pack(0, restricted_->result().placement[at(i)]));
        record(p);
        return p;
    }

    std::vector<Vertex> move(const PlayView& v) override {
        const Vertex u2 = gpart(v.robber), v2 = hpart(v.robber);
        const Vertex u1 = have_prev_ ? gpart(prev_) : u2, v1 = have_prev_ ? hpart(prev_) : v2;
        prev_ = v.robber;
        have_prev_ = true;
        const int dH = dh_(v1, v2);

        std::vector<Vertex> a(at(m_ + k_)), b(at(m_ + k_));
        for (int i = 0; i < m_ + k_; ++i) {
            a[at(i)] = gpart(v.cops[at(i)]);
            b[at(i)] = hpart(v.cops[at(i)]);
        }

        bool g_all = std::all_of(phase_two_.begin(), phase_two_.begin() + m_, [](char x) { return x != 0; });
        bool h_all = std::all_of(phase_two_.begin() + m_, phase_two_.end(), [](char x) { return x != 0; });

        // G-cops.
        std::vector<Vertex> gpos;
        for (int i = 0; i < m_; ++i) {
            if (!phase_two_[at(i)]) {
                b[at(i)] = toward(h_, dh_, b[at(i)], v2, s_);
                if (b[at(i)] == v2) phase_two_[at(i)] = 1;
            } else {
                b[at(i)] = v2;
            }
            gpos.push_back(a[at(i)]);
        }
        if (m_ > 0 && g_all) {
            std::vector<Vertex> walk;
            if (u1 != u2) {
                walk = geodesic(g_, dg_, u1, u2);
            } else if (dH <= s_ - 2 && g_.degree(u1) > 0) {
                walk = {g_.neighbors(u1)[0], u1};
            }
            if (!walk.empty()) ++g_progress_;
            shadow_ = u1;
            for (Vertex p : walk) respond_semi(gpos, p);
            for (int i = 0; i < m_; ++i) a[at(i)] = gpos[at(i)];
        }

        // H-cops.
        std::vector<Vertex> hpos;
        for (int i = m_; i < m_ + k_; ++i) {
            if (!phase_two_[at(i)]) {
                a[at(i)] = toward(g_, dg_, a[at(i)], u2, s_);
                if (a[at(i)] == u2) phase_two_[at(i)] = 1;
            } else {
                a[at(i)] = u2;
            }
            hpos.push_back(b[at(i)]);
        }
        if (k_ > 0 && h_all && u1 == u2 && (dH == s_ - 1 || dH == s_)) {
            ++h_progress_;
            auto sorted = hpos;
            std::sort(sorted.begin(), sorted.end());
            if (std::find(sorted.begin(), sorted.end(), v2) == sorted.end()) {
                auto mv = restricted_->optimal_cop_move(sorted, v2);
                assign(hpos, mv.steps);
            }
            for (int i = m_; i < m_ + k_; ++i) b[at(i)] = hpos[at(i - m_)];
        }

        std::vector<Vertex> next(at(m_ + k_));
        for (int i = 0; i < m_ + k_; ++i) next[at(i)] = pack(a[at(i)], b[at(i)]);
        // Take a capture in reach; the scheme above only guarantees one eventually.
        for (int i = 0; i < m_ + k_; ++i)
            if (dg_(gpart(v.cops[at(i)]), u2) + dh_(hpart(v.cops[at(i)]), v2) <= s_) {
                next[at(i)] = v.robber;
                break;
            }
        bool within_speed = true;
        for (int i = 0; i < m_ + k_; ++i)
            within_speed = within_speed && dg_(gpart(v.cops[at(i)]), gpart(next[at(i)])) +
                                                   dh_(hpart(v.cops[at(i)]), hpart(next[at(i)])) <=
                                               s_;
        if (!within_speed) throw PolicyError("two-phase cop plan exceeds speed s");
        record(next);
        return next;
    }
    std::vector<InvariantCheck> checks() const override { return checks_; }

private:
    Vertex pack(Vertex u, Vertex w) const { return u * h_.order() + w; }
    Vertex gpart(Vertex x) const { return x / h_.order(); }
    Vertex hpart(Vertex x) const { return x % h_.order(); }

    static void assign(std::vector<Vertex>& pos, const std::vector<std::pair<Vertex, Vertex>>& steps) {
        std::vector<char> used(pos.size(), 0);
        auto old = pos;
        for (auto [from, to] : steps)
            for (std::size_t i = 0; i < pos.size(); ++i)
                if (!used[i] && old[i] == from) {
                    used[i] = 1;
                    pos[i] = to;
                    break;
                }
    }

    // One imagined robber step to p in the semi-active game on G. A cop already
    // on the robber's shadow follows it.
    void respond_semi(std::vector<Vertex>& gpos, Vertex p) {
        Vertex from = shadow_;
        shadow_ = p;
        bool on = false;
        for (auto& x : gpos)
            if (x == from && dg_(from, p) <= 1) {
                x = p;
                on = true;
            }
        if (on) return;
        auto sorted = gpos;
        std::sort(sorted.begin(), sorted.end());
        if (std::find(sorted.begin(), sorted.end(), p) != sorted.end()) return;
        auto mv = semi_->optimal_cop_move(sorted, p);
        assign(gpos, mv.steps);
    }

    void record(const std::vector<Vertex>&) {
        long long g2 = std::count(phase_two_.begin(), phase_two_.begin() + m_, 1);
        long long h2 = std::count(phase_two_.begin() + m_, phase_two_.end(), 1);
        checks_ = {{"g_cops_phase_two", true, g2},
                   {"h_cops_phase_two", true, h2},
                   {"g_progress", true, g_progress_},
                   {"h_progress", true, h_progress_}};
    }

    Graph g_, h_;
    DistanceMatrix dg_, dh_;
    int s_, m_, k_;
    std::unique_ptr<SolvedGame> semi_, restricted_;
    std::vector<char> phase_two_;
    long long g_progress_ = 0, h_progress_ = 0;
    Vertex prev_ = 0;
    bool have_prev_ = false;
    Vertex shadow_ = 0;
    std::vector<InvariantCheck> checks_;
};

}  // namespace

std::unique_ptr<RobberPolicy> grid_blocking_robber(int s) { return std::make_unique<GridBlockingRobber>(s); }
std::unique_ptr<RobberPolicy> hypercube_weight_robber() { return std::make_unique<HypercubeWeightRobber>(); }
std::unique_ptr<RobberPolicy> projective_product_robber(const Graph& factor) {
    return std::make_unique<ProjectiveProductRobber>(factor);
}
std::unique_ptr<RobberPolicy> torus_coordinate_robber(int s) { return std::make_unique<TorusCoordinateRobber>(s); }
std::unique_ptr<CopPolicy> grid_single_cop(int s) { return std::make_unique<GridSingleCop>(s); }
std::unique_ptr<CopPolicy> two_phase_product_cops(const Graph& g_factor, const Graph& h_factor, int s, int m, int k) {
    return std::make_unique<TwoPhaseProductCops>(g_factor, h_factor, s, m, k);
}

bool distance_half_lemma_holds(const Graph& g, int s, Vertex cop, std::span<const Vertex> walk) {
    if (static_cast<int>(walk.size()) != s + 1) return true;
    for (std::size_t i = 0; i + 1 < walk.size(); ++i)
        if (!g.adjacent(walk[i], walk[i + 1])) return true;
    for (Vertex w : walk)
        if (w == cop) return true;
    auto d = bfs_distances(g, cop);
    int x = d[at(walk[0])], toward_steps = 0;
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) toward_steps += d[at(walk[i + 1])] < d[at(walk[i])];
    if (2 * toward_steps >= x) return true;
    return d[at(walk.back())] > s;
}

}  // namespace pursuit
