#pragma once
// Brute-force reference solver for tiny games. Labeled cop tuples, its own
// Floyd-Warshall distances and robber-path search, plain value iteration.
// Shares nothing with the production move machinery beyond Graph itself.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "pursuit/game.hpp"
#include "pursuit/graph.hpp"

namespace oracle {

using pursuit::Graph;
using pursuit::GameConfig;
using pursuit::Variant;

struct Result {
    bool cop_win = false;
    std::optional<int> capture_time;
};

inline std::vector<std::vector<int>> floyd(const Graph& g) {
    const int n = g.order();
    const int inf = std::numeric_limits<int>::max() / 4;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int v = 0; v < n; ++v) {
        d[v][v] = 0;
        for (int u : g.neighbors(v)) d[v][u] = 1;
    }
    for (int m = 0; m < n; ++m)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) d[a][b] = std::min(d[a][b], d[a][m] + d[m][b]);
    return d;
}

inline bool end_ok(const GameConfig& c, int d) {
    switch (c.variant) {
        case Variant::standard: return d <= c.robber_speed;
        case Variant::active:
        case Variant::semi_active: return d >= 1 && d <= c.robber_speed;
        case Variant::restricted: return d >= c.robber_speed - 1 && d <= c.robber_speed;
    }
    return false;
}

class Solver {
public:
    Solver(const Graph& g, const GameConfig& c) : g_(g), c_(c), n_(g.order()), k_(c.cop_count), d_(floyd(g)) {
        tuples_ = 1;
        for (int i = 0; i < k_; ++i) tuples_ *= n_;
    }

    Result run() {
        const int inf = std::numeric_limits<int>::max();
        std::vector<int> cval(tuples_ * n_, inf), rval(tuples_ * n_, inf);
        // Cop successors and robber moves, precomputed per tuple.
        std::vector<std::vector<long>> cop_next(tuples_);
        for (long t = 0; t < tuples_; ++t) cop_next[t] = cop_moves(t);
        std::vector<std::vector<std::vector<int>>> rob_next(tuples_, std::vector<std::vector<int>>(n_));
        for (long t = 0; t < tuples_; ++t)
            for (int r = 0; r < n_; ++r)
                if (!on_cop(t, r)) rob_next[t][r] = robber_moves(t, r);

        for (bool changed = true; changed;) {
            changed = false;
            for (long t = 0; t < tuples_; ++t)
                for (int r = 0; r < n_; ++r) {
                    if (captured(t, r)) continue;
                    // Robber to move against tuple t.
                    int best = 0;
                    for (int r2 : rob_next[t][r]) {
                        if (captured(t, r2)) continue;
                        best = std::max(best, cval[t * n_ + r2]);
                    }
                    if (best < rval[t * n_ + r]) rval[t * n_ + r] = best, changed = true;
                    // Cops to move.
                    int cbest = inf;
                    for (long t2 : cop_next[t]) {
                        int v = captured(t2, r) ? 0 : rval[t2 * n_ + r];
                        cbest = std::min(cbest, v);
                    }
                    int cv = cbest == inf ? inf : cbest + 1;
                    if (cv < cval[t * n_ + r]) cval[t * n_ + r] = cv, changed = true;
                }
        }

        int best = inf;
        for (long t = 0; t < tuples_; ++t) {
            int worst = 0;
            for (int r = 0; r < n_; ++r)
                if (!captured(t, r)) worst = std::max(worst, cval[t * n_ + r]);
            best = std::min(best, worst);
        }
        Result res;
        res.cop_win = best != inf;
        if (res.cop_win) res.capture_time = best;
        return res;
    }

private:
    int cop(long t, int i) const {
        for (int j = 0; j < i; ++j) t /= n_;
        return static_cast<int>(t % n_);
    }

    bool on_cop(long t, int r) const {
        for (int i = 0; i < k_; ++i)
            if (cop(t, i) == r) return true;
        return false;
    }

    bool captured(long t, int r) const {
        for (int i = 0; i < k_; ++i)
            if (d_[cop(t, i)][r] <= c_.capture_radius) return true;
        return false;
    }

    std::vector<long> cop_moves(long t) const {
        std::vector<long> out{0};
        long scale = 1;
        for (int i = 0; i < k_; ++i) {
            int from = cop(t, i);
            std::vector<long> next;
            for (long partial : out)
                for (int v = 0; v < n_; ++v)
                    if (d_[from][v] <= c_.cop_speed) next.push_back(partial + v * scale);
            out = std::move(next);
            scale *= n_;
        }
        if (c_.variant == Variant::active) out.erase(std::remove(out.begin(), out.end(), t), out.end());
        return out;
    }

    // Depth-limited walk search avoiding cop vertices.
    std::vector<int> robber_moves(long t, int r) const {
        std::vector<char> blocked(n_, 0), reach(n_, 0);
        for (int i = 0; i < k_; ++i) blocked[cop(t, i)] = 1;
        std::vector<int> frontier{r};
        reach[r] = 1;
        for (int step = 0; step < c_.robber_speed; ++step) {
            std::vector<int> next;
            for (int v : frontier)
                for (int u : g_.neighbors(v))
                    if (!blocked[u] && !reach[u]) reach[u] = 1, next.push_back(u);
            frontier = std::move(next);
        }
        std::vector<int> out;
        for (int v = 0; v < n_; ++v)
            if (reach[v] && end_ok(c_, d_[r][v])) out.push_back(v);
        return out;
    }

    const Graph& g_;
    GameConfig c_;
    int n_, k_;
    long tuples_ = 1;
    std::vector<std::vector<int>> d_;
};

inline Result solve(const Graph& g, const GameConfig& c) { return Solver(g, c).run(); }

}  // namespace oracle
