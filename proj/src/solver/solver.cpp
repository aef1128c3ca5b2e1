#include "pursuit/solver.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <deque>
#include <limits>

#include "pursuit/errors.hpp"
#include "pursuit/families.hpp"

namespace pursuit {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kSat / a) return kSat;
    return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSat - b ? kSat : a + b; }

// Inserts x into the sorted run a[0..len) writing len+1 values to out.
void insert_sorted(const int* a, int len, int x, int* out) {
    int i = 0, j = 0;
    while (i < len && a[i] <= x) out[j++] = a[i++];
    out[j++] = x;
    while (i < len) out[j++] = a[i++];
}

void check_cops(std::span<const Vertex> cops, int k, int n) {
    if (static_cast<int>(cops.size()) != k) throw InvalidParameter("expected " + std::to_string(k) + " cop positions");
    if (!std::is_sorted(cops.begin(), cops.end())) throw InvalidParameter("cop positions must be sorted");
    for (Vertex c : cops)
        if (c < 0 || c >= n) throw InvalidParameter("cop position out of range");
}

}  // namespace

SubstateLayout::SubstateLayout(int order, int cops, bool flagged)
    : n_(order), k_(cops), flagged_(flagged), c_(order + cops + 1) {
    if (order < 1) throw InvalidParameter("solver needs a nonempty graph");
    if (cops < 1 || cops > kMaxCops) throw InvalidParameter("cop count must be in 1.." + std::to_string(kMaxCops));
    count_.resize(static_cast<std::size_t>(k_) + 1);
    for (int m = 0; m <= k_; ++m) count_[static_cast<std::size_t>(m)] = m == 0 ? 1 : c_(n_ + m - 1, m);
    base_.assign(static_cast<std::size_t>(k_) + 2, 0);
    for (int u = 0; u <= k_; ++u) {
        std::uint64_t block = sat_mul(sat_mul(count_[static_cast<std::size_t>(u)], count_[static_cast<std::size_t>(k_ - u)]),
                                      sat_mul(static_cast<std::uint64_t>(flags(u)), static_cast<std::uint64_t>(n_)));
        base_[static_cast<std::size_t>(u) + 1] = sat_add(base_[static_cast<std::size_t>(u)], block);
    }
}

void SubstateLayout::decode(std::uint64_t index, Sub& s) const {
    int u = 0;
    while (index >= base_[static_cast<std::size_t>(u) + 1]) ++u;
    std::uint64_t off = index - base_[static_cast<std::size_t>(u)];
    s.u = u;
    s.r = static_cast<Vertex>(off % static_cast<std::uint64_t>(n_));
    off /= static_cast<std::uint64_t>(n_);
    const auto fl = static_cast<std::uint64_t>(flags(u));
    s.f = static_cast<int>(off % fl);
    off /= fl;
    const std::uint64_t cm = count_[static_cast<std::size_t>(k_ - u)];
    multiset_unrank(off % cm, k_ - u, c_, s.moved);
    multiset_unrank(off / cm, u, c_, s.unmoved);
}

std::uint64_t substate_count(int order, const GameConfig& c) {
    c.validate();
    return SubstateLayout(order, c.cop_count, c.cops_must_move()).size();
}

// Update primitives shared by the serial and OpenMP kernels.
template <bool Atomic>
struct Slots {
    static std::uint16_t load(std::uint16_t& x) {
        if constexpr (Atomic)
            return std::atomic_ref<std::uint16_t>(x).load(std::memory_order_relaxed);
        else
            return x;
    }
    static void store(std::uint16_t& x, std::uint16_t v) {
        if constexpr (Atomic)
            std::atomic_ref<std::uint16_t>(x).store(v, std::memory_order_relaxed);
        else
            x = v;
    }
    // Unresolved -> v; true for the single caller that wins.
    static bool claim(std::uint16_t& x, std::uint16_t v) {
        if constexpr (Atomic) {
            std::uint16_t expect = SolvedGame::kUnresolved;
            return std::atomic_ref<std::uint16_t>(x).compare_exchange_strong(expect, v, std::memory_order_relaxed);
        } else {
            if (x != SolvedGame::kUnresolved) return false;
            x = v;
            return true;
        }
    }
    // Decrement; true when this call took the counter to zero.
    static bool release(std::uint16_t& x) {
        if constexpr (Atomic)
            return std::atomic_ref<std::uint16_t>(x).fetch_sub(1, std::memory_order_relaxed) == 1;
        else
            return --x == 0;
    }
};

struct SolverKernels {
    // Visits every predecessor of state x (value v) and resolves those whose
    // value is now determined. `same` receives states resolved at v, `next`
    // those resolved at v + 1.
    template <bool Atomic, class Same, class Next>
    static void expand(SolvedGame& sg, std::uint64_t x, std::uint16_t v, MoveTables::Scratch& scratch,
                       std::vector<Vertex>& moves, Same&& same, Next&& next) {
        using S = Slots<Atomic>;
        const auto& lay = sg.layout_;
        const int k = lay.cops();
        SubstateLayout::Sub s;
        lay.decode(x, s);

        if (s.u == k) {
            // Start of a cop turn: predecessors are robber-to-move states.
            const std::uint64_t rank_c = lay.rank({s.unmoved, static_cast<std::size_t>(k)});
            sg.tables_->robber_moves({s.unmoved, static_cast<std::size_t>(k)}, s.r, scratch, moves);
            for (Vertex rx : moves) {
                const std::uint64_t p = lay.index(0, 0, rank_c, 0, rx);
                if (S::load(sg.values_[p]) == SolvedGame::kInvalid) continue;
                if (S::release(sg.counters_[p])) {
                    S::store(sg.values_[p], v);
                    same(p);
                }
            }
            return;
        }

        const int m = k - s.u;
        const Vertex last = s.moved[m - 1];
        const std::uint64_t rank_m = lay.rank({s.moved, static_cast<std::size_t>(m - 1)});
        const int up = s.u + 1;
        const bool two = lay.flags(up) == 2;
        const bool active = sg.config_.cops_must_move();
        // At the robber-to-move boundary the active rule is already enforced.
        const int fx = s.u == 0 ? 1 : s.f;
        int bigger[kMaxCops];
        for (Vertex c : sg.tables_->cop_ball(last)) {
            insert_sorted(s.unmoved, s.u, c, bigger);
            const std::uint64_t rank_u = lay.rank({bigger, static_cast<std::size_t>(up)});
            auto visit = [&](int fp) {
                const std::uint64_t p = lay.index(up, rank_u, rank_m, fp, s.r);
                if (s.u == 0) {
                    if (S::claim(sg.values_[p], static_cast<std::uint16_t>(v + 1))) next(p);
                } else if (S::claim(sg.values_[p], v)) {
                    same(p);
                }
            };
            if (!active) {
                visit(0);
                continue;
            }
            if (fx == 0) {
                if (c == last) visit(0);
            } else {
                if (c != last) visit(0);
                if (two) visit(1);
            }
        }
    }
};

SolvedGame::SolvedGame(const Graph& g, const GameConfig& c, const SolveOptions& opt)
    : graph_(std::make_shared<const Graph>(g)),
      config_(c),
      layout_((c.validate(), g.order()), c.cop_count, c.cops_must_move()) {
    if (g.order() == 0) throw InvalidParameter("solver needs a nonempty graph");
    if (!is_connected(*graph_)) throw DomainError("solver needs a connected graph");
    const std::uint64_t total = layout_.size();
    if (total > opt.budget || total >= std::uint64_t{0xFFFFFFFF}) throw BudgetExceeded(total, opt.budget);
    tables_ = std::make_unique<MoveTables>(*graph_, config_);

    const auto t0 = Clock::now();
    bool par = opt.kernel == Kernel::parallel ||
               (opt.kernel == Kernel::automatic && omp_get_max_threads() > 1 && total >= (1U << 16));
    if (par)
        run_parallel();
    else
        run_serial();
    finish(std::chrono::duration<double, std::milli>(Clock::now() - t0).count());
}

void SolvedGame::initialize(std::vector<std::uint32_t>& level0, std::vector<std::uint32_t>& level1) {
    const int k = layout_.cops();
    const int n = layout_.order();
    values_.assign(layout_.size(), kUnresolved);
    counters_.assign(layout_.block_begin(1), 0);
    const int reach = config_.cop_speed + config_.capture_radius;
    const MoveTables& mt = *tables_;

    for (int u = 0; u <= k; ++u) {
        const std::uint64_t nu = layout_.multisets(u), nm = layout_.multisets(k - u);
        const int fl = layout_.flags(u);
        const auto pairs = static_cast<std::int64_t>(nu * nm);
        std::vector<std::vector<std::uint32_t>> l0(static_cast<std::size_t>(omp_get_max_threads())),
            l1(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
        {
            auto scratch = mt.make_scratch();
            std::vector<Vertex> moves;
            auto& my0 = l0[static_cast<std::size_t>(omp_get_thread_num())];
            auto& my1 = l1[static_cast<std::size_t>(omp_get_thread_num())];
            int un[kMaxCops], mv[kMaxCops];
#pragma omp for schedule(dynamic, 64)
            for (std::int64_t pr = 0; pr < pairs; ++pr) {
                const std::uint64_t ru = static_cast<std::uint64_t>(pr) / nm, rm = static_cast<std::uint64_t>(pr) % nm;
                multiset_unrank(ru, u, layout_.binomials(), un);
                multiset_unrank(rm, k - u, layout_.binomials(), mv);
                for (int f = 0; f < fl; ++f)
                    for (Vertex r = 0; r < n; ++r) {
                        const std::uint64_t x = layout_.index(u, ru, rm, f, r);
                        if (!mt.safe({un, static_cast<std::size_t>(u)}, r) || !mt.safe({mv, static_cast<std::size_t>(k - u)}, r)) {
                            values_[x] = kInvalid;
                            continue;
                        }
                        if (u == 0) {
                            mt.robber_moves({mv, static_cast<std::size_t>(k)}, r, scratch, moves);
                            int safe = 0;
                            for (Vertex w : moves) safe += mt.safe({mv, static_cast<std::size_t>(k)}, w);
                            counters_[x] = static_cast<std::uint16_t>(safe);
                            if (safe == 0) {
                                values_[x] = 0;
                                my0.push_back(static_cast<std::uint32_t>(x));
                            }
                            continue;
                        }
                        for (int i = 0; i < u; ++i)
                            if (mt.dist(un[i], r) <= reach) {
                                values_[x] = 1;
                                my1.push_back(static_cast<std::uint32_t>(x));
                                break;
                            }
                    }
            }
        }
        for (auto& b : l0) level0.insert(level0.end(), b.begin(), b.end());
        for (auto& b : l1) level1.insert(level1.end(), b.begin(), b.end());
    }
    // Seed order only affects the serial queue's internal order, never values;
    // sort anyway so runs are reproducible step for step.
    std::sort(level0.begin(), level0.end());
    std::sort(level1.begin(), level1.end());
}

void SolvedGame::run_serial() {
    std::vector<std::uint32_t> l0, l1;
    initialize(l0, l1);
    std::deque<std::uint32_t> q(l0.begin(), l0.end());
    q.insert(q.end(), l1.begin(), l1.end());
    auto scratch = tables_->make_scratch();
    std::vector<Vertex> moves;
    std::uint16_t top = 0;
    int levels = 0;
    while (!q.empty()) {
        const std::uint32_t x = q.front();
        q.pop_front();
        const std::uint16_t v = values_[x];
        if (v + 1 >= kInvalid) throw Error("capture time exceeds the value range");
        if (levels == 0 || v > top) {
            top = v;
            ++levels;
        }
        SolverKernels::expand<false>(
            *this, x, v, scratch, moves, [&](std::uint64_t p) { q.push_front(static_cast<std::uint32_t>(p)); },
            [&](std::uint64_t p) { q.push_back(static_cast<std::uint32_t>(p)); });
    }
    result_.stats.levels = levels;
}

void SolvedGame::run_parallel() {
    std::vector<std::uint32_t> frontier, upcoming;
    initialize(frontier, upcoming);
    const auto threads = static_cast<std::size_t>(omp_get_max_threads());
    std::vector<std::vector<std::uint32_t>> same(threads), next(threads);
    std::uint16_t v = 0;
    int levels = 0;
    while (!frontier.empty() || !upcoming.empty()) {
        if (v + 1 >= kInvalid) throw Error("capture time exceeds the value range");
        if (!frontier.empty()) ++levels;
        while (!frontier.empty()) {
            const auto len = static_cast<std::int64_t>(frontier.size());
#pragma omp parallel
            {
                const auto t = static_cast<std::size_t>(omp_get_thread_num());
                auto scratch = tables_->make_scratch();
                std::vector<Vertex> moves;
                auto& my_same = same[t];
                auto& my_next = next[t];
#pragma omp for schedule(dynamic, 256)
                for (std::int64_t i = 0; i < len; ++i)
                    SolverKernels::expand<true>(
                        *this, frontier[static_cast<std::size_t>(i)], v, scratch, moves,
                        [&](std::uint64_t p) { my_same.push_back(static_cast<std::uint32_t>(p)); },
                        [&](std::uint64_t p) { my_next.push_back(static_cast<std::uint32_t>(p)); });
            }
            frontier.clear();
            for (auto& b : same) {
                frontier.insert(frontier.end(), b.begin(), b.end());
                b.clear();
            }
            for (auto& b : next) {
                upcoming.insert(upcoming.end(), b.begin(), b.end());
                b.clear();
            }
        }
        frontier.swap(upcoming);
        upcoming.clear();
        ++v;
    }
    result_.stats.levels = levels;
}

void SolvedGame::finish(double millis) {
    const int k = layout_.cops();
    const int n = layout_.order();
    auto& st = result_.stats;
    st.states = layout_.size();
    st.robber_states = layout_.block_begin(1);
    st.valid = 0;
    st.resolved = 0;
    for (auto x : values_) {
        st.valid += x != kInvalid;
        st.resolved += x < kInvalid;
    }
    st.millis = millis;

    const std::uint64_t placements = layout_.multisets(k);
    std::vector<std::uint32_t> worst(placements);
#pragma omp parallel for schedule(static)
    for (std::int64_t pc = 0; pc < static_cast<std::int64_t>(placements); ++pc) {
        std::uint32_t w = 0;
        for (Vertex r = 0; r < n; ++r) {
            const std::uint16_t x = values_[layout_.index(k, static_cast<std::uint64_t>(pc), 0, 0, r)];
            if (x == kInvalid) continue;
            w = std::max<std::uint32_t>(w, x == kUnresolved ? 0x10000U : x);
        }
        worst[static_cast<std::size_t>(pc)] = w;
    }
    const auto best = std::min_element(worst.begin(), worst.end());
    result_.cop_win = *best < 0x10000U;
    result_.placement.resize(static_cast<std::size_t>(k));
    multiset_unrank(static_cast<std::uint64_t>(best - worst.begin()), k, layout_.binomials(), result_.placement.data());
    if (result_.cop_win) result_.capture_time = static_cast<int>(*best);
}

std::uint16_t SolvedGame::raw_value(std::span<const Vertex> cops, Vertex robber, Phase phase) const {
    const int k = layout_.cops();
    check_cops(cops, k, layout_.order());
    if (!graph_->in_range(robber)) throw InvalidParameter("robber position out of range");
    const std::uint64_t rank = layout_.rank(cops);
    return phase == Phase::cop_turn ? values_[layout_.index(k, rank, 0, 0, robber)]
                                    : values_[layout_.index(0, 0, rank, 0, robber)];
}

std::optional<int> SolvedGame::cop_value(std::span<const Vertex> cops, Vertex robber) const {
    auto x = raw_value(cops, robber, Phase::cop_turn);
    if (x >= kInvalid) return std::nullopt;
    return x;
}

std::optional<int> SolvedGame::robber_value(std::span<const Vertex> cops, Vertex robber) const {
    auto x = raw_value(cops, robber, Phase::robber_turn);
    if (x >= kInvalid) return std::nullopt;
    return x;
}

SolvedGame::CopMove SolvedGame::optimal_cop_move(std::span<const Vertex> cops, Vertex robber) const {
    const int k = layout_.cops();
    const std::uint16_t start = raw_value(cops, robber, Phase::cop_turn);
    if (start == kInvalid) throw InvalidParameter("robber already within capture radius");
    const int reach = config_.cop_speed + config_.capture_radius;
    const bool active = config_.cops_must_move();

    CopMove out;
    struct Node {
        std::vector<int> unmoved, moved;
        int f = 0;
    };

    // Depth-first over sub-moves in index order. With a finite target the
    // first child matching the value is taken; otherwise the first chain that
    // completes a legal turn.
    auto rec = [&](auto& self, const Node& node, std::uint16_t want) -> bool {
        const int u = static_cast<int>(node.unmoved.size());
        if (want != kUnresolved || u == k) {
            for (int c : node.unmoved)
                if (tables_->dist(c, robber) <= reach) {
                    // Capture: lowest cop, lowest landing vertex.
                    Vertex land = -1;
                    for (Vertex w : tables_->cop_ball(c))
                        if (tables_->dist(w, robber) <= config_.capture_radius) {
                            land = w;
                            break;
                        }
                    out.steps.emplace_back(c, land);
                    out.after = node.moved;
                    bool skipped = false;
                    for (int x : node.unmoved) {
                        if (x == c && !skipped) {
                            skipped = true;
                            continue;
                        }
                        out.after.push_back(x);
                    }
                    out.after.push_back(land);
                    std::sort(out.after.begin(), out.after.end());
                    out.captures = true;
                    return true;
                }
        }
        struct Child {
            std::uint64_t index;
            int cop;
            Vertex to;
            int f;
        };
        std::vector<Child> kids;
        const Vertex floor = node.moved.empty() ? 0 : node.moved.back();
        for (int i = 0; i < u; ++i) {
            if (i > 0 && node.unmoved[static_cast<std::size_t>(i)] == node.unmoved[static_cast<std::size_t>(i) - 1]) continue;
            const int c = node.unmoved[static_cast<std::size_t>(i)];
            std::vector<int> rest = node.unmoved;
            rest.erase(rest.begin() + i);
            for (Vertex v : tables_->cop_ball(c)) {
                if (v < floor) continue;
                const bool changed = node.f != 0 || v != c;
                if (active && u == 1 && !changed) continue;
                std::vector<int> mv = node.moved;
                mv.push_back(v);
                const int cu = u - 1;
                const int cf = layout_.flags(cu) == 2 && changed ? 1 : 0;
                kids.push_back({layout_.index(cu, layout_.rank(rest), layout_.rank(mv), cf, robber), c, v, cf});
            }
        }
        std::sort(kids.begin(), kids.end(), [](const Child& a, const Child& b) { return a.index < b.index; });
        for (const auto& kid : kids) {
            const std::uint16_t raw = values_[kid.index];
            if (raw == kInvalid) continue;
            std::uint16_t got = raw;
            if (u == 1) got = raw == kUnresolved ? kUnresolved : static_cast<std::uint16_t>(raw + 1);
            if (want != kUnresolved && got != want) continue;
            Node child;
            child.unmoved = node.unmoved;
            child.unmoved.erase(std::find(child.unmoved.begin(), child.unmoved.end(), kid.cop));
            child.moved = node.moved;
            child.moved.push_back(kid.to);
            child.f = kid.f;
            out.steps.emplace_back(kid.cop, kid.to);
            if (u == 1) {
                out.after = child.moved;
                return true;
            }
            if (self(self, child, want)) return true;
            out.steps.pop_back();
        }
        return false;
    };

    Node root{{cops.begin(), cops.end()}, {}, 0};
    if (!rec(rec, root, start)) throw Error("no legal cop turn from this position");
    return out;
}

std::optional<Vertex> SolvedGame::optimal_robber_move(std::span<const Vertex> cops, Vertex robber) const {
    const int k = layout_.cops();
    check_cops(cops, k, layout_.order());
    auto scratch = tables_->make_scratch();
    std::vector<Vertex> moves;
    tables_->robber_moves(cops, robber, scratch, moves);
    std::sort(moves.begin(), moves.end());
    const std::uint64_t rank = layout_.rank(cops);
    std::optional<Vertex> pick;
    std::uint32_t best = 0;
    for (Vertex w : moves) {
        if (!tables_->safe(cops, w)) continue;
        const std::uint16_t x = values_[layout_.index(k, rank, 0, 0, w)];
        const std::uint32_t score = x == kUnresolved ? 0x10000U : x;
        if (!pick || score > best) {
            pick = w;
            best = score;
        }
    }
    return pick;
}

std::optional<Vertex> SolvedGame::optimal_robber_placement(std::span<const Vertex> cops) const {
    const int k = layout_.cops();
    check_cops(cops, k, layout_.order());
    const std::uint64_t rank = layout_.rank(cops);
    std::optional<Vertex> pick;
    std::uint32_t best = 0;
    for (Vertex w = 0; w < layout_.order(); ++w) {
        const std::uint16_t x = values_[layout_.index(k, rank, 0, 0, w)];
        if (x == kInvalid) continue;
        const std::uint32_t score = x == kUnresolved ? 0x10000U : x;
        if (!pick || score > best) {
            pick = w;
            best = score;
        }
    }
    return pick;
}

SolveResult solve(const Graph& g, const GameConfig& c, const SolveOptions& opt) { return SolvedGame(g, c, opt).result(); }

SolveResult solve_serial(const Graph& g, const GameConfig& c, const SolveOptions& opt) {
    SolveOptions o = opt;
    o.kernel = Kernel::serial;
    return SolvedGame(g, c, o).result();
}

SolveResult solve_parallel(const Graph& g, const GameConfig& c, const SolveOptions& opt) {
    SolveOptions o = opt;
    o.kernel = Kernel::parallel;
    return SolvedGame(g, c, o).result();
}

int cop_number(const Graph& g, GameConfig c, int k_max, const SolveOptions& opt) {
    if (k_max < 1) throw InvalidParameter("k_max must be >= 1");
    for (int k = 1; k <= k_max; ++k) {
        c.cop_count = k;
        if (solve(g, c, opt).cop_win) return k;
    }
    throw CopNumberExceeded(k_max);
}

int cop_number_via_power(const Graph& g, int s, int k_max, const SolveOptions& opt) {
    return cop_number(power(g, s), speeds(1, 1, 1), k_max, opt);
}

int capture_time(const Graph& g, const GameConfig& c, const SolveOptions& opt) {
    auto r = solve(g, c, opt);
    if (!r.cop_win) throw DomainError("the robber escapes " + std::to_string(c.cop_count) + " cop(s)");
    return *r.capture_time;
}

nlohmann::json solve_report(const Graph& g, const GameConfig& c, const SolveResult& r) {
    return {{"graph_hash", g.hash()},
            {"config", to_json(c)},
            {"cop_win", r.cop_win},
            {"capture_time", r.capture_time ? nlohmann::json(*r.capture_time) : nlohmann::json(nullptr)},
            {"states", r.stats.states},
            {"millis", r.stats.millis}};
}

}  // namespace pursuit
