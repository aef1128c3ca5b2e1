#include <algorithm>
#include <chrono>
#include <cstdio>
#include <istream>
#include <ostream>

#include "pursuit/errors.hpp"
#include "pursuit/families.hpp"
#include "pursuit/graph_io.hpp"
#include "pursuit/harness.hpp"
#include "pursuit/structure.hpp"

namespace pursuit {

MonotoneRow explore_monotone(const std::string& name, const Graph& g, int s_max, int k_max, const SolveOptions& opt,
                             ResultCache* cache) {
    if (s_max < 1) throw InvalidParameter("s_max must be >= 1");
    MonotoneRow row;
    row.name = name;
    row.order = g.order();
    row.radius = radius(g);
    if (row.radius == kUnreachable) throw DomainError("explore_monotone needs a connected graph");
    int top = std::min(s_max, std::max(row.radius, 1));
    for (int s = 1; s <= top; ++s) {
        try {
            row.sequence.push_back(cached_cop_number(g, speeds(s, s, 1), k_max, opt, cache));
        } catch (const CopNumberExceeded&) {
            row.sequence.push_back(std::nullopt);
        } catch (const BudgetExceeded&) {
            row.sequence.push_back(std::nullopt);
        }
    }
    for (std::size_t i = 0; i + 1 < row.sequence.size(); ++i)
        if (row.sequence[i] && row.sequence[i + 1] && *row.sequence[i] < *row.sequence[i + 1])
            row.increases.push_back(static_cast<int>(i) + 1);
    return row;
}

nlohmann::json to_json(const MonotoneRow& r) {
    nlohmann::json seq = nlohmann::json::array();
    for (const auto& x : r.sequence) seq.push_back(x ? nlohmann::json(*x) : nlohmann::json(nullptr));
    return {{"name", r.name}, {"order", r.order}, {"radius", r.radius}, {"sequence", seq}, {"increases", r.increases}};
}

namespace {

struct ScanItem {
    enum Kind : unsigned char { malformed, wrong_order, disconnected, robber_win, cop_win } kind = malformed;
    int capt = -1;
    bool spot = false;
    bool mismatch = false;
};

}  // namespace

ScanReport scan_graph6(std::istream& in, int s, int n, const SolveOptions& opt, std::size_t spot_every) {
    if (s < 1) throw InvalidParameter("speed must be >= 1");
    if (spot_every == 0) spot_every = 1;
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);)
        if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(std::move(line));

    std::vector<ScanItem> items(lines.size());
    const auto m = static_cast<long long>(lines.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (long long i = 0; i < m; ++i) {
        auto& it = items[static_cast<std::size_t>(i)];
        Graph g;
        try {
            g = parse_graph6(lines[static_cast<std::size_t>(i)]);
        } catch (const ParseError&) {
            it.kind = ScanItem::malformed;
            continue;
        }
        if (g.order() != n) {
            it.kind = ScanItem::wrong_order;
            continue;
        }
        if (!is_connected(g)) {
            it.kind = ScanItem::disconnected;
            continue;
        }
        Graph p = s == 1 ? g : power(g, s);
        try {
            it.capt = capture_time_via_partition(p);
            it.kind = ScanItem::cop_win;
        } catch (const DomainError&) {
            it.kind = ScanItem::robber_win;
        }
        if (static_cast<std::size_t>(i) % spot_every == 0) {
            it.spot = true;
            SolveOptions o = opt;
            o.kernel = Kernel::serial;
            auto r = solve(g, speeds(s, s, 1), o);
            bool partition_win = it.kind == ScanItem::cop_win;
            it.mismatch = r.cop_win != partition_win || (r.cop_win && *r.capture_time != it.capt);
        }
    }

    ScanReport rep;
    rep.speed = s;
    rep.order = n;
    rep.records = lines.size();
    for (std::size_t i = 0; i < items.size(); ++i) {
        const auto& it = items[i];
        switch (it.kind) {
            case ScanItem::malformed: ++rep.malformed; break;
            case ScanItem::wrong_order: ++rep.wrong_order; break;
            case ScanItem::disconnected: ++rep.disconnected; break;
            case ScanItem::robber_win: break;
            case ScanItem::cop_win:
                ++rep.cop_win;
                if (!rep.max_capture_time || it.capt > *rep.max_capture_time) {
                    rep.max_capture_time = it.capt;
                    rep.argmax.clear();
                    rep.argmax_count = 0;
                }
                if (it.capt == *rep.max_capture_time) {
                    ++rep.argmax_count;
                    if (rep.argmax.size() < 16) rep.argmax.push_back(lines[i]);
                }
                break;
        }
        if (it.spot) ++rep.spot_checks;
        if (it.mismatch) {
            ++rep.spot_mismatches;
            rep.mismatch_witnesses.push_back(lines[i]);
        }
    }
    rep.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

nlohmann::json to_json(const ScanReport& r) {
    return {{"speed", r.speed},
            {"order", r.order},
            {"records", r.records},
            {"malformed", r.malformed},
            {"wrong_order", r.wrong_order},
            {"disconnected", r.disconnected},
            {"cop_win", r.cop_win},
            {"max_capture_time", r.max_capture_time ? nlohmann::json(*r.max_capture_time) : nlohmann::json(nullptr)},
            {"argmax", r.argmax},
            {"argmax_count", r.argmax_count},
            {"spot_checks", r.spot_checks},
            {"spot_mismatches", r.spot_mismatches},
            {"mismatch_witnesses", r.mismatch_witnesses},
            {"millis", r.millis}};
}

std::string to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::holds: return "holds";
        case ClaimStatus::fails: return "fails";
        case ClaimStatus::skipped: return "skipped(budget)";
    }
    return "?";
}

nlohmann::json to_json(const ClaimRecord& r) {
    return {{"claim_id", r.id},
            {"statement", r.statement},
            {"kind", r.kind == ClaimKind::theorem ? "theorem" : "conjecture"},
            {"parameters", r.parameters},
            {"relation", r.relation},
            {"expected", r.expected},
            {"computed", r.computed},
            {"status", to_string(r.status)},
            {"millis", r.millis},
            {"witness", r.witness}};
}

bool run_failed(const std::vector<ClaimRecord>& records) {
    return std::any_of(records.begin(), records.end(),
                       [](const ClaimRecord& r) { return r.kind == ClaimKind::theorem && r.status == ClaimStatus::fails; });
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<ClaimRecord>& records) {
    out << "claim_id,status,expected,computed,millis\n";
    for (const auto& r : records) {
        char ms[32];
        std::snprintf(ms, sizeof ms, "%.1f", r.millis);
        out << csv_field(r.id) << ',' << csv_field(to_string(r.status)) << ',' << csv_field(r.expected) << ','
            << csv_field(r.computed) << ',' << ms << '\n';
    }
}

nlohmann::json summary_json(const std::vector<ClaimRecord>& records) {
    std::size_t holds = 0, fails = 0, skipped = 0;
    for (const auto& r : records) {
        if (r.status == ClaimStatus::holds) ++holds;
        if (r.status == ClaimStatus::fails) ++fails;
        if (r.status == ClaimStatus::skipped) ++skipped;
    }
    return {{"claims", records.size()}, {"holds", holds}, {"fails", fails}, {"skipped", skipped},
            {"run_failed", run_failed(records)}};
}

void write_json(std::ostream& out, const std::vector<ClaimRecord>& records) {
    nlohmann::json j = {{"tool_version", kToolVersion}, {"summary", summary_json(records)}, {"claims", nlohmann::json::array()}};
    for (const auto& r : records) j["claims"].push_back(to_json(r));
    out << j.dump(2) << '\n';
}

}  // namespace pursuit
