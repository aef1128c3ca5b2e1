#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "pursuit/errors.hpp"
#include "pursuit/families.hpp"
#include "pursuit/graph_io.hpp"
#include "pursuit/harness.hpp"

using namespace pursuit;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        std::random_device rd;
        path = fs::temp_directory_path() / ("pursuit-test-" + std::to_string(rd()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

std::string data_dir() { return PURSUIT_TEST_DATA; }

}  // namespace

TEST_CASE("cache put and get") {
    TempDir dir;
    Graph g = hypercube(3);
    GameConfig c = speeds(2, 2, 2);
    auto r = solve(g, c);
    {
        ResultCache cache(dir.path.string());
        CHECK(!cache.get(g, c));
        cache.put(g, c, r);
        auto hit = cache.get(g, c);
        REQUIRE(hit);
        CHECK(ResultCache::result_json(*hit) == ResultCache::result_json(r));
    }
    // A fresh instance reads what the last one wrote.
    ResultCache again(dir.path.string());
    CHECK(again.size() == 1);
    auto hit = again.get(g, c);
    REQUIRE(hit);
    CHECK(hit->cop_win == r.cop_win);
    CHECK(hit->capture_time == r.capture_time);
    CHECK(hit->placement == r.placement);
    CHECK(!again.get(g, speeds(2, 2, 1)));
}

TEST_CASE("cache drops torn and foreign-version lines") {
    TempDir dir;
    ResultCache cache(dir.path.string());
    Graph g = path(4);
    cache.put(g, speeds(1, 1, 1), solve(g, speeds(1, 1, 1)));
    {
        std::ofstream out(cache.file(), std::ios::app);
        out << "{\"key\": \"x\", \"result\": {}, \"version\": \"0.0.1\"}\n";
        out << "{\"key\": \"tor";
    }
    ResultCache reread(dir.path.string());
    CHECK(reread.size() == 1);
}

TEST_CASE("cache coherence on random entries") {
    TempDir dir;
    ResultCache cache(dir.path.string());
    std::mt19937_64 rng(8);
    std::vector<std::pair<Graph, GameConfig>> entries;
    for (int i = 0; i < 50; ++i) {
        Graph g = random_connected(3 + i % 7, 0.3, rng());
        GameConfig c = speeds(1 + i % 3, 1 + i % 2, 1 + i % 2, static_cast<Variant>(i % 4));
        cached_solve(g, c, {}, &cache);
        entries.emplace_back(g, c);
    }
    ResultCache reread(dir.path.string());
    for (const auto& [g, c] : entries) {
        auto hit = reread.get(g, c);
        REQUIRE(hit);
        CHECK(ResultCache::result_json(*hit).dump() == ResultCache::result_json(solve(g, c)).dump());
    }
}

TEST_CASE("cache write failure names the path") {
    TempDir dir;
    fs::path blocker = dir.path / "file";
    std::ofstream(blocker) << "x";
    ResultCache cache((blocker / "sub").string());
    Graph g = path(2);
    CHECK_THROWS_AS(cache.put(g, speeds(1, 1, 1), solve(g, speeds(1, 1, 1))), IoError);
}

TEST_CASE("claim registry") {
    const auto& reg = claim_registry();
    std::set<std::string> ids;
    for (const auto& c : reg) {
        CHECK(!c.statement.empty());
        CHECK(ids.insert(c.id).second);
    }
    CHECK(find_claim("hypercube_speed2") != nullptr);
    CHECK(find_claim("nope") == nullptr);
    CHECK_THROWS_AS(run_claim("nope", {}), InvalidParameter);
}

TEST_CASE("claim examples") {
    HarnessOptions o;
    auto h = run_claim("hypercube_speed2", o);
    CHECK(h.status == ClaimStatus::holds);
    CHECK(h.computed.find("c_{2,2}(Q6): 3") != std::string::npos);
    CHECK(run_claim("grid_3d_speed2", o).status == ClaimStatus::holds);
    CHECK(run_claim("q9_one_cop_escape", o).status == ClaimStatus::holds);
    auto skip = run_claim("realizer_long", o);
    CHECK(skip.status == ClaimStatus::skipped);
    CHECK(skip.witness.contains("states"));
}

TEST_CASE("failing claim carries a witness") {
    HarnessOptions o;
    auto r = run_claim("grid_three_cops", o);
    CHECK(r.status == ClaimStatus::fails);
    CHECK(r.witness.contains("graph6"));
    CHECK(r.witness.contains("config"));
    CHECK(r.witness.contains("solver"));
    CHECK(parse_graph6(r.witness["graph6"].get<std::string>()).order() == 49);
    CHECK(run_failed({r}));
}

TEST_CASE("reports") {
    ClaimRecord a;
    a.id = "x";
    a.expected = "1, 2";
    a.computed = "say \"hi\"";
    a.millis = 1.25;
    std::ostringstream csv;
    write_csv(csv, {a});
    std::istringstream lines(csv.str());
    std::string header, row;
    std::getline(lines, header);
    std::getline(lines, row);
    CHECK(header == "claim_id,status,expected,computed,millis");
    CHECK(row == "x,holds,\"1, 2\",\"say \"\"hi\"\"\",1.2");
    std::ostringstream js;
    write_json(js, {a});
    auto j = nlohmann::json::parse(js.str());
    CHECK(j["claims"][0]["status"] == "holds");
    CHECK(j["summary"]["claims"] == 1);
    CHECK(to_string(ClaimStatus::skipped) == "skipped(budget)");
    ClaimRecord conj = a;
    conj.kind = ClaimKind::conjecture;
    conj.status = ClaimStatus::fails;
    CHECK(!run_failed({conj}));
}

TEST_CASE("explore monotone") {
    auto row = explore_monotone("petersen", petersen(), 3, 4);
    CHECK(row.radius == 2);
    REQUIRE(row.sequence.size() == 2);
    CHECK(row.sequence[0] == 3);
    CHECK(row.sequence[1] == 1);
    CHECK(row.increases.empty());
    std::mt19937_64 rng(4);
    for (int i = 0; i < 5; ++i) {
        auto t = explore_monotone("tree", random_connected(9, 0.0, rng()), 4, 2);
        for (auto v : t.sequence) CHECK(v == 1);
    }
    std::vector<int> seq{3, 3, 1};
    auto r = explore_monotone("realizer", sequence_realizer(seq), 3, 4);
    REQUIRE(r.sequence.size() == 3);
    CHECK(r.sequence[0] == 3);
    CHECK(r.sequence[1] == 3);
    CHECK(r.sequence[2] == 1);
}

TEST_CASE("scan") {
    std::istringstream empty("");
    auto e = scan_graph6(empty, 2, 9);
    CHECK(e.records == 0);
    CHECK(!e.max_capture_time);

    std::istringstream mixed("C~\nBw\n!!bad\nCC\n");
    auto m = scan_graph6(mixed, 1, 4);
    CHECK(m.records == 4);
    CHECK(m.malformed == 1);
    CHECK(m.wrong_order == 1);
    CHECK(m.disconnected == 1);
    CHECK(m.cop_win == 1);

    std::ifstream seven(data_dir() + "/connected7.g6");
    REQUIRE(seven);
    auto rep = scan_graph6(seven, 1, 7, {}, 50);
    CHECK(rep.records == 853);
    CHECK(rep.max_capture_time == 3);
    CHECK(rep.spot_mismatches == 0);
    CHECK(rep.spot_checks > 10);
}
