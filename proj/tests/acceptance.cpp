// Acceptance gate: one PASS/FAIL line per criterion, exact integer checks.
//
// Exit status is 0 when every criterion passes except those listed in
// kKnownFailures, whose expected values contradict a theorem the same
// suite verifies (see README, "Known failure").
#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "pursuit/harness.hpp"

using namespace pursuit;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::vector<std::string> claims;
    bool expect_skipped = false;  // passes when every claim reports skipped(budget)
};

const std::set<int> kKnownFailures = {2};

}  // namespace

int main(int argc, char** argv) {
    HarnessOptions opt;
    opt.catalog_dir = argc > 1 ? argv[1] : PURSUIT_TEST_DATA;

    const std::vector<Criterion> criteria = {
        {1, "hypercubes: c_{2,2}(Q_d) = 1,2,2,2,3 for d = 2..6", {"hypercube_speed2"}},
        {2, "grid evidence: c_{2,2}(P_n x P_n) = 3 for n = 7 (8, 9 stretch)", {"grid_three_cops"}},
        {3, "capture-time family: capt_2(G_n) = n-7, unique corner v_n", {"capture_family_speed2"}},
        {4, "subdivisions: c_{s,s}(K_n^(s)) = 2 and the sandwich bound", {"complete_subdivision", "subdivision_sandwich"}},
        {5, "graph powers: blocking solver equals classic solver on G^s", {"power_equivalence"}},
        {6, "strong-cycle gadget: k+1 up to speed s, then 1", {"strong_cycle_gadget"}},
        {7, "sequence realizer: [2,1] and [3,3,1]", {"realizer_sequence"}},
        {8, "projective planes: c_{2,2}(P) = 2, 2 cops lose on P x P, robber strategy", {"projective_plane_product"}},
        {9, "coprime tori: c^-(C3xC4) = c^-(C9xC10) = c_{2,2}(C9xC10) = 2", {"rel_prime", "two_cycles"}},
        {10, "grids: c_{2,2}(P5xP5) = 1, c_{2,2}(P5^3) = 2", {"large_grids_two_factors", "grid_3d_speed2"}},
        {11, "hypercube lower bound: 1 cop loses on Q9 at speed 2", {"q9_one_cop_escape"}},
        {12, "variant chain and speed-multiple monotonicity on random graphs",
         {"variant_chain", "speed_multiple_monotone"}},
        {13, "classic anchors: c(P3^2) = c(P3^3) = 2, capt*_1(7) = 3", {"regular_product_of_trees", "capt1_star_7"}},
        {14, "out of desk range: reported as skipped(budget)",
         {"realizer_long", "two_cycles_k2", "capt2_star_10", "asymptotic_statements"},
         true},
    };

    int unexpected = 0, passed = 0;
    for (const auto& cr : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        std::vector<ClaimRecord> recs;
        for (const auto& id : cr.claims) {
            recs.push_back(run_claim(id, opt));
            const auto& r = recs.back();
            ok = ok && (cr.expect_skipped ? r.status == ClaimStatus::skipped : r.status == ClaimStatus::holds);
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %d: %s  %s (%.1f s)\n", cr.number, ok ? "PASS" : "FAIL", cr.title.c_str(), secs);
        for (const auto& r : recs)
            if (r.status != (cr.expect_skipped ? ClaimStatus::skipped : ClaimStatus::holds))
                std::printf("  %s: %s\n    expected %s\n    computed %s\n", r.id.c_str(), to_string(r.status).c_str(),
                            r.expected.c_str(), r.computed.c_str());
        if (cr.number == 2) {
            auto tori = run_claim("torus_evidence", opt);
            std::printf("  info: %s\n", tori.computed.c_str());
            if (!ok) std::printf("  known failure: contradicts large_grids_two_factors (one cop wins on any product of two trees)\n");
        }
        std::fflush(stdout);
        if (ok) ++passed;
        else if (!kKnownFailures.count(cr.number)) ++unexpected;
    }
    std::printf("acceptance: %d/%zu criteria pass, %d unexpected failure(s)\n", passed, criteria.size(), unexpected);
    return unexpected == 0 ? 0 : 1;
}
