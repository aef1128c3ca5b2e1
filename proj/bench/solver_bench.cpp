// Serial reference versus the OpenMP level-synchronous kernel.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <omp.h>

#include <CLI11.hpp>

#include "pursuit/families.hpp"
#include "pursuit/solver.hpp"

using namespace pursuit;

namespace {

struct Case {
    std::string name;
    Graph g;
    GameConfig c;
};

double run(const Case& k, Kernel kernel, SolveResult& out, int reps) {
    SolveOptions o;
    o.kernel = kernel;
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        out = solve(k.g, k.c, o);
        best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"solver benchmark: serial vs parallel kernel"};
    int reps = 3;
    bool quick = false;
    app.add_option("--reps", reps, "repetitions per case (best time reported)");
    app.add_flag("--quick", quick, "small cases only");
    CLI11_PARSE(app, argc, argv);

    std::vector<Case> cases = {
        {"Q5 s=2 k=2", hypercube(5), speeds(2, 2, 2)},
        {"P7xP7 s=2 k=2", cartesian_product(path(7), path(7)), speeds(2, 2, 2)},
        {"C9xC10 semi k=2", cartesian_product(cycle(9), cycle(10)), speeds(1, 1, 2, Variant::semi_active)},
    };
    if (!quick) {
        cases.push_back({"Heawood^2 s=2 k=2", cartesian_product(incidence_graph_pg2(2), incidence_graph_pg2(2)), speeds(2, 2, 2)});
        cases.push_back({"Q6 s=2 k=3", hypercube(6), speeds(2, 2, 3)});
    }

    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-20s %12s %12s %12s %8s  %s\n", "case", "states", "serial ms", "parallel ms", "speedup", "agree");
    int bad = 0;
    for (const auto& k : cases) {
        SolveResult a, b;
        double ts = run(k, Kernel::serial, a, reps);
        double tp = run(k, Kernel::parallel, b, reps);
        bool agree = a.cop_win == b.cop_win && a.capture_time == b.capture_time && a.placement == b.placement;
        bad += !agree;
        std::printf("%-20s %12llu %12.1f %12.1f %8.2f  %s\n", k.name.c_str(),
                    static_cast<unsigned long long>(a.stats.states), ts, tp, ts / tp, agree ? "yes" : "NO");
    }
    return bad == 0 ? 0 : 1;
}
