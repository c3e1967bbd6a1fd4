// Compares the OpenMP kernels against their serial reference implementations:
// triangulation construction (parallel pair scan vs serial scan) and stretch
// measurement (parallel Dijkstra sweep vs Floyd-Warshall).

#include <chrono>
#include <cstdio>

#include "spanner4/delaunay.hpp"
#include "spanner4/io.hpp"
#include "spanner4/pipeline.hpp"
#include "spanner4/verify.hpp"

using namespace spanner4;
using Clock = std::chrono::steady_clock;

namespace {

template <class F>
double time_ms(F&& f) {
    const auto t0 = Clock::now();
    f();
    const auto t1 = Clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

} // namespace

int main() {
    std::printf("%-8s %-28s %12s %12s %9s\n", "n", "kernel", "parallel/ms", "serial/ms",
                "speedup");
    for (const NodeId n : {100, 200, 400, 800}) {
        const PointSet ps{gen_instance(n, 1234, kCoordBound).points};

        Triangulation tp, ts;
        const double par = time_ms([&] { tp = build_triangulation(ps); });
        const double ser = time_ms([&] { ts = build_triangulation_serial(ps); });
        if (tp.edges != ts.edges) {
            std::printf("builder mismatch at n=%d\n", n);
            return 1;
        }
        std::printf("%-8d %-28s %12.2f %12.2f %8.2fx\n", n, "delaunay build", par, ser,
                    ser / par);

        if (n <= 400) {
            const Pipeline p = run_pipeline(ps);
            const auto edges = p.h4.all_edges();
            double fast_val = 0, slow_val = 0;
            const double tf = time_ms([&] { fast_val = stretch_factor(ps, edges).max_ratio; });
            const double tsl = time_ms([&] { slow_val = stretch_factor_naive(ps, edges); });
            if (std::abs(fast_val - slow_val) > 1e-9 * slow_val) {
                std::printf("stretch mismatch at n=%d\n", n);
                return 1;
            }
            std::printf("%-8d %-28s %12.2f %12.2f %8.2fx\n", n, "h4 stretch (vs naive)", tf, tsl,
                        tsl / tf);
        }
    }
    return 0;
}
