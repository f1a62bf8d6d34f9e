// Benchmark comparing the serial reference kernels against the OpenMP ones
// on the two search hot paths.

#include "rn19/search.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace rn19;
using Clock = std::chrono::steady_clock;

namespace {

double seconds(Clock::time_point a, Clock::time_point b)
{
    return std::chrono::duration<double>(b - a).count();
}

template <typename F>
double time_run(F&& f)
{
    auto t0 = Clock::now();
    f();
    return seconds(t0, Clock::now());
}

} // namespace

int main(int argc, char** argv)
{
    Integer aux_xmax = arith::ipow(10, 6);
    Integer box_bound = arith::ipow(10, 13);
    if (argc > 1) aux_xmax = arith::parse_integer(argv[1]);
    if (argc > 2) box_bound = arith::parse_integer(argv[2]);

#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled\n");
#endif

    std::vector<unsigned long> ns{3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
    std::vector<search::AuxSolution> aux_s, aux_p;
    double ts = time_run([&] { aux_s = search::brute_force_aux(19, aux_xmax, ns, search::Execution::Serial); });
    double tp = time_run([&] { aux_p = search::brute_force_aux(19, aux_xmax, ns, search::Execution::Parallel); });
    std::printf("aux search  19 x^2 + 1 = y^n, x <= %s\n", aux_xmax.get_str().c_str());
    std::printf("  serial   %.3f s   (%zu hits)\n", ts, aux_s.size());
    std::printf("  parallel %.3f s   (%zu hits)   speedup %.2fx   identical: %s\n", tp,
                aux_p.size(), ts / tp, aux_s == aux_p ? "yes" : "NO");

    search::EquationInstance inst(19, {1, 2, 3, 4, 5}, {3, 4, 5, 6, 7, 8, 9, 10}, box_bound);
    search::SearchResult box_s, box_p;
    double bs = time_run([&] { box_s = search::brute_force(inst, search::Execution::Serial); });
    double bp = time_run([&] { box_p = search::brute_force(inst, search::Execution::Parallel); });
    std::printf("box search  x^2 + 19^m = y^n, y^n <= %s, m <= 5\n", box_bound.get_str().c_str());
    std::printf("  serial   %.3f s   (%zu solutions)\n", bs, box_s.solutions.size());
    std::printf("  parallel %.3f s   (%zu solutions)   speedup %.2fx   identical: %s\n", bp,
                box_p.solutions.size(), bs / bp, box_s == box_p ? "yes" : "NO");
    return (aux_s == aux_p && box_s == box_p) ? 0 : 1;
}
