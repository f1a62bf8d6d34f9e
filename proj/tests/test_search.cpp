#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rn19/search.hpp"

#include <random>

using namespace rn19;
using namespace rn19::search;

namespace {

// Independent oracle: triple loop over (n, m, x), testing x^2 + c^m for
// exact n-th power-ness. No y-loop, no sharing with the implementation.
SearchResult oracle_box(const EquationInstance& inst)
{
    SearchResult out;
    for (unsigned long n : inst.n_values) {
        for (const Integer& m : inst.m_values) {
            Integer cm = arith::ipow(inst.c, m.get_ui());
            if (cm > inst.bound) continue;
            for (Integer x = 0; x * x + cm <= inst.bound; ++x) {
                Integer t = x * x + cm;
                if (auto y = arith::nth_root_if_exact(t, n)) {
                    if (x == 0)
                        out.degenerate.push_back({x, *y, m, n, inst.c});
                    else
                        out.solutions.push_back({x, *y, m, n, inst.c});
                }
            }
        }
    }
    std::sort(out.solutions.begin(), out.solutions.end(), solution_less);
    std::sort(out.degenerate.begin(), out.degenerate.end(), solution_less);
    return out;
}

// Independent aux oracle: loop over (n, y) instead of x.
std::vector<AuxSolution> oracle_aux(const Integer& q, const Integer& x_max,
                                    const std::vector<unsigned long>& n_values)
{
    std::vector<AuxSolution> out;
    Integer t_max = q * x_max * x_max + 1;
    for (unsigned long n : n_values) {
        for (Integer y = 1; arith::ipow(y, n) <= t_max; ++y) {
            Integer yn = arith::ipow(y, n);
            if ((yn - 1) % q != 0) continue;
            if (auto x = arith::is_perfect_square((yn - 1) / q))
                if (*x >= 1 && *x <= x_max) out.push_back({*x, y, n});
        }
    }
    std::sort(out.begin(), out.end(), [](const AuxSolution& a, const AuxSolution& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.n < b.n;
    });
    return out;
}

} // namespace

TEST_CASE("instance validation")
{
    CHECK_THROWS_AS(EquationInstance(1, {1}, {3}, 100), std::invalid_argument);
    CHECK_THROWS_AS(EquationInstance(19, {}, {3}, 100), std::invalid_argument);
    CHECK_THROWS_AS(EquationInstance(19, {1}, {2}, 100), std::invalid_argument);
    CHECK_THROWS_AS(EquationInstance(19, {0}, {3}, 100), std::invalid_argument);
    CHECK_THROWS_AS(EquationInstance(19, {2}, {3}, 100), std::invalid_argument); // bound < 19^2
}

TEST_CASE("known solutions for c = 19, m = 1")
{
    EquationInstance inst(19, {1}, {3, 4, 5, 6, 7, 8, 9, 10}, arith::ipow(10, 9));
    auto res = brute_force(inst);
    REQUIRE(res.solutions.size() == 2);
    CHECK(res.solutions[0] == Solution{18, 7, 1, 3, 19});
    CHECK(res.solutions[1] == Solution{22434, 55, 1, 5, 19});
    CHECK(res.degenerate.empty());
}

TEST_CASE("degenerate rows are reported separately")
{
    EquationInstance inst(19, {4}, {4}, arith::ipow(10, 6));
    auto res = brute_force(inst);
    CHECK(res.solutions.empty());
    REQUIRE(res.degenerate.size() == 1);
    CHECK(res.degenerate[0] == Solution{0, 19, 4, 4, 19});
}

TEST_CASE("completeness against the triple-loop oracle on small boxes")
{
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 12; ++trial) {
        Integer c = 2 + (long)(rng() % 9);
        std::vector<Integer> ms;
        for (long m = 1; m <= 1 + (long)(rng() % 4); ++m) ms.push_back(m);
        std::vector<unsigned long> ns;
        for (unsigned long n = 3; n <= 3 + rng() % 5; ++n) ns.push_back(n);
        Integer bound = Integer(1000) + (long)(rng() % 999000);
        if (bound < arith::ipow(c, ms.front().get_ui())) continue;
        EquationInstance inst(c, ms, ns, bound);
        CHECK(brute_force(inst, Execution::Serial) == oracle_box(inst));
        CHECK(brute_force(inst, Execution::Parallel) == oracle_box(inst));
    }
}

TEST_CASE("serial and parallel kernels agree")
{
    EquationInstance inst(19, {1, 2, 3}, {3, 4, 5}, arith::ipow(10, 10));
    CHECK(brute_force(inst, Execution::Serial) == brute_force(inst, Execution::Parallel));

    std::vector<unsigned long> ns{3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
    CHECK(brute_force_aux(19, 20000, ns, Execution::Serial) ==
          brute_force_aux(19, 20000, ns, Execution::Parallel));
}

TEST_CASE("output is invariant under n range ordering")
{
    EquationInstance a(19, {1}, {3, 4, 5, 6, 7}, arith::ipow(10, 8));
    EquationInstance b(19, {1}, {7, 5, 3, 6, 4}, arith::ipow(10, 8));
    CHECK(brute_force(a) == brute_force(b));
}

TEST_CASE("aux search matches its oracle and known empties")
{
    std::vector<unsigned long> full{3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
    CHECK(brute_force_aux(19, 10000, full).empty());
    CHECK(brute_force_aux(2, 10, {3}).empty());
    CHECK(brute_force_aux(3, 10, {3}).empty());
    // an equation with hits: 2 x^2 + 1 = y^3 has x = 11 (y = ... not) -- use
    // q = 7: 7*3^2+1 = 64 = 4^3 = 2^6
    auto hits = brute_force_aux(7, 100, {3, 6});
    CHECK(hits == oracle_aux(7, 100, {3, 6}));
    // 7*1+1 = 2^3, 7*9+1 = 4^3 = 2^6, 7*1521+1 = 22^3
    std::vector<AuxSolution> expect{{1, 2, 3}, {3, 4, 3}, {3, 2, 6}, {39, 22, 3}};
    CHECK(hits == expect);

    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 8; ++trial) {
        Integer q = 2 + (long)(rng() % 30);
        Integer xm = 200 + (long)(rng() % 2000);
        std::vector<unsigned long> ns{3, 4, 5};
        CHECK(brute_force_aux(q, xm, ns) == oracle_aux(q, xm, ns));
    }
}

TEST_CASE("verify_solution")
{
    CHECK(verify_solution({18, 7, 1, 3, 19}));
    CHECK(verify_solution({22434, 55, 1, 5, 19}));
    CHECK(verify_solution({2759646, 377, 1, 5, 341}));
    CHECK(!verify_solution({18, 7, 1, 4, 19}));
    CHECK(!verify_solution({-18, 7, 1, 3, 19})); // x >= 0 invariant
    CHECK(!verify_solution({19, 7, 1, 3, 19}));
}

TEST_CASE("lift_family")
{
    Solution base{22434, 55, 1, 5, 19};
    auto l1 = lift_family(base, 1);
    CHECK(l1.x == Integer(22434) * arith::ipow(19, 5));
    CHECK(l1.y == Integer(55) * arith::ipow(19, 2));
    CHECK(l1.m == 11);
    CHECK(l1.n == 5);
    CHECK(verify_solution(l1));

    CHECK(lift_family(base, 0) == base);

    Solution alt{2759646, 377, 1, 5, 341};
    CHECK(verify_solution(lift_family(alt, 1)));
    CHECK(verify_solution(lift_family(alt, 2)));

    // exponent additivity
    for (unsigned long m1 : {0UL, 1UL, 2UL})
        for (unsigned long m2 : {0UL, 1UL, 3UL})
            CHECK(lift_family(lift_family(base, m1), m2) == lift_family(base, m1 + m2));

    CHECK_THROWS_AS(lift_family({18, 7, 1, 4, 19}, 1), std::invalid_argument);
}
