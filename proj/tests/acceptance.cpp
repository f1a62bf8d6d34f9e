// Acceptance suite: ten end-to-end criteria, each printed as one PASS/FAIL
// line. All arithmetic checks are exact; runtime limits are asserted too.

#include "rn19/cases.hpp"
#include "rn19/cli.hpp"
#include "rn19/pell.hpp"
#include "rn19/quadring.hpp"

#include "support/sieve_oracle.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

using namespace rn19;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void criterion(int number, const char* title, double time_limit_s,
               const std::function<bool(std::string&)>& body)
{
    std::string detail;
    bool ok = false;
    auto t0 = Clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    if (dt > time_limit_s) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("time limit exceeded");
    }
    if (!ok) ++failures;
    std::printf("%s %2d %-28s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number, title, dt,
                detail.empty() ? "" : "  -- ", detail.c_str());
    std::fflush(stdout);
}

std::vector<std::string> data_lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty() && line[0] != '#') out.push_back(line);
    return out;
}

search::SearchResult run_box(std::vector<Integer> ms, std::vector<unsigned long> ns)
{
    search::EquationInstance inst(19, std::move(ms), std::move(ns), arith::ipow(10, 12));
    return search::brute_force(inst);
}

} // namespace

int main()
{
    std::printf("acceptance suite: x^2 + 19^m = y^n toolkit\n");

    criterion(1, "known-solutions reproduction", 60.0, [](std::string& detail) {
        std::ostringstream out, err;
        int code = cli::run({"search", "--c", "19", "--m", "1", "--n", "3..10", "--bound",
                             "1e12"},
                            out, err);
        auto rows = data_lines(out.str());
        bool ok = code == 0 && rows.size() == 2 && rows[0] == "18  7  1  3  19" &&
                  rows[1] == "22434  55  1  5  19";
        if (!ok) detail = "rows: " + std::to_string(rows.size());
        auto lib = run_box({1}, {3, 4, 5, 6, 7, 8, 9, 10});
        ok = ok && lib.solutions.size() == 2 &&
             lib.solutions[0] == search::Solution{18, 7, 1, 3, 19} &&
             lib.solutions[1] == search::Solution{22434, 55, 1, 5, 19};
        return ok;
    });

    criterion(2, "theorem2 desk-scale search", 60.0, [](std::string& detail) {
        auto res = run_box({2, 4}, {3, 4, 5, 6, 7, 8, 9, 10});
        if (!res.solutions.empty()) {
            detail = "unexpected solutions: " + std::to_string(res.solutions.size());
            return false;
        }
        return true;
    });

    criterion(3, "theorem6 desk-scale search", 30.0, [](std::string& detail) {
        auto res = run_box({3, 5}, {3, 4});
        if (!res.solutions.empty()) {
            detail = "unexpected solutions: " + std::to_string(res.solutions.size());
            return false;
        }
        return true;
    });

    criterion(4, "lemma1 aux search", 30.0, [](std::string& detail) {
        auto hits = search::brute_force_aux(19, arith::ipow(10, 6),
                                            {3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
        if (!hits.empty()) {
            detail = "unexpected hits: " + std::to_string(hits.size());
            return false;
        }
        return true;
    });

    criterion(5, "Pell suite", 5.0, [](std::string& detail) {
        auto fund = pell::fundamental_solution(3);
        if (!(fund == pell::PellSolution{3, 2, 1})) {
            detail = "fundamental solution";
            return false;
        }
        auto seq = pell::sequence(3, 200);
        if (seq.terms[0].X != 2 || seq.terms[1].X != 7 || seq.terms[2].X != 26) {
            detail = "sequence prefix";
            return false;
        }
        for (std::size_t i = 2; i < seq.terms.size(); ++i)
            if (seq.terms[i].X != 4 * seq.terms[i - 1].X - seq.terms[i - 2].X) {
                detail = "recurrence";
                return false;
            }
        if (!pell::prime_power_scan(seq, 19).empty()) {
            detail = "scan found a power of 19";
            return false;
        }
        for (std::size_t m = 13; m <= 60; ++m)
            if (!pell::primitive_divisor(seq, m)) {
                detail = "no primitive divisor at m = " + std::to_string(m);
                return false;
            }
        return true;
    });

    criterion(6, "valuation lemma", 10.0, [](std::string& detail) {
        auto rep = cases::verify_valuation_lemma(50, 40);
        if (!rep.passed() || rep.instances == 0 || rep.sums_checked == 0) {
            detail = "violations: " + std::to_string(rep.violations.size()) +
                     ", degenerate sums: " + std::to_string(rep.bad_sums.size());
            return false;
        }
        return true;
    });

    criterion(7, "obstruction suite", 30.0, [](std::string& detail) {
        auto t1 = sieve::check(sieve::template_quartic_mod8());
        auto t2 = sieve::check(sieve::template_pell_mod3());
        auto t3 = sieve::mod19_square_obstruction();
        if (t1.solvable || t2.solvable || t3.solvable) {
            detail = "a named template came back solvable";
            return false;
        }
        if (t1.cases_enumerated == 0 || t2.cases_enumerated == 0 ||
            t3.cases_enumerated != 19) {
            detail = "evidence counts";
            return false;
        }
        std::mt19937_64 rng(20250808);
        for (int i = 0; i < 200; ++i) {
            auto spec = testsupport::random_spec(rng);
            auto ob = sieve::check(spec);
            if (ob.solvable != testsupport::brute_force_solvable(spec)) {
                detail = "oracle mismatch at spec " + std::to_string(i);
                return false;
            }
            if (ob.solvable && !testsupport::witness_valid(ob)) {
                detail = "invalid witness at spec " + std::to_string(i);
                return false;
            }
        }
        return true;
    });

    criterion(8, "family lift", 1.0, [](std::string& detail) {
        search::Solution a{22434, 55, 1, 5, 19};
        search::Solution b{2759646, 377, 1, 5, 341};
        for (unsigned long M : {1UL, 2UL, 3UL})
            if (!search::verify_solution(search::lift_family(a, M))) {
                detail = "19-family lift M = " + std::to_string(M);
                return false;
            }
        for (unsigned long M : {1UL, 2UL})
            if (!search::verify_solution(search::lift_family(b, M))) {
                detail = "341-family lift M = " + std::to_string(M);
                return false;
            }
        return true;
    });

    criterion(9, "quadring oracle equivalence", 30.0, [](std::string& detail) {
        for (long d : {1L, 19L})
            for (unsigned long p : {3UL, 5UL, 7UL, 11UL, 13UL})
                for (long A = -10; A <= 10; ++A)
                    for (long B = -10; B <= 10; ++B) {
                        auto zp = quadring::pow(quadring::QuadInt(d, A, B), p);
                        if (quadring::real_part_sum(A, B, d, p) != zp.A ||
                            quadring::imag_part_sum(A, B, d, p) != zp.B) {
                            detail = "sum/pow mismatch";
                            return false;
                        }
                    }
        auto cube = quadring::half_pow(quadring::HalfQuadInt(19, 3, 1), 3);
        bool coords = (cube.a == -36 && cube.b == 2) || (cube.a == 36 && cube.b == -2);
        if (!coords || abs(cube.a) / 2 != 18) {
            detail = "half_pow coordinates";
            return false;
        }
        return true;
    });

    criterion(10, "certificates close and are deterministic", 120.0, [](std::string& detail) {
        struct Job {
            const char* theorem;
            const char* k;
        };
        for (Job job : {Job{"lemma1", ""}, Job{"theorem2", "1..2"}, Job{"theorem6", "1..2"}}) {
            std::vector<std::string> args{"certify", "--theorem", job.theorem};
            if (*job.k) {
                args.push_back("--k");
                args.push_back(job.k);
            }
            std::ostringstream out1, err1, out2, err2;
            int c1 = cli::run(args, out1, err1);
            int c2 = cli::run(args, out2, err2);
            if (c1 != 0 || c2 != 0) {
                detail = std::string(job.theorem) + " exit code " + std::to_string(c1);
                return false;
            }
            if (out1.str() != out2.str()) {
                detail = std::string(job.theorem) + " output not byte-identical";
                return false;
            }
            auto tree = cert::parse(out1.str());
            auto v = cases::verify_tree(tree);
            if (!v.all_claims_verified || !v.closed) {
                detail = std::string(job.theorem) + " not fully verified";
                return false;
            }
        }
        return true;
    });

    std::printf("%d of 10 criteria passed\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}
