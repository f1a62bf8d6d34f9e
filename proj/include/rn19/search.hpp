#ifndef RN19_SEARCH_HPP
#define RN19_SEARCH_HPP

#include "rn19/arith.hpp"

#include <vector>

namespace rn19::search {

/// Box description for the exhaustive search of x^2 + c^m = y^n:
/// every y^n up to `bound` is examined for each allowed (m, n).
struct EquationInstance {
    Integer c;
    std::vector<Integer> m_values;       // each >= 1, stored sorted unique
    std::vector<unsigned long> n_values; // each >= 3, stored sorted unique
    Integer bound;

    EquationInstance(Integer c_, std::vector<Integer> m_values_,
                     std::vector<unsigned long> n_values_, Integer bound_);
};

struct Solution {
    Integer x;
    Integer y;
    Integer m;
    unsigned long n = 0;
    Integer c;

    bool operator==(const Solution&) const = default;
};

/// Canonical output order: by (n, m, y, x).
bool solution_less(const Solution& a, const Solution& b);

/// x >= 1 hits, plus the x = 0 rows (c^m itself an exact n-th power)
/// reported separately as degenerate.
struct SearchResult {
    std::vector<Solution> solutions;
    std::vector<Solution> degenerate;
    bool operator==(const SearchResult&) const = default;
};

enum class Execution { Serial, Parallel };

/// Complete scan of the box: for each n, each y with y^n <= bound, each
/// allowed m with c^m <= y^n, tests y^n - c^m for squareness. The parallel
/// kernel partitions by y-interval; results are identical to the serial
/// reference (canonical sort after merge).
SearchResult brute_force(const EquationInstance& inst, Execution exec = Execution::Parallel);

struct AuxSolution {
    Integer x;
    Integer y;
    unsigned long n = 0;
    bool operator==(const AuxSolution&) const = default;
};

/// All (x, y, n) with q x^2 + 1 = y^n, 1 <= x <= x_max, by perfect-power
/// testing q x^2 + 1 for each x. Parallel kernel partitions by x-interval.
std::vector<AuxSolution> brute_force_aux(const Integer& q, const Integer& x_max,
                                         const std::vector<unsigned long>& n_values,
                                         Execution exec = Execution::Parallel);

/// Exact recheck of x^2 + c^m = y^n together with the domain invariants
/// x >= 0, y >= 1, m >= 1, n >= 3, c >= 2.
bool verify_solution(const Solution& s);

/// (x, y, m, n, c) -> (x c^(nM), y c^(2M), m + 2nM, n, c). The identity
/// (x c^(nM))^2 + c^(m+2nM) = c^(2nM) (x^2 + c^m) = (y c^(2M))^n keeps the
/// result exact for any verified base, so lifts compose additively in M.
Solution lift_family(const Solution& base, unsigned long M);

} // namespace rn19::search

#endif
