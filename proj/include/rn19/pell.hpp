#ifndef RN19_PELL_HPP
#define RN19_PELL_HPP

#include "rn19/arith.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace rn19::pell {

/// A solution of X^2 - D Y^2 = 1, D positive nonsquare.
struct PellSolution {
    Integer D;
    Integer X;
    Integer Y;
    bool operator==(const PellSolution&) const = default;
};

struct LucasTerm {
    std::size_t index; // 1-based
    Integer X;
    Integer Y;
    bool operator==(const LucasTerm&) const = default;
};

/// The X-values of X^2 - D Y^2 = 1 form a second-kind Lucas sequence:
/// X_m = 2 X_1 X_{m-1} - X_{m-2}.
struct LucasSequence {
    Integer D;
    std::vector<LucasTerm> terms;
};

/// Minimal solution with X >= 2, Y >= 1, from the periodic continued
/// fraction of sqrt(D). Iteration capped at 1e5 steps.
PellSolution fundamental_solution(const Integer& D);

/// First `count` solutions in increasing order, recurrence-seeded from the
/// fundamental solution.
LucasSequence sequence(const Integer& D, std::size_t count);

/// Indices m with X_m an exact power of the prime q (q^1 counts).
std::vector<std::size_t> prime_power_scan(const LucasSequence& seq, const Integer& q);

/// A prime dividing X_m but no earlier X_j (naive primitive divisor).
/// Returns the smallest such prime, or nothing if none exists.
std::optional<Integer> primitive_divisor(const LucasSequence& seq, std::size_t m);

} // namespace rn19::pell

#endif
