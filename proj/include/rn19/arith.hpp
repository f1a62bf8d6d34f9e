#ifndef RN19_ARITH_HPP
#define RN19_ARITH_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace rn19 {

// Exact arbitrary-precision signed integer. All arithmetic in this project
// is exact; nothing is allowed to round.
using Integer = mpz_class;

namespace arith {

/// Floor of the square root. Newton iteration on integers with an exact
/// final adjustment; never touches floating point for the result.
/// Throws std::invalid_argument for n < 0.
Integer isqrt(const Integer& n);

/// Floor of the e-th root, e >= 1, n >= 0.
Integer iroot(const Integer& n, unsigned long e);

/// Word-size fast paths: floating point supplies only the first guess,
/// exact integer comparisons settle the result.
uint64_t isqrt_u64(uint64_t n);
uint64_t iroot_u64(uint64_t n, unsigned long e);

/// Returns the root r >= 0 with r*r == n, if n is a perfect square.
std::optional<Integer> is_perfect_square(const Integer& n);

/// Returns r >= 0 with r^e == n if n is an exact e-th power.
std::optional<Integer> nth_root_if_exact(const Integer& n, unsigned long e);

/// Decomposes n >= 2 as b^e with e maximal (e = 1 when n is not a proper
/// power). Throws for n < 2.
std::pair<Integer, unsigned long> perfect_power_decompose(const Integer& n);

/// n = p^v * unit with p not dividing unit. p >= 2, n != 0 required.
/// The unit keeps the sign of n.
std::pair<unsigned long, Integer> padic_valuation(const Integer& p, const Integer& n);

/// Exact binomial coefficient; requires 0 <= k <= n.
Integer binomial(const Integer& n, const Integer& k);

/// The set { s^2 mod m : 0 <= s < m } for m >= 2.
std::set<Integer> quadratic_residues(const Integer& m);

/// base^e by repeated squaring, e >= 0.
Integer ipow(const Integer& base, unsigned long e);

/// base^e mod m, m >= 1.
Integer powmod(const Integer& base, const Integer& e, const Integer& m);

Integer gcd(const Integer& a, const Integer& b);

/// BPSW/Miller-Rabin probable-prime test (desk-scale use).
bool is_probable_prime(const Integer& n);

/// Full factorization, trial division then deterministic Brent rho.
/// Returns (prime, exponent) pairs sorted by prime. Requires n >= 1.
std::vector<std::pair<Integer, unsigned long>> factorize(const Integer& n);

/// Smallest prime factor of n >= 2.
Integer smallest_prime_factor(const Integer& n);

/// Parses an exact nonnegative integer; accepts plain decimal and the
/// shorthand <mantissa>e<exp> (e.g. "1e12"), both converted exactly.
Integer parse_integer(const std::string& text);

} // namespace arith
} // namespace rn19

#endif
