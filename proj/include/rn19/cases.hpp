#ifndef RN19_CASES_HPP
#define RN19_CASES_HPP

#include "rn19/cert.hpp"

#include <stdexcept>
#include <tuple>
#include <vector>

namespace rn19::cases {

/// Shapes the equation 19^(2u) X^2 + 19^(ec) = 19^(nv) Y^n can take after
/// cancelling 19^min(2u, nv, ec), with gcd(X, 19) = gcd(Y, 19) = 1.
enum class ReductionKind {
    Lebesgue,           // X^2 + 1 = Y^n (possibly with a 19-power absorbed into X)
    MixedPower,         // X^2 + 1 = 19^w Y^n, w > 0
    CoprimeEven,        // X^2 + 19^(2j) = Y^n, j >= 1
    CoprimeOdd,         // X^2 + 19^(2j+1) = Y^n, j >= 0
    AuxPell,            // 19 Z^2 + 1 = Y^n
    Mod19Contradiction, // two residual exponents positive: impossible mod 19
};

std::string to_string(ReductionKind k);

enum class MParity { Even, Odd }; // exponent of 19 in the equation: 2k or 2k+1

struct ReducedEquation {
    ReductionKind kind;
    unsigned long cancelled;  // g, the cancelled exponent of 19
    unsigned long x_residual; // exponent left on the X^2 term
    unsigned long y_residual; // exponent left on the Y^n term
    unsigned long c_residual; // exponent left on the 19-power term

    unsigned long mixed_w() const { return y_residual; }
    unsigned long coprime_j() const { return c_residual / 2; }
    bool operator==(const ReducedEquation&) const = default;
    auto operator<=>(const ReducedEquation&) const = default;
};

/// Cancels 19^min(2u, nv, ec) from (19^u X)^2 + 19^(ec) = 19^(nv) Y^n,
/// ec = 2k (even) or 2k + 1 (odd), and classifies the residue.
ReducedEquation classify_reduction(unsigned long u, unsigned long v, unsigned long k,
                                   unsigned long n, MParity parity);

struct ValuationLemmaReport {
    unsigned long p_max = 0;
    unsigned long B_max = 0;
    unsigned long long instances = 0; // (p, B, k) valuation comparisons
    std::vector<std::tuple<unsigned long, long, unsigned long>> violations;
    unsigned long long sums_checked = 0; // (p, B) direct sum evaluations
    std::vector<std::pair<unsigned long, long>> bad_sums; // sum hit 0 or -2
    bool passed() const { return violations.empty() && bad_sums.empty(); }
};

/// For every odd prime p <= p_max, every even B with 2 <= |B| <= B_max and
/// every 1 < k <= (p-1)/2, asserts
///   V2(C(p,2k) (19 B^2)^k) > V2(C(p,2) 19 B^2),
/// and that the sums S = sum_{k>=1} C(p,2k) (-19 B^2)^k avoid 0 and -2
/// (the two unit signs of the rank-one coordinate equation).
ValuationLemmaReport verify_valuation_lemma(unsigned long p_max, unsigned long B_max);

/// Divisor enumeration for 19^k = v (3u^2 - v^2), gcd(u, v) = 1 (the n = 3
/// Gaussian-integer route of the even-exponent equation).
cert::Node enumerate_divisor_cases_even(unsigned long k);

/// Divisor enumeration for 8 * 19^k = b (3a^2 - 19 b^2), a = b (mod 2)
/// (the n = 3 half-integer route of the odd-exponent equation). Both
/// coordinate parities are enumerated.
cert::Node enumerate_divisor_cases_odd(unsigned long k);

/// The n = 4 factor-pair argument for x^2 + 19^(2k+1) = y^4 with
/// gcd(x, y) = 1: parity preamble, then (y^2 - x)(y^2 + x) = 19^(2k+1).
cert::Node factor_pair_n4(unsigned long k);

enum class Theorem { Lemma1, Theorem2, Theorem6 };
std::string to_string(Theorem t);
Theorem theorem_from_string(const std::string& s);

struct BuildOptions {
    unsigned long descent_box = 4;        // (u, v) wander over [1, box]^2
    unsigned long n_max = 10;             // verified n scope
    unsigned long pell_scan_terms = 200;  // wider power-of-19 scan length
    Integer box_bound = Integer("10000000000");  // corroboration searches
    Integer aux_x_max = Integer(100000);         // aux corroboration
    Integer odd_pair_bound = Integer(199);       // odd coordinate desk box
    unsigned long valuation_p_max = 50;
    unsigned long valuation_B_max = 40;
};

struct CertificateError : std::runtime_error {
    explicit CertificateError(const std::string& what) : std::runtime_error(what) {}
};

/// Assembles and machine-verifies the full case tree for one theorem.
/// k_range is ignored for Lemma1. A branch that genuinely admits solutions
/// gets a verified witness leaf and flips the verdict to "open".
cert::CertificateTree build_certificate(Theorem t, const std::vector<unsigned long>& k_range,
                                        const BuildOptions& opt = {});

struct VerifyResult {
    bool all_claims_verified = false;
    bool closed = false;
    std::size_t leaves = 0;
    std::size_t citation_leaves = 0;
    std::vector<std::string> failures; // node paths whose claims fail re-checking
};

/// Re-checks every leaf claim with the owning module (sieve, pell, search,
/// quadring, arith) and recomputes the verdict.
VerifyResult verify_tree(const cert::CertificateTree& tree);

} // namespace rn19::cases

#endif
