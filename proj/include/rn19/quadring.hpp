#ifndef RN19_QUADRING_HPP
#define RN19_QUADRING_HPP

#include "rn19/arith.hpp"

namespace rn19::quadring {

/// Element A + B*sqrt(-d) of Z[sqrt(-d)], d >= 1 squarefree.
/// d = 1 gives the Gaussian integers.
struct QuadInt {
    Integer d;
    Integer A;
    Integer B;

    QuadInt(Integer d_, Integer A_, Integer B_);

    Integer norm() const { return A * A + d * B * B; }
    bool operator==(const QuadInt&) const = default;
};

/// Element (a + b*sqrt(-d))/2 with a = b (mod 2), d = 3 (mod 4): the ring
/// of integers of Q(sqrt(-d)) in doubled coordinates, so everything stays
/// integral and the parity invariant is checkable directly.
struct HalfQuadInt {
    Integer d;
    Integer a;
    Integer b;

    HalfQuadInt(Integer d_, Integer a_, Integer b_);

    /// (a^2 + d*b^2)/4, always a nonnegative integer.
    Integer norm() const { return (a * a + d * b * b) / 4; }
    bool operator==(const HalfQuadInt&) const = default;
};

QuadInt mul(const QuadInt& z1, const QuadInt& z2);
QuadInt pow(const QuadInt& z, unsigned long n);

HalfQuadInt half_mul(const HalfQuadInt& z1, const HalfQuadInt& z2);
HalfQuadInt half_pow(const HalfQuadInt& z, unsigned long n);

/// Rational coordinate of (A + B*sqrt(-d))^p as the closed binomial sum
/// A * sum_k C(p,2k) A^(p-2k-1) (-d B^2)^k, p an odd prime. Cross-checks
/// pow(), which computes the same value by repeated multiplication.
Integer real_part_sum(const Integer& A, const Integer& B, const Integer& d, unsigned long p);

/// sqrt(-d) coordinate of (A + B*sqrt(-d))^p as
/// B * sum_k C(p,2k+1) A^(p-2k-1) (-d B^2)^k.
Integer imag_part_sum(const Integer& A, const Integer& B, const Integer& d, unsigned long p);

} // namespace rn19::quadring

#endif
