#include "rn19/quadring.hpp"

#include <stdexcept>

namespace rn19::quadring {

namespace {

bool squarefree_small(const Integer& d)
{
    Integer r = arith::isqrt(d);
    for (Integer p = 2; p <= r; ++p)
        if (d % (p * p) == 0) return false;
    return true;
}

void require_prime_odd(unsigned long p)
{
    if (p < 3 || p % 2 == 0 || !arith::is_probable_prime(Integer(p)))
        throw std::invalid_argument("expected an odd prime exponent");
}

} // namespace

QuadInt::QuadInt(Integer d_, Integer A_, Integer B_)
    : d(std::move(d_)), A(std::move(A_)), B(std::move(B_))
{
    if (d < 1) throw std::invalid_argument("QuadInt: d must be >= 1");
    if (!squarefree_small(d)) throw std::invalid_argument("QuadInt: d must be squarefree");
}

HalfQuadInt::HalfQuadInt(Integer d_, Integer a_, Integer b_)
    : d(std::move(d_)), a(std::move(a_)), b(std::move(b_))
{
    if (d < 1 || d % 4 != 3) throw std::invalid_argument("HalfQuadInt: need d = 3 (mod 4)");
    if (!squarefree_small(d)) throw std::invalid_argument("HalfQuadInt: d must be squarefree");
    if (((a - b) % 2) != 0) throw std::invalid_argument("HalfQuadInt: need a = b (mod 2)");
}

QuadInt mul(const QuadInt& z1, const QuadInt& z2)
{
    if (z1.d != z2.d) throw std::invalid_argument("mul: mismatched d");
    return {z1.d, z1.A * z2.A - z1.d * z1.B * z2.B, z1.A * z2.B + z2.A * z1.B};
}

QuadInt pow(const QuadInt& z, unsigned long n)
{
    QuadInt acc(z.d, 1, 0), base = z;
    while (n > 0) {
        if (n & 1) acc = mul(acc, base);
        n >>= 1;
        if (n) base = mul(base, base);
    }
    return acc;
}

HalfQuadInt half_mul(const HalfQuadInt& z1, const HalfQuadInt& z2)
{
    if (z1.d != z2.d) throw std::invalid_argument("half_mul: mismatched d");
    // (a1a2 - d b1b2) and (a1b2 + a2b1) are both even when a_i = b_i (mod 2)
    return {z1.d, (z1.a * z2.a - z1.d * z1.b * z2.b) / 2, (z1.a * z2.b + z2.a * z1.b) / 2};
}

HalfQuadInt half_pow(const HalfQuadInt& z, unsigned long n)
{
    HalfQuadInt acc(z.d, 2, 0), base = z; // (2 + 0*sqrt(-d))/2 = 1
    while (n > 0) {
        if (n & 1) acc = half_mul(acc, base);
        n >>= 1;
        if (n) base = half_mul(base, base);
    }
    return acc;
}

Integer real_part_sum(const Integer& A, const Integer& B, const Integer& d, unsigned long p)
{
    require_prime_odd(p);
    Integer sum = 0;
    Integer mB2 = -d * B * B;
    for (unsigned long k = 0; 2 * k <= p; ++k)
        sum += arith::binomial(p, 2 * k) * arith::ipow(A, p - 2 * k - 1) * arith::ipow(mB2, k);
    return A * sum;
}

Integer imag_part_sum(const Integer& A, const Integer& B, const Integer& d, unsigned long p)
{
    require_prime_odd(p);
    Integer sum = 0;
    Integer mB2 = -d * B * B;
    for (unsigned long k = 0; 2 * k + 1 <= p; ++k)
        sum += arith::binomial(p, 2 * k + 1) * arith::ipow(A, p - 2 * k - 1) * arith::ipow(mB2, k);
    return B * sum;
}

} // namespace rn19::quadring
