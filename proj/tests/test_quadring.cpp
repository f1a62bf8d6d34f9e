#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rn19/quadring.hpp"

#include <random>

using namespace rn19;
using namespace rn19::quadring;

TEST_CASE("construction invariants")
{
    CHECK_THROWS_AS(QuadInt(0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(QuadInt(4, 1, 1), std::invalid_argument);  // not squarefree
    CHECK_THROWS_AS(HalfQuadInt(5, 1, 1), std::invalid_argument); // 5 != 3 mod 4
    CHECK_THROWS_AS(HalfQuadInt(19, 1, 2), std::invalid_argument); // parity
    CHECK(HalfQuadInt(19, 3, 1).norm() == 7);
    CHECK(QuadInt(19, 1, 2).norm() == 77);
}

TEST_CASE("mul fixed values")
{
    QuadInt one(19, 1, 0), z(19, -5, 7);
    CHECK(mul(one, z) == z);
    CHECK(mul(QuadInt(19, 1, 2), QuadInt(19, 1, 2)) == QuadInt(19, -75, 4));
    // conjugate product in Z[i] is the norm
    QuadInt g(1, 6, -5), gb(1, 6, 5);
    CHECK(mul(g, gb) == QuadInt(1, 61, 0));
    CHECK_THROWS_AS(mul(QuadInt(1, 1, 1), QuadInt(19, 1, 1)), std::invalid_argument);
}

TEST_CASE("pow fixed values")
{
    CHECK(pow(QuadInt(19, 1, 0), 13) == QuadInt(19, 1, 0));
    CHECK(pow(QuadInt(19, -1, 0), 13) == QuadInt(19, -1, 0));
    CHECK(pow(QuadInt(19, 1, 2), 3) == QuadInt(19, -227, -146));
    // imaginary part of (u + vi)^3 is v(3u^2 - v^2)
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        Integer u = (long)(rng() % 2001) - 1000, v = (long)(rng() % 2001) - 1000;
        CHECK(pow(QuadInt(1, u, v), 3).B == v * (3 * u * u - v * v));
    }
}

TEST_CASE("norm is multiplicative")
{
    std::mt19937_64 rng(42);
    for (long d : {1L, 19L}) {
        for (int i = 0; i < 1000; ++i) {
            QuadInt z1(d, (long)(rng() % 4001) - 2000, (long)(rng() % 4001) - 2000);
            QuadInt z2(d, (long)(rng() % 4001) - 2000, (long)(rng() % 4001) - 2000);
            CHECK(mul(z1, z2).norm() == z1.norm() * z2.norm());
        }
    }
}

TEST_CASE("half_pow fixed values")
{
    // ((3 + sqrt(-19))/2)^3 = (-36 + 2 sqrt(-19))/2 = -18 + sqrt(-19)
    CHECK(half_pow(HalfQuadInt(19, 3, 1), 3) == HalfQuadInt(19, -36, 2));
    CHECK(half_pow(HalfQuadInt(19, 2, 0), 5) == HalfQuadInt(19, 2, 0));
    CHECK(half_pow(HalfQuadInt(19, 3, 1), 0) == HalfQuadInt(19, 2, 0));
}

TEST_CASE("half_pow scaling identity and norm power")
{
    // (a + b sqrt(-d))^n = 2^(n-1) * (a' + b' sqrt(-d)) where (a',b') = half_pow coords
    std::mt19937_64 rng(77);
    for (int i = 0; i < 200; ++i) {
        long a = (long)(rng() % 41) - 20, b = (long)(rng() % 41) - 20;
        if (((a - b) % 2) != 0) ++a;
        unsigned long n = 1 + rng() % 6;
        HalfQuadInt z(19, a, b);
        HalfQuadInt zn = half_pow(z, n);
        QuadInt wn = pow(QuadInt(19, a, b), n);
        Integer scale = arith::ipow(2, n - 1);
        CHECK(wn.A == scale * zn.a);
        CHECK(wn.B == scale * zn.b);
        CHECK(zn.norm() == arith::ipow(z.norm(), n));
    }
}

TEST_CASE("closed-form sums match repeated multiplication")
{
    CHECK(real_part_sum(1, 0, 19, 7) == 1);
    CHECK(real_part_sum(1, 2, 19, 3) == -227);
    CHECK(imag_part_sum(1, 0, 19, 7) == 0);
    CHECK(imag_part_sum(1, 2, 19, 3) == -146);
    CHECK(real_part_sum(1, 2, 19, 5) % 19 == 1); // A^p mod 19 congruence

    // b(3a^2 - 19 b^2) shape at p = 3
    for (long a = -6; a <= 6; ++a)
        for (long b = -6; b <= 6; ++b)
            CHECK(imag_part_sum(a, b, 19, 3) == Integer(b) * (3 * a * a - 19 * b * b));

    for (long d : {1L, 19L})
        for (unsigned long p : {3UL, 5UL, 7UL, 11UL, 13UL})
            for (long A = -10; A <= 10; ++A)
                for (long B = -10; B <= 10; ++B) {
                    QuadInt zp = pow(QuadInt(d, A, B), p);
                    CHECK(real_part_sum(A, B, d, p) == zp.A);
                    CHECK(imag_part_sum(A, B, d, p) == zp.B);
                }
}

TEST_CASE("norm of pow reproduces 1 + 19 x^2 = (A^2 + 19 B^2)^p shape")
{
    for (long A : {1L, -1L})
        for (long B = -8; B <= 8; B += 2) {
            QuadInt z(19, A, B);
            QuadInt zp = pow(z, 5);
            CHECK(zp.norm() == arith::ipow(z.norm(), 5));
            CHECK(zp.A * zp.A + 19 * zp.B * zp.B == arith::ipow(A * A + 19 * B * B, 5));
        }
}

TEST_CASE("sum helpers reject bad exponents")
{
    CHECK_THROWS_AS(real_part_sum(1, 1, 19, 4), std::invalid_argument);
    CHECK_THROWS_AS(imag_part_sum(1, 1, 19, 9), std::invalid_argument);
}
