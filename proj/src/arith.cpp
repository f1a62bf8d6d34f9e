#include "rn19/arith.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace rn19::arith {

namespace {

bool fits_u64(const Integer& n)
{
    return n >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 63;
}

uint64_t to_u64(const Integer& n)
{
    return mpz_get_ui(n.get_mpz_t());
}

} // namespace

uint64_t isqrt_u64(uint64_t n)
{
    if (n == 0) return 0;
    uint64_t r = (uint64_t)std::sqrt((double)n);
    while (r > 0 && (unsigned __int128)r * r > n) --r;
    while ((unsigned __int128)(r + 1) * (r + 1) <= n) ++r;
    return r;
}

// r^e, capped: returns ~0 (sentinel) once the product exceeds `cap`.
uint64_t pow_capped_u64(uint64_t r, unsigned long e, uint64_t cap)
{
    unsigned __int128 acc = 1;
    for (unsigned long i = 0; i < e; ++i) {
        acc *= r;
        if (acc > cap) return UINT64_MAX;
    }
    return (uint64_t)acc;
}

uint64_t iroot_u64(uint64_t n, unsigned long e)
{
    if (n == 0) return 0;
    if (e == 1) return n;
    if (e == 2) return isqrt_u64(n);
    uint64_t r = (uint64_t)std::pow((double)n, 1.0 / (double)e);
    r += 2;
    while (r > 0 && pow_capped_u64(r, e, n) == UINT64_MAX) --r;
    while (pow_capped_u64(r + 1, e, n) != UINT64_MAX) ++r;
    return r;
}

Integer isqrt(const Integer& n)
{
    if (n < 0) throw std::invalid_argument("isqrt: negative input");
    if (n == 0) return 0;
    if (fits_u64(n)) return Integer(isqrt_u64(to_u64(n)));

    // Newton: x <- (x + n/x) / 2 from an over-estimate converges from above.
    size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    Integer x = Integer(1) << ((bits + 2) / 2);
    for (;;) {
        Integer y = (x + n / x) >> 1;
        if (y >= x) break;
        x = y;
    }
    while (x * x > n) --x;
    while ((x + 1) * (x + 1) <= n) ++x;
    return x;
}

Integer iroot(const Integer& n, unsigned long e)
{
    if (n < 0) throw std::invalid_argument("iroot: negative input");
    if (e == 0) throw std::invalid_argument("iroot: zero exponent");
    if (n == 0) return 0;
    if (e == 1) return n;
    if (fits_u64(n)) return Integer(iroot_u64(to_u64(n), e));

    size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    Integer x = Integer(1) << (bits / e + 1);
    for (;;) {
        Integer xe1 = ipow(x, e - 1);
        Integer y = ((e - 1) * x + n / xe1) / e;
        if (y >= x) break;
        x = y;
    }
    while (ipow(x, e) > n) --x;
    while (ipow(x + 1, e) <= n) ++x;
    return x;
}

std::optional<Integer> is_perfect_square(const Integer& n)
{
    if (n < 0) return std::nullopt;
    // quick residue filter: squares mod 64 are sparse
    unsigned long r64 = mpz_fdiv_ui(n.get_mpz_t(), 64);
    static const bool square_mod64[64] = {
        1, 1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0,
        0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0,
        0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0};
    if (!square_mod64[r64]) return std::nullopt;
    Integer r = isqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

std::optional<Integer> nth_root_if_exact(const Integer& n, unsigned long e)
{
    if (n < 0) return std::nullopt;
    Integer r = iroot(n, e);
    if (ipow(r, e) == n) return r;
    return std::nullopt;
}

std::pair<Integer, unsigned long> perfect_power_decompose(const Integer& n)
{
    if (n < 2) throw std::invalid_argument("perfect_power_decompose: n < 2");
    unsigned long e_max = mpz_sizeinbase(n.get_mpz_t(), 2) - 1;
    for (unsigned long e = e_max; e >= 2; --e) {
        if (auto r = nth_root_if_exact(n, e)) return {*r, e};
    }
    return {n, 1};
}

std::pair<unsigned long, Integer> padic_valuation(const Integer& p, const Integer& n)
{
    if (p < 2) throw std::invalid_argument("padic_valuation: p < 2");
    if (n == 0) throw std::invalid_argument("padic_valuation: n = 0");
    unsigned long v = 0;
    Integer unit = n, q, r;
    for (;;) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), unit.get_mpz_t(), p.get_mpz_t());
        if (r != 0) break;
        unit = q;
        ++v;
    }
    return {v, unit};
}

Integer binomial(const Integer& n, const Integer& k)
{
    if (k < 0 || n < 0 || k > n) throw std::invalid_argument("binomial: need 0 <= k <= n");
    Integer kk = std::min(Integer(k), Integer(n - k));
    Integer result = 1;
    for (Integer i = 1; i <= kk; ++i) {
        result *= n - kk + i;
        result /= i; // exact: result is C(n-kk+i, i) at each step
    }
    return result;
}

std::set<Integer> quadratic_residues(const Integer& m)
{
    if (m < 2) throw std::invalid_argument("quadratic_residues: m < 2");
    std::set<Integer> out;
    for (Integer s = 0; s < m; ++s) out.insert((s * s) % m);
    return out;
}

Integer ipow(const Integer& base, unsigned long e)
{
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

Integer powmod(const Integer& base, const Integer& e, const Integer& m)
{
    if (m < 1) throw std::invalid_argument("powmod: m < 1");
    Integer out;
    mpz_powm(out.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return out;
}

Integer gcd(const Integer& a, const Integer& b)
{
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

bool is_probable_prime(const Integer& n)
{
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

namespace {

// Deterministic Brent rho; n odd composite, not a prime power of a tiny prime.
Integer brent_rho(const Integer& n)
{
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, ys, q = 1, g = 1;
        unsigned long r = 1;
        const unsigned long block = 128;
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                unsigned long lim = std::min(block, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                g = gcd(q, n);
                k += block;
            }
            r *= 2;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                g = gcd(abs(x - ys), n);
            }
        }
        if (g != n) return g;
        // cycle collapsed for this c, retry with the next increment
    }
}

void factor_rec(Integer n, std::map<Integer, unsigned long>& out)
{
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    for (unsigned long p = 2; p < 100000; p = (p == 2 ? 3 : p + 2)) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
                out[Integer(p)] += 1;
                n /= p;
            }
            if (n == 1) return;
            if (is_probable_prime(n)) {
                ++out[n];
                return;
            }
        }
        if (Integer(p) * p > n) {
            if (n > 1) ++out[n];
            return;
        }
    }
    Integer d = brent_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace

std::vector<std::pair<Integer, unsigned long>> factorize(const Integer& n)
{
    if (n < 1) throw std::invalid_argument("factorize: n < 1");
    std::map<Integer, unsigned long> acc;
    factor_rec(n, acc);
    return {acc.begin(), acc.end()};
}

Integer smallest_prime_factor(const Integer& n)
{
    if (n < 2) throw std::invalid_argument("smallest_prime_factor: n < 2");
    return factorize(n).front().first;
}

Integer parse_integer(const std::string& text)
{
    auto epos = text.find_first_of("eE");
    if (epos == std::string::npos) {
        Integer v;
        if (mpz_set_str(v.get_mpz_t(), text.c_str(), 10) != 0 || v < 0)
            throw std::invalid_argument("parse_integer: bad integer '" + text + "'");
        return v;
    }
    std::string mant = text.substr(0, epos), exp = text.substr(epos + 1);
    Integer m, e;
    if (mant.empty() || exp.empty() || mpz_set_str(m.get_mpz_t(), mant.c_str(), 10) != 0 ||
        mpz_set_str(e.get_mpz_t(), exp.c_str(), 10) != 0 || m < 0 || e < 0 || !e.fits_ulong_p())
        throw std::invalid_argument("parse_integer: bad integer '" + text + "'");
    return m * ipow(10, e.get_ui());
}

} // namespace rn19::arith
