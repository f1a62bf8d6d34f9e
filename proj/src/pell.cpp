#include "rn19/pell.hpp"

#include <stdexcept>

namespace rn19::pell {

PellSolution fundamental_solution(const Integer& D)
{
    if (D < 2) throw std::invalid_argument("fundamental_solution: D must be >= 2");
    if (arith::is_perfect_square(D)) throw std::invalid_argument("fundamental_solution: D is a square");

    // Convergents h_i/k_i of the continued fraction of sqrt(D); the first
    // one satisfying h^2 - D k^2 = 1 is the fundamental solution.
    const Integer a0 = arith::isqrt(D);
    Integer m = 0, d = 1, a = a0;
    Integer h_prev = 1, h = a0, k_prev = 0, k = 1;
    const unsigned long cap = 100000;
    for (unsigned long i = 0; i < cap; ++i) {
        if (h * h - D * k * k == 1 && h >= 2 && k >= 1) return {D, h, k};
        m = d * a - m;
        d = (D - m * m) / d;
        a = (a0 + m) / d;
        Integer h_next = a * h + h_prev;
        Integer k_next = a * k + k_prev;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
    }
    throw std::runtime_error("fundamental_solution: iteration cap exceeded");
}

LucasSequence sequence(const Integer& D, std::size_t count)
{
    if (count < 1) throw std::invalid_argument("sequence: count must be >= 1");
    PellSolution fund = fundamental_solution(D);
    LucasSequence seq{D, {}};
    seq.terms.reserve(count);
    Integer X = fund.X, Y = fund.Y;
    for (std::size_t i = 1; i <= count; ++i) {
        seq.terms.push_back({i, X, Y});
        Integer Xn = fund.X * X + D * fund.Y * Y;
        Integer Yn = fund.X * Y + fund.Y * X;
        X = Xn;
        Y = Yn;
    }
    return seq;
}

std::vector<std::size_t> prime_power_scan(const LucasSequence& seq, const Integer& q)
{
    if (seq.terms.empty()) throw std::invalid_argument("prime_power_scan: empty sequence");
    if (q < 2 || !arith::is_probable_prime(q)) throw std::invalid_argument("prime_power_scan: q must be prime");
    std::vector<std::size_t> hits;
    for (const auto& t : seq.terms) {
        auto [base, exp] = arith::perfect_power_decompose(t.X);
        (void)exp;
        if (base == q) hits.push_back(t.index);
    }
    return hits;
}

std::optional<Integer> primitive_divisor(const LucasSequence& seq, std::size_t m)
{
    if (m < 1 || m > seq.terms.size()) throw std::out_of_range("primitive_divisor: index out of range");
    Integer rest = seq.terms[m - 1].X;
    for (std::size_t j = 1; j < m; ++j) {
        for (;;) {
            Integer g = arith::gcd(rest, seq.terms[j - 1].X);
            if (g == 1) break;
            rest /= g;
        }
    }
    if (rest == 1) return std::nullopt;
    return arith::smallest_prime_factor(rest);
}

} // namespace rn19::pell
