#include "rn19/search.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace rn19::search {

EquationInstance::EquationInstance(Integer c_, std::vector<Integer> m_values_,
                                   std::vector<unsigned long> n_values_, Integer bound_)
    : c(std::move(c_)), m_values(std::move(m_values_)), n_values(std::move(n_values_)),
      bound(std::move(bound_))
{
    if (c < 2) throw std::invalid_argument("EquationInstance: c must be >= 2");
    if (m_values.empty()) throw std::invalid_argument("EquationInstance: empty m range");
    if (n_values.empty()) throw std::invalid_argument("EquationInstance: empty n range");
    std::sort(m_values.begin(), m_values.end());
    m_values.erase(std::unique(m_values.begin(), m_values.end()), m_values.end());
    std::sort(n_values.begin(), n_values.end());
    n_values.erase(std::unique(n_values.begin(), n_values.end()), n_values.end());
    if (m_values.front() < 1) throw std::invalid_argument("EquationInstance: m must be >= 1");
    if (n_values.front() < 3) throw std::invalid_argument("EquationInstance: n must be >= 3");
    if (!m_values.front().fits_ulong_p())
        throw std::invalid_argument("EquationInstance: m out of range");
    if (bound < arith::ipow(c, m_values.front().get_ui()))
        throw std::invalid_argument("EquationInstance: bound below c^min(m)");
}

bool solution_less(const Solution& a, const Solution& b)
{
    if (a.n != b.n) return a.n < b.n;
    if (a.m != b.m) return a.m < b.m;
    if (a.y != b.y) return a.y < b.y;
    return a.x < b.x;
}

namespace {

struct YChunk {
    unsigned long n;
    Integer y_lo;
    Integer y_hi; // inclusive
};

void scan_chunk(const EquationInstance& inst, const std::vector<Integer>& powers,
                const YChunk& ch, std::vector<Solution>& sols, std::vector<Solution>& degen)
{
    for (Integer y = ch.y_lo; y <= ch.y_hi; ++y) {
        Integer yn = arith::ipow(y, ch.n);
        for (std::size_t i = 0; i < powers.size(); ++i) {
            if (powers[i] > yn) break;
            Integer diff = yn - powers[i];
            if (diff == 0) {
                degen.push_back({0, y, inst.m_values[i], ch.n, inst.c});
                continue;
            }
            if (auto r = arith::is_perfect_square(diff))
                sols.push_back({*r, y, inst.m_values[i], ch.n, inst.c});
        }
    }
}

void finalize(SearchResult& res)
{
    std::sort(res.solutions.begin(), res.solutions.end(), solution_less);
    res.solutions.erase(std::unique(res.solutions.begin(), res.solutions.end()),
                        res.solutions.end());
    std::sort(res.degenerate.begin(), res.degenerate.end(), solution_less);
    res.degenerate.erase(std::unique(res.degenerate.begin(), res.degenerate.end()),
                         res.degenerate.end());
}

} // namespace

SearchResult brute_force(const EquationInstance& inst, Execution exec)
{
    std::vector<Integer> powers; // c^m for allowed m, ascending, <= bound
    for (const Integer& m : inst.m_values) {
        Integer p = arith::ipow(inst.c, m.get_ui());
        if (p <= inst.bound) powers.push_back(p);
    }

    std::vector<YChunk> chunks;
    const long chunk_span = 4096;
    for (unsigned long n : inst.n_values) {
        Integer y_max = arith::iroot(inst.bound, n);
        for (Integer lo = 1; lo <= y_max; lo += chunk_span) {
            Integer hi = lo + (chunk_span - 1);
            if (hi > y_max) hi = y_max;
            chunks.push_back({n, lo, hi});
        }
    }

    SearchResult res;
    if (exec == Execution::Serial) {
        for (const auto& ch : chunks) scan_chunk(inst, powers, ch, res.solutions, res.degenerate);
    } else {
        std::vector<std::vector<Solution>> sols(chunks.size()), degen(chunks.size());
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < (long)chunks.size(); ++i)
            scan_chunk(inst, powers, chunks[i], sols[i], degen[i]);
        for (std::size_t i = 0; i < chunks.size(); ++i) {
            res.solutions.insert(res.solutions.end(), sols[i].begin(), sols[i].end());
            res.degenerate.insert(res.degenerate.end(), degen[i].begin(), degen[i].end());
        }
    }
    finalize(res);
    return res;
}

namespace {

// u64 kernel: valid when q * x_max^2 + 1 fits well inside 64 bits.
void aux_scan_u64(uint64_t q, uint64_t x_lo, uint64_t x_hi,
                  const std::vector<unsigned long>& n_values, std::vector<AuxSolution>& out)
{
    for (uint64_t x = x_lo; x <= x_hi; ++x) {
        uint64_t t = q * x * x + 1;
        for (unsigned long n : n_values) {
            uint64_t r = arith::iroot_u64(t, n);
            unsigned __int128 acc = 1;
            for (unsigned long i = 0; i < n; ++i) acc *= r;
            if (acc == t) out.push_back({Integer((unsigned long)x), Integer((unsigned long)r), n});
        }
    }
}

void aux_scan_mpz(const Integer& q, const Integer& x_lo, const Integer& x_hi,
                  const std::vector<unsigned long>& n_values, std::vector<AuxSolution>& out)
{
    for (Integer x = x_lo; x <= x_hi; ++x) {
        Integer t = q * x * x + 1;
        for (unsigned long n : n_values) {
            if (auto r = arith::nth_root_if_exact(t, n)) out.push_back({x, *r, n});
        }
    }
}

} // namespace

std::vector<AuxSolution> brute_force_aux(const Integer& q, const Integer& x_max,
                                         const std::vector<unsigned long>& n_values,
                                         Execution exec)
{
    if (q < 2) throw std::invalid_argument("brute_force_aux: q must be >= 2");
    for (unsigned long n : n_values)
        if (n < 3) throw std::invalid_argument("brute_force_aux: n must be >= 3");
    std::vector<AuxSolution> out;
    if (x_max < 1) return out;

    bool small = (q * x_max * x_max + 1) < (Integer(1) << 62);
    const uint64_t chunk_span = 8192;

    if (exec == Execution::Serial) {
        if (small)
            aux_scan_u64(q.get_ui(), 1, x_max.get_ui(), n_values, out);
        else
            aux_scan_mpz(q, 1, x_max, n_values, out);
    } else {
        if (small) {
            uint64_t xm = x_max.get_ui();
            std::size_t nchunks = (xm + chunk_span - 1) / chunk_span;
            std::vector<std::vector<AuxSolution>> parts(nchunks);
#pragma omp parallel for schedule(dynamic)
            for (long i = 0; i < (long)nchunks; ++i) {
                uint64_t lo = 1 + (uint64_t)i * chunk_span;
                uint64_t hi = std::min<uint64_t>(xm, lo + chunk_span - 1);
                aux_scan_u64(q.get_ui(), lo, hi, n_values, parts[i]);
            }
            for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
        } else {
            // chunked mpz fallback
            Integer nchunks_z = (x_max + (chunk_span - 1)) / chunk_span;
            std::size_t nchunks = nchunks_z.get_ui();
            std::vector<std::vector<AuxSolution>> parts(nchunks);
#pragma omp parallel for schedule(dynamic)
            for (long i = 0; i < (long)nchunks; ++i) {
                Integer lo = 1 + Integer((unsigned long)i) * chunk_span;
                Integer hi = lo + (chunk_span - 1);
                if (hi > x_max) hi = x_max;
                aux_scan_mpz(q, lo, hi, n_values, parts[i]);
            }
            for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
        }
    }
    std::sort(out.begin(), out.end(), [](const AuxSolution& a, const AuxSolution& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.n < b.n;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool verify_solution(const Solution& s)
{
    if (s.x < 0 || s.y < 1 || s.m < 1 || s.n < 3 || s.c < 2) return false;
    if (!s.m.fits_ulong_p()) return false;
    return s.x * s.x + arith::ipow(s.c, s.m.get_ui()) == arith::ipow(s.y, s.n);
}

Solution lift_family(const Solution& base, unsigned long M)
{
    if (!verify_solution(base)) throw std::invalid_argument("lift_family: base does not verify");
    Solution out = base;
    out.x = base.x * arith::ipow(base.c, base.n * M);
    out.y = base.y * arith::ipow(base.c, 2 * M);
    out.m = base.m + Integer(2 * M) * base.n;
    return out;
}

} // namespace rn19::search
