#include "rn19/cases.hpp"

#include "rn19/pell.hpp"
#include "rn19/quadring.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace rn19::cases {

using cert::Node;
using cert::NodeKind;
using cert::PowerSum;

std::string to_string(ReductionKind k)
{
    switch (k) {
        case ReductionKind::Lebesgue: return "X^2 + 1 = Y^n";
        case ReductionKind::MixedPower: return "X^2 + 1 = 19^w Y^n";
        case ReductionKind::CoprimeEven: return "X^2 + 19^(2j) = Y^n";
        case ReductionKind::CoprimeOdd: return "X^2 + 19^(2j+1) = Y^n";
        case ReductionKind::AuxPell: return "19 Z^2 + 1 = Y^n";
        case ReductionKind::Mod19Contradiction: return "impossible mod 19";
    }
    throw std::logic_error("bad reduction kind");
}

std::string to_string(Theorem t)
{
    switch (t) {
        case Theorem::Lemma1: return "lemma1";
        case Theorem::Theorem2: return "theorem2";
        case Theorem::Theorem6: return "theorem6";
    }
    throw std::logic_error("bad theorem");
}

Theorem theorem_from_string(const std::string& s)
{
    if (s == "lemma1") return Theorem::Lemma1;
    if (s == "theorem2") return Theorem::Theorem2;
    if (s == "theorem6") return Theorem::Theorem6;
    throw std::invalid_argument("unknown theorem: " + s);
}

ReducedEquation classify_reduction(unsigned long u, unsigned long v, unsigned long k,
                                   unsigned long n, MParity parity)
{
    if (u < 1 || v < 1 || k < 1 || n < 3)
        throw std::invalid_argument("classify_reduction: need u, v, k >= 1 and n >= 3");
    unsigned long ex = 2 * u;
    unsigned long ey = n * v;
    unsigned long ec = parity == MParity::Even ? 2 * k : 2 * k + 1;
    unsigned long g = std::min({ex, ey, ec});
    ReducedEquation r{ReductionKind::Lebesgue, g, ex - g, ey - g, ec - g};

    int positives = (r.x_residual > 0) + (r.y_residual > 0) + (r.c_residual > 0);
    if (positives >= 2) {
        r.kind = ReductionKind::Mod19Contradiction;
    } else if (positives == 0) {
        r.kind = ReductionKind::Lebesgue;
    } else if (r.x_residual > 0) {
        // even residual folds into X; odd leaves a single factor of 19
        r.kind = r.x_residual % 2 == 0 ? ReductionKind::Lebesgue : ReductionKind::AuxPell;
    } else if (r.y_residual > 0) {
        r.kind = ReductionKind::MixedPower;
    } else {
        r.kind = r.c_residual % 2 == 0 ? ReductionKind::CoprimeEven : ReductionKind::CoprimeOdd;
    }
    return r;
}

ValuationLemmaReport verify_valuation_lemma(unsigned long p_max, unsigned long B_max)
{
    if (p_max < 3 || B_max < 2)
        throw std::invalid_argument("verify_valuation_lemma: need p_max >= 3, B_max >= 2");
    ValuationLemmaReport rep;
    rep.p_max = p_max;
    rep.B_max = B_max;
    for (unsigned long p = 3; p <= p_max; p += 2) {
        if (!arith::is_probable_prime(Integer(p))) continue;
        for (long B = -(long)B_max; B <= (long)B_max; ++B) {
            if (B == 0 || B % 2 != 0) continue;
            Integer base = Integer(19) * B * B;
            auto v1 = arith::padic_valuation(2, arith::binomial(p, 2) * base).first;
            for (unsigned long k = 2; 2 * k <= p - 1; ++k) {
                Integer term = arith::binomial(p, 2 * k) * arith::ipow(base, k);
                auto vk = arith::padic_valuation(2, term).first;
                ++rep.instances;
                if (vk <= v1) rep.violations.emplace_back(p, B, k);
            }
            Integer sum = 0;
            for (unsigned long k = 1; 2 * k <= p - 1; ++k)
                sum += arith::binomial(p, 2 * k) * arith::ipow(-base, k);
            ++rep.sums_checked;
            if (sum == 0 || sum == -2) rep.bad_sums.emplace_back(p, B);
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// shared computations (used by the builders and by verify_tree)
// ---------------------------------------------------------------------------

namespace {

std::pair<std::vector<Integer>, std::vector<Integer>> power_residue_sets(
    const cert::PowerResidueClaim& c)
{
    const Integer& M = c.modulus;
    auto admissible = [&](const Integer& x, sieve::VarConstraint con) {
        if (con == sieve::VarConstraint::Even) return x % 2 == 0;
        if (con == sieve::VarConstraint::Odd) return x % 2 == 1;
        if (con == sieve::VarConstraint::Coprime) return arith::gcd(x, M) == 1;
        return true;
    };
    auto domain_span = [&](sieve::VarConstraint con) {
        bool parity = con == sieve::VarConstraint::Even || con == sieve::VarConstraint::Odd;
        return (parity && M % 2 == 1) ? 2 * M : M;
    };

    std::set<Integer> lhs;
    Integer lc = c.lhs_constant.value();
    for (Integer x = 0; x < domain_span(c.lhs_parity); ++x) {
        if (!admissible(x, c.lhs_parity)) continue;
        lhs.insert((((c.lhs_coeff * x * x + lc) % M) + M) % M);
    }
    std::set<Integer> rhs;
    for (Integer y = 0; y < domain_span(c.rhs_parity); ++y) {
        if (!admissible(y, c.rhs_parity)) continue;
        if (c.rhs_exponent > 0) {
            rhs.insert(arith::powmod(y, c.rhs_exponent, M));
        } else {
            auto [pre, per] = sieve::exponent_cycle(y % M, M);
            unsigned long window = 3 + pre.size() + per.size();
            for (unsigned long e = 3; e <= window; ++e) rhs.insert(arith::powmod(y, e, M));
        }
    }
    return {{lhs.begin(), lhs.end()}, {rhs.begin(), rhs.end()}};
}

unsigned long run_odd_pair_scan(unsigned long p, const Integer& bound)
{
    // |real((a + b sqrt(-19))^p)| = 2^p over odd 1 <= a, b <= bound; the
    // real coordinate is odd in a and even in b, so the positive quadrant
    // covers all signs.
    unsigned long hits = 0;
    Integer target = arith::ipow(2, p);
    for (Integer a = 1; a <= bound; a += 2)
        for (Integer b = 1; b <= bound; b += 2)
            if (abs(quadring::real_part_sum(a, b, 19, p)) == target) ++hits;
    return hits;
}

struct PellScanData {
    unsigned long terms_generated = 0;
    bool target_found = false;
    std::vector<unsigned long> scan_hits;
};

PellScanData run_pell_scan(const Integer& D, unsigned long target_exponent,
                           unsigned long scan_terms)
{
    PellScanData out;
    Integer target = arith::ipow(19, target_exponent);
    auto fund = pell::fundamental_solution(D);
    Integer X = fund.X, Y = fund.Y;
    for (;;) {
        ++out.terms_generated;
        if (X == target) out.target_found = true;
        if (X >= target) break;
        Integer Xn = fund.X * X + D * fund.Y * Y;
        Integer Yn = fund.X * Y + fund.Y * X;
        X = Xn;
        Y = Yn;
    }
    auto seq = pell::sequence(D, scan_terms);
    for (auto idx : pell::prime_power_scan(seq, 19)) out.scan_hits.push_back(idx);
    return out;
}

// ---------------------------------------------------------------------------
// leaf builders (each one runs its own check; failures abort the build)
// ---------------------------------------------------------------------------

PowerSum ps(std::initializer_list<std::pair<Integer, unsigned long>> terms)
{
    PowerSum out;
    for (auto& t : terms) out.terms.push_back(t);
    return out;
}

Node obstruction_leaf(std::string label, sieve::CongruenceSpec spec)
{
    auto ob = sieve::check(spec);
    if (ob.solvable)
        throw CertificateError("obstruction unexpectedly solvable: " + label);
    Node n;
    n.kind = NodeKind::ObstructionLeaf;
    n.label = std::move(label);
    n.claim = cert::CongruenceClaim{std::move(ob)};
    return n;
}

Node power_residue_leaf(std::string label, Integer modulus, Integer lhs_coeff,
                        PowerSum lhs_constant, sieve::VarConstraint lhs_parity,
                        sieve::VarConstraint rhs_parity, unsigned long rhs_exponent)
{
    cert::PowerResidueClaim c;
    c.modulus = std::move(modulus);
    c.lhs_coeff = std::move(lhs_coeff);
    c.lhs_constant = std::move(lhs_constant);
    c.lhs_parity = lhs_parity;
    c.rhs_parity = rhs_parity;
    c.rhs_exponent = rhs_exponent;
    auto [lhs, rhs] = power_residue_sets(c);
    c.lhs_set = lhs;
    c.rhs_set = rhs;
    for (const auto& v : lhs)
        if (std::binary_search(rhs.begin(), rhs.end(), v))
            throw CertificateError("power residue sets intersect: " + label);
    Node n;
    n.kind = NodeKind::ObstructionLeaf;
    n.label = std::move(label);
    n.claim = std::move(c);
    return n;
}

Node sign_leaf(std::string label, PowerSum expr)
{
    cert::SignClaim c;
    c.expr = std::move(expr);
    c.value = c.expr.value();
    if (c.value > 0) throw CertificateError("sign leaf with positive value: " + label);
    c.reason = c.value < 0 ? cert::SignClaim::Reason::NegativeValue
                           : cert::SignClaim::Reason::ForcesZero;
    Node n;
    n.kind = NodeKind::SignLeaf;
    n.label = std::move(label);
    n.claim = std::move(c);
    return n;
}

// Closes coeff * a^2 = N (N exactly evaluated): negative or zero right side,
// a divisibility failure (reported as the congruence mod coeff), or a
// non-square quotient. A square quotient would mean real solutions.
Node close_quadratic(const std::string& label, const Integer& coeff, PowerSum N,
                     sieve::VarConstraint var_constraint = sieve::VarConstraint::None)
{
    Integer value = N.value();
    if (value <= 0) return sign_leaf(label, std::move(N));
    if (value % coeff != 0) {
        sieve::CongruenceSpec spec;
        spec.modulus = coeff;
        spec.vars = {{"a", coeff, 2, var_constraint}};
        spec.constant = -value;
        spec.note = label;
        return obstruction_leaf(label + " [mod " + coeff.get_str() + "]", std::move(spec));
    }
    cert::NonsquareClaim c;
    c.coefficient = coeff;
    c.numerator = std::move(N);
    c.quotient = value / coeff;
    c.root_floor = arith::isqrt(c.quotient);
    if (c.root_floor * c.root_floor == c.quotient)
        throw CertificateError("quadratic closure found a square: " + label);
    Node n;
    n.kind = NodeKind::BoundedSearchLeaf;
    n.label = label + " [exact evaluation]";
    n.claim = std::move(c);
    return n;
}

Node mod19_branch_leaf(std::string label, const Integer& rhs, const std::string& var)
{
    sieve::CongruenceSpec spec;
    spec.modulus = 19;
    spec.vars = {{var, 3, 2, sieve::VarConstraint::Coprime}};
    spec.constant = -rhs;
    spec.note = label;
    return obstruction_leaf(std::move(label), std::move(spec));
}

Node pell_scan_leaf(unsigned long k, unsigned long scan_terms)
{
    cert::PellScanClaim c;
    c.D = 3;
    c.target_exponent = k;
    c.scan_terms = scan_terms;
    auto data = run_pell_scan(c.D, k, scan_terms);
    c.terms_generated = data.terms_generated;
    c.target_found = data.target_found;
    c.scan_hits = data.scan_hits;
    if (c.target_found || !c.scan_hits.empty())
        throw CertificateError("Pell scan found a power of 19");
    Node n;
    n.kind = NodeKind::PellScanLeaf;
    n.label = "no X_m equals 19^" + std::to_string(k) + " in X^2 - 3 Y^2 = 1";
    n.claim = std::move(c);
    return n;
}

Node citation_leaf(std::string tag, std::string statement, bool negative)
{
    cert::CitationClaim c;
    c.tag = std::move(tag);
    c.statement = std::move(statement);
    c.asserts_no_solutions = negative;
    Node n;
    n.kind = NodeKind::CitationLeaf;
    n.label = "cited result: " + c.tag;
    n.claim = std::move(c);
    return n;
}

Node aux_search_leaf(std::string label, Integer q, Integer x_max,
                     std::vector<unsigned long> n_values)
{
    cert::AuxSearchClaim c;
    c.q = std::move(q);
    c.x_max = std::move(x_max);
    c.n_values = std::move(n_values);
    c.hits = search::brute_force_aux(c.q, c.x_max, c.n_values).size();
    if (c.hits != 0) throw CertificateError("aux corroboration search found hits: " + label);
    Node n;
    n.kind = NodeKind::BoundedSearchLeaf;
    n.label = std::move(label);
    n.claim = std::move(c);
    return n;
}

Node box_search_leaf(std::string label, Integer c_, std::vector<Integer> m_values,
                     std::vector<unsigned long> n_values, Integer bound)
{
    cert::BoxSearchClaim c;
    c.c = std::move(c_);
    c.m_values = std::move(m_values);
    c.n_values = std::move(n_values);
    c.bound = std::move(bound);
    search::EquationInstance inst(c.c, c.m_values, c.n_values, c.bound);
    c.hits = search::brute_force(inst).solutions.size();
    if (c.hits != 0) throw CertificateError("box corroboration search found hits: " + label);
    Node n;
    n.kind = NodeKind::BoundedSearchLeaf;
    n.label = std::move(label);
    n.claim = std::move(c);
    return n;
}

Node odd_pair_leaf(unsigned long p, const Integer& bound)
{
    cert::OddPairClaim c;
    c.p = p;
    c.bound = bound;
    c.hits = run_odd_pair_scan(p, bound);
    if (c.hits != 0) throw CertificateError("odd coordinate pair scan found hits");
    Node n;
    n.kind = NodeKind::BoundedSearchLeaf;
    n.label = "no odd |a|,|b| <= " + bound.get_str() + " solve |real((a+b sqrt(-19))^" +
              std::to_string(p) + ")| = 2^" + std::to_string(p);
    n.claim = std::move(c);
    return n;
}

Node valuation_lemma_leaf(unsigned long p_max, unsigned long B_max)
{
    auto rep = verify_valuation_lemma(p_max, B_max);
    if (!rep.passed()) throw CertificateError("valuation lemma report has violations");
    cert::ValuationLemmaClaim c;
    c.p_max = rep.p_max;
    c.B_max = rep.B_max;
    c.instances = rep.instances;
    c.violations = rep.violations.size();
    c.zero_sums = rep.bad_sums.size();
    Node n;
    n.kind = NodeKind::BoundedSearchLeaf;
    n.label = "k = 1 term uniquely minimizes the 2-adic valuation; direct sums avoid 0 and -2";
    n.claim = std::move(c);
    return n;
}

Node witness_leaf(unsigned long k)
{
    // the descent neck x = 19^k X, y = 19^(2k/3) Y over X^2 + 19 = Y^3
    search::Solution s;
    s.c = 19;
    s.n = 3;
    s.m = Integer(2 * k + 1);
    s.x = Integer(18) * arith::ipow(19, k);
    s.y = Integer(7) * arith::ipow(19, 2 * k / 3);
    if (!search::verify_solution(s))
        throw CertificateError("witness construction failed to verify");
    cert::WitnessClaim c;
    c.solution = s;
    c.note = "lift of the classical solution 18^2 + 19 = 7^3 through the descent; "
             "this branch admits genuine solutions";
    Node n;
    n.kind = NodeKind::WitnessLeaf;
    n.label = "verified solution: x = 18*19^" + std::to_string(k) + ", y = 7*19^" +
              std::to_string(2 * k / 3);
    n.claim = std::move(c);
    return n;
}

Node case_split(std::string label, std::vector<Node> children)
{
    Node n;
    n.kind = NodeKind::CaseSplit;
    n.label = std::move(label);
    n.children = std::move(children);
    return n;
}

// Corroboration boxes need room above c^max(m), or the search is vacuous.
Integer corroboration_bound(const BuildOptions& opt, const std::vector<Integer>& ms)
{
    Integer need = arith::ipow(19, ms.back().get_ui()) * 1024;
    return std::max(opt.box_bound, need);
}

std::string pow19(unsigned long e) { return "19^" + std::to_string(e); }

} // namespace

// ---------------------------------------------------------------------------
// divisor enumerations and the factor-pair argument
// ---------------------------------------------------------------------------

cert::Node enumerate_divisor_cases_even(unsigned long k)
{
    if (k < 1) throw std::invalid_argument("enumerate_divisor_cases_even: k >= 1");
    Node root;
    root.kind = NodeKind::DivisorEnumeration;
    root.label = pow19(k) + " = v (3u^2 - v^2), gcd(u, v) = 1: v ranges over the divisors of " +
                 pow19(k);

    root.children.push_back(
        close_quadratic("v = 1: 3u^2 = 1 + " + pow19(k), 3, ps({{1, 0}, {1, k}})));
    root.children.push_back(sign_leaf("v = -1: 3u^2 = 1 - " + pow19(k), ps({{1, 0}, {-1, k}})));
    for (unsigned long j = 1; j < k; ++j) {
        root.children.push_back(mod19_branch_leaf(
            "v = " + pow19(j) + ": 3u^2 = " + pow19(2 * j) + " + " + pow19(k - j) +
                ", 19 does not divide u",
            arith::ipow(19, 2 * j) + arith::ipow(19, k - j), "u"));
        root.children.push_back(mod19_branch_leaf(
            "v = -" + pow19(j) + ": 3u^2 = " + pow19(2 * j) + " - " + pow19(k - j) +
                ", 19 does not divide u",
            arith::ipow(19, 2 * j) - arith::ipow(19, k - j), "u"));
    }
    root.children.push_back(
        close_quadratic("v = " + pow19(k) + ": 3u^2 = 1 + " + pow19(2 * k), 3,
                        ps({{1, 0}, {1, 2 * k}})));

    Node pellbranch = case_split(
        "v = -" + pow19(k) + ": (" + pow19(k) + ")^2 - 3u^2 = 1, a Pell X-value question",
        {pell_scan_leaf(k, 200),
         citation_leaf("bhv-primitive-divisor",
                       "every term X_m with m > 12 of the X^2 - 3Y^2 = 1 sequence has a "
                       "primitive prime divisor, so no X_m is a pure power of 19 beyond the "
                       "scanned range",
                       true)});
    root.children.push_back(std::move(pellbranch));
    return root;
}

cert::Node enumerate_divisor_cases_odd(unsigned long k)
{
    if (k < 1) throw std::invalid_argument("enumerate_divisor_cases_odd: k >= 1");
    Node root;
    root.kind = NodeKind::DivisorEnumeration;
    root.label = "8*" + pow19(k) + " = b (3a^2 - 19 b^2), a = b (mod 2): divisor cases for b";

    std::vector<Node> odd_children;
    odd_children.push_back(close_quadratic("b = 1: 3a^2 = 19 + 8*" + pow19(k), 3,
                                           ps({{19, 0}, {8, k}})));
    odd_children.push_back(
        sign_leaf("b = -1: 3a^2 = 19 - 8*" + pow19(k), ps({{19, 0}, {-8, k}})));
    for (unsigned long lam = 1; lam < k; ++lam) {
        odd_children.push_back(mod19_branch_leaf(
            "b = " + pow19(lam) + ": 3a^2 = " + pow19(2 * lam + 1) + " + 8*" + pow19(k - lam) +
                ", 19 does not divide a",
            arith::ipow(19, 2 * lam + 1) + 8 * arith::ipow(19, k - lam), "a"));
        odd_children.push_back(mod19_branch_leaf(
            "b = -" + pow19(lam) + ": 3a^2 = " + pow19(2 * lam + 1) + " - 8*" + pow19(k - lam) +
                ", 19 does not divide a",
            arith::ipow(19, 2 * lam + 1) - 8 * arith::ipow(19, k - lam), "a"));
    }
    odd_children.push_back(case_split(
        "b = +-" + pow19(k) + ": +-8 = 3a^2 - " + pow19(2 * k + 1),
        {close_quadratic("sign +: 3a^2 = " + pow19(2 * k + 1) + " + 8", 3,
                         ps({{1, 2 * k + 1}, {8, 0}})),
         close_quadratic("sign -: 3a^2 = " + pow19(2 * k + 1) + " - 8", 3,
                         ps({{1, 2 * k + 1}, {-8, 0}}))}));
    root.children.push_back(case_split(
        "a, b both odd: b is an odd divisor of 8*" + pow19(k), std::move(odd_children)));

    std::vector<Node> even_children;
    even_children.push_back(close_quadratic("B = 1: 3A^2 = " + pow19(k) + " + 19", 3,
                                            ps({{1, k}, {19, 0}})));
    even_children.push_back(
        sign_leaf("B = -1: 3A^2 = 19 - " + pow19(k) +
                      (k == 1 ? " = 0, forcing A = 0 and x = 0 (not positive)" : ""),
                  ps({{19, 0}, {-1, k}})));
    for (unsigned long j = 1; j < k; ++j) {
        even_children.push_back(mod19_branch_leaf(
            "B = " + pow19(j) + ": 3A^2 = " + pow19(2 * j + 1) + " + " + pow19(k - j) +
                ", 19 does not divide A",
            arith::ipow(19, 2 * j + 1) + arith::ipow(19, k - j), "A"));
        even_children.push_back(mod19_branch_leaf(
            "B = -" + pow19(j) + ": 3A^2 = " + pow19(2 * j + 1) + " - " + pow19(k - j) +
                ", 19 does not divide A",
            arith::ipow(19, 2 * j + 1) - arith::ipow(19, k - j), "A"));
    }
    even_children.push_back(close_quadratic(
        "B = " + pow19(k) + ": 3A^2 = " + pow19(2 * k + 1) + " + 1", 3,
        ps({{1, 2 * k + 1}, {1, 0}})));
    {
        sieve::CongruenceSpec spec;
        spec.modulus = 4;
        spec.vars = {{"A", 3, 2, sieve::VarConstraint::None}};
        spec.constant = -(arith::ipow(19, 2 * k + 1) - 1);
        spec.note = "3A^2 = " + pow19(2 * k + 1) + " - 1 (mod 4)";
        even_children.push_back(obstruction_leaf(
            "B = -" + pow19(k) + ": 3A^2 = " + pow19(2 * k + 1) + " - 1 [mod 4]",
            std::move(spec)));
    }
    root.children.push_back(case_split(
        "a, b both even: (a, b) = (2A, 2B) gives " + pow19(k) +
            " = B (3A^2 - 19 B^2), B an odd divisor of " + pow19(k),
        std::move(even_children)));
    return root;
}

cert::Node factor_pair_n4(unsigned long k)
{
    if (k < 1) throw std::invalid_argument("factor_pair_n4: k >= 1");
    Node root = case_split("n = 4: x^2 + " + pow19(2 * k + 1) + " = y^4, gcd(x, y) = 1", {});

    root.children.push_back(power_residue_leaf(
        "y even is impossible: x^2 + " + pow19(2 * k + 1) + " = 3 calls for x^2 = 5 (mod 8)",
        8, 1, ps({{1, 2 * k + 1}}), sieve::VarConstraint::None, sieve::VarConstraint::Even, 4));
    root.children.push_back(power_residue_leaf(
        "x odd is impossible mod 8", 8, 1, ps({{1, 2 * k + 1}}), sieve::VarConstraint::Odd,
        sieve::VarConstraint::None, 4));

    Node divisors;
    divisors.kind = NodeKind::DivisorEnumeration;
    divisors.label = pow19(2 * k + 1) + " = (y^2 - x)(y^2 + x), both factors powers of 19";
    {
        sieve::CongruenceSpec spec;
        spec.modulus = 19;
        spec.vars = {{"y", 2, 2, sieve::VarConstraint::Coprime}};
        spec.note = "19 dividing both factors forces 19 | 2y^2";
        divisors.children.push_back(obstruction_leaf(
            "both factors divisible by 19: 2y^2 = 0 (mod 19) with 19 not dividing y",
            std::move(spec)));
    }
    divisors.children.push_back(case_split(
        "y^2 - x = 1 and y^2 + x = " + pow19(2 * k + 1) + ": 2y^2 = " + pow19(2 * k + 1) + " + 1",
        {obstruction_leaf("2y^2 = 19^t + 1 (mod 8) with t odd is unsolvable",
                          sieve::template_quartic_mod8()),
         close_quadratic("direct check: 2y^2 = " + pow19(2 * k + 1) + " + 1", 2,
                         ps({{1, 2 * k + 1}, {1, 0}}))}));
    root.children.push_back(std::move(divisors));
    return root;
}

// ---------------------------------------------------------------------------
// descent machinery and per-theorem assembly
// ---------------------------------------------------------------------------

namespace {

Node lemma1_subtree(const BuildOptions& opt);

Node claim_even_coprime_subtree(unsigned long k)
{
    return case_split(
        "gcd(x, 19) = 1: x even, y odd, Gaussian factorization applies",
        {power_residue_leaf("x odd is impossible mod 8", 8, 1, ps({{1, 2 * k}}),
                            sieve::VarConstraint::Odd, sieve::VarConstraint::None, 3),
         power_residue_leaf("y even is impossible mod 8", 8, 1, ps({{1, 2 * k}}),
                            sieve::VarConstraint::None, sieve::VarConstraint::Even, 3),
         enumerate_divisor_cases_even(k)});
}

Node claim_odd_coprime_subtree(unsigned long k)
{
    return case_split(
        "gcd(x, 19) = 1: cube factorization in the ring of integers of Q(sqrt(-19))",
        {citation_leaf("class-number-h1",
                       "Q(sqrt(-19)) has class number 1 and units +-1, so "
                       "x + 19^k sqrt(-19) = +-((a + b sqrt(-19))/2)^3 with a = b (mod 2)",
                       true),
         enumerate_divisor_cases_odd(k)});
}

std::string cells_label(const std::vector<std::pair<unsigned long, unsigned long>>& cells)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) os << ' ';
        os << '(' << cells[i].first << ',' << cells[i].second << ')';
    }
    return os.str();
}

Node reduction_group_node(const ReducedEquation& red,
                          const std::vector<std::pair<unsigned long, unsigned long>>& cells,
                          unsigned long k, unsigned long n, const BuildOptions& opt,
                          const Node& lemma1_copy)
{
    std::ostringstream label;
    if (red.kind == ReductionKind::Lebesgue || red.kind == ReductionKind::AuxPell)
        label << to_string(red.kind) << " after cancellation; cells " << cells_label(cells);
    else
        label << "cancel 19^" << red.cancelled << ", residuals (" << red.x_residual << ", "
              << red.y_residual << ", " << red.c_residual << "): " << to_string(red.kind)
              << "; cells " << cells_label(cells);
    std::vector<Node> children;

    switch (red.kind) {
        case ReductionKind::Lebesgue:
            children.push_back(citation_leaf(
                "lebesgue", "x^2 + 1 = y^m with m >= 3 has no positive integer solutions",
                true));
            break;
        case ReductionKind::MixedPower: {
            sieve::CongruenceSpec spec;
            spec.modulus = 19;
            spec.vars = {{"X", 1, 2, sieve::VarConstraint::Coprime},
                         {"Y", -arith::ipow(19, red.mixed_w()), (unsigned)n,
                          sieve::VarConstraint::Coprime}};
            spec.constant = 1;
            spec.note = "X^2 + 1 = 19^" + std::to_string(red.mixed_w()) + " Y^" +
                        std::to_string(n) + " (mod 19)";
            children.push_back(
                obstruction_leaf("X^2 + 1 = 0 (mod 19) is unsolvable", std::move(spec)));
            break;
        }
        case ReductionKind::Mod19Contradiction: {
            sieve::CongruenceSpec spec;
            spec.modulus = 19;
            spec.vars = {{"X", arith::ipow(19, red.x_residual), 2, sieve::VarConstraint::Coprime},
                         {"Y", -arith::ipow(19, red.y_residual), (unsigned)n,
                          sieve::VarConstraint::Coprime}};
            spec.constant = arith::ipow(19, red.c_residual);
            spec.note = "19^" + std::to_string(red.x_residual) + " X^2 + 19^" +
                        std::to_string(red.c_residual) + " = 19^" +
                        std::to_string(red.y_residual) + " Y^" + std::to_string(n) + " (mod 19)";
            children.push_back(obstruction_leaf(
                "two of three terms vanish mod 19, the third cannot", std::move(spec)));
            break;
        }
        case ReductionKind::AuxPell: {
            Node sub = lemma1_copy;
            sub.label = "19 Z^2 + 1 = Y^" + std::to_string(n) +
                        " with Z = 19^((a-1)/2) X: no positive solutions";
            children.push_back(std::move(sub));
            break;
        }
        case ReductionKind::CoprimeEven: {
            unsigned long j = red.coprime_j();
            if (n == 3) {
                children.push_back(claim_even_coprime_subtree(j));
            } else if (n % 2 == 0) {
                children.push_back(citation_leaf(
                    "arif-muriefah-even",
                    "x^2 + q^(2k) = y^n with even n >= 4, q an odd prime with q = 3 (mod 8) "
                    "and gcd(q, x) = 1 has no solutions; 19 = 3 (mod 8)",
                    true));
            } else {
                children.push_back(citation_leaf(
                    "berczes-pink",
                    "x^2 + 19^(2k) = y^n with prime n >= 5 and gcd(x, y) = 1 has no solutions",
                    true));
            }
            break;
        }
        case ReductionKind::CoprimeOdd: {
            unsigned long j = red.coprime_j();
            if (j >= 1) {
                children.push_back(n == 3 ? claim_odd_coprime_subtree(j) : factor_pair_n4(j));
            } else if (n == 3) {
                children.push_back(citation_leaf(
                    "cohn-x2p19",
                    "x^2 + 19 = y^n has exactly the positive solutions (18, 7) for n = 3 and "
                    "(22434, 55) for n = 5; this branch therefore admits solutions",
                    false));
                children.push_back(witness_leaf(k));
            } else {
                children.push_back(citation_leaf(
                    "cohn-x2p19",
                    "x^2 + 19 = y^n has positive solutions only for n = 3 and n = 5, so none "
                    "with n = 4",
                    true));
                children.push_back(box_search_leaf("corroboration: x^2 + 19 = y^4", 19, {1},
                                                   {4}, corroboration_bound(opt, {1})));
            }
            break;
        }
    }
    return case_split(label.str(), std::move(children));
}

// Cells whose closures are identical share one group: the absorbed residual
// on the X term does not change how a Lebesgue or AuxPell branch closes.
ReducedEquation group_key(const ReducedEquation& red)
{
    if (red.kind == ReductionKind::Lebesgue) return {red.kind, 0, 0, 0, 0};
    if (red.kind == ReductionKind::AuxPell) return {red.kind, 0, 1, 0, 0};
    return red;
}

Node descent_subtree(unsigned long k, unsigned long n, MParity parity, const BuildOptions& opt,
                     const Node& lemma1_copy)
{
    Node vs;
    vs.kind = NodeKind::ValuationSplit;
    unsigned long ec = parity == MParity::Even ? 2 * k : 2 * k + 1;
    vs.label = "19 | x: x = 19^u X, y = 19^v Y; cancel 19^min(2u, " + std::to_string(n) +
               "v, " + std::to_string(ec) + ") over (u, v) in [1, " +
               std::to_string(opt.descent_box) + "]^2";

    std::map<ReducedEquation, std::vector<std::pair<unsigned long, unsigned long>>> groups;
    for (unsigned long u = 1; u <= opt.descent_box; ++u)
        for (unsigned long v = 1; v <= opt.descent_box; ++v) {
            auto red = classify_reduction(u, v, k, n, parity);
            groups[group_key(red)].emplace_back(u, v);
        }

    for (const auto& [red, cells] : groups)
        vs.children.push_back(reduction_group_node(red, cells, k, n, opt, lemma1_copy));
    return vs;
}

Node lemma1_subtree(const BuildOptions& opt)
{
    std::vector<Node> children;
    children.push_back(power_residue_leaf(
        "x odd is impossible: 19 x^2 + 1 = 4 (mod 8) is never an n-th power, n >= 3", 8, 19,
        ps({{1, 0}}), sieve::VarConstraint::Odd, sieve::VarConstraint::None, 0));
    children.push_back(power_residue_leaf(
        "y even is impossible: y^n = 0 (mod 8) never meets 19 x^2 + 1", 8, 19, ps({{1, 0}}),
        sieve::VarConstraint::None, sieve::VarConstraint::Even, 0));

    children.push_back(case_split(
        "n = 4 (covers n = 2^j >= 4 via y -> y^(2^(j-2)))",
        {citation_leaf("cohn-quartic", "19 x^2 + 1 = y^4 has no positive integer solutions",
                       true),
         aux_search_leaf("corroboration: 19 x^2 + 1 = y^4, x <= " + opt.aux_x_max.get_str(), 19,
                         opt.aux_x_max, {4})}));

    std::vector<Node> odd_prime;
    odd_prime.push_back(citation_leaf(
        "class-number-h1",
        "Q(sqrt(-19)) has class number 1 and units +-1: 1 + x sqrt(-19) = "
        "+-((a + b sqrt(-19))/2)^p with a = b (mod 2)",
        true));
    for (unsigned long p : {3UL, 5UL, 7UL, 11UL, 13UL})
        odd_prime.push_back(odd_pair_leaf(p, opt.odd_pair_bound));
    odd_prime.push_back(case_split(
        "a, b both even: (a, b) = (2A, 2B); the rational coordinate forces A = +-1, "
        "y = 1 + 19 B^2 odd forces B even and nonzero",
        {valuation_lemma_leaf(opt.valuation_p_max, opt.valuation_B_max)}));
    children.push_back(
        case_split("n = p odd prime (any n > 2 with an odd prime factor reduces here)",
                   std::move(odd_prime)));

    children.push_back(aux_search_leaf(
        "corroboration: 19 x^2 + 1 = y^n, x <= " + opt.aux_x_max.get_str() + ", 3 <= n <= 12",
        19, opt.aux_x_max, {3, 4, 5, 6, 7, 8, 9, 10, 11, 12}));

    return case_split("19 x^2 + 1 = y^n, n > 2: y odd and x even, then by exponent cases",
                      std::move(children));
}

std::vector<unsigned long> even_ns(unsigned long n_max)
{
    std::vector<unsigned long> out;
    for (unsigned long n = 4; n <= n_max; n += 2) out.push_back(n);
    return out;
}

std::vector<unsigned long> odd_primes_ge5(unsigned long n_max)
{
    std::vector<unsigned long> out;
    for (unsigned long n = 5; n <= n_max; n += 2)
        if (arith::is_probable_prime(Integer(n))) out.push_back(n);
    return out;
}

std::vector<unsigned long> odd_composites(unsigned long n_max)
{
    std::vector<unsigned long> out;
    for (unsigned long n = 9; n <= n_max; n += 2)
        if (!arith::is_probable_prime(Integer(n))) out.push_back(n);
    return out;
}

Node theorem2_k_subtree(unsigned long k, const BuildOptions& opt, const Node& lemma1_copy)
{
    std::vector<Node> kids;

    std::vector<Node> even_children;
    even_children.push_back(case_split(
        "gcd(x, 19) = 1",
        {citation_leaf("arif-muriefah-even",
                       "x^2 + q^(2k) = y^n with even n >= 4, q an odd prime with q = 3 (mod 8) "
                       "and gcd(q, x) = 1 has no solutions; 19 = 3 (mod 8)",
                       true),
         box_search_leaf("corroboration: even n search", 19, {Integer(2 * k)},
                         even_ns(opt.n_max), corroboration_bound(opt, {Integer(2 * k)}))}));
    {
        std::vector<Node> descents;
        for (unsigned long n : even_ns(opt.n_max))
            descents.push_back(case_split("n = " + std::to_string(n),
                                          {descent_subtree(k, n, MParity::Even, opt, lemma1_copy)}));
        even_children.push_back(case_split("19 | x", std::move(descents)));
    }
    kids.push_back(case_split("n even, 4 <= n <= " + std::to_string(opt.n_max),
                              std::move(even_children)));

    kids.push_back(case_split("n = 3", {claim_even_coprime_subtree(k),
                                        descent_subtree(k, 3, MParity::Even, opt, lemma1_copy)}));

    std::vector<unsigned long> primes = odd_primes_ge5(opt.n_max);
    std::vector<Node> prime_children;
    prime_children.push_back(case_split(
        "gcd(x, 19) = 1",
        {citation_leaf("berczes-pink",
                       "x^2 + p^(2k) = y^n with p in {19, 41, 59, 61, 79}, prime n >= 5 and "
                       "gcd(x, y) = 1 has no solutions (stated for k >= 3; the desk search "
                       "below corroborates small k)",
                       true),
         box_search_leaf("corroboration: prime n >= 5 search", 19, {Integer(2 * k)},
                         primes, corroboration_bound(opt, {Integer(2 * k)}))}));
    {
        std::vector<Node> descents;
        for (unsigned long p : primes)
            descents.push_back(case_split("n = " + std::to_string(p),
                                          {descent_subtree(k, p, MParity::Even, opt, lemma1_copy)}));
        prime_children.push_back(case_split("19 | x", std::move(descents)));
    }
    kids.push_back(case_split("n = p prime, 5 <= p <= " + std::to_string(opt.n_max),
                              std::move(prime_children)));

    for (unsigned long n : odd_composites(opt.n_max)) {
        unsigned long p = arith::smallest_prime_factor(Integer(n)).get_ui();
        cert::ReductionClaim rc{n, p};
        Node nn;
        nn.kind = NodeKind::ReductionLeaf;
        nn.label = "n = " + std::to_string(n) + ": y^" + std::to_string(n) + " = (y^" +
                   std::to_string(n / p) + ")^" + std::to_string(p) + " reduces to the n = " +
                   std::to_string(p) + " case";
        nn.claim = rc;
        kids.push_back(std::move(nn));
    }

    return case_split("k = " + std::to_string(k) + ": x^2 + " + pow19(2 * k) + " = y^n",
                      std::move(kids));
}

Node theorem6_k_subtree(unsigned long k, const BuildOptions& opt, const Node& lemma1_copy)
{
    std::vector<Node> kids;
    kids.push_back(case_split("n = 3", {claim_odd_coprime_subtree(k),
                                        descent_subtree(k, 3, MParity::Odd, opt, lemma1_copy)}));
    kids.push_back(case_split("n = 4", {factor_pair_n4(k),
                                        descent_subtree(k, 4, MParity::Odd, opt, lemma1_copy)}));
    return case_split("k = " + std::to_string(k) + ": x^2 + " + pow19(2 * k + 1) + " = y^n",
                      std::move(kids));
}

bool subtree_open(const Node& n)
{
    if (auto* c = std::get_if<cert::CitationClaim>(&n.claim))
        if (!c->asserts_no_solutions) return true;
    if (std::holds_alternative<cert::WitnessClaim>(n.claim)) return true;
    for (const auto& ch : n.children)
        if (subtree_open(ch)) return true;
    return false;
}

} // namespace

cert::CertificateTree build_certificate(Theorem t, const std::vector<unsigned long>& k_range,
                                        const BuildOptions& opt)
{
    cert::CertificateTree tree;
    tree.theorem = to_string(t);
    Node lemma1_copy = lemma1_subtree(opt);

    std::vector<unsigned long> ks = k_range;
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    if (t != Theorem::Lemma1) {
        if (ks.empty()) throw std::invalid_argument("build_certificate: empty k range");
        if (ks.front() < 1) throw std::invalid_argument("build_certificate: k must be >= 1");
    }

    std::ostringstream scope;
    switch (t) {
        case Theorem::Lemma1:
            tree.equation = "19 x^2 + 1 = y^n";
            scope << "n > 2 by exponent cases; aux search x <= " << opt.aux_x_max.get_str()
                  << "; valuation box p <= " << opt.valuation_p_max << ", |B| <= "
                  << opt.valuation_B_max;
            tree.root = lemma1_copy;
            break;
        case Theorem::Theorem2: {
            tree.equation = "x^2 + 19^(2k) = y^n";
            tree.k_values = ks;
            scope << "3 <= n <= " << opt.n_max << "; descent box " << opt.descent_box
                  << "; corroboration bound " << opt.box_bound.get_str();
            std::vector<Node> kk;
            for (unsigned long k : ks) kk.push_back(theorem2_k_subtree(k, opt, lemma1_copy));
            tree.root = case_split("x^2 + 19^(2k) = y^n, n > 2, k > 0", std::move(kk));
            break;
        }
        case Theorem::Theorem6: {
            tree.equation = "x^2 + 19^(2k+1) = y^n";
            tree.k_values = ks;
            scope << "n in {3, 4}; descent box " << opt.descent_box << "; corroboration bound "
                  << opt.box_bound.get_str();
            std::vector<Node> kk;
            for (unsigned long k : ks) kk.push_back(theorem6_k_subtree(k, opt, lemma1_copy));
            tree.root = case_split("x^2 + 19^(2k+1) = y^n, n in {3, 4}, k > 0", std::move(kk));
            break;
        }
    }
    tree.scope = scope.str();
    tree.verdict = subtree_open(tree.root) ? "open" : "closed";
    return tree;
}

// ---------------------------------------------------------------------------
// re-verification
// ---------------------------------------------------------------------------

namespace {

struct Verifier {
    VerifyResult result;

    void fail(const std::string& path, const std::string& why)
    {
        result.failures.push_back(path + ": " + why);
    }

    void check_claim(const Node& n, const std::string& path)
    {
        std::visit(
            [&](const auto& claim) {
                using T = std::decay_t<decltype(claim)>;
                if constexpr (std::is_same_v<T, std::monostate>) {
                    return;
                } else {
                    ++result.leaves;
                    try {
                        verify_one(claim, path);
                    } catch (const std::exception& e) {
                        fail(path, std::string("re-check threw: ") + e.what());
                    }
                }
            },
            n.claim);
    }

    void verify_one(const cert::CongruenceClaim& c, const std::string& path)
    {
        auto re = sieve::check(c.outcome.spec);
        if (!(re == c.outcome)) fail(path, "sieve re-check diverged");
    }

    void verify_one(const cert::PowerResidueClaim& c, const std::string& path)
    {
        auto [lhs, rhs] = power_residue_sets(c);
        if (lhs != c.lhs_set || rhs != c.rhs_set) {
            fail(path, "power residue sets diverged");
            return;
        }
        for (const auto& v : lhs)
            if (std::binary_search(rhs.begin(), rhs.end(), v)) {
                fail(path, "power residue sets intersect");
                return;
            }
    }

    void verify_one(const cert::SignClaim& c, const std::string& path)
    {
        if (c.expr.value() != c.value) fail(path, "sign expression value diverged");
        if (c.reason == cert::SignClaim::Reason::NegativeValue && !(c.value < 0))
            fail(path, "sign claim value not negative");
        if (c.reason == cert::SignClaim::Reason::ForcesZero && c.value != 0)
            fail(path, "sign claim value not zero");
    }

    void verify_one(const cert::NonsquareClaim& c, const std::string& path)
    {
        Integer v = c.numerator.value();
        if (v <= 0 || c.coefficient < 1 || v % c.coefficient != 0 ||
            c.quotient != v / c.coefficient) {
            fail(path, "nonsquare arithmetic diverged");
            return;
        }
        Integer r = arith::isqrt(c.quotient);
        if (r != c.root_floor || r * r == c.quotient) fail(path, "quotient is a square");
    }

    void verify_one(const cert::PellScanClaim& c, const std::string& path)
    {
        auto data = run_pell_scan(c.D, c.target_exponent, c.scan_terms);
        if (data.terms_generated != c.terms_generated || data.target_found != c.target_found ||
            data.scan_hits != c.scan_hits)
            fail(path, "Pell scan re-check diverged");
        if (c.target_found || !c.scan_hits.empty()) fail(path, "Pell scan found a hit");
    }

    void verify_one(const cert::AuxSearchClaim& c, const std::string& path)
    {
        if (search::brute_force_aux(c.q, c.x_max, c.n_values).size() != c.hits)
            fail(path, "aux search re-run diverged");
        if (c.hits != 0) fail(path, "aux search has hits");
    }

    void verify_one(const cert::BoxSearchClaim& c, const std::string& path)
    {
        search::EquationInstance inst(c.c, c.m_values, c.n_values, c.bound);
        if (search::brute_force(inst).solutions.size() != c.hits)
            fail(path, "box search re-run diverged");
        if (c.hits != 0) fail(path, "box search has hits");
    }

    void verify_one(const cert::OddPairClaim& c, const std::string& path)
    {
        if (run_odd_pair_scan(c.p, c.bound) != c.hits) fail(path, "odd pair scan diverged");
        if (c.hits != 0) fail(path, "odd pair scan has hits");
    }

    void verify_one(const cert::ValuationLemmaClaim& c, const std::string& path)
    {
        auto rep = verify_valuation_lemma(c.p_max, c.B_max);
        if (rep.instances != c.instances || rep.violations.size() != c.violations ||
            rep.bad_sums.size() != c.zero_sums)
            fail(path, "valuation lemma re-run diverged");
        if (!rep.passed()) fail(path, "valuation lemma has violations");
    }

    void verify_one(const cert::CitationClaim& c, const std::string& path)
    {
        ++result.citation_leaves;
        if (c.tag.empty() || c.statement.empty()) fail(path, "citation missing tag/statement");
    }

    void verify_one(const cert::WitnessClaim& c, const std::string& path)
    {
        if (!search::verify_solution(c.solution)) fail(path, "witness does not verify");
    }

    void verify_one(const cert::ReductionClaim& c, const std::string& path)
    {
        if (c.to_n < 3 || c.to_n >= c.from_n || c.from_n % c.to_n != 0)
            fail(path, "reduction exponents inconsistent");
    }

    void walk(const Node& n, const std::string& path)
    {
        std::string here = path.empty() ? n.label : path + " / " + n.label;
        check_claim(n, here);
        for (const auto& ch : n.children) walk(ch, here);
    }
};

} // namespace

VerifyResult verify_tree(const cert::CertificateTree& tree)
{
    Verifier v;
    v.walk(tree.root, "");
    v.result.all_claims_verified = v.result.failures.empty();
    bool open = subtree_open(tree.root);
    v.result.closed = v.result.all_claims_verified && !open;
    if ((open && tree.verdict != "open") || (!open && tree.verdict != "closed"))
        v.result.failures.push_back("verdict field inconsistent with leaves");
    return v.result;
}

} // namespace rn19::cases
