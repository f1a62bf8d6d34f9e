#include "rn19/sieve.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace rn19::sieve {

std::pair<std::vector<Integer>, std::vector<Integer>> exponent_cycle(const Integer& q,
                                                                     const Integer& m)
{
    if (m < 2) throw std::invalid_argument("exponent_cycle: m < 2");
    if (q < 0) throw std::invalid_argument("exponent_cycle: q < 0");

    std::vector<Integer> values{Integer(1) % m};
    std::map<Integer, std::size_t> seen; // value -> exponent, exponents >= 1
    Integer x = values[0];
    std::size_t start = 0;
    for (std::size_t i = 1;; ++i) {
        x = (x * q) % m;
        auto it = seen.find(x);
        if (it != seen.end()) {
            start = it->second;
            break;
        }
        seen.emplace(x, i);
        values.push_back(x);
    }
    std::vector<Integer> pre(values.begin(), values.begin() + start);
    std::vector<Integer> per(values.begin() + start, values.end());
    // a fixed point absorbs equal preperiod entries in front of it
    while (per.size() == 1 && !pre.empty() && pre.back() == per[0]) pre.pop_back();
    return {pre, per};
}

namespace {

struct ParamCase {
    Integer value;          // coeff * base^t mod m
    unsigned long exponent; // a witness t producing it
};

void validate(const CongruenceSpec& spec)
{
    if (spec.modulus < 2) throw std::invalid_argument("check: modulus < 2");
    if (spec.vars.size() > 2) throw std::invalid_argument("check: at most two variables");
    if (spec.params.size() > 2) throw std::invalid_argument("check: at most two parameters");
    for (const auto& v : spec.vars)
        if (v.degree < 1 || v.degree > 16) throw std::invalid_argument("check: variable degree out of range");
    for (const auto& p : spec.params) {
        if (p.base < 0) throw std::invalid_argument("check: negative parameter base");
        if (p.exponents.step > 0 && p.exponents.residue >= p.exponents.step)
            throw std::invalid_argument("check: exponent residue must be < step");
    }
}

// Distinct values of coeff * base^t (mod m) over the exponent class,
// each with the smallest witness exponent.
std::vector<ParamCase> param_cases(const ParamSlot& p, const Integer& m)
{
    auto [pre, per] = exponent_cycle(p.base, m);
    unsigned long rho = pre.size();
    unsigned long pi = per.size();
    const auto& ec = p.exponents;

    std::vector<ParamCase> out;
    std::map<Integer, bool> seen;
    auto push = [&](unsigned long t) {
        Integer v = (p.coeff * arith::powmod(p.base, t, m)) % m;
        if (!seen.count(v)) {
            seen[v] = true;
            out.push_back({v, t});
        }
    };
    if (ec.step == 0) {
        push(ec.min_value);
        return out;
    }
    unsigned long t = ec.min_value;
    if (t % ec.step != ec.residue) t += (ec.residue + ec.step - t % ec.step) % ec.step;
    unsigned long span = std::lcm<unsigned long>(std::max(1UL, pi), ec.step);
    unsigned long limit = std::max(t, rho) + span;
    for (; t <= limit; t += ec.step) push(t);
    return out;
}

// Admissible residues for one variable with the integer each represents.
std::vector<Integer> var_domain(const VarSlot& v, const Integer& m)
{
    bool parity = v.constraint == VarConstraint::Even || v.constraint == VarConstraint::Odd;
    Integer span = (parity && m % 2 == 1) ? 2 * m : m;
    std::vector<Integer> out;
    for (Integer x = 0; x < span; ++x) {
        switch (v.constraint) {
            case VarConstraint::None: break;
            case VarConstraint::Even:
                if (x % 2 != 0) continue;
                break;
            case VarConstraint::Odd:
                if (x % 2 != 1) continue;
                break;
            case VarConstraint::Coprime:
                if (arith::gcd(x, m) != 1) continue;
                break;
        }
        out.push_back(x);
    }
    return out;
}

} // namespace

Obstruction check(const CongruenceSpec& spec)
{
    validate(spec);
    const Integer& m = spec.modulus;

    std::vector<std::vector<Integer>> domains;
    std::vector<std::vector<Integer>> var_terms; // precomputed coeff*x^deg mod m
    for (const auto& v : spec.vars) {
        domains.push_back(var_domain(v, m));
        std::vector<Integer> terms;
        terms.reserve(domains.back().size());
        for (const Integer& x : domains.back())
            terms.push_back((v.coeff * arith::powmod(x, v.degree, m)) % m);
        var_terms.push_back(std::move(terms));
    }
    std::vector<std::vector<ParamCase>> pcases;
    for (const auto& p : spec.params) pcases.push_back(param_cases(p, m));

    Obstruction out;
    out.spec = spec;
    for (const auto& d : domains) out.var_domain_sizes.push_back(d.size());
    for (const auto& pc : pcases) out.param_case_counts.push_back(pc.size());

    std::size_t vn = domains.size(), pn = pcases.size();
    std::vector<std::size_t> vi(vn, 0), pj(pn, 0);
    Integer base_const = ((spec.constant % m) + m) % m;

    unsigned long long total = 1;
    for (const auto& d : domains) total *= d.size();
    for (const auto& pc : pcases) total *= pc.size();
    out.cases_enumerated = total;
    if (total == 0) {
        out.solvable = false; // empty domain: family has no admissible assignment
        return out;
    }

    for (;;) {
        Integer sum = base_const;
        for (std::size_t i = 0; i < vn; ++i) sum += var_terms[i][vi[i]];
        for (std::size_t j = 0; j < pn; ++j) sum += pcases[j][pj[j]].value;
        if (sum % m == 0) {
            Witness w;
            for (std::size_t i = 0; i < vn; ++i) w.var_values.push_back(domains[i][vi[i]]);
            for (std::size_t j = 0; j < pn; ++j) w.param_exponents.push_back(pcases[j][pj[j]].exponent);
            out.solvable = true;
            out.witness = w;
            return out;
        }
        // odometer
        std::size_t k = 0;
        for (; k < vn; ++k) {
            if (++vi[k] < domains[k].size()) break;
            vi[k] = 0;
        }
        if (k < vn) continue;
        for (k = 0; k < pn; ++k) {
            if (++pj[k] < pcases[k].size()) break;
            pj[k] = 0;
        }
        if (k == pn) break;
    }
    out.solvable = false;
    return out;
}

CongruenceSpec template_quartic_mod8()
{
    CongruenceSpec s;
    s.modulus = 8;
    s.vars = {{"y", 2, 2, VarConstraint::None}};
    s.params = {{"t", -1, 19, {1, 2, 1}}}; // -19^t, t odd, t >= 1
    s.constant = -1;
    s.note = "2y^2 = 19^t + 1 (mod 8), t odd";
    return s;
}

CongruenceSpec template_pell_mod3()
{
    CongruenceSpec s;
    s.modulus = 3;
    s.vars = {{"u", 3, 2, VarConstraint::None}};
    s.params = {{"k", -1, 19, {1, 1, 0}}}; // -19^k, k >= 1
    s.constant = -1;
    s.note = "3u^2 = 19^k + 1 (mod 3), k >= 1";
    return s;
}

CongruenceSpec template_square_mod19()
{
    CongruenceSpec s;
    s.modulus = 19;
    s.vars = {{"x", 1, 2, VarConstraint::None}};
    s.constant = 1;
    s.note = "x^2 + 1 = 0 (mod 19)";
    return s;
}

CongruenceSpec template_power_mod19()
{
    CongruenceSpec s;
    s.modulus = 19;
    s.vars = {{"x", 1, 2, VarConstraint::Coprime}};
    s.params = {{"w", 1, 19, {1, 1, 0}}}; // +19^w, w >= 1
    s.note = "x^2 + 19^w = 0 (mod 19), 19 does not divide x";
    return s;
}

Obstruction mod19_square_obstruction()
{
    return check(template_square_mod19());
}

} // namespace rn19::sieve
