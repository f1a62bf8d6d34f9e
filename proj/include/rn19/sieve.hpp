#ifndef RN19_SIEVE_HPP
#define RN19_SIEVE_HPP

#include "rn19/arith.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rn19::sieve {

enum class VarConstraint { None, Even, Odd, Coprime };

/// One variable term coeff * v^degree, v ranging over Z/modulus.
/// A parity constraint with an odd modulus widens the enumeration domain
/// to Z/2modulus so that parity is well-defined.
struct VarSlot {
    std::string name;
    Integer coeff;
    unsigned degree = 2;
    VarConstraint constraint = VarConstraint::None;
    bool operator==(const VarSlot&) const = default;
};

/// Exponent range t >= min_value with t = residue (mod step);
/// step = 0 pins t = min_value exactly.
struct ExponentClass {
    unsigned long min_value = 1;
    unsigned long step = 1;
    unsigned long residue = 0;
    bool operator==(const ExponentClass&) const = default;
};

/// One parameter term coeff * base^t. Exponent cycles make the infinite
/// family of t values a finite check.
struct ParamSlot {
    std::string name;
    Integer coeff;
    Integer base;
    ExponentClass exponents;
    bool operator==(const ParamSlot&) const = default;
};

/// sum(var terms) + sum(param terms) + constant = 0 (mod modulus),
/// at most two variables and two exponent parameters.
struct CongruenceSpec {
    Integer modulus;
    std::vector<VarSlot> vars;
    std::vector<ParamSlot> params;
    Integer constant = 0;
    std::string note;
    bool operator==(const CongruenceSpec&) const = default;
};

struct Witness {
    std::vector<Integer> var_values;
    std::vector<unsigned long> param_exponents;
    bool operator==(const Witness&) const = default;
};

/// Exhaustive-enumeration verdict for a congruence family. An unsolvable
/// verdict lists the full case count; a solvable one carries a witness.
struct Obstruction {
    CongruenceSpec spec;
    bool solvable = false;
    std::optional<Witness> witness;
    unsigned long long cases_enumerated = 0;
    std::vector<unsigned long> var_domain_sizes;
    std::vector<unsigned long> param_case_counts;
    bool operator==(const Obstruction&) const = default;
};

/// The eventually-periodic sequence q^0, q^1, ... mod m split into
/// preperiod and period. q^(i + |period|) = q^i (mod m) for all
/// i >= |preperiod|.
std::pair<std::vector<Integer>, std::vector<Integer>> exponent_cycle(const Integer& q,
                                                                     const Integer& m);

/// Decides the congruence family exactly by finite enumeration.
Obstruction check(const CongruenceSpec& spec);

/// 2y^2 - 19^t - 1 = 0 (mod 8), t odd  (quartic factor-pair closure).
CongruenceSpec template_quartic_mod8();

/// 3u^2 - 19^k - 1 = 0 (mod 3), k >= 1  (divisor-case closure).
CongruenceSpec template_pell_mod3();

/// X^2 + 1 = 0 (mod 19): -1 is a non-residue since 19 = 3 (mod 4).
CongruenceSpec template_square_mod19();

/// X^2 + 19^w = 0 (mod 19), w >= 1, 19 not dividing X.
CongruenceSpec template_power_mod19();

/// Certificate that X^2 + 1 = 0 (mod 19) is unsolvable; the workhorse
/// that forces residual exponents to vanish in the descents.
Obstruction mod19_square_obstruction();

} // namespace rn19::sieve

#endif
