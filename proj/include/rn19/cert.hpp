#ifndef RN19_CERT_HPP
#define RN19_CERT_HPP

#include "rn19/search.hpp"
#include "rn19/sieve.hpp"

#include <string>
#include <variant>
#include <vector>

namespace rn19::cert {

/// Node kinds. Internal nodes split the problem; leaf nodes carry a
/// machine-checkable claim or an explicit citation tag.
enum class NodeKind {
    CaseSplit,
    ValuationSplit,
    DivisorEnumeration,
    ObstructionLeaf,
    SignLeaf,
    CitationLeaf,
    PellScanLeaf,
    BoundedSearchLeaf,
    WitnessLeaf,
    ReductionLeaf,
};

std::string to_string(NodeKind k);
NodeKind node_kind_from_string(const std::string& s);

/// Exact sum of coeff * 19^exp terms; documents residual right-hand sides.
struct PowerSum {
    std::vector<std::pair<Integer, unsigned long>> terms;
    Integer value() const;
    bool operator==(const PowerSum&) const = default;
};

/// A congruence family decided unsolvable (or solvable) by the sieve.
struct CongruenceClaim {
    sieve::Obstruction outcome;
    bool operator==(const CongruenceClaim&) const = default;
};

/// Residue disjointness: { lhs_coeff x^2 + constant mod m : x constrained }
/// never meets { y^e mod m : y constrained } (e = 0 means every e >= 3).
struct PowerResidueClaim {
    Integer modulus;
    Integer lhs_coeff;
    PowerSum lhs_constant;
    sieve::VarConstraint lhs_parity = sieve::VarConstraint::None;
    sieve::VarConstraint rhs_parity = sieve::VarConstraint::None;
    unsigned long rhs_exponent = 0;
    std::vector<Integer> lhs_set;
    std::vector<Integer> rhs_set;
    bool operator==(const PowerResidueClaim&) const = default;
};

/// A residual equation with an exactly evaluated right-hand side that is
/// negative (no square equals it) or zero (forces x = 0, excluded by
/// positivity).
struct SignClaim {
    enum class Reason { NegativeValue, ForcesZero };
    Reason reason = Reason::NegativeValue;
    PowerSum expr;
    Integer value;
    bool operator==(const SignClaim&) const = default;
};

/// coefficient * a^2 = numerator has no integer solution because the exact
/// quotient is not a perfect square.
struct NonsquareClaim {
    Integer coefficient;
    PowerSum numerator;
    Integer quotient;
    Integer root_floor;
    bool operator==(const NonsquareClaim&) const = default;
};

/// 19^target_exponent is not an X-value of X^2 - D Y^2 = 1: the sequence
/// is generated past the target (exact, monotone), plus a wider scan
/// showing no term is any power of 19.
struct PellScanClaim {
    Integer D;
    unsigned long target_exponent = 0;
    unsigned long terms_generated = 0;
    bool target_found = false;
    unsigned long scan_terms = 0;
    std::vector<unsigned long> scan_hits;
    bool operator==(const PellScanClaim&) const = default;
};

struct AuxSearchClaim {
    Integer q;
    Integer x_max;
    std::vector<unsigned long> n_values;
    unsigned long hits = 0;
    bool operator==(const AuxSearchClaim&) const = default;
};

struct BoxSearchClaim {
    Integer c;
    std::vector<Integer> m_values;
    std::vector<unsigned long> n_values;
    Integer bound;
    unsigned long hits = 0;
    bool operator==(const BoxSearchClaim&) const = default;
};

/// Desk-scale exclusion of odd coordinate pairs in the unit equation:
/// no odd |a|, |b| <= bound has |a * S_p(a, b)| = 2^p where S_p is the
/// rational coordinate sum of ((a + b sqrt(-19))/2)^p scaled by 2^p.
struct OddPairClaim {
    unsigned long p = 3;
    Integer bound;
    unsigned long hits = 0;
    bool operator==(const OddPairClaim&) const = default;
};

struct ValuationLemmaClaim {
    unsigned long p_max = 0;
    unsigned long B_max = 0;
    unsigned long long instances = 0;
    unsigned long violations = 0;
    unsigned long zero_sums = 0;
    bool operator==(const ValuationLemmaClaim&) const = default;
};

/// External result used as a leaf. asserts_no_solutions = false marks a
/// positive result (solutions exist there), which cannot close a branch.
struct CitationClaim {
    std::string tag;
    std::string statement;
    bool asserts_no_solutions = true;
    bool operator==(const CitationClaim&) const = default;
};

/// An explicitly constructed solution showing the branch is genuinely open.
struct WitnessClaim {
    search::Solution solution;
    std::string note;
    bool operator==(const WitnessClaim&) const = default;
};

/// Composite exponent n reduces to the prime-exponent branch to_n via
/// y -> y^(n/to_n); the verifier requires a closed sibling for to_n.
struct ReductionClaim {
    unsigned long from_n = 0;
    unsigned long to_n = 0;
    bool operator==(const ReductionClaim&) const = default;
};

using Claim = std::variant<std::monostate, CongruenceClaim, PowerResidueClaim, SignClaim,
                           NonsquareClaim, PellScanClaim, AuxSearchClaim, BoxSearchClaim,
                           OddPairClaim, ValuationLemmaClaim, CitationClaim, WitnessClaim,
                           ReductionClaim>;

struct Node {
    NodeKind kind = NodeKind::CaseSplit;
    std::string label;
    Claim claim;
    std::vector<Node> children;

    bool is_leaf() const { return children.empty(); }
    bool operator==(const Node&) const = default;
};

struct CertificateTree {
    std::string theorem;
    std::vector<unsigned long> k_values;
    std::string equation;
    std::string scope;
    std::string verdict; // "closed" or "open"
    Node root;
    bool operator==(const CertificateTree&) const = default;
};

/// Line-oriented text form, schema version 1. Deterministic: equal trees
/// serialize to identical bytes.
std::string serialize(const CertificateTree& tree);

/// Inverse of serialize. Throws std::invalid_argument on malformed input.
CertificateTree parse(const std::string& text);

} // namespace rn19::cert

#endif
