#include "rn19/cert.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace rn19::cert {

Integer PowerSum::value() const
{
    Integer v = 0;
    for (const auto& [coeff, exp] : terms) v += coeff * arith::ipow(19, exp);
    return v;
}

std::string to_string(NodeKind k)
{
    switch (k) {
        case NodeKind::CaseSplit: return "case-split";
        case NodeKind::ValuationSplit: return "valuation-split";
        case NodeKind::DivisorEnumeration: return "divisor-enumeration";
        case NodeKind::ObstructionLeaf: return "obstruction-leaf";
        case NodeKind::SignLeaf: return "sign-leaf";
        case NodeKind::CitationLeaf: return "external-citation-leaf";
        case NodeKind::PellScanLeaf: return "pell-scan-leaf";
        case NodeKind::BoundedSearchLeaf: return "bounded-search-leaf";
        case NodeKind::WitnessLeaf: return "witness-leaf";
        case NodeKind::ReductionLeaf: return "reduction-leaf";
    }
    throw std::logic_error("unknown node kind");
}

NodeKind node_kind_from_string(const std::string& s)
{
    static const std::map<std::string, NodeKind> table{
        {"case-split", NodeKind::CaseSplit},
        {"valuation-split", NodeKind::ValuationSplit},
        {"divisor-enumeration", NodeKind::DivisorEnumeration},
        {"obstruction-leaf", NodeKind::ObstructionLeaf},
        {"sign-leaf", NodeKind::SignLeaf},
        {"external-citation-leaf", NodeKind::CitationLeaf},
        {"pell-scan-leaf", NodeKind::PellScanLeaf},
        {"bounded-search-leaf", NodeKind::BoundedSearchLeaf},
        {"witness-leaf", NodeKind::WitnessLeaf},
        {"reduction-leaf", NodeKind::ReductionLeaf},
    };
    auto it = table.find(s);
    if (it == table.end()) throw std::invalid_argument("bad node kind: " + s);
    return it->second;
}

namespace {

// ---------- writing ----------

std::string quote(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

std::string constraint_str(sieve::VarConstraint c)
{
    switch (c) {
        case sieve::VarConstraint::None: return "none";
        case sieve::VarConstraint::Even: return "even";
        case sieve::VarConstraint::Odd: return "odd";
        case sieve::VarConstraint::Coprime: return "coprime";
    }
    throw std::logic_error("bad constraint");
}

sieve::VarConstraint constraint_from(const std::string& s)
{
    if (s == "none") return sieve::VarConstraint::None;
    if (s == "even") return sieve::VarConstraint::Even;
    if (s == "odd") return sieve::VarConstraint::Odd;
    if (s == "coprime") return sieve::VarConstraint::Coprime;
    throw std::invalid_argument("bad constraint: " + s);
}

template <typename T>
std::string join(const std::vector<T>& v)
{
    if (v.empty()) return "-";
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        if constexpr (std::is_same_v<T, Integer>)
            os << v[i].get_str();
        else
            os << v[i];
    }
    return os.str();
}

std::string join_powersum(const PowerSum& ps)
{
    if (ps.terms.empty()) return "-";
    std::ostringstream os;
    for (std::size_t i = 0; i < ps.terms.size(); ++i) {
        if (i) os << ',';
        os << ps.terms[i].first.get_str() << ':' << ps.terms[i].second;
    }
    return os.str();
}

struct Writer {
    std::ostringstream out;

    void line(const std::string& s) { out << s << '\n'; }

    void claim_body(const CongruenceClaim& c)
    {
        const auto& ob = c.outcome;
        line("claim congruence");
        line("modulus " + ob.spec.modulus.get_str());
        line("constant " + ob.spec.constant.get_str());
        line("note " + quote(ob.spec.note));
        for (const auto& v : ob.spec.vars)
            line("var " + quote(v.name) + " " + v.coeff.get_str() + " " +
                 std::to_string(v.degree) + " " + constraint_str(v.constraint));
        for (const auto& p : ob.spec.params)
            line("param " + quote(p.name) + " " + p.coeff.get_str() + " " + p.base.get_str() +
                 " " + std::to_string(p.exponents.min_value) + " " +
                 std::to_string(p.exponents.step) + " " + std::to_string(p.exponents.residue));
        line(std::string("solvable ") + (ob.solvable ? "yes" : "no"));
        line("cases " + std::to_string(ob.cases_enumerated));
        line("var-domains " + join(ob.var_domain_sizes));
        line("param-cases " + join(ob.param_case_counts));
        if (ob.witness) {
            line("witness-vars " + join(ob.witness->var_values));
            line("witness-exps " + join(ob.witness->param_exponents));
        }
    }

    void claim_body(const PowerResidueClaim& c)
    {
        line("claim power-residue");
        line("modulus " + c.modulus.get_str());
        line("lhs-coeff " + c.lhs_coeff.get_str());
        line("lhs-constant " + join_powersum(c.lhs_constant));
        line("lhs-parity " + constraint_str(c.lhs_parity));
        line("rhs-parity " + constraint_str(c.rhs_parity));
        line("rhs-exponent " + std::to_string(c.rhs_exponent));
        line("lhs-set " + join(c.lhs_set));
        line("rhs-set " + join(c.rhs_set));
    }

    void claim_body(const SignClaim& c)
    {
        line("claim sign");
        line(std::string("reason ") +
             (c.reason == SignClaim::Reason::NegativeValue ? "negative" : "forces-zero"));
        line("terms " + join_powersum(c.expr));
        line("value " + c.value.get_str());
    }

    void claim_body(const NonsquareClaim& c)
    {
        line("claim nonsquare");
        line("coefficient " + c.coefficient.get_str());
        line("terms " + join_powersum(c.numerator));
        line("quotient " + c.quotient.get_str());
        line("root-floor " + c.root_floor.get_str());
    }

    void claim_body(const PellScanClaim& c)
    {
        line("claim pell-scan");
        line("d " + c.D.get_str());
        line("target-exponent " + std::to_string(c.target_exponent));
        line("terms-generated " + std::to_string(c.terms_generated));
        line(std::string("target-found ") + (c.target_found ? "yes" : "no"));
        line("scan-terms " + std::to_string(c.scan_terms));
        line("scan-hits " + join(c.scan_hits));
    }

    void claim_body(const AuxSearchClaim& c)
    {
        line("claim aux-search");
        line("q " + c.q.get_str());
        line("x-max " + c.x_max.get_str());
        line("n " + join(c.n_values));
        line("hits " + std::to_string(c.hits));
    }

    void claim_body(const BoxSearchClaim& c)
    {
        line("claim box-search");
        line("c " + c.c.get_str());
        line("m " + join(c.m_values));
        line("n " + join(c.n_values));
        line("bound " + c.bound.get_str());
        line("hits " + std::to_string(c.hits));
    }

    void claim_body(const OddPairClaim& c)
    {
        line("claim odd-pair");
        line("p " + std::to_string(c.p));
        line("bound " + c.bound.get_str());
        line("hits " + std::to_string(c.hits));
    }

    void claim_body(const ValuationLemmaClaim& c)
    {
        line("claim valuation-lemma");
        line("p-max " + std::to_string(c.p_max));
        line("b-max " + std::to_string(c.B_max));
        line("instances " + std::to_string(c.instances));
        line("violations " + std::to_string(c.violations));
        line("zero-sums " + std::to_string(c.zero_sums));
    }

    void claim_body(const CitationClaim& c)
    {
        line("claim citation");
        line("tag " + c.tag);
        line("statement " + quote(c.statement));
        line(std::string("negative ") + (c.asserts_no_solutions ? "yes" : "no"));
    }

    void claim_body(const WitnessClaim& c)
    {
        line("claim witness");
        line("x " + c.solution.x.get_str());
        line("y " + c.solution.y.get_str());
        line("m " + c.solution.m.get_str());
        line("n " + std::to_string(c.solution.n));
        line("c " + c.solution.c.get_str());
        line("note " + quote(c.note));
    }

    void claim_body(const ReductionClaim& c)
    {
        line("claim reduction");
        line("from-n " + std::to_string(c.from_n));
        line("to-n " + std::to_string(c.to_n));
    }

    void node(const Node& n, std::size_t id, const std::string& parent, std::size_t& next_id)
    {
        line("node " + std::to_string(id) + " " + parent + " " + to_string(n.kind));
        line("label " + quote(n.label));
        std::visit(
            [&](const auto& c) {
                if constexpr (!std::is_same_v<std::decay_t<decltype(c)>, std::monostate>)
                    claim_body(c);
            },
            n.claim);
        std::string self = std::to_string(id);
        for (const auto& ch : n.children) {
            std::size_t cid = next_id++;
            node(ch, cid, self, next_id);
        }
    }
};

// ---------- reading ----------

std::vector<std::string> tokenize(const std::string& line)
{
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && line[i] == ' ') ++i;
        if (i >= line.size()) break;
        if (line[i] == '"') {
            std::string tok;
            ++i;
            while (i < line.size() && line[i] != '"') {
                if (line[i] == '\\' && i + 1 < line.size()) ++i;
                tok += line[i++];
            }
            if (i >= line.size()) throw std::invalid_argument("unterminated string");
            ++i;
            out.push_back(tok);
        } else {
            std::size_t j = line.find(' ', i);
            if (j == std::string::npos) j = line.size();
            out.push_back(line.substr(i, j - i));
            i = j;
        }
    }
    return out;
}

Integer to_int(const std::string& s)
{
    Integer v;
    if (mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("bad integer: " + s);
    return v;
}

unsigned long long to_u64(const std::string& s)
{
    try {
        std::size_t used = 0;
        unsigned long long v = std::stoull(s, &used);
        if (used != s.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad unsigned value: " + s);
    }
}

unsigned long to_ulong(const std::string& s)
{
    try {
        std::size_t used = 0;
        unsigned long v = std::stoul(s, &used);
        if (used != s.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad unsigned value: " + s);
    }
}

template <typename T>
std::vector<T> split_list(const std::string& s)
{
    std::vector<T> out;
    if (s == "-") return out;
    std::size_t i = 0;
    while (i <= s.size()) {
        std::size_t j = s.find(',', i);
        if (j == std::string::npos) j = s.size();
        std::string item = s.substr(i, j - i);
        if constexpr (std::is_same_v<T, Integer>)
            out.push_back(to_int(item));
        else
            out.push_back(to_ulong(item));
        i = j + 1;
        if (j == s.size()) break;
    }
    return out;
}

PowerSum parse_powersum(const std::string& s)
{
    PowerSum ps;
    if (s == "-") return ps;
    std::size_t i = 0;
    while (i <= s.size()) {
        std::size_t j = s.find(',', i);
        if (j == std::string::npos) j = s.size();
        std::string item = s.substr(i, j - i);
        auto colon = item.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("bad power sum term");
        ps.terms.emplace_back(to_int(item.substr(0, colon)), to_ulong(item.substr(colon + 1)));
        i = j + 1;
        if (j == s.size()) break;
    }
    return ps;
}

struct Parser {
    std::vector<std::vector<std::string>> lines;
    std::size_t pos = 0;

    explicit Parser(const std::string& text)
    {
        std::istringstream in(text);
        std::string raw;
        while (std::getline(in, raw)) {
            if (raw.empty()) continue;
            lines.push_back(tokenize(raw));
        }
    }

    const std::vector<std::string>& peek() const
    {
        if (pos >= lines.size()) throw std::invalid_argument("unexpected end of certificate");
        return lines[pos];
    }
    std::vector<std::string> next()
    {
        auto l = peek();
        ++pos;
        return l;
    }
    std::string expect1(const std::string& key)
    {
        auto l = next();
        if (l.size() < 2 || l[0] != key)
            throw std::invalid_argument("expected '" + key + "' line");
        return l[1];
    }

    Claim parse_claim(const std::string& type)
    {
        if (type == "congruence") {
            CongruenceClaim c;
            auto& ob = c.outcome;
            ob.spec.modulus = to_int(expect1("modulus"));
            ob.spec.constant = to_int(expect1("constant"));
            ob.spec.note = expect1("note");
            while (peek()[0] == "var") {
                auto l = next();
                if (l.size() != 5) throw std::invalid_argument("bad var line");
                ob.spec.vars.push_back(
                    {l[1], to_int(l[2]), (unsigned)to_ulong(l[3]), constraint_from(l[4])});
            }
            while (peek()[0] == "param") {
                auto l = next();
                if (l.size() != 7) throw std::invalid_argument("bad param line");
                ob.spec.params.push_back(
                    {l[1], to_int(l[2]), to_int(l[3]), {to_ulong(l[4]), to_ulong(l[5]), to_ulong(l[6])}});
            }
            ob.solvable = expect1("solvable") == "yes";
            ob.cases_enumerated = to_u64(expect1("cases"));
            ob.var_domain_sizes = split_list<unsigned long>(expect1("var-domains"));
            ob.param_case_counts = split_list<unsigned long>(expect1("param-cases"));
            if (ob.solvable) {
                sieve::Witness w;
                w.var_values = split_list<Integer>(expect1("witness-vars"));
                w.param_exponents = split_list<unsigned long>(expect1("witness-exps"));
                ob.witness = w;
            }
            return c;
        }
        if (type == "power-residue") {
            PowerResidueClaim c;
            c.modulus = to_int(expect1("modulus"));
            c.lhs_coeff = to_int(expect1("lhs-coeff"));
            c.lhs_constant = parse_powersum(expect1("lhs-constant"));
            c.lhs_parity = constraint_from(expect1("lhs-parity"));
            c.rhs_parity = constraint_from(expect1("rhs-parity"));
            c.rhs_exponent = to_ulong(expect1("rhs-exponent"));
            c.lhs_set = split_list<Integer>(expect1("lhs-set"));
            c.rhs_set = split_list<Integer>(expect1("rhs-set"));
            return c;
        }
        if (type == "sign") {
            SignClaim c;
            std::string r = expect1("reason");
            c.reason = r == "negative" ? SignClaim::Reason::NegativeValue
                                       : SignClaim::Reason::ForcesZero;
            c.expr = parse_powersum(expect1("terms"));
            c.value = to_int(expect1("value"));
            return c;
        }
        if (type == "nonsquare") {
            NonsquareClaim c;
            c.coefficient = to_int(expect1("coefficient"));
            c.numerator = parse_powersum(expect1("terms"));
            c.quotient = to_int(expect1("quotient"));
            c.root_floor = to_int(expect1("root-floor"));
            return c;
        }
        if (type == "pell-scan") {
            PellScanClaim c;
            c.D = to_int(expect1("d"));
            c.target_exponent = to_ulong(expect1("target-exponent"));
            c.terms_generated = to_ulong(expect1("terms-generated"));
            c.target_found = expect1("target-found") == "yes";
            c.scan_terms = to_ulong(expect1("scan-terms"));
            c.scan_hits = split_list<unsigned long>(expect1("scan-hits"));
            return c;
        }
        if (type == "aux-search") {
            AuxSearchClaim c;
            c.q = to_int(expect1("q"));
            c.x_max = to_int(expect1("x-max"));
            c.n_values = split_list<unsigned long>(expect1("n"));
            c.hits = to_ulong(expect1("hits"));
            return c;
        }
        if (type == "box-search") {
            BoxSearchClaim c;
            c.c = to_int(expect1("c"));
            c.m_values = split_list<Integer>(expect1("m"));
            c.n_values = split_list<unsigned long>(expect1("n"));
            c.bound = to_int(expect1("bound"));
            c.hits = to_ulong(expect1("hits"));
            return c;
        }
        if (type == "odd-pair") {
            OddPairClaim c;
            c.p = to_ulong(expect1("p"));
            c.bound = to_int(expect1("bound"));
            c.hits = to_ulong(expect1("hits"));
            return c;
        }
        if (type == "valuation-lemma") {
            ValuationLemmaClaim c;
            c.p_max = to_ulong(expect1("p-max"));
            c.B_max = to_ulong(expect1("b-max"));
            c.instances = to_u64(expect1("instances"));
            c.violations = to_ulong(expect1("violations"));
            c.zero_sums = to_ulong(expect1("zero-sums"));
            return c;
        }
        if (type == "citation") {
            CitationClaim c;
            c.tag = expect1("tag");
            c.statement = expect1("statement");
            c.asserts_no_solutions = expect1("negative") == "yes";
            return c;
        }
        if (type == "witness") {
            WitnessClaim c;
            c.solution.x = to_int(expect1("x"));
            c.solution.y = to_int(expect1("y"));
            c.solution.m = to_int(expect1("m"));
            c.solution.n = to_ulong(expect1("n"));
            c.solution.c = to_int(expect1("c"));
            c.note = expect1("note");
            return c;
        }
        if (type == "reduction") {
            ReductionClaim c;
            c.from_n = to_ulong(expect1("from-n"));
            c.to_n = to_ulong(expect1("to-n"));
            return c;
        }
        throw std::invalid_argument("unknown claim type: " + type);
    }
};

} // namespace

std::string serialize(const CertificateTree& tree)
{
    Writer w;
    w.line("rn19-cert 1");
    w.line("theorem " + tree.theorem);
    w.line("k " + join(tree.k_values));
    w.line("equation " + quote(tree.equation));
    w.line("scope " + quote(tree.scope));
    w.line("verdict " + tree.verdict);
    std::size_t next_id = 1;
    w.node(tree.root, 0, "-", next_id);
    w.line("end");
    return w.out.str();
}

CertificateTree parse(const std::string& text)
{
    Parser p(text);
    auto header = p.next();
    if (header.size() != 2 || header[0] != "rn19-cert" || header[1] != "1")
        throw std::invalid_argument("bad certificate header");
    CertificateTree tree;
    tree.theorem = p.expect1("theorem");
    tree.k_values = split_list<unsigned long>(p.expect1("k"));
    tree.equation = p.expect1("equation");
    tree.scope = p.expect1("scope");
    tree.verdict = p.expect1("verdict");

    struct Record {
        std::size_t id;
        std::string parent;
        Node node;
    };
    std::vector<Record> records;
    for (;;) {
        auto l = p.next();
        if (l.size() == 1 && l[0] == "end") break;
        if (l.size() != 4 || l[0] != "node") throw std::invalid_argument("expected node line");
        Record rec;
        rec.id = to_ulong(l[1]);
        rec.parent = l[2];
        rec.node.kind = node_kind_from_string(l[3]);
        rec.node.label = p.expect1("label");
        if (p.pos < p.lines.size() && p.peek()[0] == "claim") {
            std::string type = p.next()[1];
            rec.node.claim = p.parse_claim(type);
        }
        records.push_back(std::move(rec));
    }
    if (records.empty()) throw std::invalid_argument("certificate has no nodes");

    // pre-order ids: parents precede children; children appear in order
    std::map<std::string, std::vector<std::size_t>> kids;
    for (std::size_t i = 0; i < records.size(); ++i)
        kids[records[i].parent].push_back(i);

    auto assemble = [&](auto&& self, std::size_t idx) -> Node {
        Node n = std::move(records[idx].node);
        auto it = kids.find(std::to_string(records[idx].id));
        if (it != kids.end())
            for (std::size_t ci : it->second) n.children.push_back(self(self, ci));
        return n;
    };
    auto rootIt = kids.find("-");
    if (rootIt == kids.end() || rootIt->second.size() != 1)
        throw std::invalid_argument("certificate must have exactly one root");
    tree.root = assemble(assemble, rootIt->second[0]);
    return tree;
}

} // namespace rn19::cert
