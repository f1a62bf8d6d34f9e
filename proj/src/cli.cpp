#include "rn19/cli.hpp"

#include "rn19/cases.hpp"
#include "rn19/pell.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace rn19::cli {

namespace {

// "a", "a,b,c", "a..b", optionally "odd:a..b" / "even:a..b" for m ranges
std::vector<Integer> parse_integer_list(const std::string& text, bool allow_parity)
{
    std::string body = text;
    int parity = -1; // -1 none, 0 even, 1 odd
    if (allow_parity) {
        if (body.rfind("odd:", 0) == 0) {
            parity = 1;
            body = body.substr(4);
        } else if (body.rfind("even:", 0) == 0) {
            parity = 0;
            body = body.substr(5);
        }
    }
    std::vector<Integer> out;
    auto push = [&](const Integer& v) {
        if (parity < 0 || v % 2 == parity) out.push_back(v);
    };
    auto dots = body.find("..");
    if (dots != std::string::npos) {
        Integer lo = arith::parse_integer(body.substr(0, dots));
        Integer hi = arith::parse_integer(body.substr(dots + 2));
        for (Integer v = lo; v <= hi; ++v) push(v);
    } else {
        std::size_t i = 0;
        while (i <= body.size()) {
            std::size_t j = body.find(',', i);
            if (j == std::string::npos) j = body.size();
            push(arith::parse_integer(body.substr(i, j - i)));
            i = j + 1;
            if (j == body.size()) break;
        }
    }
    if (out.empty()) throw std::invalid_argument("empty range: '" + text + "'");
    return out;
}

std::vector<unsigned long> parse_ulong_list(const std::string& text)
{
    std::vector<unsigned long> out;
    for (const Integer& v : parse_integer_list(text, false)) {
        if (!v.fits_ulong_p()) throw std::invalid_argument("value out of range: " + text);
        out.push_back(v.get_ui());
    }
    return out;
}

Integer default_bound()
{
    if (const char* env = std::getenv("RN19_BOUND")) return arith::parse_integer(env);
    return arith::ipow(10, 12);
}

// run-configuration file: one "key value" pair per line, '#' comments;
// keys c, m, n, bound with the same syntax as the flags
std::map<std::string, std::string> read_run_config(const std::string& path)
{
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot read config file '" + path + "'");
    std::map<std::string, std::string> out;
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream is(line);
        std::string key, value;
        if (!(is >> key >> value)) throw std::invalid_argument("bad config line: " + line);
        if (key != "c" && key != "m" && key != "n" && key != "bound")
            throw std::invalid_argument("unknown config key: " + key);
        out[key] = value;
    }
    return out;
}

void print_solution_row(std::ostream& out, const search::Solution& s, const char* flag)
{
    out << s.x.get_str() << "  " << s.y.get_str() << "  " << s.m.get_str() << "  " << s.n
        << "  " << s.c.get_str() << flag << "\n";
}

int cmd_search(const Integer& c, const std::string& m_spec, const std::string& n_spec,
               const std::string& bound_spec, bool serial, bool show_degenerate,
               std::ostream& out)
{
    Integer bound = bound_spec.empty() ? default_bound() : arith::parse_integer(bound_spec);
    search::EquationInstance inst(c, parse_integer_list(m_spec, true),
                                  parse_ulong_list(n_spec), bound);
    auto res = search::brute_force(inst, serial ? search::Execution::Serial
                                                : search::Execution::Parallel);
    out << "# x  y  m  n  c   (solutions of x^2 + c^m = y^n, y^n <= " << bound.get_str()
        << ")\n";
    for (const auto& s : res.solutions) print_solution_row(out, s, "");
    if (show_degenerate)
        for (const auto& s : res.degenerate) print_solution_row(out, s, "  [degenerate]");
    out << "# " << res.solutions.size() << " solution(s)";
    if (!res.degenerate.empty())
        out << ", " << res.degenerate.size() << " degenerate x = 0 row(s)"
            << (show_degenerate ? "" : " hidden (use --show-degenerate)");
    out << "\n";
    return 0;
}

int cmd_aux_search(const Integer& q, const std::string& xmax_spec, const std::string& n_spec,
                   bool serial, std::ostream& out)
{
    Integer x_max = arith::parse_integer(xmax_spec);
    auto hits = search::brute_force_aux(q, x_max, parse_ulong_list(n_spec),
                                        serial ? search::Execution::Serial
                                               : search::Execution::Parallel);
    out << "# x  y  n   (solutions of " << q.get_str() << " x^2 + 1 = y^n, x <= "
        << x_max.get_str() << ")\n";
    for (const auto& h : hits)
        out << h.x.get_str() << "  " << h.y.get_str() << "  " << h.n << "\n";
    out << "# " << hits.size() << " solution(s)\n";
    return 0;
}

int cmd_pell(const Integer& d, unsigned long count, std::ostream& out)
{
    auto fund = pell::fundamental_solution(d);
    out << "# fundamental solution of X^2 - " << d.get_str() << " Y^2 = 1: (X1, Y1) = ("
        << fund.X.get_str() << ", " << fund.Y.get_str() << ")\n";
    auto seq = pell::sequence(d, count);
    out << "# m  X_m  Y_m\n";
    for (const auto& t : seq.terms)
        out << t.index << "  " << t.X.get_str() << "  " << t.Y.get_str() << "\n";
    return 0;
}

int cmd_lucas_scan(const Integer& d, unsigned long count, const Integer& q,
                   unsigned long pd_from, unsigned long pd_to, std::ostream& out)
{
    auto seq = pell::sequence(d, count);
    auto hits = pell::prime_power_scan(seq, q);
    out << "# indices m <= " << count << " with X_m a power of " << q.get_str() << ":";
    if (hits.empty()) out << " none";
    for (auto h : hits) out << " " << h;
    out << "\n";
    if (pd_from >= 1 && pd_from <= pd_to && pd_to <= count) {
        out << "# m  primitive divisor of X_m\n";
        for (unsigned long m = pd_from; m <= pd_to; ++m) {
            auto p = pell::primitive_divisor(seq, m);
            out << m << "  " << (p ? p->get_str() : std::string("none")) << "\n";
        }
    }
    return 0;
}

int cmd_sieve(const std::string& name, bool list, std::ostream& out)
{
    struct Entry {
        const char* name;
        sieve::CongruenceSpec (*make)();
    };
    static const Entry entries[] = {
        {"quartic-mod8", sieve::template_quartic_mod8},
        {"pell-mod3", sieve::template_pell_mod3},
        {"square-mod19", sieve::template_square_mod19},
        {"power-mod19", sieve::template_power_mod19},
    };
    if (list) {
        for (const auto& e : entries) out << e.name << ": " << e.make().note << "\n";
        return 0;
    }
    for (const auto& e : entries) {
        if (name == e.name) {
            auto ob = sieve::check(e.make());
            out << "template " << e.name << ": " << ob.spec.note << "\n";
            out << "verdict: " << (ob.solvable ? "solvable" : "unsolvable") << "\n";
            out << "cases enumerated: " << ob.cases_enumerated << "\n";
            if (ob.witness) {
                out << "witness:";
                for (std::size_t i = 0; i < ob.witness->var_values.size(); ++i)
                    out << " " << ob.spec.vars[i].name << " = "
                        << ob.witness->var_values[i].get_str();
                for (std::size_t j = 0; j < ob.witness->param_exponents.size(); ++j)
                    out << " " << ob.spec.params[j].name << " = "
                        << ob.witness->param_exponents[j];
                out << "\n";
            }
            return ob.solvable ? 2 : 0;
        }
    }
    throw CLI::ValidationError("unknown template '" + name + "' (use --list)");
}

int cmd_verify_lemma(unsigned long p_max, unsigned long b_max, std::ostream& out)
{
    auto rep = cases::verify_valuation_lemma(p_max, b_max);
    out << "valuation comparisons: " << rep.instances << ", violations: "
        << rep.violations.size() << "\n";
    out << "direct sums checked: " << rep.sums_checked << ", hitting {0, -2}: "
        << rep.bad_sums.size() << "\n";
    for (const auto& [p, B, k] : rep.violations)
        out << "violation at p = " << p << ", B = " << B << ", k = " << k << "\n";
    for (const auto& [p, B] : rep.bad_sums)
        out << "degenerate sum at p = " << p << ", B = " << B << "\n";
    out << (rep.passed() ? "PASS" : "FAIL") << "\n";
    return rep.passed() ? 0 : 2;
}

int cmd_family(const Integer& x, const Integer& y, const Integer& m, unsigned long n,
               const Integer& c, const std::string& M_spec, std::ostream& out,
               std::ostream& err)
{
    search::Solution base{x, y, m, n, c};
    if (!search::verify_solution(base)) {
        err << "base tuple does not satisfy x^2 + c^m = y^n\n";
        return 2;
    }
    out << "# x  y  m  n  c\n";
    for (unsigned long M : parse_ulong_list(M_spec)) {
        auto lifted = search::lift_family(base, M);
        if (!search::verify_solution(lifted)) {
            err << "lift M = " << M << " failed verification\n";
            return 2;
        }
        print_solution_row(out, lifted, "");
    }
    return 0;
}

int cmd_certify(const std::string& theorem, const std::string& k_spec,
                const std::string& out_path, unsigned long box, const std::string& bound_spec,
                std::ostream& out, std::ostream& err)
{
    cases::BuildOptions opt;
    opt.descent_box = box;
    if (!bound_spec.empty()) opt.box_bound = arith::parse_integer(bound_spec);
    std::vector<unsigned long> ks;
    if (!k_spec.empty()) ks = parse_ulong_list(k_spec);
    auto tree = cases::build_certificate(cases::theorem_from_string(theorem), ks, opt);
    auto verdict = cases::verify_tree(tree);
    std::string text = cert::serialize(tree);
    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            err << "cannot write " << out_path << "\n";
            return 1;
        }
        f << text;
    } else {
        out << text;
    }
    err << "# leaves: " << verdict.leaves << " (" << verdict.citation_leaves
        << " citations), verdict: " << tree.verdict << "\n";
    if (!verdict.all_claims_verified) {
        for (const auto& f : verdict.failures) err << "# unverified: " << f << "\n";
        return 2;
    }
    return verdict.closed ? 0 : 2;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"exact search and nonexistence certificates for x^2 + 19^m = y^n"};
    app.require_subcommand(1);

    std::string m_spec = "1", n_spec = "3..10", bound_spec, xmax_spec = "1e6";
    std::string c_str = "19", q_str = "19", d_str = "3", config_path;
    bool serial = false, show_degenerate = false;

    auto* sc_search = app.add_subcommand("search", "exhaustive search of x^2 + c^m = y^n");
    sc_search->add_option("--c", c_str, "base c")->capture_default_str();
    sc_search->add_option("--m", m_spec, "m values: list, a..b, odd:a..b, even:a..b")
        ->capture_default_str();
    sc_search->add_option("--n", n_spec, "n values: list or a..b")->capture_default_str();
    sc_search->add_option("--bound", bound_spec,
                          "search all y^n <= bound (default 1e12 or RN19_BOUND)");
    sc_search->add_option("--config", config_path,
                          "run-configuration file with c/m/n/bound lines; flags win");
    sc_search->add_flag("--serial", serial, "use the serial reference kernel");
    sc_search->add_flag("--show-degenerate", show_degenerate, "print x = 0 rows");

    std::string aux_n_spec = "3..12";
    auto* sc_aux = app.add_subcommand("aux-search", "exhaustive search of q x^2 + 1 = y^n");
    sc_aux->add_option("--q", q_str, "coefficient q")->capture_default_str();
    sc_aux->add_option("--x-max", xmax_spec, "largest x")->capture_default_str();
    sc_aux->add_option("--n", aux_n_spec, "n values: list or a..b")->capture_default_str();
    sc_aux->add_flag("--serial", serial, "use the serial reference kernel");

    unsigned long count = 4;
    auto* sc_pell = app.add_subcommand("pell", "fundamental solution and X_m sequence");
    sc_pell->add_option("--d", d_str, "Pell parameter D")->capture_default_str();
    sc_pell->add_option("--count", count, "number of terms")->capture_default_str();

    unsigned long scan_count = 200, pd_from = 0, pd_to = 0;
    auto* sc_lucas = app.add_subcommand("lucas-scan",
                                        "power-of-q scan and primitive divisors of X_m");
    sc_lucas->add_option("--d", d_str, "Pell parameter D")->capture_default_str();
    sc_lucas->add_option("--count", scan_count, "number of terms")->capture_default_str();
    sc_lucas->add_option("--q", q_str, "prime q for the power scan")->capture_default_str();
    sc_lucas->add_option("--pd-from", pd_from, "first index for primitive divisors");
    sc_lucas->add_option("--pd-to", pd_to, "last index for primitive divisors");

    std::string template_name;
    bool list_templates = false;
    auto* sc_sieve = app.add_subcommand("sieve", "named congruence obstruction templates");
    sc_sieve->add_option("--template", template_name, "template name");
    sc_sieve->add_flag("--list", list_templates, "list templates");

    unsigned long p_max = 50, b_max = 40;
    auto* sc_lemma = app.add_subcommand("verify-lemma", "2-adic valuation lemma report");
    sc_lemma->add_option("--p-max", p_max, "largest odd prime p")->capture_default_str();
    sc_lemma->add_option("--b-max", b_max, "largest |B|")->capture_default_str();

    std::string fx = "22434", fy = "55", fm = "1", fc = "19", fM = "1";
    unsigned long fn = 5;
    auto* sc_family = app.add_subcommand("family", "verified solution-family lifts");
    sc_family->add_option("--x", fx, "base x")->capture_default_str();
    sc_family->add_option("--y", fy, "base y")->capture_default_str();
    sc_family->add_option("--m", fm, "base m")->capture_default_str();
    sc_family->add_option("--n", fn, "exponent n")->capture_default_str();
    sc_family->add_option("--c", fc, "base c")->capture_default_str();
    sc_family->add_option("--M", fM, "lift steps: value, list or a..b")->capture_default_str();

    std::string theorem, k_spec, out_path, cert_bound;
    unsigned long box = 4;
    auto* sc_cert = app.add_subcommand("certify", "build and verify a nonexistence certificate");
    sc_cert->add_option("--theorem", theorem, "lemma1, theorem2 or theorem6")->required();
    sc_cert->add_option("--k", k_spec, "k values: list or a..b (theorem2/theorem6)");
    sc_cert->add_option("--out", out_path, "write the certificate to a file");
    sc_cert->add_option("--box", box, "descent box size")->capture_default_str();
    sc_cert->add_option("--bound", cert_bound, "corroboration search bound");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (sc_search->parsed()) {
            if (!config_path.empty()) {
                auto conf = read_run_config(config_path);
                auto take = [&](const char* flag, const char* key, std::string& slot) {
                    if (sc_search->count(flag) == 0 && conf.count(key)) slot = conf[key];
                };
                take("--c", "c", c_str);
                take("--m", "m", m_spec);
                take("--n", "n", n_spec);
                take("--bound", "bound", bound_spec);
            }
            return cmd_search(arith::parse_integer(c_str), m_spec, n_spec, bound_spec, serial,
                              show_degenerate, out);
        }
        if (sc_aux->parsed())
            return cmd_aux_search(arith::parse_integer(q_str), xmax_spec, aux_n_spec, serial,
                                  out);
        if (sc_pell->parsed()) return cmd_pell(arith::parse_integer(d_str), count, out);
        if (sc_lucas->parsed())
            return cmd_lucas_scan(arith::parse_integer(d_str), scan_count,
                                  arith::parse_integer(q_str), pd_from, pd_to, out);
        if (sc_sieve->parsed()) return cmd_sieve(template_name, list_templates, out);
        if (sc_lemma->parsed()) return cmd_verify_lemma(p_max, b_max, out);
        if (sc_family->parsed())
            return cmd_family(arith::parse_integer(fx), arith::parse_integer(fy),
                              arith::parse_integer(fm), fn, arith::parse_integer(fc), fM, out,
                              err);
        if (sc_cert->parsed())
            return cmd_certify(theorem, k_spec, out_path, box, cert_bound, out, err);
    } catch (const cases::CertificateError& e) {
        err << "certificate error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "no subcommand\n";
    return 1;
}

} // namespace rn19::cli
