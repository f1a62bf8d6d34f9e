#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rn19/cases.hpp"
#include "rn19/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace rn19;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli_run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> data_lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty() && line[0] != '#') out.push_back(line);
    return out;
}

} // namespace

TEST_CASE("search subcommand prints the two known rows")
{
    auto r = cli_run({"search", "--c", "19", "--m", "1", "--n", "3..10", "--bound", "1e9"});
    CHECK(r.code == 0);
    auto rows = data_lines(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == "18  7  1  3  19");
    CHECK(rows[1] == "22434  55  1  5  19");
}

TEST_CASE("search respects RN19_BOUND and hides degenerate rows by default")
{
    setenv("RN19_BOUND", "1e6", 1);
    auto r = cli_run({"search", "--c", "19", "--m", "4", "--n", "4"});
    unsetenv("RN19_BOUND");
    CHECK(r.code == 0);
    CHECK(data_lines(r.out).empty());
    CHECK(r.out.find("degenerate") != std::string::npos);

    auto r2 = cli_run({"search", "--c", "19", "--m", "4", "--n", "4", "--bound", "1e6",
                       "--show-degenerate"});
    auto rows = data_lines(r2.out);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].find("0  19  4  4  19") == 0);
}

TEST_CASE("search parity ranges")
{
    auto r = cli_run({"search", "--c", "19", "--m", "odd:3..5", "--n", "3,4", "--bound", "1e10",
                      "--serial"});
    CHECK(r.code == 0);
    CHECK(data_lines(r.out).empty());
}

TEST_CASE("search reads a run-configuration file, flags win")
{
    std::string path = "/tmp/rn19_test_config.txt";
    {
        std::ofstream f(path);
        f << "# acceptance box\nc 19\nm 1\nn 3..10\nbound 1e9\n";
    }
    auto r = cli_run({"search", "--config", path});
    CHECK(r.code == 0);
    CHECK(data_lines(r.out).size() == 2);

    // an explicit flag overrides the file
    auto r2 = cli_run({"search", "--config", path, "--m", "2"});
    CHECK(r2.code == 0);
    CHECK(data_lines(r2.out).empty());

    auto bad = cli_run({"search", "--config", "/nonexistent/path"});
    CHECK(bad.code == 1);
    std::remove(path.c_str());

    {
        std::ofstream f(path);
        f << "frequency 42\n";
    }
    auto badkey = cli_run({"search", "--config", path});
    CHECK(badkey.code == 1);
    std::remove(path.c_str());
}

TEST_CASE("aux-search subcommand")
{
    auto r = cli_run({"aux-search", "--q", "19", "--x-max", "1e4", "--n", "3..12"});
    CHECK(r.code == 0);
    CHECK(data_lines(r.out).empty());
    auto r2 = cli_run({"aux-search", "--q", "7", "--x-max", "100", "--n", "3,6"});
    CHECK(r2.code == 0);
    CHECK(data_lines(r2.out).size() == 4);
}

TEST_CASE("pell subcommand lists 2, 7, 26, 97")
{
    auto r = cli_run({"pell", "--d", "3", "--count", "4"});
    CHECK(r.code == 0);
    auto rows = data_lines(r.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == "1  2  1");
    CHECK(rows[1] == "2  7  4");
    CHECK(rows[2] == "3  26  15");
    CHECK(rows[3] == "4  97  56");
    CHECK(r.out.find("(X1, Y1) = (2, 1)") != std::string::npos);
}

TEST_CASE("lucas-scan subcommand")
{
    auto r = cli_run({"lucas-scan", "--d", "3", "--count", "30", "--q", "7", "--pd-from", "13",
                      "--pd-to", "15"});
    CHECK(r.code == 0);
    CHECK(r.out.find("with X_m a power of 7: 2") != std::string::npos);
    auto rows = data_lines(r.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == "13  6811741");
    CHECK(rows[2] == "15  61");
}

TEST_CASE("sieve subcommand")
{
    auto r = cli_run({"sieve", "--list"});
    CHECK(r.code == 0);
    CHECK(r.out.find("quartic-mod8") != std::string::npos);
    for (const char* name : {"quartic-mod8", "pell-mod3", "square-mod19", "power-mod19"}) {
        auto t = cli_run({"sieve", "--template", name});
        CHECK(t.code == 0);
        CHECK(t.out.find("unsolvable") != std::string::npos);
        CHECK(t.out.find("cases enumerated") != std::string::npos);
    }
    auto bad = cli_run({"sieve", "--template", "nope"});
    CHECK(bad.code == 1);
}

TEST_CASE("verify-lemma subcommand")
{
    auto r = cli_run({"verify-lemma", "--p-max", "13", "--b-max", "6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("violations: 0") != std::string::npos);
    CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("family subcommand")
{
    auto r = cli_run({"family", "--x", "22434", "--y", "55", "--m", "1", "--n", "5", "--c",
                      "19", "--M", "1..3"});
    CHECK(r.code == 0);
    auto rows = data_lines(r.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].find(" 11  5  19") != std::string::npos);

    auto bad = cli_run({"family", "--x", "5", "--y", "5", "--m", "1", "--n", "5", "--c", "19",
                        "--M", "1"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("does not satisfy") != std::string::npos);
}

TEST_CASE("certify closes theorem6 for k = 1..2 and round-trips")
{
    auto r = cli_run({"certify", "--theorem", "theorem6", "--k", "1..2"});
    CHECK(r.code == 0);
    CHECK(r.err.find("verdict: closed") != std::string::npos);
    auto tree = cert::parse(r.out);
    CHECK(tree.theorem == "theorem6");
    CHECK(tree.k_values == std::vector<unsigned long>{1, 2});
    auto v = cases::verify_tree(tree);
    CHECK(v.all_claims_verified);
    CHECK(v.closed);
}

TEST_CASE("certify reports the open branch for k = 3")
{
    auto r = cli_run({"certify", "--theorem", "theorem6", "--k", "3"});
    CHECK(r.code == 2);
    CHECK(r.err.find("verdict: open") != std::string::npos);
    CHECK(r.out.find("witness") != std::string::npos);
}

TEST_CASE("certify writes to a file")
{
    std::string path = "/tmp/rn19_test_cert.txt";
    auto r = cli_run({"certify", "--theorem", "lemma1", "--out", path});
    CHECK(r.code == 0);
    std::ifstream f(path);
    std::stringstream buf;
    buf << f.rdbuf();
    auto tree = cert::parse(buf.str());
    CHECK(tree.theorem == "lemma1");
    std::remove(path.c_str());
}

TEST_CASE("argument errors exit with 1")
{
    CHECK(cli_run({"frobnicate"}).code == 1);
    CHECK(cli_run({}).code == 1);
    CHECK(cli_run({"search", "--c", "abc"}).code == 1);
    CHECK(cli_run({"search", "--bogus-flag"}).code == 1);
    CHECK(cli_run({"certify", "--theorem", "theorem9"}).code == 1);
    CHECK(cli_run({"--help"}).code == 0);
}
