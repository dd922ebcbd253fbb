// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include <cstdio>
#include <map>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"
#include "oracle.hpp"

using namespace stirling;
using namespace stirling::test;

namespace
{
struct Run
{
    int code = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "")
{
    std::string cmd = env + " '" STIRLING_CLI_PATH "' " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string golden(const std::string& name)
{
    std::ifstream in(std::string(STIRLING_GOLDEN_DIR) + "/" + name);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::vector<std::string>> csv(const std::string& text)
{
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
    {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ','))
            cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

bool brackets(const std::string& lo, const std::string& hi, const Ref& ref)
{
    Interval x(Dyadic(0), Dyadic(0));
    ExactRational l = parse_decimal(lo);
    ExactRational h = parse_decimal(hi);
    mpq_class ml(l.num(), l.den());
    mpq_class mh(h.num(), h.den());
    return mpfr_cmp_q(ref.lo.get(), ml.get_mpq_t()) >= 0 && mpfr_cmp_q(ref.hi.get(), mh.get_mpq_t()) <= 0;
}
} // namespace

TEST_CASE("golden outputs")
{
    CHECK(run("sequence --seq W --from 1 --to 3 --format csv").out == golden("sequence_W_1_3.csv"));
    CHECK(run("constants --format csv").out == golden("constants_53.csv"));
    CHECK(run("approx 10 --format csv").out == golden("approx_10.csv"));
    CHECK(run("sequence --seq a --from 1 --to 2 --format json").out == golden("sequence_a_1_2.json"));
    CHECK(run("sequence --seq bdiff --from 1 --to 3 --format csv").out == golden("sequence_bdiff_1_3.csv"));
}

TEST_CASE("golden values are correct")
{
    auto w = csv(golden("sequence_W_1_3.csv"));
    REQUIRE(w.size() == 4);
    CHECK(w[0] == std::vector<std::string>{"n", "lo", "hi", "num", "den"});
    CHECK(w[1][3] + "/" + w[1][4] == "4/3");
    CHECK(w[2][3] + "/" + w[2][4] == "64/45");
    CHECK(w[3][3] + "/" + w[3][4] == "256/175");
    CHECK(brackets(w[3][1], w[3][2], ref_rational({256, 175})));

    auto c = csv(golden("constants_53.csv"));
    REQUIRE(c.size() == 7);
    Ref pi = ref_pi();
    Ref two_pi = ref_add(pi, pi);
    Ref half_pi = ref_div_pos(pi, ref_rational(2));
    std::map<std::string, Ref> refs{{"e", ref_e()},
                                    {"pi", pi},
                                    {"sqrt_pi", ref_sqrt(pi)},
                                    {"sqrt_2pi", ref_sqrt(two_pi)},
                                    {"half_pi", half_pi},
                                    {"e_3_4", ref_exp(ref_rational({3, 4}))}};
    for (std::size_t i = 1; i < c.size(); ++i)
    {
        INFO(c[i][0]);
        REQUIRE(refs.count(c[i][0]) == 1);
        CHECK(brackets(c[i][1], c[i][2], refs.at(c[i][0])));
    }

    auto a = csv(golden("approx_10.csv"));
    CHECK(a[0] == std::vector<std::string>{"n", "approx_lo", "approx_hi", "lower", "upper", "rel_err_max"});
    CHECK(parse_decimal(a[1][3]) < ExactRational(3628800));
    CHECK(ExactRational(3628800) < parse_decimal(a[1][4]));
}

TEST_CASE("approx")
{
    Run r = run("approx 10");
    CHECK(r.code == 0);
    CHECK(r.out.find("3628800") != std::string::npos);
    auto rows = csv(run("approx 1 --format csv").out);
    CHECK(parse_decimal(rows[1][3]) < ExactRational(1));
    CHECK(ExactRational(1) < parse_decimal(rows[1][4]));
    CHECK(run("approx 0").code == 2);
    CHECK(run("approx").code == 2);
    CHECK(run("approx 10 --format xml").code == 2);

    auto j = nlohmann::json::parse(run("approx 12 --format json").out);
    CHECK(j.contains("lower"));
    CHECK(j.contains("upper"));
}

TEST_CASE("exact and digits")
{
    CHECK(run("exact 5").out == "120\n");
    CHECK(run("exact 12").out == "479001600\n");
    CHECK(run("exact 0").out == "1\n");
    CHECK(run("exact 2000000").code == 2);
    CHECK(run("exact 30 --cap 20").code == 2);
    CHECK(run("digits 100").out == "158\n");
    CHECK(run("digits 5").out == "3\n");
    CHECK(run("digits 1000").out == "2568\n");
    CHECK(run("digits 0").code == 2);
}

TEST_CASE("sequence")
{
    auto a = csv(run("sequence --seq a --from 1 --to 1 --format csv").out);
    REQUIRE(a.size() == 2);
    CHECK(brackets(a[1][1], a[1][2], ref_e()));
    for (const char* seq : {"a", "b", "ratio", "bdiff", "W", "L"})
    {
        Run r = run(std::string("sequence --seq ") + seq + " --from 1 --to 5 --format json");
        INFO(seq);
        CHECK(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j["rows"].size() == 5);
        CHECK(j["seq"] == seq);
    }
    CHECK(run("sequence --seq a --from 3 --to 2").code == 2);
    CHECK(run("sequence --seq a --from 0 --to 2").code == 2);
    CHECK(run("sequence --seq zeta --from 1 --to 2").code == 2);
}

TEST_CASE("decimal output round-trips against the dyadic endpoints")
{
    auto j = nlohmann::json::parse(run("sequence --seq L --from 1 --to 40 --format json --prec 90").out);
    for (const auto& row : j["rows"])
    {
        Dyadic lo(BigInt(row["lo_dyadic"]["mantissa"].get<std::string>(), 10),
                  row["lo_dyadic"]["exponent"].get<std::int64_t>());
        Dyadic hi(BigInt(row["hi_dyadic"]["mantissa"].get<std::string>(), 10),
                  row["hi_dyadic"]["exponent"].get<std::int64_t>());
        REQUIRE(compare(lo, parse_decimal(row["lo"].get<std::string>())) >= 0);
        REQUIRE(compare(hi, parse_decimal(row["hi"].get<std::string>())) <= 0);
        if (lo != hi)
            REQUIRE(parse_decimal(row["lo"].get<std::string>()) < parse_decimal(row["hi"].get<std::string>()));
    }
}

TEST_CASE("precision from the environment")
{
    std::string at53 = run("constants --format csv").out;
    std::string at128 = run("constants --format csv", "STIRLING_PREC=128").out;
    CHECK(at53 != at128);
    CHECK(run("constants --format csv --prec 128").out == at128);
    CHECK(run("constants --format csv --prec 53", "STIRLING_PREC=128").out == at53);
    CHECK(run("constants", "STIRLING_PREC=abc").code == 2);

    // 128-bit enclosures nest inside the 53-bit ones.
    auto c53 = csv(at53);
    auto c128 = csv(at128);
    for (std::size_t i = 1; i < c53.size(); ++i)
    {
        CHECK(!(parse_decimal(c128[i][1]) < parse_decimal(c53[i][1])));
        CHECK(!(parse_decimal(c53[i][2]) < parse_decimal(c128[i][2])));
    }
}

TEST_CASE("verify")
{
    Run exact = run("verify --max-n 100 --checks exact --workers 2");
    CHECK(exact.code == 0);
    auto j = nlohmann::json::parse(exact.out);
    REQUIRE(j["results"].size() == 1);
    CHECK(j["results"][0]["name"] == "exact-identities");
    CHECK(j["results"][0]["status"] == "pass");

    Run forced = run("verify --prec-start 8 --prec-max 8 --min-n 999995 --max-n 1000000 --checks a-decreasing");
    CHECK(forced.code == 1);
    CHECK(nlohmann::json::parse(forced.out)["results"][0]["status"] == "undecided");

    CHECK(run("verify --checks nope").code == 2);
    CHECK(run("verify --min-n 0").code == 2);
    CHECK(run("verify --prec-start 128 --prec-max 64 --max-n 10").code == 2);
    CHECK(run("verify --workers 0 --max-n 10").code == 2);

    std::string path = "cli_report_test.json";
    std::remove(path.c_str());
    Run to_file = run("verify --max-n 30 --checks floor --report " + path);
    CHECK(to_file.code == 0);
    CHECK(to_file.out.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    auto rep = nlohmann::json::parse(in);
    CHECK(rep["results"].size() == 2);
    std::remove(path.c_str());
}

TEST_CASE("help and usage")
{
    CHECK(run("--help").code == 0);
    CHECK(run("").code == 2);
    CHECK(run("frobnicate").code == 2);
}
