// SPDX-License-Identifier: Apache-2.0
//
// stirling: certified Stirling bounds, sequence dumps and the proof verifier.
//
// Exit codes: 0 success / all checks pass, 1 a check failed or could not be
// decided, 2 usage error.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <thread>

#include "CLI11.hpp"
#include "render.hpp"
#include "stirling/sequences.hpp"
#include "stirling/stirling.hpp"
#include "stirling/verifier.hpp"
#include "stirling/wallis.hpp"

using namespace stirling;
using namespace stirling::cli;

namespace
{
constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kDefaultPrecision = 53;
constexpr std::uint64_t kDefaultExactCap = 1000000;
// approx prints the exact factorial alongside the bounds up to this n.
constexpr std::uint64_t kShowExactUpTo = 100;

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

int default_precision()
{
    const char* env = std::getenv("STIRLING_PREC");
    if (!env || !*env)
        return kDefaultPrecision;
    try
    {
        std::size_t used = 0;
        int bits = std::stoi(env, &used);
        if (used != std::string(env).size())
            throw std::invalid_argument(env);
        return bits;
    }
    catch (const std::exception&)
    {
        throw UsageError(std::string("STIRLING_PREC is not an integer: ") + env);
    }
}

Precision make_precision(int bits)
{
    try
    {
        return Precision(bits);
    }
    catch (const DomainError& e)
    {
        throw UsageError(e.what());
    }
}

void require_n(std::uint64_t n)
{
    if (n < 1)
        throw UsageError("n must be at least 1");
}

//---------------------------------------------------------------------------//
// approx

int cmd_approx(std::uint64_t n, int bits, OutputFormat format)
{
    require_n(n);
    Precision p = make_precision(bits);
    FactorialBounds fb = factorial_bounds(n, p);
    Interval rel = sub(fb.correction, Interval(Dyadic(1)), p.guarded());
    rel = round_outward(rel, p);
    const int digits = point_digits(p);
    const std::string lower = fb.lower.to_decimal(digits, Rounding::down);
    const std::string upper = fb.upper.to_decimal(digits, Rounding::up);
    const std::string rel_bound = rel.hi().to_decimal(digits, Rounding::up);
    RenderedInterval approx = render(fb.approx, p);
    std::optional<std::string> exact;
    if (n <= kShowExactUpTo)
        exact = factorial(n).to_string();

    switch (format)
    {
        case OutputFormat::table:
        {
            auto row = [](const char* key, const std::string& value) {
                std::cout << std::left << std::setw(14) << key << value << '\n';
            };
            row("n", std::to_string(n));
            row("precision", std::to_string(bits));
            row("approx", "[" + approx.lo + ", " + approx.hi + "]");
            row("lower", lower);
            row("upper", upper);
            row("rel_err_max", rel_bound);
            if (exact)
                row("exact", *exact);
            break;
        }
        case OutputFormat::csv:
            std::cout << "n,approx_lo,approx_hi,lower,upper,rel_err_max\n"
                      << n << ',' << approx.lo << ',' << approx.hi << ',' << lower
                      << ',' << upper << ',' << rel_bound << '\n';
            break;
        case OutputFormat::json:
        {
            nlohmann::json j{
                {"n", n},
                {"prec", bits},
                {"approx", interval_json(fb.approx, p)},
                {"lower", {{"decimal", lower}, {"dyadic", dyadic_json(fb.lower)}}},
                {"upper", {{"decimal", upper}, {"dyadic", dyadic_json(fb.upper)}}},
                {"correction", interval_json(fb.correction, p)},
                {"rel_err_max", rel_bound},
            };
            if (exact)
                j["exact"] = *exact;
            std::cout << j.dump(2) << '\n';
            break;
        }
    }
    return kExitOk;
}

//---------------------------------------------------------------------------//
// exact, digits

int cmd_exact(std::uint64_t n, std::uint64_t cap)
{
    if (n > cap)
        throw UsageError("n = " + std::to_string(n) + " exceeds the safety cap "
                         + std::to_string(cap) + " (raise it with --cap)");
    std::cout << factorial(n).to_string() << '\n';
    return kExitOk;
}

int cmd_digits(std::uint64_t n)
{
    require_n(n);
    std::cout << digit_count(n) << '\n';
    return kExitOk;
}

//---------------------------------------------------------------------------//
// sequence

struct SequenceRow
{
    std::uint64_t n;
    Interval value;
    std::optional<ExactRational> exact;
};

std::vector<SequenceRow> sequence_rows(const std::string& seq,
                                       std::uint64_t from,
                                       std::uint64_t to,
                                       Precision p)
{
    std::vector<SequenceRow> rows;
    if (seq == "a" || seq == "b")
    {
        std::optional<ASweep> a;
        std::optional<BSweep> b;
        if (seq == "a")
            a.emplace(from, p);
        else
            b.emplace(from, p);
        for (std::uint64_t n = from; n <= to; ++n)
        {
            rows.push_back({n, a ? a->value() : b->value(), std::nullopt});
            if (n == to)
                break;
            a ? a->advance() : b->advance();
        }
    }
    else if (seq == "ratio" || seq == "bdiff")
    {
        for (std::uint64_t n = from; n <= to; ++n)
        {
            rows.push_back({n, seq == "ratio" ? ratio_of(n, p) : b_diff_series(n, p), std::nullopt});
            if (n == to)
                break;
        }
    }
    else if (seq == "W" || seq == "L")
    {
        WallisSweep w(from);
        for (std::uint64_t n = from; n <= to; ++n)
        {
            if (seq == "W")
                rows.push_back({n, from_rational(w.partial(), p), w.partial()});
            else
                rows.push_back({n, lemma_L_from_ratio(n, w.ratio(), p), std::nullopt});
            if (n == to)
                break;
            w.advance();
        }
    }
    else
    {
        throw UsageError("unknown sequence '" + seq + "' (expected a, b, ratio, bdiff, W or L)");
    }
    return rows;
}

int cmd_sequence(const std::string& seq,
                 std::uint64_t from,
                 std::uint64_t to,
                 int bits,
                 OutputFormat format)
{
    if (from < 1 || to < from)
        throw UsageError("need 1 <= --from <= --to");
    Precision p = make_precision(bits);
    std::vector<SequenceRow> rows = sequence_rows(seq, from, to, p);
    const bool has_exact = seq == "W";

    switch (format)
    {
        case OutputFormat::table:
        {
            std::cout << std::left << std::setw(8) << "n" << std::setw(28) << "lo"
                      << std::setw(28) << "hi";
            if (has_exact)
                std::cout << "exact";
            std::cout << '\n';
            for (const auto& row : rows)
            {
                RenderedInterval r = render(row.value, p);
                std::cout << std::left << std::setw(8) << row.n << std::setw(28) << r.lo
                          << std::setw(28) << r.hi;
                if (row.exact)
                    std::cout << row.exact->to_string();
                std::cout << '\n';
            }
            break;
        }
        case OutputFormat::csv:
            std::cout << "n,lo,hi" << (has_exact ? ",num,den" : "") << '\n';
            for (const auto& row : rows)
            {
                RenderedInterval r = render(row.value, p);
                std::cout << row.n << ',' << r.lo << ',' << r.hi;
                if (row.exact)
                    std::cout << ',' << row.exact->num().get_str() << ','
                              << row.exact->den().get_str();
                std::cout << '\n';
            }
            break;
        case OutputFormat::json:
        {
            nlohmann::json out = nlohmann::json::array();
            for (const auto& row : rows)
            {
                nlohmann::json j = interval_json(row.value, p);
                j["n"] = row.n;
                if (row.exact)
                {
                    j["num"] = row.exact->num().get_str();
                    j["den"] = row.exact->den().get_str();
                }
                out.push_back(std::move(j));
            }
            std::cout << nlohmann::json{{"seq", seq}, {"prec", bits}, {"rows", out}}.dump(2)
                      << '\n';
            break;
        }
    }
    return kExitOk;
}

//---------------------------------------------------------------------------//
// verify

int cmd_verify(const verify::CheckConfig& cfg, const std::string& report_path)
{
    try
    {
        cfg.validate();
    }
    catch (const std::invalid_argument& e)
    {
        throw UsageError(e.what());
    }
    verify::Report report = verify::run_all(cfg);
    const std::string text = verify::to_json(report).dump(2);
    if (report_path.empty() || report_path == "-")
    {
        std::cout << text << '\n';
    }
    else
    {
        std::ofstream out(report_path);
        if (!out)
            throw UsageError("cannot write report to " + report_path);
        out << text << '\n';
    }
    for (const auto& r : report.results)
    {
        std::cerr << std::left << std::setw(20) << r.name << verify::to_string(r.status)
                  << "  (n " << r.n_min << ".." << r.n_max << ", " << r.max_bits
                  << " bits, " << r.failures_total << " failures, " << std::fixed
                  << std::setprecision(0) << r.ms << " ms)\n";
    }
    return report.all_pass() ? kExitOk : kExitFailed;
}

//---------------------------------------------------------------------------//
// constants

int cmd_constants(int bits, OutputFormat format)
{
    Precision p = make_precision(bits);
    const std::vector<std::pair<std::string, Interval>> values{
        {"e", constant_e(p)},
        {"pi", constant_pi(p)},
        {"sqrt_pi", sqrt_pi(p)},
        {"sqrt_2pi", sqrt_two_pi(p)},
        {"half_pi", half_pi(p)},
        {"e_3_4", lower_bound_const(p)},
    };
    switch (format)
    {
        case OutputFormat::table:
            for (const auto& [name, x] : values)
            {
                RenderedInterval r = render(x, p);
                std::cout << std::left << std::setw(10) << name << "[" << r.lo << ", "
                          << r.hi << "]\n";
            }
            break;
        case OutputFormat::csv:
            std::cout << "name,lo,hi\n";
            for (const auto& [name, x] : values)
            {
                RenderedInterval r = render(x, p);
                std::cout << name << ',' << r.lo << ',' << r.hi << '\n';
            }
            break;
        case OutputFormat::json:
        {
            nlohmann::json out = nlohmann::json::array();
            for (const auto& [name, x] : values)
            {
                nlohmann::json j = interval_json(x, p);
                j["name"] = name;
                out.push_back(std::move(j));
            }
            std::cout << nlohmann::json{{"prec", bits}, {"constants", out}}.dump(2) << '\n';
            break;
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Certified Stirling bounds and proof verifier"};
    app.require_subcommand(1);

    int prec = kDefaultPrecision;
    std::string format_text = "table";
    std::uint64_t n = 0;

    auto add_prec = [&](CLI::App* cmd) {
        cmd->add_option("--prec", prec, "working precision in bits (env STIRLING_PREC)");
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_text, "table, csv or json")
            ->check(CLI::IsMember({"table", "csv", "json"}));
    };

    auto* approx = app.add_subcommand("approx", "certified bounds on n!");
    approx->add_option("n", n, "n >= 1")->required();
    add_prec(approx);
    add_format(approx);

    std::uint64_t cap = kDefaultExactCap;
    auto* exact = app.add_subcommand("exact", "exact decimal n!");
    exact->add_option("n", n)->required();
    exact->add_option("--cap", cap, "largest n accepted");

    auto* digits = app.add_subcommand("digits", "number of decimal digits of n!");
    digits->add_option("n", n)->required();

    std::string seq;
    std::uint64_t from = 1;
    std::uint64_t to = 10;
    auto* sequence = app.add_subcommand("sequence", "dump a_n, b_n, ratio, bdiff, W_n or L_n");
    sequence->add_option("--seq", seq, "a, b, ratio, bdiff, W or L")->required();
    sequence->add_option("--from", from, "first n");
    sequence->add_option("--to", to, "last n");
    add_prec(sequence);
    add_format(sequence);

    verify::CheckConfig cfg;
    int prec_start = kDefaultPrecision;
    int prec_max = cfg.p_max.bits();
    unsigned hw = std::thread::hardware_concurrency();
    cfg.workers = hw == 0 ? 1 : hw;
    std::string report_path;
    auto* verify_cmd = app.add_subcommand("verify", "machine-check the proof's inequalities");
    verify_cmd->add_option("--min-n", cfg.n_min, "first n");
    verify_cmd->add_option("--max-n", cfg.n_max, "last n");
    auto* start_opt = verify_cmd->add_option("--prec-start", prec_start, "initial precision");
    verify_cmd->add_option("--prec-max", prec_max, "precision ceiling");
    verify_cmd->add_option("--checks", cfg.checks, "comma-separated check names")
        ->delimiter(',');
    verify_cmd->add_option("--workers", cfg.workers, "worker threads");
    verify_cmd->add_option("--report", report_path, "write the JSON report here");

    auto* constants = app.add_subcommand("constants", "enclosures of e, pi and friends");
    add_prec(constants);
    add_format(constants);

    try
    {
        prec = default_precision();
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }
    catch (const UsageError& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try
    {
        OutputFormat format = parse_format(format_text);
        if (*approx)
            return cmd_approx(n, prec, format);
        if (*exact)
            return cmd_exact(n, cap);
        if (*digits)
            return cmd_digits(n);
        if (*sequence)
            return cmd_sequence(seq, from, to, prec, format);
        if (*verify_cmd)
        {
            if (!*start_opt)
                prec_start = std::min(prec_start, prec_max);
            cfg.p_start = make_precision(prec_start);
            cfg.p_max = make_precision(prec_max);
            return cmd_verify(cfg, report_path);
        }
        if (*constants)
            return cmd_constants(prec, format);
    }
    catch (const UsageError& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    catch (const DomainError& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    catch (const UndecidedError& e)
    {
        std::cerr << "undecided: " << e.what() << '\n';
        return kExitFailed;
    }
    return kExitUsage;
}
