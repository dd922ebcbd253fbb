// SPDX-License-Identifier: Apache-2.0
#include "stirling/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <set>
#include <stdexcept>

#include "stirling/sequences.hpp"
#include "stirling/stirling.hpp"
#include "stirling/wallis.hpp"

namespace stirling::verify
{
namespace
{
using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string show(const Interval& x)
{
    return "[" + x.lo().to_decimal(20, Rounding::down) + ", "
           + x.hi().to_decimal(20, Rounding::up) + "]";
}

TriState both(TriState a, TriState b)
{
    if (a == TriState::certainly_false || b == TriState::certainly_false)
        return TriState::certainly_false;
    if (a == TriState::certainly_true && b == TriState::certainly_true)
        return TriState::certainly_true;
    return TriState::undecided;
}

struct Outcome
{
    TriState state;
    int bits;
};

// Evaluate at p_start, then double the precision up to p_max until the
// comparison is decided. `first` tells the callback it may reuse sweep state.
template<class F>
Outcome escalate(const CheckConfig& cfg, F&& at)
{
    int bits = cfg.p_start.bits();
    bool first = true;
    for (;;)
    {
        TriState t = at(Precision(bits), first);
        if (t != TriState::undecided || bits >= cfg.p_max.bits())
            return {t, bits};
        first = false;
        bits = std::min(2 * bits, cfg.p_max.bits());
    }
}

struct Tally
{
    std::vector<Failure> failures;
    std::uint64_t total = 0;
    bool any_fail = false;
    bool any_undecided = false;
    int max_bits = 0;

    void note_bits(int bits) { max_bits = std::max(max_bits, bits); }

    void fail(std::uint64_t n, std::string detail)
    {
        any_fail = true;
        push(n, std::move(detail));
    }

    void record(std::uint64_t n, const Outcome& o, const std::string& what)
    {
        note_bits(o.bits);
        if (o.state == TriState::certainly_true)
            return;
        if (o.state == TriState::certainly_false)
        {
            any_fail = true;
            push(n, what + " is false at " + std::to_string(o.bits) + " bits");
        }
        else
        {
            any_undecided = true;
            push(n, what + " undecided at " + std::to_string(o.bits) + " bits");
        }
    }

    void merge(Tally&& other)
    {
        for (auto& f : other.failures)
        {
            if (failures.size() < kMaxRecordedFailures)
                failures.push_back(std::move(f));
        }
        total += other.total;
        any_fail = any_fail || other.any_fail;
        any_undecided = any_undecided || other.any_undecided;
        max_bits = std::max(max_bits, other.max_bits);
    }

  private:
    void push(std::uint64_t n, std::string detail)
    {
        ++total;
        if (failures.size() < kMaxRecordedFailures)
            failures.push_back({n, std::move(detail)});
    }
};

// Split [lo, hi] into contiguous chunks, one per worker, and merge the
// tallies in chunk order so the outcome does not depend on scheduling.
template<class F>
Tally over_range(std::uint64_t lo, std::uint64_t hi, unsigned workers, F&& chunk)
{
    Tally total;
    if (lo > hi)
        return total;
    std::uint64_t count = hi - lo + 1;
    std::uint64_t parts = std::min<std::uint64_t>(std::max(1u, workers), count);
    if (parts == 1)
        return chunk(lo, hi);

    std::vector<std::future<Tally>> pending;
    std::uint64_t start = lo;
    for (std::uint64_t i = 0; i < parts; ++i)
    {
        std::uint64_t size = count / parts + (i < count % parts ? 1 : 0);
        std::uint64_t end = start + size - 1;
        pending.push_back(std::async(std::launch::async, [&chunk, start, end] {
            return chunk(start, end);
        }));
        start = end + 1;
    }
    for (auto& f : pending)
        total.merge(f.get());
    return total;
}

CheckResult finish(std::string name,
                   std::string label,
                   std::uint64_t n_min,
                   std::uint64_t n_max,
                   Tally tally,
                   Clock::time_point start)
{
    CheckResult r;
    r.name = std::move(name);
    r.label = std::move(label);
    r.n_min = n_min;
    r.n_max = n_max;
    r.status = tally.any_fail ? Status::fail
               : tally.any_undecided ? Status::undecided
                                     : Status::pass;
    r.max_bits = tally.max_bits;
    r.failures = std::move(tally.failures);
    r.failures_total = tally.total;
    r.ms = elapsed_ms(start);
    return r;
}

Interval quarter_over(std::uint64_t n, Precision p)
{
    return from_rational(ExactRational(BigInt(1), BigInt(4) * n), p);
}

using CheckFn = CheckResult (*)(const CheckConfig&);

struct CheckEntry
{
    const char* name;
    CheckFn fn;
};

const std::vector<CheckEntry>& registry()
{
    static const std::vector<CheckEntry> entries{
        {"exact-identities", &check_exact_identities},
        {"a-decreasing", &check_a_decreasing},
        {"bdiff-window", &check_bdiff_window},
        {"shifted-increasing", &check_shifted_increasing},
        {"paper-floor", &check_paper_floor},
        {"derived-floor", &check_derived_floor},
        {"limits", &check_limits},
    };
    return entries;
}

template<class ConstFn>
CheckResult check_floor(const CheckConfig& cfg,
                        const char* name,
                        const char* label,
                        ConstFn&& floor_const)
{
    auto start = Clock::now();
    const Precision p0 = cfg.p_start;
    Tally tally = over_range(
        cfg.n_min, cfg.n_max, cfg.workers, [&](std::uint64_t lo, std::uint64_t hi) {
            Tally t;
            ASweep a(lo, p0);
            for (std::uint64_t n = lo; n <= hi; ++n)
            {
                Interval a_n = a.value();
                Outcome o = escalate(cfg, [&](Precision p, bool first) {
                    return certainly_lt(floor_const(p), first ? a_n : a_of(n, p));
                });
                t.record(n, o, std::string("floor < a_n"));
                if (n < hi)
                    a.advance();
            }
            return t;
        });
    return finish(name, label, cfg.n_min, cfg.n_max, std::move(tally), start);
}
} // namespace

//---------------------------------------------------------------------------//
const char* to_string(Status s)
{
    switch (s)
    {
        case Status::pass:
            return "pass";
        case Status::fail:
            return "fail";
        case Status::undecided:
            return "undecided";
    }
    return "?";
}

void CheckConfig::validate() const
{
    if (n_min < 1)
        throw std::invalid_argument("n_min must be at least 1");
    if (n_max < n_min)
        throw std::invalid_argument("n_max must not be below n_min");
    if (p_max < p_start)
        throw std::invalid_argument("p_start must not exceed p_max");
    if (workers < 1)
        throw std::invalid_argument("workers must be at least 1");
    resolve_checks(checks);
}

bool Report::all_pass() const
{
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) {
        return r.status == Status::pass;
    });
}

const std::vector<std::string>& canonical_checks()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& e : registry())
            v.emplace_back(e.name);
        return v;
    }();
    return names;
}

std::vector<std::string> resolve_checks(const std::vector<std::string>& names)
{
    const auto& all = canonical_checks();
    if (names.empty())
        return all;
    std::set<std::string> wanted;
    for (const auto& name : names)
    {
        if (name == "all")
            wanted.insert(all.begin(), all.end());
        else if (name == "exact")
            wanted.insert("exact-identities");
        else if (name == "floor")
            wanted.insert({"paper-floor", "derived-floor"});
        else if (std::find(all.begin(), all.end(), name) != all.end())
            wanted.insert(name);
        else
            throw std::invalid_argument("unknown check '" + name + "'");
    }
    std::vector<std::string> out;
    for (const auto& name : all)
    {
        if (wanted.count(name))
            out.push_back(name);
    }
    return out;
}

ExactRational wallis_band(std::uint64_t n)
{
    return {BigInt(3), BigInt(5) * n};
}

ExactRational lemma_band(std::uint64_t n)
{
    return {BigInt(17), BigInt(50) * n};
}

//---------------------------------------------------------------------------//
CheckResult check_exact_identities(const CheckConfig& cfg)
{
    auto start = Clock::now();
    // The double factorial identities also hold at n = 0.
    const std::uint64_t first = cfg.n_min == 1 ? 0 : cfg.n_min;
    Tally tally = over_range(
        first, cfg.n_max, cfg.workers, [](std::uint64_t lo, std::uint64_t hi) {
            Tally t;
            BigInt fact = factorial(lo).big();
            BigInt fact2 = factorial(2 * lo).big();
            BigInt even = double_fact_even(lo).big();
            BigInt odd = double_fact_odd(lo).big();
            std::optional<WallisSweep> wallis;
            for (std::uint64_t n = lo; n <= hi; ++n)
            {
                const BigInt two_n_plus_1 = BigInt(2) * n + 1;
                if (even * odd != fact2)
                    t.fail(n, "(2n)!! (2n-1)!! != (2n)!");
                BigInt shifted;
                mpz_mul_2exp(shifted.get_mpz_t(), fact.get_mpz_t(), n);
                if (even != shifted)
                    t.fail(n, "(2n)!! != 2^n n!");
                if (n >= 1)
                {
                    if (!wallis)
                        wallis.emplace(n);
                    const ExactRational& w = wallis->partial();
                    // W_n from double factorials, cross-multiplied.
                    if (BigInt(w.num() * odd * odd * two_n_plus_1)
                        != BigInt(w.den() * even * even))
                        t.fail(n, "running W_n != (2n)!!^2/((2n-1)!!^2 (2n+1))");
                    // 2^(4n) n!^4 / ((2n)!^2 (2n+1)) == W_n
                    BigInt lemma_num;
                    mpz_mul_2exp(lemma_num.get_mpz_t(),
                                 BigInt(fact * fact * fact * fact).get_mpz_t(),
                                 4 * n);
                    BigInt lemma_den = fact2 * fact2 * two_n_plus_1;
                    if (BigInt(lemma_num * w.den()) != BigInt(lemma_den * w.num()))
                        t.fail(n, "2^(4n) n!^4/((2n)!^2 (2n+1)) != W_n");
                    // W_n (2n+1) == (4^n n!^2/(2n)!)^2
                    const ExactRational& c = wallis->ratio();
                    if (BigInt(w.num() * two_n_plus_1 * c.den() * c.den())
                        != BigInt(c.num() * c.num() * w.den()))
                        t.fail(n, "W_n (2n+1) != (4^n n!^2/(2n)!)^2");
                }
                if (n == hi)
                    break;
                fact *= n + 1;
                fact2 *= BigInt(2 * n + 1) * (2 * n + 2);
                even *= 2 * (n + 1);
                odd *= 2 * n + 1;
                if (wallis)
                    wallis->advance();
            }
            return t;
        });
    return finish("exact-identities", "proof", first, cfg.n_max, std::move(tally), start);
}

CheckResult check_a_decreasing(const CheckConfig& cfg)
{
    auto start = Clock::now();
    const Precision p0 = cfg.p_start;
    Tally tally = over_range(
        cfg.n_min, cfg.n_max - 1, cfg.workers, [&](std::uint64_t lo, std::uint64_t hi) {
            Tally t;
            ASweep a(lo, p0);
            Interval cur = a.value();
            for (std::uint64_t n = lo; n <= hi; ++n)
            {
                a.advance();
                Interval next = a.value();
                Outcome o = escalate(cfg, [&](Precision p, bool first) {
                    if (first)
                        return certainly_lt(next, cur);
                    return certainly_lt(a_of(n + 1, p), a_of(n, p));
                });
                t.record(n, o, "a_{n+1} < a_n");
                cur = std::move(next);
            }
            return t;
        });
    return finish("a-decreasing", "proof", cfg.n_min, cfg.n_max, std::move(tally), start);
}

CheckResult check_bdiff_window(const CheckConfig& cfg)
{
    auto start = Clock::now();
    const Precision p0 = cfg.p_start;
    Tally tally = over_range(
        cfg.n_min, cfg.n_max - 1, cfg.workers, [&](std::uint64_t lo, std::uint64_t hi) {
            Tally t;
            BSweep b(lo, p0);
            Interval cur = b.value();
            for (std::uint64_t n = lo; n <= hi; ++n)
            {
                b.advance();
                Interval next = b.value();
                Interval series = b_diff_series(n, p0);
                const ExactRational tail = tail_of(n);
                Outcome o = escalate(cfg, [&](Precision p, bool first) {
                    Interval s = first ? series : b_diff_series(n, p);
                    return both(certainly_lt(Interval(Dyadic()), s),
                                certainly_lt(s, from_rational(tail, p)));
                });
                t.record(n, o, "0 < b_n - b_{n+1} < 1/(4n) - 1/(4(n+1))");
                Interval direct = sub(cur, next, p0);
                if (!series.intersects(direct))
                {
                    t.fail(n, "series " + show(series) + " misses b_n - b_{n+1} "
                                  + show(direct));
                }
                cur = std::move(next);
            }
            return t;
        });
    return finish("bdiff-window", "proof", cfg.n_min, cfg.n_max, std::move(tally), start);
}

CheckResult check_shifted_increasing(const CheckConfig& cfg)
{
    auto start = Clock::now();
    const Precision p0 = cfg.p_start;
    Tally tally = over_range(
        cfg.n_min, cfg.n_max - 1, cfg.workers, [&](std::uint64_t lo, std::uint64_t hi) {
            Tally t;
            BSweep b(lo, p0);
            Interval cur = b.value();
            for (std::uint64_t n = lo; n <= hi; ++n)
            {
                b.advance();
                Interval next = b.value();
                Outcome o = escalate(cfg, [&](Precision p, bool first) {
                    Interval bn = first ? cur : b_of(n, p);
                    Interval bn1 = first ? next : b_of(n + 1, p);
                    return certainly_lt(sub(bn, quarter_over(n, p), p),
                                        sub(bn1, quarter_over(n + 1, p), p));
                });
                t.record(n, o, "b_n - 1/(4n) < b_{n+1} - 1/(4(n+1))");
                cur = std::move(next);
            }
            return t;
        });
    return finish(
        "shifted-increasing", "proof", cfg.n_min, cfg.n_max, std::move(tally), start);
}

CheckResult check_paper_floor(const CheckConfig& cfg)
{
    return check_floor(cfg, "paper-floor", "proof", [](Precision p) {
        return lower_bound_const(p);
    });
}

CheckResult check_derived_floor(const CheckConfig& cfg)
{
    return check_floor(cfg, "derived-floor", "derived", [](Precision p) {
        return sqrt_two_pi(p);
    });
}

CheckResult check_limits(const CheckConfig& cfg)
{
    auto start = Clock::now();
    const std::uint64_t n = cfg.n_max;
    Tally t;

    const ExactRational w = wallis_partial(n);
    t.record(n,
             escalate(cfg, [&](Precision p, bool) {
                 Interval hp = half_pi(p);
                 Interval wi = from_rational(w, p);
                 return both(certainly_lt(wi, hp),
                             certainly_lt(sub(hp, wi, p), from_rational(wallis_band(n), p)));
             }),
             "0 < pi/2 - W_n < 0.6/n");

    const ExactRational ratio = central_ratio(n);
    t.record(n,
             escalate(cfg, [&](Precision p, bool) {
                 Interval l = lemma_L_from_ratio(n, ratio, p);
                 Interval root = sqrt_pi(p);
                 return both(certainly_lt(root, l),
                             certainly_lt(sub(l, root, p), from_rational(lemma_band(n), p)));
             }),
             "0 < L_n - sqrt(pi) < 0.34/n");

    t.record(n,
             escalate(cfg, [&](Precision p, bool) {
                 Interval a = a_of(n, p);
                 Interval root = sqrt_two_pi(p);
                 Interval corr = sub(exp(quarter_over(n, p), p), Interval(Dyadic(1)), p);
                 Interval band = mul(mul(corr, root, p),
                                     from_rational(ExactRational(BigInt(11), BigInt(10)), p),
                                     p);
                 return both(certainly_lt(root, a), certainly_lt(sub(a, root, p), band));
             }),
             "0 < a_n - sqrt(2 pi) < 1.1 (e^(1/(4n)) - 1) sqrt(2 pi)");

    return finish("limits", "external-reference", n, n, std::move(t), start);
}

Report run_all(const CheckConfig& cfg)
{
    cfg.validate();
    auto start = Clock::now();
    Report report;
    report.config = cfg;
    report.config.checks = resolve_checks(cfg.checks);
    for (const auto& name : report.config.checks)
    {
        for (const auto& entry : registry())
        {
            if (name == entry.name)
                report.results.push_back(entry.fn(cfg));
        }
    }
    report.total_ms = elapsed_ms(start);
    return report;
}

//---------------------------------------------------------------------------//
nlohmann::ordered_json to_json(const CheckResult& r, bool with_timing)
{
    nlohmann::ordered_json failures = nlohmann::ordered_json::array();
    for (const auto& f : r.failures)
        failures.push_back({{"n", f.n}, {"detail", f.detail}});
    nlohmann::ordered_json j{
        {"name", r.name},
        {"label", r.label},
        {"n_min", r.n_min},
        {"n_max", r.n_max},
        {"status", to_string(r.status)},
        {"max_bits", r.max_bits},
        {"failures", std::move(failures)},
        {"failures_total", r.failures_total},
    };
    if (with_timing)
        j["ms"] = r.ms;
    return j;
}

nlohmann::ordered_json to_json(const Report& report, bool with_timing)
{
    nlohmann::ordered_json results = nlohmann::ordered_json::array();
    for (const auto& r : report.results)
        results.push_back(to_json(r, with_timing));
    nlohmann::ordered_json j{
        {"version", report.version},
        {"config",
         {
             {"n_min", report.config.n_min},
             {"n_max", report.config.n_max},
             {"p_start", report.config.p_start.bits()},
             {"p_max", report.config.p_max.bits()},
             {"checks", report.config.checks},
             {"workers", report.config.workers},
         }},
        {"results", std::move(results)},
    };
    if (with_timing)
        j["total_ms"] = report.total_ms;
    return j;
}

} // namespace stirling::verify
