// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "stirling/enclosure.hpp"

namespace stirling::verify
{

inline constexpr const char* kVersion = "1.0.0";

/// Failures kept per check; failures_total still counts every instance.
inline constexpr std::size_t kMaxRecordedFailures = 100;

enum class Status
{
    pass,
    fail,
    undecided,
};

const char* to_string(Status s);

struct CheckConfig
{
    std::uint64_t n_min = 1;
    std::uint64_t n_max = 10000;
    Precision p_start{53};
    Precision p_max{256};
    /// Canonical check names; empty means all.
    std::vector<std::string> checks;
    unsigned workers = 1;

    /// Throws std::invalid_argument on a bad configuration.
    void validate() const;
};

struct Failure
{
    std::uint64_t n = 0;
    std::string detail;

    friend bool operator==(const Failure&, const Failure&) = default;
};

struct CheckResult
{
    std::string name;
    /// Where the checked statement comes from: "proof", "derived" (follows
    /// from the proof but is not stated in it) or "external-reference"
    /// (compared against an independently computed pi, rate bands derived).
    std::string label;
    std::uint64_t n_min = 0;
    std::uint64_t n_max = 0;
    Status status = Status::pass;
    int max_bits = 0;
    std::vector<Failure> failures;
    std::uint64_t failures_total = 0;
    double ms = 0;
};

struct Report
{
    std::string version = kVersion;
    CheckConfig config;
    std::vector<CheckResult> results;
    double total_ms = 0;

    bool all_pass() const;
};

/// Check names in report order.
const std::vector<std::string>& canonical_checks();

/// Expand aliases ("all", "exact", "floor") and validate names. The result
/// is deduplicated and in canonical order. Throws std::invalid_argument.
std::vector<std::string> resolve_checks(const std::vector<std::string>& names);

CheckResult check_exact_identities(const CheckConfig& cfg);
CheckResult check_a_decreasing(const CheckConfig& cfg);
CheckResult check_bdiff_window(const CheckConfig& cfg);
CheckResult check_shifted_increasing(const CheckConfig& cfg);
CheckResult check_paper_floor(const CheckConfig& cfg);
CheckResult check_derived_floor(const CheckConfig& cfg);
CheckResult check_limits(const CheckConfig& cfg);

Report run_all(const CheckConfig& cfg);

/// Convergence bands used by check_limits at n = n_max:
/// pi/2 - W_n < (3/5)/n and L_n - sqrt(pi) < (17/50)/n. Both are 1.5x the
/// leading constants measured by a 128-bit sweep over n in {1e2, 1e3, 1e4}
/// (0.3927 and 0.2216), rounded up.
ExactRational wallis_band(std::uint64_t n);
ExactRational lemma_band(std::uint64_t n);

nlohmann::ordered_json to_json(const Report& report, bool with_timing = true);
nlohmann::ordered_json to_json(const CheckResult& result, bool with_timing = true);

} // namespace stirling::verify
