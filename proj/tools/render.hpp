// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "json.hpp"
#include "stirling/enclosure.hpp"

namespace stirling::cli
{

enum class OutputFormat
{
    table,
    csv,
    json,
};

/// Parses "table", "csv" or "json"; throws std::invalid_argument otherwise.
OutputFormat parse_format(const std::string& text);

/// Significant digits needed to tell the endpoints of x apart, plus two
/// guard digits, capped at what precision p can justify.
int display_digits(const Interval& x, Precision p);
/// Digit cap for a point value at precision p.
int point_digits(Precision p);

struct RenderedInterval
{
    std::string lo; //!< rounded toward -infinity
    std::string hi; //!< rounded toward +infinity
};

RenderedInterval render(const Interval& x, Precision p);

/// {"mantissa": "<decimal>", "exponent": e}
nlohmann::json dyadic_json(const Dyadic& d);
/// {"lo", "hi", "lo_dyadic", "hi_dyadic"}
nlohmann::json interval_json(const Interval& x, Precision p);

} // namespace stirling::cli
