// SPDX-License-Identifier: Apache-2.0
#include "render.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stirling::cli
{
namespace
{
constexpr double kLog10Of2 = 0.30102999566398120;

std::int64_t approx_log10(const Dyadic& d)
{
    return static_cast<std::int64_t>(std::floor(static_cast<double>(d.ilog2()) * kLog10Of2));
}

Dyadic magnitude(const Dyadic& d)
{
    return d.sign() < 0 ? -d : d;
}
} // namespace

OutputFormat parse_format(const std::string& text)
{
    if (text == "table")
        return OutputFormat::table;
    if (text == "csv")
        return OutputFormat::csv;
    if (text == "json")
        return OutputFormat::json;
    throw std::invalid_argument("unknown format '" + text + "'");
}

int point_digits(Precision p)
{
    return static_cast<int>(std::ceil(p.significant_bits() * kLog10Of2)) + 2;
}

int display_digits(const Interval& x, Precision p)
{
    const int cap = point_digits(p);
    Dyadic width = x.width();
    if (width.is_zero())
        return cap;
    Dyadic mag = std::max(magnitude(x.lo()), magnitude(x.hi()));
    std::int64_t needed = approx_log10(mag) - approx_log10(width) + 1;
    return static_cast<int>(std::clamp<std::int64_t>(needed + 2, 1, cap));
}

RenderedInterval render(const Interval& x, Precision p)
{
    int digits = display_digits(x, p);
    return {x.lo().to_decimal(digits, Rounding::down), x.hi().to_decimal(digits, Rounding::up)};
}

nlohmann::json dyadic_json(const Dyadic& d)
{
    return {{"mantissa", d.mantissa().get_str()}, {"exponent", d.exponent()}};
}

nlohmann::json interval_json(const Interval& x, Precision p)
{
    RenderedInterval r = render(x, p);
    return {{"lo", r.lo},
            {"hi", r.hi},
            {"lo_dyadic", dyadic_json(x.lo())},
            {"hi_dyadic", dyadic_json(x.hi())}};
}

} // namespace stirling::cli
