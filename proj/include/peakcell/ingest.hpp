#pragma once

#include <cstddef>
#include <iosfwd>
#include <numbers>
#include <string>
#include <string_view>

#include "peakcell/diagram.hpp"
#include "peakcell/series.hpp"

namespace peakcell {

enum class SignalKind {
    kSin,          // sin(scale*t)
    kXSin,         // (scale*t)*sin(scale*t)
    kSinPlusCos3x, // sin(scale*t) + cos(3*scale*t)
    kParabola,     // -(t - (n-1)/2)^2
    kSpike,        // zeros, 1 at t = n/2
    kSawtooth,     // t mod 2
    kWeekly,       // tile of [5,9,9,9,9,9,4]
    kConstant,     // all 1
    kLinear,       // t
};

// 50 samples per trigonometric cycle.
inline constexpr double kDefaultScale = 2.0 * std::numbers::pi / 50.0;

struct SyntheticSpec {
    SignalKind kind = SignalKind::kSin;
    std::size_t n = 0;
    double scale = kDefaultScale;
};

Series generate(const SyntheticSpec& spec);

/// One record per line, comma-separated; takes the given zero-based
/// column. A first non-empty line whose selected field is not numeric
/// is skipped as a header. Empty lines are ignored; LF and CRLF both
/// accepted. Throws ParseError (with the 1-based line number) on bad
/// fields or missing columns, EmptyInput when no data rows remain.
Series parse_csv(std::string_view text, std::size_t column = 0);
Series parse_csv(std::istream& in, std::size_t column = 0);

/// K lines of N comma-separated 0/1 values, 1 = black.
std::string export_mask_csv(const Diagram& diagram);

/// One value per line, shortest digits that parse back exactly.
std::string export_series_csv(const Series& series);

} // namespace peakcell
