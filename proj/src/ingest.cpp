#include "peakcell/ingest.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <iterator>
#include <optional>
#include <vector>

#include "peakcell/errors.hpp"

namespace peakcell {

namespace {

std::string_view trim(std::string_view field) {
    while (!field.empty() && (field.front() == ' ' || field.front() == '\t'))
        field.remove_prefix(1);
    while (!field.empty() && (field.back() == ' ' || field.back() == '\t'))
        field.remove_suffix(1);
    return field;
}

// Whole trimmed field as a double, or nullopt when it is not a number.
std::optional<double> parse_field(std::string_view field) {
    field = trim(field);
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    if (field.empty()) return std::nullopt;
    double value = 0.0;
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || end != field.data() + field.size()) return std::nullopt;
    return value;
}

// Zero-based `column` of a comma-separated record, or nullopt when the
// record has too few fields.
std::optional<std::string_view> select_field(std::string_view record, std::size_t column) {
    std::size_t begin = 0;
    for (std::size_t index = 0;; ++index) {
        const std::size_t comma = record.find(',', begin);
        const std::size_t end = comma == std::string_view::npos ? record.size() : comma;
        if (index == column) return record.substr(begin, end - begin);
        if (comma == std::string_view::npos) return std::nullopt;
        begin = comma + 1;
    }
}

} // namespace

Series generate(const SyntheticSpec& spec) {
    if (spec.n < 1) throw InvalidArgument("sample count must be >= 1");
    const bool trigonometric = spec.kind == SignalKind::kSin || spec.kind == SignalKind::kXSin ||
                               spec.kind == SignalKind::kSinPlusCos3x;
    if (trigonometric && !(spec.scale > 0))
        throw InvalidArgument("scale must be > 0");

    static constexpr std::array<double, 7> kWeek = {5, 9, 9, 9, 9, 9, 4};
    std::vector<double> values(spec.n);
    const double center = double(spec.n - 1) / 2.0;
    for (std::size_t t = 0; t < spec.n; ++t) {
        const double x = spec.scale * double(t);
        switch (spec.kind) {
        case SignalKind::kSin:          values[t] = std::sin(x); break;
        case SignalKind::kXSin:         values[t] = x * std::sin(x); break;
        case SignalKind::kSinPlusCos3x: values[t] = std::sin(x) + std::cos(3.0 * x); break;
        case SignalKind::kParabola:     values[t] = -(double(t) - center) * (double(t) - center); break;
        case SignalKind::kSpike:        values[t] = t == spec.n / 2 ? 1.0 : 0.0; break;
        case SignalKind::kSawtooth:     values[t] = double(t % 2); break;
        case SignalKind::kWeekly:       values[t] = kWeek[t % kWeek.size()]; break;
        case SignalKind::kConstant:     values[t] = 1.0; break;
        case SignalKind::kLinear:       values[t] = double(t); break;
        }
    }
    return Series(std::move(values));
}

Series parse_csv(std::string_view text, std::size_t column) {
    std::vector<double> values;
    bool header_possible = true;
    std::size_t line_number = 0;
    while (!text.empty()) {
        ++line_number;
        const std::size_t newline = text.find('\n');
        std::string_view line = text.substr(0, newline);
        text.remove_prefix(newline == std::string_view::npos ? text.size() : newline + 1);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (trim(line).empty()) continue;

        const auto field = select_field(line, column);
        if (!field) throw ParseError("column out of range", line_number);
        const auto value = parse_field(*field);
        if (!value) {
            if (header_possible) {
                header_possible = false;
                continue;
            }
            throw ParseError("field is not a number", line_number);
        }
        if (!std::isfinite(*value)) throw ParseError("non-finite value", line_number);
        header_possible = false;
        values.push_back(*value);
    }
    if (values.empty()) throw EmptyInput("no data rows");
    return Series(std::move(values));
}

Series parse_csv(std::istream& in, std::size_t column) {
    std::string text(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>{});
    if (in.bad()) throw IoError("failed to read input");
    return parse_csv(std::string_view(text), column);
}

std::string export_mask_csv(const Diagram& diagram) {
    if (diagram.steps() == 0) throw InvalidArgument("diagram has no steps");
    std::string text;
    text.reserve(diagram.steps() * diagram.size() * 2);
    for (std::size_t step = 1; step <= diagram.steps(); ++step) {
        const auto mask = diagram.mask_row(step);
        for (std::size_t t = 0; t < mask.size(); ++t) {
            if (t != 0) text.push_back(',');
            text.push_back(mask[t] == kBlack ? '1' : '0');
        }
        text.push_back('\n');
    }
    return text;
}

std::string export_series_csv(const Series& series) {
    std::string text;
    char buffer[64];
    for (const double value : series) {
        const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
        if (ec != std::errc{}) throw IoError("value formatting failed");
        text.append(buffer, end);
        text.push_back('\n');
    }
    return text;
}

} // namespace peakcell
