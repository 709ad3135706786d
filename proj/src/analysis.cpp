#include "peakcell/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "peakcell/errors.hpp"

namespace peakcell {
namespace {

// Early rows carry the jaggedness evidence; long runs end in all-white
// rows that would only dilute the window fractions.
constexpr std::size_t kInstabilityRows = 32;

constexpr double kAcceptFloor = 0.2;

void require_steps(const Diagram& diagram) {
    if (diagram.steps() == 0) {
        throw InvalidArgument("diagram has no steps");
    }
}

// Normalized autocorrelation of the mean-removed profile, lags
// [0, n/2]. All zeros when the profile has no variance.
std::vector<double> autocorrelation(const std::vector<int>& depths) {
    const std::size_t n = depths.size();
    double mean = 0.0;
    for (int d : depths) mean += d;
    mean /= static_cast<double>(n);

    std::vector<double> centered(n);
    for (std::size_t t = 0; t < n; ++t) centered[t] = depths[t] - mean;

    double denom = 0.0;
    for (double v : centered) denom += v * v;

    std::vector<double> r(n / 2 + 1, 0.0);
    if (denom == 0.0) return r;
    for (std::size_t lag = 0; lag < r.size(); ++lag) {
        double sum = 0.0;
        for (std::size_t t = 0; t + lag < n; ++t) sum += centered[t] * centered[t + lag];
        r[lag] = sum / denom;
    }
    return r;
}

} // namespace

DepthProfile depth_profile(const Diagram& diagram) {
    require_steps(diagram);
    DepthProfile profile;
    profile.depths.assign(diagram.size(), 0);
    for (std::size_t k = 1; k <= diagram.steps(); ++k) {
        auto row = diagram.mask_row(k);
        for (std::size_t t = 0; t < row.size(); ++t) {
            profile.depths[t] += row[t] == kBlack ? 1 : 0;
        }
    }
    return profile;
}

std::vector<PeriodEstimate> estimate_periods(const Diagram& diagram,
                                             std::size_t max_candidates) {
    require_steps(diagram);
    const std::size_t n = diagram.size();
    if (n < 8) {
        throw InvalidArgument("series too short for period estimation (need N >= 8, got " +
                              std::to_string(n) + ")");
    }

    const std::vector<double> r = autocorrelation(depth_profile(diagram).depths);

    // Candidate lags need both neighbors inside the computed range.
    // r(1) only serves as context for lag 2; a smooth slowly-decaying
    // autocorrelation must not read as period 2 at the range boundary.
    std::vector<PeriodEstimate> candidates;
    for (std::size_t lag = 2; lag + 1 < r.size(); ++lag) {
        if (r[lag] >= kAcceptFloor && r[lag] > r[lag - 1] && r[lag] >= r[lag + 1]) {
            candidates.push_back({static_cast<int>(lag), r[lag]});
        }
    }
    std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
        if (a.strength != b.strength) return a.strength > b.strength;
        return a.period < b.period;
    });

    std::vector<PeriodEstimate> accepted;
    for (const PeriodEstimate& c : candidates) {
        if (accepted.size() >= max_candidates) break;
        const bool harmonic = std::any_of(
            accepted.begin(), accepted.end(), [&](const PeriodEstimate& p) {
                const long multiple = std::lround(double(c.period) / p.period);
                return multiple >= 2 && std::abs(c.period - multiple * p.period) <= 1;
            });
        if (!harmonic) accepted.push_back(c);
    }
    return accepted;
}

std::vector<InstabilityInterval> detect_instability(const Diagram& diagram,
                                                    std::size_t window,
                                                    double threshold) {
    require_steps(diagram);
    const std::size_t n = diagram.size();
    if (window == 0 || window > n) {
        throw InvalidArgument("window must be in [1, N]");
    }
    if (!(threshold > 0.0) || threshold > 1.0) {
        throw InvalidArgument("threshold must be in (0, 1]");
    }

    const std::size_t rows = std::min(diagram.steps(), kInstabilityRows);

    // column black counts over the early rows, then prefix sums
    std::vector<std::size_t> column(n, 0);
    for (std::size_t k = 1; k <= rows; ++k) {
        auto row = diagram.mask_row(k);
        for (std::size_t t = 0; t < n; ++t) column[t] += row[t] == kBlack ? 1 : 0;
    }
    std::vector<std::size_t> prefix(n + 1, 0);
    for (std::size_t t = 0; t < n; ++t) prefix[t + 1] = prefix[t] + column[t];

    const double cells = static_cast<double>(window * rows);
    std::vector<InstabilityInterval> intervals;
    for (std::size_t s = 0; s + window <= n; ++s) {
        const double fraction = static_cast<double>(prefix[s + window] - prefix[s]) / cells;
        if (fraction < threshold) continue;
        const std::size_t hi = s + window - 1;
        if (!intervals.empty() && s <= intervals.back().end + 1) {
            intervals.back().end = std::max(intervals.back().end, hi);
            intervals.back().score = std::max(intervals.back().score, fraction);
        } else {
            intervals.push_back({s, hi, fraction});
        }
    }
    return intervals;
}

Convexity classify_convexity(const Diagram& diagram) {
    require_steps(diagram);
    bool any_black = false;
    for (std::size_t k = 1; k <= diagram.steps() && !any_black; ++k) {
        auto row = diagram.mask_row(k);
        any_black = std::any_of(row.begin(), row.end(),
                                [](std::uint8_t c) { return c == kBlack; });
    }
    if (!any_black) return Convexity::kFixedPoint;

    auto first = diagram.mask_row(1);
    bool interior_black = true;
    for (std::size_t t = 1; t + 1 < first.size(); ++t) {
        interior_black = interior_black && first[t] == kBlack;
    }
    return interior_black ? Convexity::kStrictlyConcaveInterior : Convexity::kMixed;
}

FeatureReport analyze(const Diagram& diagram, const AnalysisOptions& options) {
    FeatureReport report;
    report.periods = estimate_periods(diagram, options.max_candidates);
    report.instabilities = detect_instability(diagram, options.window, options.threshold);
    report.convexity = classify_convexity(diagram);
    return report;
}

const char* to_string(Convexity c) {
    switch (c) {
        case Convexity::kFixedPoint: return "FIXED_POINT";
        case Convexity::kStrictlyConcaveInterior: return "STRICTLY_CONCAVE_INTERIOR";
        case Convexity::kMixed: return "MIXED";
    }
    return "MIXED";
}

} // namespace peakcell
