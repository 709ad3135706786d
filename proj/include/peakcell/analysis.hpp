#pragma once

#include <cstddef>
#include <vector>

#include "peakcell/diagram.hpp"

namespace peakcell {

/// Per-column count of black cells across all mask rows; the
/// quantitative stand-in for the vertical stripes a diagram shows.
struct DepthProfile {
    std::vector<int> depths;
};

struct PeriodEstimate {
    int period = 0;        // samples, in [2, N/2]
    double strength = 0.0; // normalized autocorrelation peak height, [0, 1]
};

struct InstabilityInterval {
    std::size_t start = 0; // inclusive column indices
    std::size_t end = 0;
    double score = 0.0; // peak windowed black fraction
};

enum class Convexity {
    kFixedPoint,               // every cell white: the source never changed
    kStrictlyConcaveInterior,  // the whole interior of row 1 is black
    kMixed,
};

struct FeatureReport {
    std::vector<PeriodEstimate> periods;
    std::vector<InstabilityInterval> instabilities;
    Convexity convexity = Convexity::kMixed;
};

struct AnalysisOptions {
    std::size_t max_candidates = 8;
    std::size_t window = 16;
    double threshold = 0.5;
};

DepthProfile depth_profile(const Diagram& diagram);

/// Detects periodic components in the depth profile via normalized
/// autocorrelation. Local maxima with r >= 0.2 become candidates;
/// candidates within one sample of an integer multiple of an already
/// accepted period are dropped as harmonics. Results are sorted by
/// descending strength, at most `max_candidates` of them.
std::vector<PeriodEstimate> estimate_periods(const Diagram& diagram,
                                             std::size_t max_candidates);

/// Flags every window whose black fraction over the first
/// min(K, 32) mask rows reaches `threshold`, then merges overlapping
/// and adjacent windows into maximal intervals. An interval's score is
/// the best window fraction inside it.
std::vector<InstabilityInterval> detect_instability(const Diagram& diagram,
                                                    std::size_t window = 16,
                                                    double threshold = 0.5);

Convexity classify_convexity(const Diagram& diagram);

/// Bundles the three feature extractors into one report.
FeatureReport analyze(const Diagram& diagram, const AnalysisOptions& options = {});

const char* to_string(Convexity c);

} // namespace peakcell
