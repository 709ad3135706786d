// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on
// any failure. Tolerances are pinned here and nowhere else.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "peakcell/analysis.hpp"
#include "peakcell/ingest.hpp"
#include "peakcell/render.hpp"
#include "peakcell/smooth.hpp"
#include "support/naive_reference.hpp"
#include "support/pnm_decode.hpp"

using namespace peakcell;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int index, bool ok, const std::string& label) {
    std::printf("%s  criterion %d: %s\n", ok ? "PASS" : "FAIL", index, label.c_str());
    if (!ok) ++failures;
}

template <typename Body>
void criterion(int index, const std::string& label, Body body) {
    bool ok = false;
    std::string note;
    try {
        note = body(ok);
    } catch (const std::exception& e) {
        ok = false;
        note = std::string("exception: ") + e.what();
    }
    report(index, ok, note.empty() ? label : label + " — " + note);
}

std::vector<double> random_series(std::mt19937& rng, std::size_t n) {
    std::uniform_real_distribution<double> value(-10.0, 10.0);
    std::vector<double> v(n);
    for (double& x : v) x = value(rng);
    return v;
}

bool bitwise_equal(std::span<const double> a, const std::vector<double>& b) {
    return a.size() == b.size() &&
           std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string format_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f s", s);
    return buf;
}

} // namespace

int main() {
    constexpr std::uint32_t kSeed = 20250819;

    // 1. Oracle equivalence on 200 random series, bitwise, under 10 s.
    criterion(1, "bitwise oracle equivalence, 200 random series", [&](bool& ok) {
        std::mt19937 rng(kSeed);
        std::uniform_int_distribution<std::size_t> length(2, 1000);
        std::uniform_int_distribution<std::size_t> depth(1, 200);
        const auto start = Clock::now();
        std::size_t mismatches = 0;
        for (int trial = 0; trial < 200; ++trial) {
            const auto src = random_series(rng, length(rng));
            const std::size_t k = depth(rng);
            const Diagram diagram = iterate(Series(src), k);
            const auto reference = naive::run(src, k);
            for (std::size_t step = 1; step <= k; ++step) {
                if (!bitwise_equal(diagram.layer(step), reference[step - 1].values) ||
                    !std::equal(diagram.mask_row(step).begin(), diagram.mask_row(step).end(),
                                reference[step - 1].mask.begin(),
                                reference[step - 1].mask.end()))
                    ++mismatches;
            }
        }
        const double elapsed = seconds_since(start);
        ok = mismatches == 0 && elapsed < 10.0;
        return std::to_string(mismatches) + " mismatched rows, " + format_seconds(elapsed);
    });

    // 2. Invariant suite on the same 200 series, zero violations.
    criterion(2, "monotonicity / min preservation / endpoints, 200 series", [&](bool& ok) {
        std::mt19937 rng(kSeed);
        std::uniform_int_distribution<std::size_t> length(2, 1000);
        std::uniform_int_distribution<std::size_t> depth(1, 200);
        std::size_t violations = 0;
        for (int trial = 0; trial < 200; ++trial) {
            const auto src = random_series(rng, length(rng));
            const std::size_t k = depth(rng);
            const Diagram d = iterate(Series(src), k);
            const std::size_t n = src.size();
            const double src_min = *std::min_element(src.begin(), src.end());
            bool settled = false;
            for (std::size_t step = 1; step <= k; ++step) {
                const auto prev = d.layer(step - 1);
                const auto layer = d.layer(step);
                const auto mask = d.mask_row(step);
                if (layer.front() != src.front() || layer.back() != src.back()) ++violations;
                if (*std::min_element(layer.begin(), layer.end()) != src_min) ++violations;
                if (*std::max_element(layer.begin(), layer.end()) >
                    *std::max_element(prev.begin(), prev.end()))
                    ++violations;
                bool any_black = false;
                for (std::size_t t = 0; t < n; ++t) {
                    if (layer[t] > prev[t]) ++violations; // pointwise monotone
                    const bool changed = layer[t] < prev[t];
                    if (changed != (mask[t] == kBlack)) ++violations;
                    any_black |= mask[t] == kBlack;
                }
                if (settled && any_black) ++violations; // fixed points stay fixed
                settled |= !any_black;
            }
        }
        ok = violations == 0;
        return std::to_string(violations) + " violations";
    });

    // 3. Concave parabola turns its whole interior black; convex series is a fixed point.
    criterion(3, "parabola band vs convex fixed point", [&](bool& ok) {
        std::vector<double> concave(101), convex(101);
        for (int t = 0; t <= 100; ++t) {
            concave[t] = -double(t - 50) * double(t - 50);
            convex[t] = double(t) * double(t);
        }
        const Diagram band = iterate(Series(concave), 40);
        bool row1_black = true;
        const auto row1 = band.mask_row(1);
        for (std::size_t t = 1; t + 1 < row1.size(); ++t) row1_black &= row1[t] == kBlack;

        const Diagram flat = iterate(Series(convex), 40);
        bool all_white = true;
        for (std::size_t step = 1; step <= flat.steps(); ++step)
            for (const auto cell : flat.mask_row(step)) all_white &= cell == kWhite;

        ok = classify_convexity(band) == Convexity::kStrictlyConcaveInterior && row1_black &&
             classify_convexity(flat) == Convexity::kFixedPoint && all_white;
        return std::string();
    });

    // 4. The jagged example reproduces the checkerboard masks exactly.
    criterion(4, "jagged input checkerboard masks", [&](bool& ok) {
        const Diagram d = iterate(Series({0, 2, 0.5, 2, 0.5, 2, 0}), 2);
        const std::vector<std::uint8_t> row1{0, 1, 0, 1, 0, 1, 0};
        const std::vector<std::uint8_t> row2{0, 0, 1, 0, 1, 0, 0};
        ok = std::equal(d.mask_row(1).begin(), d.mask_row(1).end(), row1.begin(), row1.end()) &&
             std::equal(d.mask_row(2).begin(), d.mask_row(2).end(), row2.begin(), row2.end());
        return std::string();
    });

    // 5. Periodic structure: SIN in [48, 52]; SIN_PLUS_COS3X shows two components.
    criterion(5, "trigonometric period recovery", [&](bool& ok) {
        const auto sine = estimate_periods(
            iterate(generate({SignalKind::kSin, 500, kDefaultScale}), 128), 8);
        const bool sine_ok = !sine.empty() && sine[0].period >= 48 && sine[0].period <= 52;

        const auto mixed = estimate_periods(
            iterate(generate({SignalKind::kSinPlusCos3x, 600, kDefaultScale}), 128), 8);
        bool has_component = false;
        for (const auto& p : mixed)
            has_component |= (p.period >= 48 && p.period <= 52) ||
                             (p.period >= 15 && p.period <= 18);
        const bool mixed_ok = mixed.size() >= 2 && has_component;

        ok = sine_ok && mixed_ok;
        std::string note = "sin top " + (sine.empty() ? "none" : std::to_string(sine[0].period));
        note += ", mixed count " + std::to_string(mixed.size());
        return note;
    });

    // 6. WEEKLY period exactly 7; a noise burst maps to one localized interval.
    criterion(6, "weekly period and burst localization", [&](bool& ok) {
        const auto weekly = estimate_periods(
            iterate(generate({SignalKind::kWeekly, 140, kDefaultScale}), 64), 8);
        const bool weekly_ok =
            !weekly.empty() && weekly[0].period == 7 && weekly[0].strength >= 0.5;

        std::mt19937 rng(kSeed);
        std::uniform_real_distribution<double> noise(0.0, 4.0);
        std::vector<double> src(240);
        for (std::size_t t = 0; t < src.size(); ++t) src[t] = double(t);
        for (std::size_t t = 100; t <= 139; ++t) src[t] += noise(rng);
        const auto intervals = detect_instability(iterate(Series(src), 32));
        const bool burst_ok = intervals.size() == 1 &&
                              std::llabs(std::int64_t(intervals[0].start) - 100) <= 16 &&
                              std::llabs(std::int64_t(intervals[0].end) - 139) <= 16;

        ok = weekly_ok && burst_ok;
        std::string note = "weekly top " +
                           (weekly.empty() ? std::string("none")
                                           : std::to_string(weekly[0].period)) +
                           ", burst intervals " + std::to_string(intervals.size());
        if (intervals.size() == 1)
            note += " [" + std::to_string(intervals[0].start) + ", " +
                    std::to_string(intervals[0].end) + "]";
        return note;
    });

    // 7. PBM round-trip on 50 random diagrams plus the two byte examples.
    criterion(7, "PBM round-trip and golden bytes", [&](bool& ok) {
        std::mt19937 rng(kSeed);
        std::uniform_int_distribution<std::size_t> length(2, 200);
        std::uniform_int_distribution<std::size_t> depth(1, 50);
        std::size_t mismatches = 0;
        for (int trial = 0; trial < 50; ++trial) {
            const Diagram d = iterate(Series(random_series(rng, length(rng))), depth(rng));
            const auto image = pnmdec::decode_p4(render_raster(d, {}));
            if (image.width != d.size() || image.height != d.steps()) {
                ++mismatches;
                continue;
            }
            for (std::size_t step = 1; step <= d.steps(); ++step) {
                const auto row = d.mask_row(step);
                for (std::size_t t = 0; t < d.size(); ++t)
                    if (image.bits[(step - 1) * d.size() + t] != row[t]) ++mismatches;
            }
        }

        const std::vector<std::uint8_t> one{'P', '4', '\n', '1', ' ', '1', '\n', 0x80};
        const std::vector<std::uint8_t> two{'P', '4', '\n', '2', ' ', '2', '\n', 0x80, 0x40};
        const std::vector<std::uint8_t> dot{1};
        const std::vector<std::uint8_t> board{1, 0, 0, 1};
        const bool golden = encode_p4(1, 1, dot) == one && encode_p4(2, 2, board) == two;

        ok = mismatches == 0 && golden;
        return std::to_string(mismatches) + " mismatches";
    });

    // 8. Affine equivariance of the mask grid, 50 random (series, a > 0, b).
    criterion(8, "affine mask equivariance", [&](bool& ok) {
        std::mt19937 rng(kSeed);
        std::uniform_int_distribution<std::size_t> length(2, 300);
        std::uniform_int_distribution<std::size_t> depth(1, 32);
        std::uniform_real_distribution<double> gain(0.1, 10.0);
        std::uniform_real_distribution<double> offset(-20.0, 20.0);
        std::size_t mismatches = 0;
        for (int trial = 0; trial < 50; ++trial) {
            const auto src = random_series(rng, length(rng));
            const std::size_t k = depth(rng);
            const double a = gain(rng);
            const double b = offset(rng);
            std::vector<double> scaled(src.size());
            for (std::size_t t = 0; t < src.size(); ++t) scaled[t] = a * src[t] + b;
            const Diagram original = iterate(Series(src), k);
            const Diagram transformed = iterate(Series(scaled), k);
            for (std::size_t step = 1; step <= k; ++step)
                if (!std::equal(original.mask_row(step).begin(), original.mask_row(step).end(),
                                transformed.mask_row(step).begin(),
                                transformed.mask_row(step).end()))
                    ++mismatches;
        }
        ok = mismatches == 0;
        return std::to_string(mismatches) + " mismatched rows";
    });

    // 9. N = 10000, K = 1000 iterate + render under 5 s.
    criterion(9, "performance: 10000 x 1000 pipeline", [&](bool& ok) {
        const Series src = generate({SignalKind::kSinPlusCos3x, 10000, kDefaultScale});
        const auto start = Clock::now();
        const Diagram d = iterate(src, 1000);
        const auto image = render_raster(d, {});
        const double elapsed = seconds_since(start);
        ok = elapsed < 5.0 && image.size() > 10000 * 1000 / 8;
        return format_seconds(elapsed);
    });

    if (failures == 0) {
        std::printf("all 9 acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", failures);
    return 1;
}
