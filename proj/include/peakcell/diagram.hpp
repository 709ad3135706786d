#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "peakcell/series.hpp"

namespace peakcell {

/// Cell colors. A black cell means the smoothing branch fired at that
/// step; white means the value was copied from the previous layer.
inline constexpr std::uint8_t kWhite = 0;
inline constexpr std::uint8_t kBlack = 1;

/// One smoothed layer plus the per-cell change mask for that step.
struct StepResult {
    std::vector<double> values;
    std::vector<std::uint8_t> mask; // kBlack where the value strictly decreased
    int step_index = 1;             // k >= 1
};

/// The stack of K smoothed layers and K mask rows built from a source
/// series. Immutable once constructed; step indices are 1-based like
/// the iteration count (layer(0) is the source itself).
class Diagram {
public:
    Diagram() = default;

    Diagram(Series source, std::size_t steps,
            std::vector<double> flat_layers, std::vector<std::uint8_t> flat_masks)
        : source_(std::move(source)),
          steps_(steps),
          layers_(std::move(flat_layers)),
          masks_(std::move(flat_masks)) {
        if (layers_.size() != steps_ * source_.size() || masks_.size() != layers_.size()) {
            throw std::logic_error("diagram storage does not match steps x size");
        }
    }

    std::size_t steps() const noexcept { return steps_; } // K
    std::size_t size() const noexcept { return source_.size(); } // N
    const Series& source() const noexcept { return source_; }

    /// Layer k for k in [0, steps]; layer(0) is the source.
    std::span<const double> layer(std::size_t k) const {
        if (k > steps_) throw std::out_of_range("layer index");
        if (k == 0) return source_.span();
        return {layers_.data() + (k - 1) * size(), size()};
    }

    /// Mask row for step k, k in [1, steps].
    std::span<const std::uint8_t> mask_row(std::size_t k) const {
        if (k < 1 || k > steps_) throw std::out_of_range("mask row index");
        return {masks_.data() + (k - 1) * size(), size()};
    }

private:
    Series source_;
    std::size_t steps_ = 0;
    std::vector<double> layers_; // steps x size, row-major
    std::vector<std::uint8_t> masks_;
};

} // namespace peakcell
