#include "peakcell/smooth.hpp"

#include <cmath>
#include <string>

#include "peakcell/errors.hpp"

namespace peakcell {
namespace {

void check_finite(std::span<const double> values) {
    for (std::size_t t = 0; t < values.size(); ++t) {
        if (!std::isfinite(values[t])) {
            throw InvalidInput("non-finite value at index " + std::to_string(t));
        }
    }
}

// Core kernel. prev and out must not alias; cells only read prev, so
// they are independent within one step.
void smooth_into(std::span<const double> prev, std::span<double> out,
                 std::span<std::uint8_t> mask) {
    const std::size_t n = prev.size();
    if (n > 0) {
        out[0] = prev[0];
        mask[0] = kWhite;
        out[n - 1] = prev[n - 1];
        mask[n - 1] = kWhite;
    }
    for (std::size_t t = 1; t + 1 < n; ++t) {
        const double avg = (prev[t - 1] + prev[t + 1]) / 2.0;
        if (prev[t] <= avg) {
            out[t] = prev[t];
            mask[t] = kWhite;
        } else {
            out[t] = avg;
            mask[t] = kBlack;
        }
    }
}

} // namespace

StepResult smooth_step(std::span<const double> previous, int step_index) {
    check_finite(previous);
    StepResult result;
    result.values.resize(previous.size());
    result.mask.resize(previous.size());
    result.step_index = step_index;
    smooth_into(previous, result.values, result.mask);
    return result;
}

Diagram iterate(const Series& source, std::size_t steps) {
    const std::size_t n = source.size();
    std::vector<double> layers(steps * n);
    std::vector<std::uint8_t> masks(steps * n);

    std::span<const double> prev = source.span();
    for (std::size_t k = 0; k < steps; ++k) {
        std::span<double> out(layers.data() + k * n, n);
        std::span<std::uint8_t> mask(masks.data() + k * n, n);
        smooth_into(prev, out, mask);
        prev = out;
    }
    return Diagram(source, steps, std::move(layers), std::move(masks));
}

bool is_fixed_point(std::span<const double> values) {
    check_finite(values);
    for (std::size_t t = 1; t + 1 < values.size(); ++t) {
        if (values[t] > (values[t - 1] + values[t + 1]) / 2.0) return false;
    }
    return true;
}

} // namespace peakcell
