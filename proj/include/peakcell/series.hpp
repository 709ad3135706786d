#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "peakcell/errors.hpp"

namespace peakcell {

/// An immutable sequence of finite measurements. Construction rejects
/// NaN and infinities; the length is fixed afterwards.
class Series {
public:
    Series() = default;

    explicit Series(std::vector<double> values) : values_(std::move(values)) {
        for (std::size_t t = 0; t < values_.size(); ++t) {
            if (!std::isfinite(values_[t])) {
                throw InvalidInput("non-finite value at index " + std::to_string(t));
            }
        }
    }

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    double operator[](std::size_t t) const noexcept { return values_[t]; }

    const std::vector<double>& values() const noexcept { return values_; }
    std::span<const double> span() const noexcept { return values_; }

    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }

private:
    std::vector<double> values_;
};

} // namespace peakcell
