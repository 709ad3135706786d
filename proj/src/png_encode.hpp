#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace peakcell {

// 8-bit grayscale, color type 0, non-interlaced. `gray` is row-major,
// one byte per pixel.
std::vector<std::uint8_t> encode_png_gray8(std::size_t width, std::size_t height,
                                           std::span<const std::uint8_t> gray);

} // namespace peakcell
