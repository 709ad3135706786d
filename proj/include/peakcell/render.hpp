#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "peakcell/diagram.hpp"

namespace peakcell {

enum class ImageFormat {
    kPbm,  // P4, 1 bit per pixel; the byte-exact reference format
    kPgm,  // P5, 8-bit grayscale
    kPng,  // 8-bit grayscale, non-interlaced
    kAscii,
};

struct RenderSpec {
    ImageFormat format = ImageFormat::kPbm;
    int cell_size = 1;       // pixels per cell
    bool composite = false;  // prepend a panel plotting the source series
    int panel_height = 64;   // rows, only used when composite
};

/// Draws the mask grid as an image: step 1 at the top, one ink
/// (black) pixel block per changed cell. In composite mode a
/// source-series panel and one blank row are placed above the grid.
/// Output width is N*cell_size; height K*cell_size, plus
/// (panel_height+1)*cell_size when composite.
std::vector<std::uint8_t> render_raster(const Diagram& diagram, const RenderSpec& spec);

/// One line per step, '#' for black and '.' for white.
std::string render_ascii(const Diagram& diagram);

// Bit-grid encoders behind render_raster, exposed so exact bytes can
// be produced for any mask pattern. `ink` is row-major, nonzero = black.
std::vector<std::uint8_t> encode_p4(std::size_t width, std::size_t height,
                                    std::span<const std::uint8_t> ink);
std::vector<std::uint8_t> encode_p5(std::size_t width, std::size_t height,
                                    std::span<const std::uint8_t> ink);
std::vector<std::uint8_t> encode_png(std::size_t width, std::size_t height,
                                     std::span<const std::uint8_t> ink);

} // namespace peakcell
