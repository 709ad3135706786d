#include "peakcell/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "peakcell/errors.hpp"
#include "png_encode.hpp"

namespace peakcell {

namespace {

std::vector<std::uint8_t> header_then_payload(const char* magic, std::size_t width,
                                              std::size_t height, bool maxval) {
    char head[64];
    const int len = maxval
        ? std::snprintf(head, sizeof head, "%s\n%zu %zu\n255\n", magic, width, height)
        : std::snprintf(head, sizeof head, "%s\n%zu %zu\n", magic, width, height);
    return std::vector<std::uint8_t>(head, head + len);
}

void check_grid(std::size_t width, std::size_t height, std::size_t ink_size) {
    if (width == 0 || height == 0) throw InvalidArgument("image dimensions must be positive");
    if (ink_size != width * height) throw InvalidArgument("ink grid does not match dimensions");
}

// Cell-level ink grid (one byte per cell, 1 = black) for a diagram:
// optional source panel plus blank separator, then the mask rows.
struct CellGrid {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<std::uint8_t> ink;
};

CellGrid build_cells(const Diagram& diagram, const RenderSpec& spec) {
    const std::size_t n = diagram.size();
    const std::size_t k = diagram.steps();
    const std::size_t panel = spec.composite ? static_cast<std::size_t>(spec.panel_height) + 1 : 0;

    CellGrid grid;
    grid.width = n;
    grid.height = panel + k;
    grid.ink.assign(grid.width * grid.height, 0);

    if (spec.composite) {
        const std::size_t rows = static_cast<std::size_t>(spec.panel_height);
        const auto source = diagram.source();
        const auto [lo_it, hi_it] = std::minmax_element(source.begin(), source.end());
        const double lo = *lo_it;
        const double hi = *hi_it;
        for (std::size_t t = 0; t < n; ++t) {
            std::size_t row;
            if (hi == lo) {
                row = rows / 2;
            } else {
                const double v = (source[t] - lo) / (hi - lo);
                row = (rows - 1) - static_cast<std::size_t>(std::lround(v * double(rows - 1)));
            }
            grid.ink[row * n + t] = 1;
        }
    }

    for (std::size_t step = 1; step <= k; ++step) {
        const auto mask = diagram.mask_row(step);
        std::uint8_t* out = grid.ink.data() + (panel + step - 1) * n;
        for (std::size_t t = 0; t < n; ++t) out[t] = mask[t] == kBlack ? 1 : 0;
    }
    return grid;
}

std::vector<std::uint8_t> scale_cells(const CellGrid& grid, int cell_size) {
    const auto cs = static_cast<std::size_t>(cell_size);
    std::vector<std::uint8_t> pixels(grid.width * cs * grid.height * cs);
    const std::size_t out_width = grid.width * cs;
    for (std::size_t row = 0; row < grid.height; ++row) {
        std::uint8_t* first = pixels.data() + row * cs * out_width;
        for (std::size_t col = 0; col < grid.width; ++col)
            std::fill_n(first + col * cs, cs, grid.ink[row * grid.width + col]);
        for (std::size_t dup = 1; dup < cs; ++dup)
            std::copy_n(first, out_width, first + dup * out_width);
    }
    return pixels;
}

} // namespace

std::vector<std::uint8_t> encode_p4(std::size_t width, std::size_t height,
                                    std::span<const std::uint8_t> ink) {
    check_grid(width, height, ink.size());
    auto out = header_then_payload("P4", width, height, false);
    const std::size_t stride = (width + 7) / 8;
    const std::size_t start = out.size();
    out.resize(start + stride * height, 0);
    for (std::size_t row = 0; row < height; ++row) {
        std::uint8_t* bytes = out.data() + start + row * stride;
        for (std::size_t col = 0; col < width; ++col)
            if (ink[row * width + col]) bytes[col / 8] |= std::uint8_t(0x80u >> (col % 8));
    }
    return out;
}

std::vector<std::uint8_t> encode_p5(std::size_t width, std::size_t height,
                                    std::span<const std::uint8_t> ink) {
    check_grid(width, height, ink.size());
    auto out = header_then_payload("P5", width, height, true);
    out.reserve(out.size() + ink.size());
    for (const std::uint8_t bit : ink) out.push_back(bit ? 0 : 255);
    return out;
}

std::vector<std::uint8_t> encode_png(std::size_t width, std::size_t height,
                                     std::span<const std::uint8_t> ink) {
    check_grid(width, height, ink.size());
    std::vector<std::uint8_t> gray(ink.size());
    std::transform(ink.begin(), ink.end(), gray.begin(),
                   [](std::uint8_t bit) { return bit ? std::uint8_t(0) : std::uint8_t(255); });
    return encode_png_gray8(width, height, gray);
}

std::vector<std::uint8_t> render_raster(const Diagram& diagram, const RenderSpec& spec) {
    if (diagram.steps() == 0) throw InvalidArgument("diagram has no steps");
    if (diagram.size() == 0) throw InvalidArgument("diagram is empty");
    if (spec.cell_size < 1) throw InvalidArgument("cell_size must be >= 1");
    if (spec.composite && spec.panel_height < 8)
        throw InvalidArgument("panel_height must be >= 8");

    CellGrid grid = build_cells(diagram, spec);
    const auto cs = static_cast<std::size_t>(spec.cell_size);
    const std::size_t width = grid.width * cs;
    const std::size_t height = grid.height * cs;
    const std::vector<std::uint8_t> pixels =
        spec.cell_size == 1 ? std::move(grid.ink) : scale_cells(grid, spec.cell_size);

    switch (spec.format) {
    case ImageFormat::kPbm: return encode_p4(width, height, pixels);
    case ImageFormat::kPgm: return encode_p5(width, height, pixels);
    case ImageFormat::kPng: return encode_png(width, height, pixels);
    case ImageFormat::kAscii: break;
    }
    throw UnsupportedFormat("raster rendering supports pbm, pgm, and png");
}

std::string render_ascii(const Diagram& diagram) {
    if (diagram.steps() == 0) throw InvalidArgument("diagram has no steps");
    std::string text;
    text.reserve((diagram.size() + 1) * diagram.steps());
    for (std::size_t step = 1; step <= diagram.steps(); ++step) {
        for (const std::uint8_t cell : diagram.mask_row(step))
            text.push_back(cell == kBlack ? '#' : '.');
        text.push_back('\n');
    }
    return text;
}

} // namespace peakcell
