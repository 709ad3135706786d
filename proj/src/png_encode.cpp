#include "png_encode.hpp"

#include <limits>

#include <zlib.h>

#include "peakcell/errors.hpp"

namespace peakcell {

namespace {

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t value) {
    out.push_back(std::uint8_t(value >> 24));
    out.push_back(std::uint8_t(value >> 16));
    out.push_back(std::uint8_t(value >> 8));
    out.push_back(std::uint8_t(value));
}

void put_chunk(std::vector<std::uint8_t>& out, const char type[4],
               std::span<const std::uint8_t> data) {
    put_u32(out, static_cast<std::uint32_t>(data.size()));
    const std::size_t type_at = out.size();
    out.insert(out.end(), type, type + 4);
    out.insert(out.end(), data.begin(), data.end());
    const std::uint32_t crc = static_cast<std::uint32_t>(
        ::crc32(0, out.data() + type_at, static_cast<uInt>(4 + data.size())));
    put_u32(out, crc);
}

} // namespace

std::vector<std::uint8_t> encode_png_gray8(std::size_t width, std::size_t height,
                                           std::span<const std::uint8_t> gray) {
    constexpr std::size_t kDimMax = std::numeric_limits<std::uint32_t>::max();
    if (width == 0 || height == 0 || width > kDimMax || height > kDimMax)
        throw InvalidArgument("image dimensions out of range");
    if (gray.size() != width * height)
        throw InvalidArgument("pixel buffer does not match dimensions");

    // Filter byte 0 in front of every scanline.
    std::vector<std::uint8_t> raw;
    raw.reserve((width + 1) * height);
    for (std::size_t row = 0; row < height; ++row) {
        raw.push_back(0);
        raw.insert(raw.end(), gray.begin() + row * width, gray.begin() + (row + 1) * width);
    }

    uLongf compressed_size = compressBound(static_cast<uLong>(raw.size()));
    std::vector<std::uint8_t> compressed(compressed_size);
    if (compress2(compressed.data(), &compressed_size, raw.data(),
                  static_cast<uLong>(raw.size()), Z_DEFAULT_COMPRESSION) != Z_OK)
        throw IoError("deflate failed");
    compressed.resize(compressed_size);

    std::uint8_t ihdr[13];
    const std::uint32_t w = static_cast<std::uint32_t>(width);
    const std::uint32_t h = static_cast<std::uint32_t>(height);
    ihdr[0] = std::uint8_t(w >> 24); ihdr[1] = std::uint8_t(w >> 16);
    ihdr[2] = std::uint8_t(w >> 8);  ihdr[3] = std::uint8_t(w);
    ihdr[4] = std::uint8_t(h >> 24); ihdr[5] = std::uint8_t(h >> 16);
    ihdr[6] = std::uint8_t(h >> 8);  ihdr[7] = std::uint8_t(h);
    ihdr[8] = 8;   // bit depth
    ihdr[9] = 0;   // grayscale
    ihdr[10] = 0;  // deflate
    ihdr[11] = 0;  // adaptive filtering
    ihdr[12] = 0;  // no interlace

    std::vector<std::uint8_t> out = {137, 80, 78, 71, 13, 10, 26, 10};
    put_chunk(out, "IHDR", ihdr);
    put_chunk(out, "IDAT", compressed);
    put_chunk(out, "IEND", {});
    return out;
}

} // namespace peakcell
