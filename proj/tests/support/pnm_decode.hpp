#pragma once

// Minimal independent P4 reader for round-trip checks. Strict about the
// exact header shape the writer is specified to emit.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pnmdec {

struct BitImage {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<std::uint8_t> bits; // row-major, 1 = black
};

inline BitImage decode_p4(const std::vector<std::uint8_t>& bytes) {
    const std::string data(bytes.begin(), bytes.end());
    if (data.rfind("P4\n", 0) != 0) throw std::runtime_error("not a P4 header");
    const std::size_t space = data.find(' ', 3);
    const std::size_t eol = data.find('\n', 3);
    if (space == std::string::npos || eol == std::string::npos || space > eol)
        throw std::runtime_error("bad P4 dimensions");

    BitImage img;
    img.width = std::stoul(data.substr(3, space - 3));
    img.height = std::stoul(data.substr(space + 1, eol - space - 1));

    const std::size_t row_bytes = (img.width + 7) / 8;
    const std::size_t start = eol + 1;
    if (data.size() != start + row_bytes * img.height)
        throw std::runtime_error("P4 payload size mismatch");

    img.bits.assign(img.width * img.height, 0);
    for (std::size_t y = 0; y < img.height; ++y) {
        for (std::size_t x = 0; x < img.width; ++x) {
            const std::uint8_t byte = bytes[start + y * row_bytes + x / 8];
            img.bits[y * img.width + x] = (byte >> (7 - x % 8)) & 1u;
        }
    }
    return img;
}

} // namespace pnmdec
