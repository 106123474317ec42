#ifndef CBIR_RASTER_HPP
#define CBIR_RASTER_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cbir/errors.hpp"

namespace cbir {

/// Rectangular 8-bit grayscale raster, row-major, origin at the top-left
/// sample. x is the column index, y the row index, unit spacing.
class GrayImage {
public:
    GrayImage() = default;
    GrayImage(int width, int height, std::uint8_t fill = 0);
    GrayImage(int width, int height, std::vector<std::uint8_t> pixels);

    int width() const { return width_; }
    int height() const { return height_; }

    std::uint8_t at(int x, int y) const { return pixels_[static_cast<std::size_t>(y) * width_ + x]; }
    std::uint8_t& at(int x, int y) { return pixels_[static_cast<std::size_t>(y) * width_ + x]; }

    const std::vector<std::uint8_t>& pixels() const { return pixels_; }
    std::vector<std::uint8_t>& pixels() { return pixels_; }

    bool operator==(const GrayImage&) const = default;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> pixels_;
};

/// Decodes a PGM (P2 text or P5 binary) byte stream. Header comments
/// (#-lines) are skipped. Samples encoded against a maxval other than 255
/// are rescaled by round-half-up of v*255/maxval.
///
/// Throws UnsupportedFormat if the magic is not P2/P5, Malformed on a
/// truncated payload, non-positive dimensions or samples above maxval.
GrayImage decode_pgm(std::span<const std::uint8_t> bytes);
GrayImage decode_pgm(const std::string& bytes);

/// Encodes to P5 when binary is true, P2 otherwise. Always writes maxval
/// 255, so decode(encode(img)) reproduces img exactly.
std::string encode_pgm(const GrayImage& img, bool binary);

GrayImage read_pgm_file(const std::string& path);
void write_pgm_file(const GrayImage& img, const std::string& path, bool binary = true);

} // namespace cbir

#endif
