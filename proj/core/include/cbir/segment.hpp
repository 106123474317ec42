#ifndef CBIR_SEGMENT_HPP
#define CBIR_SEGMENT_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "cbir/raster.hpp"

namespace cbir {

/// Object/background partition of an image.
class BitMask {
public:
    BitMask() = default;
    BitMask(int width, int height, bool fill = false)
        : width_(width), height_(height), bits_(static_cast<std::size_t>(width) * height, fill) {}

    int width() const { return width_; }
    int height() const { return height_; }

    bool at(int x, int y) const { return bits_[static_cast<std::size_t>(y) * width_ + x]; }
    void set(int x, int y, bool v) { bits_[static_cast<std::size_t>(y) * width_ + x] = v; }

    std::size_t count() const;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<bool> bits_;
};

struct Pixel {
    int x = 0;
    int y = 0;
    bool operator==(const Pixel&) const = default;
};

struct BBox {
    int x_min = 0, y_min = 0, x_max = 0, y_max = 0;
    int width() const { return x_max - x_min + 1; }
    int height() const { return y_max - y_min + 1; }
    bool operator==(const BBox&) const = default;
};

/// Connected foreground pixel set with its tight bounding box.
struct Region {
    int label = 0;
    std::vector<Pixel> pixels;   // row-major scan order
    BBox bbox;
};

/// Foreground = intensity >= t.
BitMask threshold_mask(const GrayImage& img, int t);

/// Labels connected foreground components (connectivity 4 or 8). Components
/// smaller than min_area pixels are dropped. Regions are ordered by
/// (y_min, x_min) of their bounding boxes.
std::vector<Region> connected_components(const BitMask& mask, int connectivity = 8,
                                         int min_area = 4);

/// Moore-neighbor boundary trace: closed exterior contour, clockwise,
/// starting from the region's topmost-then-leftmost pixel.
std::vector<Pixel> boundary_trace(const Region& region);

/// Copies the region's pixels into a fresh zero-filled frame of size
/// (bbox width + 2*margin) x (bbox height + 2*margin). Pixels inside the
/// bbox that do not belong to the region stay 0.
GrayImage extract_subimage(const GrayImage& img, const Region& region, int margin = 1);

} // namespace cbir

#endif
