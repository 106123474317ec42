#ifndef CBIR_SYNTH_HPP
#define CBIR_SYNTH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cbir/raster.hpp"

namespace cbir {

enum class ShapeKind { disk, rect, triangle, annulus };

/// Deterministic shape description. All geometry is in pixel coordinates
/// of the frame; inclusion is tested at pixel centers. The shape must fit
/// strictly inside the frame with at least a 2-pixel zero border.
struct ShapeSpec {
    ShapeKind kind = ShapeKind::disk;
    int frame_w = 0, frame_h = 0;
    // disk / annulus
    double cx = 0.0, cy = 0.0, r = 0.0;
    double r_inner = 0.0;  // annulus only
    // rect: pixel centers in [x0, x0+w) x [y0, y0+h)
    double x0 = 0.0, y0 = 0.0, w = 0.0, h = 0.0;
    // triangle vertices
    double ax = 0.0, ay = 0.0, bx = 0.0, by = 0.0, tx = 0.0, ty = 0.0;
    std::uint8_t fg = 1;
};

ShapeSpec disk_spec(double r, std::uint8_t fg = 1);
ShapeSpec annulus_spec(double r, double ratio, std::uint8_t fg = 1);
ShapeSpec rect_spec(int w, int h, std::uint8_t fg = 1);
ShapeSpec triangle_spec(double ax, double ay, double bx, double by,
                        double tx, double ty, std::uint8_t fg = 1);

/// Throws ShapeOutOfFrame if the geometry violates the 2-pixel border.
GrayImage render(const ShapeSpec& spec);

/// Rotation about the frame center. Multiples of 90 degrees are exact
/// pixel permutations unless force_bilinear is set; other angles use
/// inverse mapping with bilinear interpolation and zero fill into a frame
/// enlarged to hold the rotated content plus a 2-pixel border.
GrayImage rotate(const GrayImage& img, double theta_deg, bool force_bilinear = false);

/// Bilinear rescale by factor s > 0 into a ceil(s*W) x ceil(s*H) frame
/// plus a 2-pixel border, mapped through the frame centers.
GrayImage scale(const GrayImage& img, double s);

/// Exact integer pixel shift with zero fill. Throws ContentClipped if a
/// nonzero pixel would leave the frame.
GrayImage translate(const GrayImage& img, int dx, int dy);

struct CorpusEntry {
    std::string name;
    ShapeSpec spec;
};

/// The fixed 50-shape corpus used by the retrieval experiments: one disk,
/// five annuli, nine rectangles and thirty-five scalene triangles, all
/// pairwise distinct in invariant space.
std::vector<CorpusEntry> corpus();

} // namespace cbir

#endif
