#include "cbir/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace cbir {

namespace {

constexpr double kSnap = 1048576.0;  // 2^20

// Snap to a 2^-20 grid before rounding to 8 bits, so exact-tie samples
// (dyadic interpolation weights) round identically across symmetric
// pixel pairs regardless of evaluation-order noise.
std::uint8_t quantize(double v) {
    const double snapped = std::nearbyint(v * kSnap) / kSnap;
    const double r = std::floor(snapped + 0.5);
    if (r <= 0.0) return 0;
    if (r >= 255.0) return 255;
    return static_cast<std::uint8_t>(r);
}

double bilinear_at(const GrayImage& img, double sx, double sy) {
    const int W = img.width(), H = img.height();
    const int x0 = static_cast<int>(std::floor(sx));
    const int y0 = static_cast<int>(std::floor(sy));
    const double fx = sx - x0, fy = sy - y0;
    auto at = [&](int x, int y) -> double {
        if (x < 0 || x >= W || y < 0 || y >= H)
            return 0.0;
        return img.at(x, y);
    };
    return at(x0, y0) * (1.0 - fx) * (1.0 - fy) + at(x0 + 1, y0) * fx * (1.0 - fy) +
           at(x0, y0 + 1) * (1.0 - fx) * fy + at(x0 + 1, y0 + 1) * fx * fy;
}

GrayImage rotate90_exact(const GrayImage& img, int quarter_turns) {
    const int W = img.width(), H = img.height();
    switch (quarter_turns) {
        case 0:
            return img;
        case 1: {  // pixel (x,y) -> (H-1-y, x)
            GrayImage out(H, W);
            for (int y = 0; y < W; ++y)
                for (int x = 0; x < H; ++x)
                    out.at(x, y) = img.at(y, H - 1 - x);
            return out;
        }
        case 2: {
            GrayImage out(W, H);
            for (int y = 0; y < H; ++y)
                for (int x = 0; x < W; ++x)
                    out.at(x, y) = img.at(W - 1 - x, H - 1 - y);
            return out;
        }
        default: {
            GrayImage out(H, W);
            for (int y = 0; y < W; ++y)
                for (int x = 0; x < H; ++x)
                    out.at(x, y) = img.at(W - 1 - y, x);
            return out;
        }
    }
}

void require(bool ok, const char* what) {
    if (!ok)
        throw ShapeOutOfFrame(what);
}

} // namespace

ShapeSpec disk_spec(double r, std::uint8_t fg) {
    ShapeSpec s;
    s.kind = ShapeKind::disk;
    const int n = 2 * static_cast<int>(std::ceil(r)) + 8;
    s.frame_w = s.frame_h = n;
    s.cx = s.cy = (n - 1) / 2.0;
    s.r = r;
    s.fg = fg;
    return s;
}

ShapeSpec annulus_spec(double r, double ratio, std::uint8_t fg) {
    ShapeSpec s = disk_spec(r, fg);
    s.kind = ShapeKind::annulus;
    s.r_inner = ratio * r;
    return s;
}

ShapeSpec rect_spec(int w, int h, std::uint8_t fg) {
    ShapeSpec s;
    s.kind = ShapeKind::rect;
    s.frame_w = w + 8;
    s.frame_h = h + 8;
    s.x0 = s.y0 = 4.0;
    s.w = w;
    s.h = h;
    s.fg = fg;
    return s;
}

ShapeSpec triangle_spec(double ax, double ay, double bx, double by,
                        double tx, double ty, std::uint8_t fg) {
    ShapeSpec s;
    s.kind = ShapeKind::triangle;
    s.ax = ax; s.ay = ay;
    s.bx = bx; s.by = by;
    s.tx = tx; s.ty = ty;
    s.frame_w = static_cast<int>(std::ceil(std::max({ax, bx, tx}))) + 5;
    s.frame_h = static_cast<int>(std::ceil(std::max({ay, by, ty}))) + 5;
    s.fg = fg;
    return s;
}

GrayImage render(const ShapeSpec& spec) {
    const int W = spec.frame_w, H = spec.frame_h;
    if (W < 5 || H < 5)
        throw ShapeOutOfFrame("frame too small for a 2-pixel border");
    if (spec.fg < 1)
        throw ShapeOutOfFrame("fg intensity must be >= 1");

    GrayImage out(W, H);
    switch (spec.kind) {
        case ShapeKind::disk:
        case ShapeKind::annulus: {
            require(spec.r > 0.0, "radius must be positive");
            require(spec.cx - spec.r >= 2.0 && spec.cx + spec.r <= W - 3.0 &&
                        spec.cy - spec.r >= 2.0 && spec.cy + spec.r <= H - 3.0,
                    "disk violates the 2-pixel zero border");
            const double r2 = spec.r * spec.r;
            const double ri2 = spec.r_inner * spec.r_inner;
            const bool ann = spec.kind == ShapeKind::annulus;
            if (ann)
                require(spec.r_inner > 0.0 && spec.r_inner < spec.r,
                        "annulus inner radius must be in (0, r)");
            for (int y = 0; y < H; ++y) {
                for (int x = 0; x < W; ++x) {
                    const double dx = x - spec.cx, dy = y - spec.cy;
                    const double d2 = dx * dx + dy * dy;
                    if (d2 <= r2 && (!ann || d2 > ri2))
                        out.at(x, y) = spec.fg;
                }
            }
            break;
        }
        case ShapeKind::rect: {
            require(spec.w >= 1.0 && spec.h >= 1.0, "rect must be at least 1x1");
            require(spec.x0 >= 2.0 && spec.y0 >= 2.0 && spec.x0 + spec.w <= W - 2.0 &&
                        spec.y0 + spec.h <= H - 2.0,
                    "rect violates the 2-pixel zero border");
            for (int y = 0; y < H; ++y)
                for (int x = 0; x < W; ++x)
                    if (x >= spec.x0 && x < spec.x0 + spec.w && y >= spec.y0 &&
                        y < spec.y0 + spec.h)
                        out.at(x, y) = spec.fg;
            break;
        }
        case ShapeKind::triangle: {
            const double lox = std::min({spec.ax, spec.bx, spec.tx});
            const double hix = std::max({spec.ax, spec.bx, spec.tx});
            const double loy = std::min({spec.ay, spec.by, spec.ty});
            const double hiy = std::max({spec.ay, spec.by, spec.ty});
            require(lox >= 2.0 && loy >= 2.0 && hix <= W - 3.0 && hiy <= H - 3.0,
                    "triangle violates the 2-pixel zero border");
            auto edge = [](double px, double py, double qx, double qy, double x,
                           double y) {
                return (qx - px) * (y - py) - (qy - py) * (x - px);
            };
            for (int y = 0; y < H; ++y) {
                for (int x = 0; x < W; ++x) {
                    const double e0 = edge(spec.ax, spec.ay, spec.bx, spec.by, x, y);
                    const double e1 = edge(spec.bx, spec.by, spec.tx, spec.ty, x, y);
                    const double e2 = edge(spec.tx, spec.ty, spec.ax, spec.ay, x, y);
                    const bool inside = (e0 >= 0 && e1 >= 0 && e2 >= 0) ||
                                        (e0 <= 0 && e1 <= 0 && e2 <= 0);
                    if (inside)
                        out.at(x, y) = spec.fg;
                }
            }
            break;
        }
    }
    return out;
}

GrayImage rotate(const GrayImage& img, double theta_deg, bool force_bilinear) {
    double t = std::fmod(theta_deg, 360.0);
    if (t < 0.0)
        t += 360.0;
    if (!force_bilinear && std::fmod(t, 90.0) == 0.0)
        return rotate90_exact(img, static_cast<int>(t / 90.0) % 4);

    const double th = t * std::numbers::pi / 180.0;
    const double c = std::cos(th), s = std::sin(th);
    const int W = img.width(), H = img.height();
    const double cx = (W - 1) / 2.0, cy = (H - 1) / 2.0;

    // forward-rotate the frame corners to size the output
    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    const double corner_x[] = {0.0 - cx, W - 1 - cx, 0.0 - cx, W - 1 - cx};
    const double corner_y[] = {0.0 - cy, 0.0 - cy, H - 1 - cy, H - 1 - cy};
    for (int i = 0; i < 4; ++i) {
        const double rx = c * corner_x[i] - s * corner_y[i];
        const double ry = s * corner_x[i] + c * corner_y[i];
        min_x = std::min(min_x, rx); max_x = std::max(max_x, rx);
        min_y = std::min(min_y, ry); max_y = std::max(max_y, ry);
    }
    const int W2 = static_cast<int>(std::ceil(max_x - min_x)) + 5;
    const int H2 = static_cast<int>(std::ceil(max_y - min_y)) + 5;
    const double ocx = (W2 - 1) / 2.0, ocy = (H2 - 1) / 2.0;

    GrayImage out(W2, H2);
    for (int y = 0; y < H2; ++y) {
        for (int x = 0; x < W2; ++x) {
            const double dx = x - ocx, dy = y - ocy;
            const double sx = c * dx + s * dy + cx;
            const double sy = -s * dx + c * dy + cy;
            out.at(x, y) = quantize(bilinear_at(img, sx, sy));
        }
    }
    return out;
}

GrayImage scale(const GrayImage& img, double s) {
    if (!(s > 0.0))
        throw std::invalid_argument("scale factor must be positive");
    const int W = img.width(), H = img.height();
    const int W2 = static_cast<int>(std::ceil(s * W)) + 4;
    const int H2 = static_cast<int>(std::ceil(s * H)) + 4;
    const double cx = (W - 1) / 2.0, cy = (H - 1) / 2.0;
    const double ocx = (W2 - 1) / 2.0, ocy = (H2 - 1) / 2.0;

    GrayImage out(W2, H2);
    for (int y = 0; y < H2; ++y) {
        for (int x = 0; x < W2; ++x) {
            const double sx = (x - ocx) / s + cx;
            const double sy = (y - ocy) / s + cy;
            out.at(x, y) = quantize(bilinear_at(img, sx, sy));
        }
    }
    return out;
}

GrayImage translate(const GrayImage& img, int dx, int dy) {
    const int W = img.width(), H = img.height();
    GrayImage out(W, H);
    for (int y = 0; y < H; ++y) {
        for (int x = 0; x < W; ++x) {
            if (img.at(x, y) == 0)
                continue;
            const int nx = x + dx, ny = y + dy;
            if (nx < 0 || nx >= W || ny < 0 || ny >= H)
                throw ContentClipped("translate would clip nonzero pixels");
            out.at(nx, ny) = img.at(x, y);
        }
    }
    return out;
}

std::vector<CorpusEntry> corpus() {
    std::vector<CorpusEntry> entries;
    entries.push_back({"disk", disk_spec(80.0)});

    const double ratios[] = {0.45, 0.60, 0.72, 0.82, 0.90};
    for (int i = 0; i < 5; ++i)
        entries.push_back({"ann" + std::to_string(i), annulus_spec(80.0, ratios[i])});

    const double aspects[] = {1.35, 1.8, 2.4, 3.2, 4.2, 5.5, 7.2, 9.4, 12.0};
    for (int i = 0; i < 9; ++i) {
        const int w = static_cast<int>(std::lround(170.0 * std::sqrt(aspects[i])));
        const int h = static_cast<int>(std::lround(170.0 / std::sqrt(aspects[i])));
        entries.push_back({"rect" + std::to_string(i), rect_spec(w, h)});
    }

    // Scalene triangles: apex fraction along the base x height-to-base
    // ratio, vetted for pairwise invariant separation and transform
    // stability. Mirror-symmetric parameters are deliberately absent.
    struct TriParam { double f, hr; };
    const TriParam tris[] = {
        {0.02, 0.45}, {0.02, 0.65}, {0.02, 0.90}, {0.02, 1.70},
        {0.08, 0.30}, {0.08, 1.25},
        {0.14, 0.30}, {0.14, 0.45}, {0.14, 0.65}, {0.14, 0.90},
        {0.22, 0.30}, {0.22, 0.65}, {0.22, 0.90}, {0.22, 1.25},
        {0.30, 0.30}, {0.30, 0.45}, {0.30, 0.65}, {0.30, 0.90}, {0.30, 1.70},
        {0.38, 0.45}, {0.38, 0.65}, {0.38, 0.90},
        {0.46, 0.30}, {0.46, 0.45}, {0.46, 0.65}, {0.46, 1.25}, {0.46, 1.70},
        {0.62, 0.30}, {0.62, 0.45}, {0.62, 0.65}, {0.62, 0.90}, {0.62, 1.25},
        {0.62, 1.70},
        {0.78, 0.30}, {0.78, 0.45},
    };
    const double base = 240.0;
    int k = 0;
    for (const TriParam& t : tris) {
        const double ht = base * t.hr;
        char name[8];
        std::snprintf(name, sizeof name, "tri%02d", k++);
        entries.push_back({name, triangle_spec(4.0, 4.0 + ht, 4.0 + base, 4.0 + ht,
                                               4.0 + t.f * base, 4.0)});
    }
    return entries;
}

} // namespace cbir
