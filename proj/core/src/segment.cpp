#include "cbir/segment.hpp"

#include <algorithm>
#include <stdexcept>

namespace cbir {

std::size_t BitMask::count() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

BitMask threshold_mask(const GrayImage& img, int t) {
    if (t < 0 || t > 255)
        throw std::invalid_argument("threshold must be in [0, 255]");
    BitMask mask(img.width(), img.height());
    for (int y = 0; y < img.height(); ++y)
        for (int x = 0; x < img.width(); ++x)
            if (img.at(x, y) >= t)
                mask.set(x, y, true);
    return mask;
}

std::vector<Region> connected_components(const BitMask& mask, int connectivity,
                                         int min_area) {
    if (connectivity != 4 && connectivity != 8)
        throw std::invalid_argument("connectivity must be 4 or 8");
    const int W = mask.width(), H = mask.height();
    std::vector<char> seen(static_cast<std::size_t>(W) * H, 0);
    std::vector<Region> regions;
    std::vector<Pixel> stack;

    static constexpr int dx8[] = {1, -1, 0, 0, 1, 1, -1, -1};
    static constexpr int dy8[] = {0, 0, 1, -1, 1, -1, 1, -1};
    const int ndirs = connectivity == 4 ? 4 : 8;

    int next_label = 1;
    for (int y = 0; y < H; ++y) {
        for (int x = 0; x < W; ++x) {
            const std::size_t i = static_cast<std::size_t>(y) * W + x;
            if (!mask.at(x, y) || seen[i])
                continue;
            Region reg;
            reg.bbox = {x, y, x, y};
            seen[i] = 1;
            stack.push_back({x, y});
            while (!stack.empty()) {
                const Pixel p = stack.back();
                stack.pop_back();
                reg.pixels.push_back(p);
                reg.bbox.x_min = std::min(reg.bbox.x_min, p.x);
                reg.bbox.x_max = std::max(reg.bbox.x_max, p.x);
                reg.bbox.y_min = std::min(reg.bbox.y_min, p.y);
                reg.bbox.y_max = std::max(reg.bbox.y_max, p.y);
                for (int d = 0; d < ndirs; ++d) {
                    const int nx = p.x + dx8[d], ny = p.y + dy8[d];
                    if (nx < 0 || nx >= W || ny < 0 || ny >= H)
                        continue;
                    const std::size_t ni = static_cast<std::size_t>(ny) * W + nx;
                    if (mask.at(nx, ny) && !seen[ni]) {
                        seen[ni] = 1;
                        stack.push_back({nx, ny});
                    }
                }
            }
            if (static_cast<int>(reg.pixels.size()) < min_area)
                continue;
            std::sort(reg.pixels.begin(), reg.pixels.end(),
                      [](const Pixel& a, const Pixel& b) {
                          return a.y != b.y ? a.y < b.y : a.x < b.x;
                      });
            regions.push_back(std::move(reg));
        }
    }
    std::stable_sort(regions.begin(), regions.end(),
                     [](const Region& a, const Region& b) {
                         if (a.bbox.y_min != b.bbox.y_min)
                             return a.bbox.y_min < b.bbox.y_min;
                         return a.bbox.x_min < b.bbox.x_min;
                     });
    for (std::size_t i = 0; i < regions.size(); ++i)
        regions[i].label = static_cast<int>(i) + 1;
    return regions;
}

namespace {

// Moore neighborhood in clockwise order (screen coordinates, y down),
// starting west: W, NW, N, NE, E, SE, S, SW.
constexpr int mdx[] = {-1, -1, 0, 1, 1, 1, 0, -1};
constexpr int mdy[] = {0, -1, -1, -1, 0, 1, 1, 1};

} // namespace

std::vector<Pixel> boundary_trace(const Region& region) {
    if (region.pixels.empty())
        throw std::invalid_argument("boundary_trace on empty region");

    // Membership lookup confined to the bbox.
    const BBox& bb = region.bbox;
    const int W = bb.width(), H = bb.height();
    std::vector<char> in(static_cast<std::size_t>(W) * H, 0);
    for (const Pixel& p : region.pixels)
        in[static_cast<std::size_t>(p.y - bb.y_min) * W + (p.x - bb.x_min)] = 1;
    auto member = [&](int x, int y) {
        if (x < bb.x_min || x > bb.x_max || y < bb.y_min || y > bb.y_max)
            return false;
        return in[static_cast<std::size_t>(y - bb.y_min) * W + (x - bb.x_min)] != 0;
    };

    // Topmost-then-leftmost pixel; pixels are already in scan order.
    const Pixel start = region.pixels.front();

    std::vector<Pixel> contour{start};
    Pixel cur = start;
    int back = 0;  // direction index of the backtrack neighbor, initially west
    const std::size_t limit = 4 * region.pixels.size() + 8;
    while (contour.size() <= limit) {
        int found = -1;
        for (int k = 0; k < 8; ++k) {
            const int d = (back + k) % 8;
            if (member(cur.x + mdx[d], cur.y + mdy[d])) {
                found = d;
                break;
            }
        }
        if (found < 0)
            break;  // isolated pixel
        const Pixel next{cur.x + mdx[found], cur.y + mdy[found]};
        if (next == start)
            break;
        contour.push_back(next);
        // New backtrack: the neighbor scanned just before the hit, seen
        // from the new current pixel.
        const int prev = (found + 7) % 8;
        const int bx = cur.x + mdx[prev], by = cur.y + mdy[prev];
        cur = next;
        back = 0;
        for (int d = 0; d < 8; ++d) {
            if (cur.x + mdx[d] == bx && cur.y + mdy[d] == by) {
                back = d;
                break;
            }
        }
    }
    return contour;
}

GrayImage extract_subimage(const GrayImage& img, const Region& region, int margin) {
    if (margin < 0)
        throw std::invalid_argument("margin must be non-negative");
    const BBox& bb = region.bbox;
    GrayImage out(bb.width() + 2 * margin, bb.height() + 2 * margin);
    for (const Pixel& p : region.pixels)
        out.at(p.x - bb.x_min + margin, p.y - bb.y_min + margin) = img.at(p.x, p.y);
    return out;
}

} // namespace cbir
