#include "cbir/features.hpp"

#include <cmath>
#include <stdexcept>

namespace cbir {

Histogram histogram(const GrayImage& img, const BitMask* mask) {
    if (mask && (mask->width() != img.width() || mask->height() != img.height()))
        throw std::invalid_argument("mask dimensions do not match image");
    Histogram h;
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            if (mask && !mask->at(x, y))
                continue;
            ++h.counts[img.at(x, y)];
            ++h.total;
        }
    }
    if (h.total == 0)
        throw EmptySample("mask selects zero pixels");
    return h;
}

double entropy(const Histogram& h) {
    if (h.total == 0)
        throw EmptySample("entropy of an empty histogram");
    double s = 0.0;
    const double total = static_cast<double>(h.total);
    for (const std::uint64_t c : h.counts) {
        if (c == 0)
            continue;
        const double p = static_cast<double>(c) / total;
        s -= p * std::log2(p);
    }
    return s < 0.0 ? 0.0 : s;
}

namespace {

// Node weight of the composite trapezoidal rule with unit spacing:
// 1/2 on the boundary of each axis, so corners get 1/4.
inline double trap_weight(int i, int n) {
    return (i == 0 || i == n - 1) ? 0.5 : 1.0;
}

void accumulate_raw(const GrayImage& img, bool trapezoidal,
                    std::array<std::array<double, 4>, 4>& m) {
    const int W = img.width(), H = img.height();
    for (int y = 0; y < H; ++y) {
        const double wy = trapezoidal ? trap_weight(y, H) : 1.0;
        const double fy = static_cast<double>(y);
        const double y2 = fy * fy, y3 = y2 * fy;
        for (int x = 0; x < W; ++x) {
            const std::uint8_t g = img.at(x, y);
            if (g == 0)
                continue;
            const double wgt = (trapezoidal ? trap_weight(x, W) * wy : 1.0) * g;
            const double fx = static_cast<double>(x);
            const double x2 = fx * fx, x3 = x2 * fx;
            m[0][0] += wgt;
            m[1][0] += fx * wgt;
            m[0][1] += fy * wgt;
            m[2][0] += x2 * wgt;
            m[1][1] += fx * fy * wgt;
            m[0][2] += y2 * wgt;
            m[3][0] += x3 * wgt;
            m[2][1] += x2 * fy * wgt;
            m[1][2] += fx * y2 * wgt;
            m[0][3] += y3 * wgt;
        }
    }
}

} // namespace

MomentSet raw_moments_sum(const GrayImage& img) {
    MomentSet ms;
    ms.quadrature = Quadrature::summation;
    accumulate_raw(img, false, ms.m);
    if (ms.m[0][0] <= 0.0)
        throw ZeroMass("all pixels are zero");
    return ms;
}

MomentSet raw_moments_trap(const GrayImage& img) {
    if (img.width() < 2 || img.height() < 2)
        throw DegenerateGrid("trapezoidal rule needs width and height >= 2");
    MomentSet ms;
    ms.quadrature = Quadrature::trapezoidal;
    accumulate_raw(img, true, ms.m);
    if (ms.m[0][0] <= 0.0)
        throw ZeroMass("all pixels are zero");
    return ms;
}

MomentSet complete_moments(const GrayImage& img, MomentSet raw) {
    if (raw.m[0][0] <= 0.0)
        throw ZeroMass("zero total mass");
    const bool trap = raw.quadrature == Quadrature::trapezoidal;
    raw.xc = raw.m[1][0] / raw.m[0][0];
    raw.yc = raw.m[0][1] / raw.m[0][0];

    const int W = img.width(), H = img.height();
    auto& mu = raw.mu;
    for (int y = 0; y < H; ++y) {
        const double wy = trap ? trap_weight(y, H) : 1.0;
        const double dy = static_cast<double>(y) - raw.yc;
        const double dy2 = dy * dy, dy3 = dy2 * dy;
        for (int x = 0; x < W; ++x) {
            const std::uint8_t g = img.at(x, y);
            if (g == 0)
                continue;
            const double wgt = (trap ? trap_weight(x, W) * wy : 1.0) * g;
            const double dx = static_cast<double>(x) - raw.xc;
            const double dx2 = dx * dx, dx3 = dx2 * dx;
            mu[0][0] += wgt;
            mu[1][0] += dx * wgt;
            mu[0][1] += dy * wgt;
            mu[2][0] += dx2 * wgt;
            mu[1][1] += dx * dy * wgt;
            mu[0][2] += dy2 * wgt;
            mu[3][0] += dx3 * wgt;
            mu[2][1] += dx2 * dy * wgt;
            mu[1][2] += dx * dy2 * wgt;
            mu[0][3] += dy3 * wgt;
        }
    }

    for (int p = 0; p < 4; ++p) {
        for (int q = 0; q < 4 - p; ++q) {
            const double lambda = (p + q) / 2.0 + 1.0;
            raw.eta[p][q] = mu[p][q] / std::pow(mu[0][0], lambda);
        }
    }
    raw.eta[0][0] = 1.0;
    raw.eta[1][0] = 0.0;
    raw.eta[0][1] = 0.0;
    raw.complete = true;
    return raw;
}

std::array<double, 7> hu_invariants(const MomentSet& ms) {
    if (!ms.complete)
        throw std::invalid_argument("hu_invariants needs completed moments");
    const double n20 = ms.eta[2][0], n02 = ms.eta[0][2], n11 = ms.eta[1][1];
    const double n30 = ms.eta[3][0], n03 = ms.eta[0][3];
    const double n21 = ms.eta[2][1], n12 = ms.eta[1][2];

    const double a = n30 + n12;        // x-heavy third-order sum
    const double b = n21 + n03;        // y-heavy third-order sum
    const double c = n30 - 3.0 * n12;
    const double d = 3.0 * n21 - n03;

    std::array<double, 7> phi{};
    phi[0] = n20 + n02;
    phi[1] = (n20 - n02) * (n20 - n02) + 4.0 * n11 * n11;
    phi[2] = c * c + d * d;
    phi[3] = a * a + b * b;
    phi[4] = c * a * (a * a - 3.0 * b * b) + d * b * (3.0 * a * a - b * b);
    phi[5] = (n20 - n02) * (a * a - b * b) + 4.0 * n11 * a * b;
    phi[6] = d * a * (a * a - 3.0 * b * b) - c * b * (3.0 * a * a - b * b);
    return phi;
}

std::array<double, 7> log_scale(const std::array<double, 7>& phi) {
    std::array<double, 7> psi{};
    for (std::size_t i = 0; i < 7; ++i) {
        const double v = phi[i];
        if (std::abs(v) < 1e-30)
            psi[i] = 0.0;
        else
            psi[i] = (v < 0.0 ? -1.0 : 1.0) * std::log10(std::abs(v));
    }
    return psi;
}

FeatureVector extract_features(const GrayImage& sub, EntropyScope scope) {
    FeatureVector fv;
    if (scope == EntropyScope::foreground) {
        const BitMask fg = threshold_mask(sub, 1);
        fv.entropy = entropy(histogram(sub, &fg));
    } else {
        fv.entropy = entropy(histogram(sub));
    }
    const MomentSet ms = complete_moments(sub, raw_moments_trap(sub));
    fv.phi = hu_invariants(ms);
    fv.psi = log_scale(fv.phi);
    return fv;
}

} // namespace cbir
