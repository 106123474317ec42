#ifndef CBIR_FEATURES_HPP
#define CBIR_FEATURES_HPP

#include <array>
#include <cstdint>
#include <optional>

#include "cbir/raster.hpp"
#include "cbir/segment.hpp"

namespace cbir {

/// 256-bin intensity histogram.
struct Histogram {
    std::array<std::uint64_t, 256> counts{};
    std::uint64_t total = 0;
};

enum class Quadrature { trapezoidal, summation };

/// Raw, central and normalized moments up to order 3.
///
/// Index as m[p][q] with p+q <= 3; entries above order 3 stay 0.
struct MomentSet {
    std::array<std::array<double, 4>, 4> m{};    // raw
    double xc = 0.0, yc = 0.0;                   // intensity centroid
    std::array<std::array<double, 4>, 4> mu{};   // central
    std::array<std::array<double, 4>, 4> eta{};  // scale-normalized
    Quadrature quadrature = Quadrature::trapezoidal;
    bool complete = false;
};

enum class EntropyScope { foreground, whole };

/// Per-sub-image descriptor: entropy plus the seven Hu invariants and
/// their log-scaled form.
struct FeatureVector {
    double entropy = 0.0;
    std::array<double, 7> phi{};
    std::array<double, 7> psi{};
};

/// Counts intensities over all pixels, or over masked pixels only.
/// Throws EmptySample if the mask selects zero pixels.
Histogram histogram(const GrayImage& img, const BitMask* mask = nullptr);

/// S = -sum P_i log2 P_i, with 0*log2(0) = 0. Result in [0, 8] bits.
double entropy(const Histogram& h);

/// Raw moments by direct summation: m_pq = sum_y sum_x x^p y^q g(x,y).
/// The independent oracle against raw_moments_trap. Throws ZeroMass.
MomentSet raw_moments_sum(const GrayImage& img);

/// Raw moments by the composite trapezoidal rule with unit spacing:
/// node weights 1 interior, 1/2 on non-corner border, 1/4 at corners.
/// Throws DegenerateGrid if width or height < 2, ZeroMass if all pixels
/// are 0. For images with an all-zero border this equals raw_moments_sum.
MomentSet raw_moments_trap(const GrayImage& img);

/// Fills centroid, central moments (same quadrature, integrand
/// (x-xc)^p (y-yc)^q g) and normalized moments eta_pq = mu_pq / mu00^lambda
/// with lambda = (p+q)/2 + 1.
MomentSet complete_moments(const GrayImage& img, MomentSet raw);

/// The seven Hu invariants in canonical form.
std::array<double, 7> hu_invariants(const MomentSet& ms);

/// psi_i = 0 if |phi_i| < 1e-30, else sign(phi_i) * log10(|phi_i|).
std::array<double, 7> log_scale(const std::array<double, 7>& phi);

/// Full descriptor of a zero-bordered sub-image: entropy over foreground
/// pixels (intensity >= 1) or the whole frame, invariants from
/// trapezoidal-quadrature moments.
FeatureVector extract_features(const GrayImage& sub,
                               EntropyScope scope = EntropyScope::foreground);

} // namespace cbir

#endif
