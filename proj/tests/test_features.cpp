#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cbir/features.hpp"
#include "cbir/synth.hpp"

using namespace cbir;

namespace {

GrayImage random_zero_border_image(std::mt19937& rng) {
    const int w = 3 + static_cast<int>(rng() % 30);
    const int h = 3 + static_cast<int>(rng() % 30);
    GrayImage img(w, h);
    for (int y = 1; y < h - 1; ++y)
        for (int x = 1; x < w - 1; ++x)
            img.at(x, y) = static_cast<std::uint8_t>(rng() % 256);
    img.at(w / 2, h / 2) = 200;  // guarantee nonzero mass
    return img;
}

GrayImage mirror_x(const GrayImage& img) {
    GrayImage out(img.width(), img.height());
    for (int y = 0; y < img.height(); ++y)
        for (int x = 0; x < img.width(); ++x)
            out.at(x, y) = img.at(img.width() - 1 - x, y);
    return out;
}

} // namespace

TEST_CASE("histogram counts, masked and unmasked") {
    GrayImage img(2, 2, std::vector<std::uint8_t>{5, 5, 5, 5});
    Histogram h = histogram(img);
    CHECK(h.counts[5] == 4);
    CHECK(h.total == 4);

    GrayImage two(2, 1, std::vector<std::uint8_t>{0, 255});
    h = histogram(two);
    CHECK(h.counts[0] == 1);
    CHECK(h.counts[255] == 1);

    BitMask none(2, 1);
    CHECK_THROWS_AS(histogram(two, &none), EmptySample);
}

TEST_CASE("entropy of canonical distributions") {
    GrayImage flat(4, 1, std::vector<std::uint8_t>{9, 9, 9, 9});
    CHECK(entropy(histogram(flat)) == 0.0);

    GrayImage coin(2, 1, std::vector<std::uint8_t>{3, 200});
    CHECK(entropy(histogram(coin)) == 1.0);

    GrayImage full(16, 16);
    for (int i = 0; i < 256; ++i)
        full.at(i % 16, i / 16) = static_cast<std::uint8_t>(i);
    CHECK(entropy(histogram(full)) == 8.0);
}

TEST_CASE("raw moments by direct summation") {
    GrayImage one(1, 1, std::vector<std::uint8_t>{5});
    const MomentSet ms = raw_moments_sum(one);
    CHECK(ms.m[0][0] == 5.0);
    CHECK(ms.m[1][0] == 0.0);
    CHECK(ms.m[0][1] == 0.0);

    GrayImage ones(3, 3, std::vector<std::uint8_t>(9, 1));
    const MomentSet m3 = raw_moments_sum(ones);
    CHECK(m3.m[0][0] == 9.0);
    CHECK(m3.m[1][0] == 9.0);
    CHECK(m3.m[0][1] == 9.0);

    CHECK_THROWS_AS(raw_moments_sum(GrayImage(3, 3)), ZeroMass);
}

TEST_CASE("trapezoidal moments: hand case and degenerate grids") {
    GrayImage ones(3, 3, std::vector<std::uint8_t>(9, 1));
    const MomentSet ms = raw_moments_trap(ones);
    CHECK(ms.m[0][0] == 4.0);  // corner weights 1/4, edges 1/2, center 1

    CHECK_THROWS_AS(raw_moments_trap(GrayImage(3, 1, std::vector<std::uint8_t>(3, 1))),
                    DegenerateGrid);
    CHECK_THROWS_AS(raw_moments_trap(GrayImage(3, 3)), ZeroMass);
}

TEST_CASE("quadrature identity on zero-border images") {
    std::mt19937 rng(1234);
    for (int iter = 0; iter < 50; ++iter) {
        const GrayImage img = random_zero_border_image(rng);
        const MomentSet a = raw_moments_trap(img);
        const MomentSet b = raw_moments_sum(img);
        for (int p = 0; p < 4; ++p)
            for (int q = 0; q < 4 - p; ++q) {
                const double scale = std::max({std::abs(a.m[p][q]), std::abs(b.m[p][q]), 1.0});
                CHECK(std::abs(a.m[p][q] - b.m[p][q]) <= 1e-12 * scale);
            }
    }
}

TEST_CASE("complete_moments: centroid and vanishing first central moments") {
    GrayImage ones(3, 3, std::vector<std::uint8_t>(9, 1));
    const MomentSet ms = complete_moments(ones, raw_moments_trap(ones));
    CHECK(ms.xc == doctest::Approx(1.0));
    CHECK(ms.yc == doctest::Approx(1.0));
    CHECK(ms.eta[0][0] == 1.0);
    CHECK(ms.eta[1][0] == 0.0);
    CHECK(ms.eta[0][1] == 0.0);

    std::mt19937 rng(99);
    for (int iter = 0; iter < 30; ++iter) {
        const GrayImage img = random_zero_border_image(rng);
        const MomentSet m = complete_moments(img, raw_moments_trap(img));
        CHECK(std::abs(m.mu[1][0]) <= 1e-9 * m.m[0][0]);
        CHECK(std::abs(m.mu[0][1]) <= 1e-9 * m.m[0][0]);
    }
}

TEST_CASE("centered disk has mu11 ~ 0") {
    const GrayImage img = render(disk_spec(20.0, 200));
    const MomentSet ms = complete_moments(img, raw_moments_trap(img));
    CHECK(std::abs(ms.mu[1][1]) <= 1e-9 * ms.m[0][0]);
}

TEST_CASE("hu invariants of a centered square vanish beyond phi1") {
    const GrayImage img = render(rect_spec(31, 31, 90));
    const auto phi = hu_invariants(complete_moments(img, raw_moments_trap(img)));
    const double tol = 1e-9 * std::max(1.0, std::abs(phi[0]));
    for (int i = 1; i < 7; ++i)
        CHECK(std::abs(phi[static_cast<std::size_t>(i)]) <= tol);
}

TEST_CASE("analytic disk oracle: phi1 -> 1/(2 pi)") {
    // unit-intensity disk: eta20 = eta02 = 1/(4 pi), so phi1 = 1/(2 pi)
    const GrayImage img = render(disk_spec(100.0, 1));
    const auto phi = hu_invariants(complete_moments(img, raw_moments_trap(img)));
    const double expect = 1.0 / (2.0 * std::numbers::pi);
    CHECK(std::abs(phi[0] - expect) <= 0.01 * expect);
}

TEST_CASE("mirror reflection negates phi7, fixes phi1..phi6") {
    const GrayImage img = render(triangle_spec(4, 90, 124, 96, 30, 4, 255));
    const auto a = hu_invariants(complete_moments(img, raw_moments_trap(img)));
    const GrayImage mir = mirror_x(img);
    const auto b = hu_invariants(complete_moments(mir, raw_moments_trap(mir)));
    for (int i = 0; i < 6; ++i)
        CHECK(std::abs(a[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)]) <=
              1e-9 * std::abs(a[static_cast<std::size_t>(i)]));
    CHECK(a[6] != 0.0);
    CHECK(std::abs(a[6] + b[6]) <= 1e-9 * std::abs(a[6]));
}

TEST_CASE("log_scale sign convention and underflow clamp") {
    std::array<double, 7> phi{0.01, -0.01, 0.0, 1e-31, 1.0, 100.0, -100.0};
    const auto psi = log_scale(phi);
    CHECK(psi[0] == doctest::Approx(-2.0));
    CHECK(psi[1] == doctest::Approx(2.0));  // sign(-0.01) * log10(0.01) = (-1)(-2)
    CHECK(psi[2] == 0.0);
    CHECK(psi[3] == 0.0);
    CHECK(psi[4] == 0.0);
    CHECK(psi[5] == doctest::Approx(2.0));
    CHECK(psi[6] == doctest::Approx(-2.0));
}

TEST_CASE("extract_features: constant disk, rotation, entropy scope") {
    const GrayImage img = render(disk_spec(30.0, 120));
    const FeatureVector fv = extract_features(img, EntropyScope::foreground);
    CHECK(fv.entropy == 0.0);  // one gray level in the region

    // whole-frame entropy counts the padding
    const FeatureVector whole = extract_features(img, EntropyScope::whole);
    CHECK(whole.entropy > 0.0);

    // 90-degree rotation is an exact permutation
    const FeatureVector rot = extract_features(rotate(img, 90.0));
    for (int i = 0; i < 7; ++i)
        CHECK(std::abs(rot.psi[static_cast<std::size_t>(i)] -
                       fv.psi[static_cast<std::size_t>(i)]) <= 1e-9);
}

TEST_CASE("translation invariance of central and normalized moments") {
    const GrayImage img = render(triangle_spec(4, 60, 100, 64, 30, 4, 180));
    const GrayImage moved = translate(img, 1, 2);
    const MomentSet a = complete_moments(img, raw_moments_trap(img));
    const MomentSet b = complete_moments(moved, raw_moments_trap(moved));
    for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4 - p; ++q) {
            if (p + q == 1)
                continue;
            const double scale = std::max(std::abs(a.mu[p][q]), 1e-300);
            CHECK(std::abs(a.mu[p][q] - b.mu[p][q]) <= 1e-12 * scale);
            const double escale = std::max(std::abs(a.eta[p][q]), 1e-300);
            CHECK(std::abs(a.eta[p][q] - b.eta[p][q]) <= 1e-12 * escale);
        }
}

TEST_CASE("intensity scaling follows eta_pq(c g) = c^(1-lambda) eta_pq(g)") {
    const GrayImage base = render(triangle_spec(4, 70, 110, 74, 40, 4, 60));
    const MomentSet a = complete_moments(base, raw_moments_trap(base));
    for (const int c : {2, 3}) {
        GrayImage scaled = base;
        for (auto& v : scaled.pixels())
            v = static_cast<std::uint8_t>(v * c);
        const MomentSet b = complete_moments(scaled, raw_moments_trap(scaled));
        CHECK(b.xc == doctest::Approx(a.xc));
        CHECK(b.yc == doctest::Approx(a.yc));
        for (int p = 0; p < 4; ++p)
            for (int q = 0; q < 4 - p; ++q) {
                if (p + q < 2)
                    continue;
                const double lambda = (p + q) / 2.0 + 1.0;
                const double expect = std::pow(c, 1.0 - lambda) * a.eta[p][q];
                CHECK(std::abs(b.eta[p][q] - expect) <=
                      1e-9 * std::max(std::abs(expect), 1e-300));
            }
    }
}

TEST_CASE("entropy is permutation invariant") {
    std::mt19937 rng(5);
    GrayImage img(12, 9);
    for (auto& v : img.pixels())
        v = static_cast<std::uint8_t>(rng() % 256);
    const double s0 = entropy(histogram(img));
    GrayImage shuffled = img;
    std::shuffle(shuffled.pixels().begin(), shuffled.pixels().end(), rng);
    CHECK(entropy(histogram(shuffled)) == s0);
}
