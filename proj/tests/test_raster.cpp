#include <doctest.h>

#include <random>
#include <sstream>

#include "cbir/raster.hpp"

using namespace cbir;

TEST_CASE("decode P2 text image") {
    const GrayImage img = decode_pgm(std::string("P2\n2 2\n255\n0 255 255 0"));
    CHECK(img.width() == 2);
    CHECK(img.height() == 2);
    CHECK(img.pixels() == std::vector<std::uint8_t>{0, 255, 255, 0});
}

TEST_CASE("decode P5 binary image") {
    std::string data = "P5\n1 1\n255\n";
    data.push_back(static_cast<char>(0x80));
    const GrayImage img = decode_pgm(data);
    CHECK(img.width() == 1);
    CHECK(img.height() == 1);
    CHECK(img.at(0, 0) == 128);
}

TEST_CASE("color PPM is rejected") {
    CHECK_THROWS_AS(decode_pgm(std::string("P3\n1 1\n255\n0 0 0")), UnsupportedFormat);
}

TEST_CASE("header comments are skipped") {
    const GrayImage img =
        decode_pgm(std::string("P2\n# a comment\n2 1 # trailing\n255\n7 9"));
    CHECK(img.width() == 2);
    CHECK(img.at(0, 0) == 7);
    CHECK(img.at(1, 0) == 9);
}

TEST_CASE("maxval rescaling rounds half up") {
    // 50 * 255 / 100 = 127.5 -> 128
    const GrayImage img = decode_pgm(std::string("P2\n1 1\n100\n50"));
    CHECK(img.at(0, 0) == 128);
    // full scale maps to 255
    const GrayImage full = decode_pgm(std::string("P2\n1 1\n100\n100"));
    CHECK(full.at(0, 0) == 255);
}

TEST_CASE("16-bit P5 samples are two bytes big-endian") {
    std::string data = "P5\n1 1\n65535\n";
    data.push_back(static_cast<char>(0xFF));
    data.push_back(static_cast<char>(0xFF));
    CHECK(decode_pgm(data).at(0, 0) == 255);
}

TEST_CASE("malformed streams yield typed errors") {
    CHECK_THROWS_AS(decode_pgm(std::string("P5\n2 2\n255\nab")), Malformed);  // truncated
    CHECK_THROWS_AS(decode_pgm(std::string("P2\n0 2\n255\n")), Malformed);
    CHECK_THROWS_AS(decode_pgm(std::string("P2\n-1 2\n255\n")), Malformed);
    CHECK_THROWS_AS(decode_pgm(std::string("P2\n1 1\n100\n101")), Malformed);  // > maxval
    CHECK_THROWS_AS(decode_pgm(std::string("P2\n1 1\n255\n")), Malformed);
    CHECK_THROWS_AS(decode_pgm(std::string("")), UnsupportedFormat);
}

TEST_CASE("encode examples") {
    GrayImage one(1, 1);
    one.at(0, 0) = 7;
    std::string expect = "P5\n1 1\n255\n";
    expect.push_back(static_cast<char>(0x07));
    CHECK(encode_pgm(one, true) == expect);

    GrayImage two(2, 1, std::vector<std::uint8_t>{0, 255});
    std::istringstream toks(encode_pgm(two, false));
    std::string t;
    std::vector<std::string> all;
    while (toks >> t)
        all.push_back(t);
    CHECK(all == std::vector<std::string>{"P2", "2", "1", "255", "0", "255"});
}

TEST_CASE("round-trip identity for random images, both formats") {
    std::mt19937 rng(42);
    for (int iter = 0; iter < 60; ++iter) {
        const int w = 1 + static_cast<int>(rng() % 30);
        const int h = 1 + static_cast<int>(rng() % 30);
        GrayImage img(w, h);
        for (int y = 0; y < h; ++y)
            for (int x = 0; x < w; ++x)
                img.at(x, y) = static_cast<std::uint8_t>(rng() % 256);
        CHECK(decode_pgm(encode_pgm(img, true)) == img);
        CHECK(decode_pgm(encode_pgm(img, false)) == img);
    }
}
