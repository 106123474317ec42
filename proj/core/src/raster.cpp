#include "cbir/raster.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace cbir {

GrayImage::GrayImage(int width, int height, std::uint8_t fill)
    : width_(width), height_(height),
      pixels_(static_cast<std::size_t>(width) * height, fill) {
    if (width < 1 || height < 1)
        throw Malformed("image dimensions must be positive");
}

GrayImage::GrayImage(int width, int height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
    if (width < 1 || height < 1)
        throw Malformed("image dimensions must be positive");
    if (pixels_.size() != static_cast<std::size_t>(width) * height)
        throw Malformed("pixel count does not match dimensions");
}

namespace {

class TokenReader {
public:
    TokenReader(std::span<const std::uint8_t> bytes, std::size_t pos)
        : bytes_(bytes), pos_(pos) {}

    // Whitespace-separated ASCII token; '#' starts a comment to end of line.
    std::string next_token() {
        skip_space_and_comments();
        if (pos_ >= bytes_.size())
            throw Malformed("truncated header");
        std::string tok;
        while (pos_ < bytes_.size() && !std::isspace(bytes_[pos_]))
            tok.push_back(static_cast<char>(bytes_[pos_++]));
        return tok;
    }

    long next_int(const char* what) {
        const std::string tok = next_token();
        try {
            std::size_t used = 0;
            const long v = std::stol(tok, &used);
            if (used != tok.size())
                throw Malformed(std::string("bad ") + what + ": '" + tok + "'");
            return v;
        } catch (const std::logic_error&) {
            throw Malformed(std::string("bad ") + what + ": '" + tok + "'");
        }
    }

    // Consumes the single whitespace byte that terminates the header.
    void consume_header_end() {
        if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_]))
            throw Malformed("missing whitespace after maxval");
        ++pos_;
    }

    std::size_t pos() const { return pos_; }

private:
    void skip_space_and_comments() {
        while (pos_ < bytes_.size()) {
            if (std::isspace(bytes_[pos_])) {
                ++pos_;
            } else if (bytes_[pos_] == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n')
                    ++pos_;
            } else {
                break;
            }
        }
    }

    std::span<const std::uint8_t> bytes_;
    std::size_t pos_;
};

std::uint8_t rescale(long v, long maxval) {
    if (maxval == 255)
        return static_cast<std::uint8_t>(v);
    // round-half-up of v*255/maxval
    return static_cast<std::uint8_t>((v * 510 + maxval) / (2 * maxval));
}

} // namespace

GrayImage decode_pgm(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 2)
        throw UnsupportedFormat("not a PGM stream");
    const char m0 = static_cast<char>(bytes[0]);
    const char m1 = static_cast<char>(bytes[1]);
    if (m0 != 'P' || (m1 != '2' && m1 != '5'))
        throw UnsupportedFormat(std::string("unsupported magic '") + m0 + m1 + "'");
    const bool binary = m1 == '5';

    TokenReader rd(bytes, 2);
    const long w = rd.next_int("width");
    const long h = rd.next_int("height");
    const long maxval = rd.next_int("maxval");
    if (w <= 0 || h <= 0)
        throw Malformed("non-positive dimensions");
    if (maxval <= 0 || maxval > 65535)
        throw Malformed("maxval out of range");

    const std::size_t n = static_cast<std::size_t>(w) * static_cast<std::size_t>(h);
    std::vector<std::uint8_t> px(n);
    if (binary) {
        rd.consume_header_end();
        const std::size_t bytes_per_sample = maxval > 255 ? 2 : 1;
        if (bytes.size() - rd.pos() < n * bytes_per_sample)
            throw Malformed("truncated pixel payload");
        std::size_t p = rd.pos();
        for (std::size_t i = 0; i < n; ++i) {
            long v;
            if (bytes_per_sample == 2) {
                v = (static_cast<long>(bytes[p]) << 8) | bytes[p + 1];
                p += 2;
            } else {
                v = bytes[p++];
            }
            if (v > maxval)
                throw Malformed("sample above maxval");
            px[i] = rescale(v, maxval);
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            const long v = rd.next_int("sample");
            if (v < 0 || v > maxval)
                throw Malformed("sample out of range");
            px[i] = rescale(v, maxval);
        }
    }
    return GrayImage(static_cast<int>(w), static_cast<int>(h), std::move(px));
}

GrayImage decode_pgm(const std::string& bytes) {
    return decode_pgm(std::span(reinterpret_cast<const std::uint8_t*>(bytes.data()),
                                bytes.size()));
}

std::string encode_pgm(const GrayImage& img, bool binary) {
    std::ostringstream out;
    out << (binary ? "P5" : "P2") << '\n'
        << img.width() << ' ' << img.height() << '\n' << "255\n";
    if (binary) {
        out.write(reinterpret_cast<const char*>(img.pixels().data()),
                  static_cast<std::streamsize>(img.pixels().size()));
    } else {
        for (int y = 0; y < img.height(); ++y) {
            for (int x = 0; x < img.width(); ++x) {
                if (x) out << ' ';
                out << static_cast<int>(img.at(x, y));
            }
            out << '\n';
        }
    }
    return out.str();
}

GrayImage read_pgm_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Malformed("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return decode_pgm(buf.str());
}

void write_pgm_file(const GrayImage& img, const std::string& path, bool binary) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Malformed("cannot open '" + path + "' for writing");
    const std::string data = encode_pgm(img, binary);
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out)
        throw Malformed("write failed for '" + path + "'");
}

} // namespace cbir
