// Portable graymap / pixmap reader and P5 writer (maxval 255 only).

#include <cctype>
#include <fstream>
#include <iterator>
#include <limits>

#include "tir/image.hpp"

namespace tir {

namespace {

using Kind = ImageError::Kind;

class PnmReader {
public:
    PnmReader(std::string bytes, std::string path) : bytes_(std::move(bytes)), path_(std::move(path)) {}

    AnyImage read() {
        if (bytes_.size() < 2 || bytes_[0] != 'P')
            fail(Kind::malformed_header, "missing P2/P3/P5/P6 magic number");
        const char magic = bytes_[1];
        if (magic != '2' && magic != '3' && magic != '5' && magic != '6')
            fail(Kind::malformed_header, std::string("unsupported magic number P") + magic);
        pos_ = 2;
        if (pos_ < bytes_.size() && !is_space(bytes_[pos_]) && bytes_[pos_] != '#')
            fail(Kind::malformed_header, "magic number not followed by whitespace");

        const long width = header_int("width");
        const long height = header_int("height");
        const long maxval = header_int("maxval");
        if (width < 1 || height < 1)
            fail(Kind::invalid_dimensions,
                 "dimensions must be positive, got " + std::to_string(width) + "x" + std::to_string(height));
        if (width > kMaxSide || height > kMaxSide)
            fail(Kind::invalid_dimensions, "dimensions too large");
        if (maxval != 255)
            fail(Kind::unsupported_maxval, "maxval must be 255, got " + std::to_string(maxval));

        const bool binary = magic == '5' || magic == '6';
        const int channels = (magic == '3' || magic == '6') ? 3 : 1;
        const std::size_t count = static_cast<std::size_t>(width) * height * channels;

        std::vector<std::uint8_t> samples;
        if (binary) {
            // Exactly one whitespace byte separates maxval from the raster.
            if (pos_ >= bytes_.size()) fail(Kind::truncated, "no pixel data");
            ++pos_;
            if (bytes_.size() - pos_ < count)
                fail(Kind::truncated, "expected " + std::to_string(count) + " bytes of pixel data, found " +
                                          std::to_string(bytes_.size() - pos_));
            samples.assign(bytes_.begin() + static_cast<std::ptrdiff_t>(pos_),
                           bytes_.begin() + static_cast<std::ptrdiff_t>(pos_ + count));
        } else {
            samples.reserve(count);
            for (std::size_t i = 0; i < count; ++i) {
                skip_space();
                if (pos_ >= bytes_.size())
                    fail(Kind::truncated, "expected " + std::to_string(count) + " samples, found " +
                                              std::to_string(i));
                const long v = read_number();
                if (v < 0) fail(Kind::malformed_data, "non-numeric sample at index " + std::to_string(i));
                if (v > 255) fail(Kind::malformed_data, "sample exceeds maxval at index " + std::to_string(i));
                samples.push_back(static_cast<std::uint8_t>(v));
            }
        }

        const int w = static_cast<int>(width);
        const int h = static_cast<int>(height);
        if (channels == 1) return GrayImage(w, h, std::move(samples));

        std::vector<Rgb> rgb(static_cast<std::size_t>(w) * h);
        for (std::size_t i = 0; i < rgb.size(); ++i)
            rgb[i] = Rgb{samples[3 * i], samples[3 * i + 1], samples[3 * i + 2]};
        return RgbImage(w, h, std::move(rgb));
    }

private:
    static constexpr long kMaxSide = 1L << 16;

    static bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

    [[noreturn]] void fail(Kind kind, const std::string& msg) const {
        throw ImageError(kind, path_ + ": " + msg);
    }

    void skip_space() {
        while (pos_ < bytes_.size()) {
            if (bytes_[pos_] == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
            } else if (is_space(bytes_[pos_])) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    // Decimal digits at pos_, or -1 when there are none. Saturates on overflow.
    long read_number() {
        const std::size_t start = pos_;
        long v = 0;
        while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
            if (v < std::numeric_limits<long>::max() / 10) v = v * 10 + (bytes_[pos_] - '0');
            ++pos_;
        }
        if (pos_ == start) return -1;
        if (pos_ < bytes_.size() && !is_space(bytes_[pos_]) && bytes_[pos_] != '#') return -1;
        return v;
    }

    long header_int(const char* field) {
        skip_space();
        if (pos_ >= bytes_.size()) fail(Kind::malformed_header, std::string("header ends before ") + field);
        if (bytes_[pos_] == '-') fail(Kind::invalid_dimensions, std::string("negative ") + field);
        const long v = read_number();
        if (v < 0) fail(Kind::malformed_header, std::string("invalid ") + field);
        return v;
    }

    std::string bytes_;
    std::string path_;
    std::size_t pos_ = 0;
};

}  // namespace

AnyImage load_image(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ImageError(Kind::unreadable, path + ": cannot open file");
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw ImageError(Kind::unreadable, path + ": read error");
    return PnmReader(std::move(bytes), path).read();
}

GrayImage load_gray(const std::string& path) { return to_gray(load_image(path)); }

void save_pgm(const GrayImage& image, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ImageError(Kind::write_failed, path + ": cannot open for writing");
    out << "P5\n" << image.width() << ' ' << image.height() << "\n255\n";
    out.write(reinterpret_cast<const char*>(image.pixels().data()),
              static_cast<std::streamsize>(image.pixels().size()));
    out.close();
    if (!out) throw ImageError(Kind::write_failed, path + ": write failed");
}

}  // namespace tir
