#include "tir/image.hpp"

#include <algorithm>
#include <cmath>

namespace tir {

namespace {

std::uint8_t clamp_round(double v) {
    return static_cast<std::uint8_t>(std::clamp<long>(std::lround(v), 0, 255));
}

// cos/sin that are exact at multiples of 90 degrees, so quarter turns are
// pure index permutations.
void exact_cos_sin(double degrees, double& c, double& s) {
    double a = std::fmod(degrees, 360.0);
    if (a < 0) a += 360.0;
    if (a == 0.0) { c = 1; s = 0; return; }
    if (a == 90.0) { c = 0; s = 1; return; }
    if (a == 180.0) { c = -1; s = 0; return; }
    if (a == 270.0) { c = 0; s = -1; return; }
    const double rad = a * (M_PI / 180.0);
    c = std::cos(rad);
    s = std::sin(rad);
}

}  // namespace

GrayImage rgb_to_gray(const RgbImage& image) {
    GrayImage out(image.width(), image.height());
    const auto& src = image.pixels();
    auto& dst = out.pixels();
    for (std::size_t i = 0; i < src.size(); ++i) {
        const Rgb p = src[i];
        dst[i] = clamp_round(0.299 * p.r + 0.587 * p.g + 0.114 * p.b);
    }
    return out;
}

GrayImage to_gray(const AnyImage& image) {
    if (const auto* g = std::get_if<GrayImage>(&image)) return *g;
    return rgb_to_gray(std::get<RgbImage>(image));
}

GrayImage rotate(const GrayImage& image, double angle_degrees) {
    double c, s;
    exact_cos_sin(angle_degrees, c, s);

    const int w = image.width();
    const int h = image.height();
    const double cx = (w - 1) / 2.0;
    const double cy = (h - 1) / 2.0;

    auto sample = [&](int x, int y) -> double {
        return image.contains(x, y) ? image.at(x, y) : 0.0;
    };

    GrayImage out(w, h);
    for (int y = 0; y < h; ++y) {
        const double dy = y - cy;
        for (int x = 0; x < w; ++x) {
            const double dx = x - cx;
            // Source position: the destination offset turned clockwise.
            const double sx = cx + dx * c - dy * s;
            const double sy = cy + dx * s + dy * c;

            const double fx = std::floor(sx);
            const double fy = std::floor(sy);
            const double ax = sx - fx;
            const double ay = sy - fy;
            const int x0 = static_cast<int>(fx);
            const int y0 = static_cast<int>(fy);

            const double v = (1 - ax) * (1 - ay) * sample(x0, y0) + ax * (1 - ay) * sample(x0 + 1, y0) +
                             (1 - ax) * ay * sample(x0, y0 + 1) + ax * ay * sample(x0 + 1, y0 + 1);
            out.at(x, y) = clamp_round(v);
        }
    }
    return out;
}

}  // namespace tir
