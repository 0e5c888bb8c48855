#include "tir/shapes.hpp"

#include <cmath>

namespace tir {

namespace {

// Even-odd crossing test over all contours.
bool inside(const Shape& shape, double x, double y) {
    bool in = false;
    for (const auto& c : shape.contours) {
        const std::size_t n = c.size();
        for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
            const Point2 a = c[i];
            const Point2 b = c[j];
            if ((a.y > y) != (b.y > y) && x < (b.x - a.x) * (y - a.y) / (b.y - a.y) + a.x) in = !in;
        }
    }
    return in;
}

std::vector<Point2> star(int points, double outer, double inner, double phase) {
    std::vector<Point2> v;
    for (int i = 0; i < 2 * points; ++i) {
        const double r = i % 2 == 0 ? outer : inner;
        const double a = phase + i * M_PI / points;
        v.push_back({r * std::cos(a), r * std::sin(a)});
    }
    return v;
}

std::vector<Shape> make_shapes() {
    std::vector<Shape> s;
    s.push_back({"triangle", {{{-0.80, 0.55}, {0.70, 0.50}, {-0.10, -0.75}}}});
    s.push_back({"right_triangle", {{{-0.65, -0.70}, {-0.65, 0.60}, {0.65, 0.60}}}});
    s.push_back({"trapezoid", {{{-0.75, 0.45}, {0.75, 0.45}, {0.35, -0.45}, {-0.50, -0.45}}}});
    s.push_back({"house", {{{-0.60, 0.70}, {0.60, 0.70}, {0.60, -0.10}, {0.00, -0.80}, {-0.60, -0.10}}}});
    s.push_back({"letter_L", {{{-0.55, -0.75}, {-0.25, -0.75}, {-0.25, 0.45}, {0.55, 0.45}, {0.55, 0.75}, {-0.55, 0.75}}}});
    s.push_back({"letter_T",
                 {{{-0.65, -0.70}, {0.65, -0.70}, {0.65, -0.40}, {0.15, -0.40}, {0.15, 0.75}, {-0.15, 0.75},
                   {-0.15, -0.40}, {-0.65, -0.40}}}});
    s.push_back({"letter_F",
                 {{{-0.50, -0.80}, {0.55, -0.80}, {0.55, -0.52}, {-0.20, -0.52}, {-0.20, -0.12}, {0.35, -0.12},
                   {0.35, 0.14}, {-0.20, 0.14}, {-0.20, 0.80}, {-0.50, 0.80}}}});
    s.push_back({"letter_E",
                 {{{-0.50, -0.78}, {0.50, -0.78}, {0.50, -0.52}, {-0.22, -0.52}, {-0.22, -0.13}, {0.35, -0.13},
                   {0.35, 0.13}, {-0.22, 0.13}, {-0.22, 0.52}, {0.50, 0.52}, {0.50, 0.78}, {-0.50, 0.78}}}});
    s.push_back({"letter_P",
                 {{{-0.50, -0.80}, {0.45, -0.80}, {0.60, -0.60}, {0.60, -0.05}, {0.45, 0.10}, {-0.20, 0.10},
                   {-0.20, 0.80}, {-0.50, 0.80}},
                  {{-0.20, -0.55}, {0.32, -0.55}, {0.32, -0.15}, {-0.20, -0.15}}}});
    s.push_back({"letter_A",
                 {{{-0.12, -0.80}, {0.12, -0.80}, {0.70, 0.75}, {0.40, 0.75}, {0.26, 0.35}, {-0.26, 0.35},
                   {-0.40, 0.75}, {-0.70, 0.75}},
                  {{0.00, -0.38}, {0.17, 0.12}, {-0.17, 0.12}}}});
    s.push_back({"arrow",
                 {{{-0.80, -0.15}, {0.20, -0.15}, {0.20, -0.50}, {0.85, 0.00}, {0.20, 0.50}, {0.20, 0.15},
                   {-0.80, 0.15}}}});
    s.push_back({"star", {star(5, 0.85, 0.36, -M_PI / 2)}});
    s.push_back({"chevron",
                 {{{-0.70, -0.60}, {-0.35, -0.60}, {0.25, 0.00}, {-0.35, 0.60}, {-0.70, 0.60}, {-0.10, 0.00}}}});
    s.push_back({"bolt",
                 {{{-0.10, -0.85}, {0.45, -0.85}, {0.10, -0.15}, {0.50, -0.15}, {-0.30, 0.85}, {-0.05, 0.10},
                   {-0.45, 0.10}}}});
    s.push_back({"flag",
                 {{{-0.60, -0.80}, {-0.45, -0.80}, {-0.45, -0.70}, {0.70, -0.70}, {0.45, -0.40}, {0.70, -0.10},
                   {-0.45, -0.10}, {-0.45, 0.80}, {-0.60, 0.80}}}});
    s.push_back({"latin_cross",
                 {{{-0.13, -0.85}, {0.13, -0.85}, {0.13, -0.40}, {0.50, -0.40}, {0.50, -0.15}, {0.13, -0.15},
                   {0.13, 0.85}, {-0.13, 0.85}, {-0.13, -0.15}, {-0.50, -0.15}, {-0.50, -0.40}, {-0.13, -0.40}}}});
    s.push_back({"letter_K",
                 {{{-0.55, -0.80}, {-0.25, -0.80}, {-0.25, -0.12}, {0.30, -0.80}, {0.65, -0.80}, {0.05, -0.05},
                   {0.65, 0.80}, {0.30, 0.80}, {-0.12, 0.15}, {-0.25, 0.30}, {-0.25, 0.80}, {-0.55, 0.80}}}});
    s.push_back({"letter_Y",
                 {{{-0.65, -0.80}, {-0.30, -0.80}, {0.00, -0.25}, {0.30, -0.80}, {0.65, -0.80}, {0.15, 0.05},
                   {0.15, 0.80}, {-0.15, 0.80}, {-0.15, 0.05}}}});
    return s;
}

}  // namespace

GrayImage rasterize(const Shape& shape, int size, double scale, int supersample) {
    GrayImage out(size, size);
    const double c = size / 2.0;
    const int total = supersample * supersample;
    for (int py = 0; py < size; ++py)
        for (int px = 0; px < size; ++px) {
            int hits = 0;
            for (int j = 0; j < supersample; ++j)
                for (int i = 0; i < supersample; ++i) {
                    const double x = (px + (i + 0.5) / supersample - c) / scale;
                    const double y = (py + (j + 0.5) / supersample - c) / scale;
                    if (inside(shape, x, y)) ++hits;
                }
            out.at(px, py) = static_cast<std::uint8_t>(std::lround(255.0 * hits / total));
        }
    return out;
}

const std::vector<Shape>& synthetic_shapes() {
    static const std::vector<Shape> shapes = make_shapes();
    return shapes;
}

GrayImage disc_image(int size, double radius, int supersample) {
    std::vector<Point2> ring;
    // A 720-gon is indistinguishable from a circle at raster resolution.
    for (int i = 0; i < 720; ++i) {
        const double a = i * 2 * M_PI / 720;
        ring.push_back({std::cos(a), std::sin(a)});
    }
    return rasterize(Shape{"disc", {ring}}, size, radius, supersample);
}

}  // namespace tir
