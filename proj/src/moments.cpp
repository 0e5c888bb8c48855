#include "tir/moments.hpp"

#include <cmath>
#include <string>

namespace tir {

namespace {

void check_order(int p, int q, int min_order) {
    if (p < 0 || q < 0 || p + q > 3 || p + q < min_order)
        throw InvalidArgument("moment order (" + std::to_string(p) + ", " + std::to_string(q) +
                              ") outside the supported range");
}

struct Bounds {
    int x0, y0, x1, y1;  // inclusive
};

// Bounding box of the nonzero pixels. Central moments are accumulated in
// coordinates relative to its corner, which makes them bitwise identical for
// integer-translated copies of the same content.
bool nonzero_bounds(const GrayImage& image, Bounds& b) {
    b = {image.width(), image.height(), -1, -1};
    for (int y = 0; y < image.height(); ++y)
        for (int x = 0; x < image.width(); ++x)
            if (image.at(x, y) != 0) {
                b.x0 = std::min(b.x0, x);
                b.y0 = std::min(b.y0, y);
                b.x1 = std::max(b.x1, x);
                b.y1 = std::max(b.y1, y);
            }
    return b.x1 >= 0;
}

// sum over rows of y^q * (sum over columns of x^p f), for all p + q <= 3.
// Coordinates are offset by (ox, oy); with integer offsets every partial sum
// is an exact integer for images of practical size.
std::array<std::array<double, 4>, 4> raw_sums(const GrayImage& image, const Bounds& b, double ox, double oy) {
    std::array<std::array<double, 4>, 4> m{};
    for (int y = b.y0; y <= b.y1; ++y) {
        std::array<double, 4> row{};
        for (int x = b.x0; x <= b.x1; ++x) {
            const double f = image.at(x, y);
            const double u = x - ox;
            row[0] += f;
            row[1] += u * f;
            row[2] += u * u * f;
            row[3] += u * u * u * f;
        }
        const double v = y - oy;
        const double vp[4] = {1.0, v, v * v, v * v * v};
        for (int p = 0; p <= 3; ++p)
            for (int q = 0; p + q <= 3; ++q) m[p][q] += vp[q] * row[p];
    }
    return m;
}

}  // namespace

double raw_moment(const GrayImage& image, int p, int q) {
    check_order(p, q, 0);
    const Bounds whole{0, 0, image.width() - 1, image.height() - 1};
    return raw_sums(image, whole, 0, 0)[p][q];
}

MomentTable moment_table(const GrayImage& image) {
    Bounds b;
    if (!nonzero_bounds(image, b))
        throw DegenerateImageError("moments are undefined for an all-zero image");

    MomentTable t;
    t.m = raw_sums(image, b, 0, 0);

    const auto local = raw_sums(image, b, b.x0, b.y0);
    const double m00 = local[0][0];
    const double ubar = local[1][0] / m00;
    const double vbar = local[0][1] / m00;
    t.xbar = b.x0 + ubar;
    t.ybar = b.y0 + vbar;

    for (int y = b.y0; y <= b.y1; ++y) {
        std::array<double, 4> row{};
        for (int x = b.x0; x <= b.x1; ++x) {
            const double f = image.at(x, y);
            const double du = (x - b.x0) - ubar;
            row[0] += f;
            row[1] += du * f;
            row[2] += du * du * f;
            row[3] += du * du * du * f;
        }
        const double dv = (y - b.y0) - vbar;
        const double dvp[4] = {1.0, dv, dv * dv, dv * dv * dv};
        for (int p = 0; p <= 3; ++p)
            for (int q = 0; p + q <= 3; ++q) t.mu[p][q] += dvp[q] * row[p];
    }
    t.mu[1][0] = 0.0;
    t.mu[0][1] = 0.0;

    for (int p = 0; p <= 3; ++p)
        for (int q = 0; p + q <= 3; ++q)
            if (p + q >= 2) t.eta[p][q] = t.mu[p][q] / std::pow(m00, (p + q) / 2.0 + 1.0);
    return t;
}

double central_moment(const GrayImage& image, int p, int q) {
    check_order(p, q, 0);
    return moment_table(image).mu[p][q];
}

double normalized_central_moment(const GrayImage& image, int p, int q) {
    check_order(p, q, 2);
    return moment_table(image).eta[p][q];
}

// Hu's original 1962 invariants. A commonly reprinted variant has typos in
// phi2 (4*eta11 without the square), phi3 (3*(eta21 - eta03)^2), phi4
// ((eta30 - eta12)^2) and the sign of phi7's second term; those forms are not
// rotation invariant and are deliberately not used here.
HuVector hu_moments(const MomentTable& t) {
    const auto& n = t.eta;
    const double n20 = n[2][0], n02 = n[0][2], n11 = n[1][1];
    const double n30 = n[3][0], n03 = n[0][3], n21 = n[2][1], n12 = n[1][2];

    const double a = n30 + n12;
    const double b = n21 + n03;
    const double c = n30 - 3 * n12;
    const double d = 3 * n21 - n03;

    HuVector h;
    h.phi[0] = n20 + n02;
    h.phi[1] = (n20 - n02) * (n20 - n02) + 4 * n11 * n11;
    h.phi[2] = c * c + d * d;
    h.phi[3] = a * a + b * b;
    h.phi[4] = c * a * (a * a - 3 * b * b) + d * b * (3 * a * a - b * b);
    h.phi[5] = (n20 - n02) * (a * a - b * b) + 4 * n11 * a * b;
    h.phi[6] = d * a * (a * a - 3 * b * b) - c * b * (3 * a * a - b * b);
    return h;
}

HuVector hu_moments(const GrayImage& image) { return hu_moments(moment_table(image)); }

}  // namespace tir
