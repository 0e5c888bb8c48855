#pragma once

#include <array>

#include "tir/image.hpp"

namespace tir {

/// Hu's seven invariant moments phi1..phi7.
struct HuVector {
    std::array<double, 7> phi{};

    double operator[](std::size_t i) const { return phi[i]; }
    friend bool operator==(const HuVector&, const HuVector&) = default;
};

/// Moments up to order 3 of an intensity image, indexed [p][q] with p + q <= 3.
/// Entries with p + q > 3 are zero; eta entries with p + q < 2 are unused.
struct MomentTable {
    std::array<std::array<double, 4>, 4> m{};
    std::array<std::array<double, 4>, 4> mu{};
    std::array<std::array<double, 4>, 4> eta{};
    double xbar = 0;
    double ybar = 0;
};

/// sum_x sum_y x^p y^q f(x, y) over the whole image, with 0^0 = 1.
double raw_moment(const GrayImage& image, int p, int q);

/// Moment about the intensity centroid. Throws DegenerateImageError when all
/// pixels are zero.
double central_moment(const GrayImage& image, int p, int q);

/// mu_pq / m00^((p + q) / 2 + 1), for p + q in [2, 3].
double normalized_central_moment(const GrayImage& image, int p, int q);

/// All moments of order <= 3 in a single pass.
MomentTable moment_table(const GrayImage& image);

HuVector hu_moments(const MomentTable& table);
HuVector hu_moments(const GrayImage& image);

}  // namespace tir
