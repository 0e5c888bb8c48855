#pragma once

#include <vector>

#include "tir/edge.hpp"
#include "tir/image.hpp"

namespace tir {

/// Harris detector parameters.
struct CornerConfig {
    double kappa = 0.04;               ///< sensitivity, 0 < kappa < 0.25
    double window_sigma = 1.5;         ///< Gaussian window sigma, pixels
    int window_radius = 2;             ///< window is (2r+1)^2 pixels
    double peak_rel_threshold = 0.01;  ///< fraction of the global max response, (0, 1]
    int nms_radius = 2;                ///< Chebyshev radius of non-maximum suppression

    void validate() const;
};

struct CornerPoint {
    int x = 0;
    int y = 0;

    friend bool operator==(const CornerPoint&, const CornerPoint&) = default;
};

/// Detected corners in row-major order.
struct CornerSet {
    std::vector<CornerPoint> points;

    std::size_t count() const noexcept { return points.size(); }
};

/// Harris response det(M) - kappa * trace(M)^2 per pixel. M is the
/// Gaussian-weighted sum of Sobel gradient products over the window;
/// gradients and the window both use replicate padding at the border.
RealImage corner_metric(const GrayImage& image, const CornerConfig& config = {});

/// Same, on an edge map read as intensities {0, 255}.
RealImage corner_metric(const BinaryImage& edges, const CornerConfig& config = {});

/// Thresholded, non-maximum-suppressed peaks of a response map. Among equal
/// responses inside one neighborhood the first in row-major order wins.
CornerSet corner_peaks(const RealImage& metric, const CornerConfig& config = {});

/// Number of corners found on the prompt edge map of `image`.
int corner_count(const GrayImage& image, const EdgeConfig& edge_cfg = {}, const CornerConfig& corner_cfg = {});

/// Edge map as a 0/255 grayscale image.
GrayImage edges_to_gray(const BinaryImage& edges);

}  // namespace tir
