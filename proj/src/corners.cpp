#include "tir/corners.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace tir {

namespace {

int clamp_index(int v, int n) { return std::clamp(v, 0, n - 1); }

std::vector<double> gaussian_kernel(double sigma, int radius) {
    std::vector<double> k(2 * radius + 1);
    double sum = 0;
    for (int i = -radius; i <= radius; ++i) {
        k[i + radius] = std::exp(-(i * i) / (2 * sigma * sigma));
        sum += k[i + radius];
    }
    for (double& v : k) v /= sum;
    return k;
}

// Separable smoothing with replicate padding. The normalized 1-D kernel
// applied along x then y equals the 2-D Gaussian window.
RealImage smooth(const RealImage& src, const std::vector<double>& kernel) {
    const int w = src.width();
    const int h = src.height();
    const int r = static_cast<int>(kernel.size() / 2);

    RealImage tmp(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            double acc = 0;
            for (int i = -r; i <= r; ++i) acc += kernel[i + r] * src.at(clamp_index(x + i, w), y);
            tmp.at(x, y) = acc;
        }

    RealImage out(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            double acc = 0;
            for (int j = -r; j <= r; ++j) acc += kernel[j + r] * tmp.at(x, clamp_index(y + j, h));
            out.at(x, y) = acc;
        }
    return out;
}

}  // namespace

void CornerConfig::validate() const {
    if (!(kappa > 0 && kappa < 0.25))
        throw InvalidArgument("harris kappa must lie in (0, 0.25), got " + std::to_string(kappa));
    if (!(window_sigma > 0)) throw InvalidArgument("harris sigma must be positive");
    if (window_radius < 1) throw InvalidArgument("harris window radius must be >= 1");
    if (!(peak_rel_threshold > 0 && peak_rel_threshold <= 1))
        throw InvalidArgument("peak threshold must lie in (0, 1], got " + std::to_string(peak_rel_threshold));
    if (nms_radius < 1) throw InvalidArgument("nms radius must be >= 1");
}

RealImage corner_metric(const GrayImage& image, const CornerConfig& config) {
    config.validate();
    const int w = image.width();
    const int h = image.height();
    auto px = [&](int x, int y) -> double { return image.at(clamp_index(x, w), clamp_index(y, h)); };

    RealImage ixx(w, h), ixy(w, h), iyy(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            const double gx = (px(x + 1, y - 1) + 2 * px(x + 1, y) + px(x + 1, y + 1)) -
                              (px(x - 1, y - 1) + 2 * px(x - 1, y) + px(x - 1, y + 1));
            const double gy = (px(x - 1, y + 1) + 2 * px(x, y + 1) + px(x + 1, y + 1)) -
                              (px(x - 1, y - 1) + 2 * px(x, y - 1) + px(x + 1, y - 1));
            ixx.at(x, y) = gx * gx;
            ixy.at(x, y) = gx * gy;
            iyy.at(x, y) = gy * gy;
        }

    const auto kernel = gaussian_kernel(config.window_sigma, config.window_radius);
    const RealImage a = smooth(ixx, kernel);
    const RealImage b = smooth(ixy, kernel);
    const RealImage c = smooth(iyy, kernel);

    RealImage response(w, h);
    for (std::size_t i = 0; i < response.size(); ++i) {
        const double sxx = a.pixels()[i];
        const double sxy = b.pixels()[i];
        const double syy = c.pixels()[i];
        const double trace = sxx + syy;
        response.pixels()[i] = (sxx * syy - sxy * sxy) - config.kappa * trace * trace;
    }
    return response;
}

GrayImage edges_to_gray(const BinaryImage& edges) {
    GrayImage out(edges.width(), edges.height());
    for (std::size_t i = 0; i < edges.size(); ++i) out.pixels()[i] = edges.pixels()[i] ? 255 : 0;
    return out;
}

RealImage corner_metric(const BinaryImage& edges, const CornerConfig& config) {
    return corner_metric(edges_to_gray(edges), config);
}

CornerSet corner_peaks(const RealImage& metric, const CornerConfig& config) {
    config.validate();
    CornerSet result;
    const auto& values = metric.pixels();
    const double global_max = *std::max_element(values.begin(), values.end());
    if (!(global_max > 0)) return result;

    const double floor_value = config.peak_rel_threshold * global_max;
    const int w = metric.width();
    const int h = metric.height();
    const int r = config.nms_radius;

    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            const double v = metric.at(x, y);
            if (!(v > 0) || v < floor_value) continue;

            bool is_peak = true;
            for (int ny = std::max(0, y - r); is_peak && ny <= std::min(h - 1, y + r); ++ny)
                for (int nx = std::max(0, x - r); nx <= std::min(w - 1, x + r); ++nx) {
                    if (nx == x && ny == y) continue;
                    const double u = metric.at(nx, ny);
                    const bool earlier = ny < y || (ny == y && nx < x);
                    if (u > v || (u == v && earlier)) {
                        is_peak = false;
                        break;
                    }
                }
            if (is_peak) result.points.push_back({x, y});
        }
    return result;
}

int corner_count(const GrayImage& image, const EdgeConfig& edge_cfg, const CornerConfig& corner_cfg) {
    const BinaryImage edges = prompt_edge(image, edge_cfg);
    return static_cast<int>(corner_peaks(corner_metric(edges, corner_cfg), corner_cfg).count());
}

}  // namespace tir
