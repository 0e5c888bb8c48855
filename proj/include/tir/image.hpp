#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "tir/errors.hpp"

namespace tir {

/// Row-major 2-D pixel grid. x indexes columns (0 at left), y indexes rows
/// (0 at top). Width and height are always >= 1.
template <class T, class Tag = void>
class Raster {
public:
    using value_type = T;

    Raster(int width, int height, T fill = T{}) : width_(width), height_(height) {
        check_dims(width, height);
        pixels_.assign(static_cast<std::size_t>(width) * height, fill);
    }

    Raster(int width, int height, std::vector<T> pixels)
        : width_(width), height_(height), pixels_(std::move(pixels)) {
        check_dims(width, height);
        if (pixels_.size() != static_cast<std::size_t>(width) * height)
            throw InvalidArgument("pixel buffer length does not match " + std::to_string(width) +
                                  "x" + std::to_string(height));
    }

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::size_t size() const noexcept { return pixels_.size(); }

    T& at(int x, int y) { return pixels_[static_cast<std::size_t>(y) * width_ + x]; }
    const T& at(int x, int y) const { return pixels_[static_cast<std::size_t>(y) * width_ + x]; }

    bool contains(int x, int y) const noexcept {
        return x >= 0 && y >= 0 && x < width_ && y < height_;
    }

    const std::vector<T>& pixels() const noexcept { return pixels_; }
    std::vector<T>& pixels() noexcept { return pixels_; }

    friend bool operator==(const Raster&, const Raster&) = default;

private:
    static void check_dims(int width, int height) {
        if (width < 1 || height < 1)
            throw InvalidArgument("image dimensions must be positive, got " +
                                  std::to_string(width) + "x" + std::to_string(height));
    }

    int width_;
    int height_;
    std::vector<T> pixels_;
};

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    friend bool operator==(const Rgb&, const Rgb&) = default;
};

struct BinaryTag;

using GrayImage = Raster<std::uint8_t>;
using RgbImage = Raster<Rgb>;
/// Edge map; 1 marks an edge pixel, 0 a non-edge pixel.
using BinaryImage = Raster<std::uint8_t, BinaryTag>;
/// Real-valued per-pixel matrix (e.g. a corner response map).
using RealImage = Raster<double>;

using AnyImage = std::variant<GrayImage, RgbImage>;

/// Luma conversion with weights 0.299 / 0.587 / 0.114, rounded and clamped.
GrayImage rgb_to_gray(const RgbImage& image);

/// Grayscale view of either image kind (pixmaps are converted).
GrayImage to_gray(const AnyImage& image);

/// Rotate counterclockwise (as displayed, y down) about the image center.
/// Inverse mapping with bilinear interpolation, black fill, same-size output.
GrayImage rotate(const GrayImage& image, double angle_degrees);

/// Reads P2/P3/P5/P6 with maxval 255. Graymaps yield GrayImage, pixmaps RgbImage.
AnyImage load_image(const std::string& path);

/// Loads any supported file and converts it to grayscale.
GrayImage load_gray(const std::string& path);

/// Writes binary P5, maxval 255.
void save_pgm(const GrayImage& image, const std::string& path);

}  // namespace tir
