#pragma once

#include <string>
#include <vector>

#include "tir/image.hpp"

namespace tir {

struct Point2 {
    double x = 0;
    double y = 0;
};

/// Closed polygons filled with the even-odd rule, so inner contours cut holes.
struct Shape {
    std::string name;
    std::vector<std::vector<Point2>> contours;
};

/// Rasterizes `shape` (coordinates in [-1, 1], y down) onto a black
/// size x size canvas, scaled by `scale` pixels per unit about the center.
/// Each pixel is supersampled on a `supersample`^2 grid and set to
/// round(255 * covered fraction).
GrayImage rasterize(const Shape& shape, int size, double scale, int supersample = 4);

/// 18 distinct logo-like shapes: polygons, letters and arrows. All vertices
/// lie within radius 1.1 of the origin.
const std::vector<Shape>& synthetic_shapes();

/// Filled disc of the given radius centered on a size x size canvas.
GrayImage disc_image(int size, double radius, int supersample = 4);

}  // namespace tir
