#pragma once

#include "tir/image.hpp"

namespace tir {

/// Difference threshold of the prompt edge rule, in intensity units [0, 255].
struct EdgeConfig {
    int threshold = 30;

    void validate() const;
};

/// Prompt edge detection. An interior pixel is an edge pixel when 4 or 5 of
/// its 8 neighbors differ from it by more than `threshold`. Pixels on the
/// image border are never edge pixels.
BinaryImage prompt_edge(const GrayImage& image, const EdgeConfig& config = {});

}  // namespace tir
