#include "tir/edge.hpp"

#include <cstdlib>
#include <string>

namespace tir {

void EdgeConfig::validate() const {
    if (threshold < 0 || threshold > 255)
        throw InvalidArgument("edge threshold must lie in [0, 255], got " + std::to_string(threshold));
}

BinaryImage prompt_edge(const GrayImage& image, const EdgeConfig& config) {
    config.validate();
    const int w = image.width();
    const int h = image.height();
    BinaryImage edges(w, h, 0);

    for (int y = 1; y + 1 < h; ++y) {
        for (int x = 1; x + 1 < w; ++x) {
            const int center = image.at(x, y);
            int k = 0;
            for (int dy = -1; dy <= 1; ++dy)
                for (int dx = -1; dx <= 1; ++dx)
                    if ((dx != 0 || dy != 0) && std::abs(center - image.at(x + dx, y + dy)) > config.threshold)
                        ++k;
            edges.at(x, y) = (k > 3 && k < 6) ? 1 : 0;
        }
    }
    return edges;
}

}  // namespace tir
