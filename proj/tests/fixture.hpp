#pragma once

#include <string>

#include "support.hpp"
#include "tir/index.hpp"
#include "tir/shapes.hpp"

namespace testing {

/// Writes the first `n` synthetic shapes as <name>.pgm under `dir` and
/// returns their manifest (class label = shape name).
inline tir::Manifest write_shapes(const TempDir& dir, std::size_t n, int size = 128) {
    tir::Manifest m;
    const auto& shapes = tir::synthetic_shapes();
    for (std::size_t i = 0; i < n && i < shapes.size(); ++i) {
        const std::string name = shapes[i].name + ".pgm";
        tir::save_pgm(tir::rasterize(shapes[i], size, size * 0.4375), dir.file(name));
        m.entries.push_back({name, shapes[i].name});
    }
    return m;
}

}  // namespace testing
