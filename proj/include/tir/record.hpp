#pragma once

#include <cstdint>
#include <string>

#include "tir/moments.hpp"

namespace tir {

/// One indexed image.
struct FeatureRecord {
    std::uint64_t record_id = 0;  ///< position in the manifest
    std::string path;             ///< as written in the manifest
    std::string class_label;
    int corner_count = 0;
    HuVector hu;

    friend bool operator==(const FeatureRecord&, const FeatureRecord&) = default;
};

}  // namespace tir
