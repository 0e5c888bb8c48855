#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tir/moments.hpp"
#include "tir/record.hpp"

namespace tir {

/// Parameters of the adaptive corner-count window. Every `band_width` corners
/// the half-width grows by `multiplier`, starting at `base_threshold`.
struct ThresholdConfig {
    int band_width = 20;
    double base_threshold = 5.0;
    double multiplier = 1.5;

    void validate() const;
};

/// Closed interval of accepted corner counts.
struct ThresholdWindow {
    double min_t = 0;
    double max_t = 0;

    bool contains(int count) const noexcept { return count >= min_t && count <= max_t; }
    friend bool operator==(const ThresholdWindow&, const ThresholdWindow&) = default;
};

enum class MomentDistance {
    log_magnitude,  ///< compare sign(phi) * log10(|phi| + 1e-30)
    raw,            ///< compare phi directly
};

struct RankedMatch {
    std::uint64_t record_id = 0;
    int corner_difference = 0;
    double moment_distance = 0;

    friend bool operator==(const RankedMatch&, const RankedMatch&) = default;
};

/// sqrt(sum (a_i - b_i)^2). Throws InvalidArgument on empty or unequal inputs.
double euclidean_distance(std::span<const double> a, std::span<const double> b);

/// Half-width T0 * multiplier^floor(count / R) around `count`, lower end
/// clamped at zero.
ThresholdWindow adaptive_threshold(int count, const ThresholdConfig& config = {});

/// Records whose corner count falls inside the query's window, in input order.
std::vector<FeatureRecord> corner_filter(int query_count, std::span<const FeatureRecord> records,
                                         const ThresholdConfig& config = {});

/// Per-component transform used before moment distances.
HuVector log_transform(const HuVector& hu);

double moment_distance(const HuVector& a, const HuVector& b, MomentDistance mode = MomentDistance::log_magnitude);

/// Up to k candidates, ascending by moment distance, ties by record_id.
/// corner_difference is |query_count - candidate count|.
std::vector<RankedMatch> rank_by_moments(const HuVector& query_hu, int query_count,
                                         std::span<const FeatureRecord> candidates, std::size_t k,
                                         MomentDistance mode = MomentDistance::log_magnitude);

}  // namespace tir
