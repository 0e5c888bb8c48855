#include "tir/matching.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

namespace tir {

void ThresholdConfig::validate() const {
    if (band_width < 1) throw InvalidArgument("band width must be >= 1");
    if (!(base_threshold > 0)) throw InvalidArgument("base threshold must be positive");
    if (!(multiplier > 1)) throw InvalidArgument("multiplier must be greater than 1");
}

double euclidean_distance(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || a.size() != b.size())
        throw InvalidArgument("euclidean distance needs equal, non-zero lengths (got " + std::to_string(a.size()) +
                              " and " + std::to_string(b.size()) + ")");
    double sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

ThresholdWindow adaptive_threshold(int count, const ThresholdConfig& config) {
    config.validate();
    if (count < 0) throw InvalidArgument("corner count must be non-negative");
    // One multiplication per completed band of width R.
    const int band = count / config.band_width;
    const double threshold = config.base_threshold * std::pow(config.multiplier, band);
    return {std::max(0.0, count - threshold), count + threshold};
}

std::vector<FeatureRecord> corner_filter(int query_count, std::span<const FeatureRecord> records,
                                         const ThresholdConfig& config) {
    const ThresholdWindow window = adaptive_threshold(query_count, config);
    std::vector<FeatureRecord> kept;
    for (const auto& r : records)
        if (window.contains(r.corner_count)) kept.push_back(r);
    return kept;
}

HuVector log_transform(const HuVector& hu) {
    HuVector out;
    for (std::size_t i = 0; i < hu.phi.size(); ++i) {
        const double v = hu.phi[i];
        const double mag = std::log10(std::abs(v) + 1e-30);
        out.phi[i] = v < 0 ? -mag : (v > 0 ? mag : 0.0);
    }
    return out;
}

double moment_distance(const HuVector& a, const HuVector& b, MomentDistance mode) {
    if (mode == MomentDistance::raw) return euclidean_distance(a.phi, b.phi);
    const HuVector ta = log_transform(a);
    const HuVector tb = log_transform(b);
    return euclidean_distance(ta.phi, tb.phi);
}

std::vector<RankedMatch> rank_by_moments(const HuVector& query_hu, int query_count,
                                         std::span<const FeatureRecord> candidates, std::size_t k,
                                         MomentDistance mode) {
    if (k < 1) throw InvalidArgument("k must be >= 1");
    std::vector<RankedMatch> scored;
    scored.reserve(candidates.size());
    for (const auto& c : candidates)
        scored.push_back({c.record_id, std::abs(query_count - c.corner_count), moment_distance(query_hu, c.hu, mode)});

    auto less = [](const RankedMatch& x, const RankedMatch& y) {
        if (x.moment_distance != y.moment_distance) return x.moment_distance < y.moment_distance;
        return x.record_id < y.record_id;
    };
    const std::size_t n = std::min(k, scored.size());
    std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(n), scored.end(), less);
    scored.resize(n);
    return scored;
}

}  // namespace tir
