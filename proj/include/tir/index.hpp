#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tir/corners.hpp"
#include "tir/edge.hpp"
#include "tir/matching.hpp"
#include "tir/moments.hpp"
#include "tir/record.hpp"

namespace tir {

/// Detector settings a database was built with. Corner counts are only
/// comparable under identical settings, so queries reuse them.
struct ExtractionConfig {
    EdgeConfig edge;
    CornerConfig corner;

    void validate() const;
};

bool operator==(const ExtractionConfig& a, const ExtractionConfig& b);

struct FeatureDatabase {
    static constexpr int kVersion = 1;

    ExtractionConfig extraction;
    std::vector<FeatureRecord> records;

    /// Record with the given manifest path, or nullptr.
    const FeatureRecord* find_path(const std::string& path) const;

    friend bool operator==(const FeatureDatabase& a, const FeatureDatabase& b) {
        return a.extraction == b.extraction && a.records == b.records;
    }
};

struct ManifestEntry {
    std::string path;
    std::string class_label;

    friend bool operator==(const ManifestEntry&, const ManifestEntry&) = default;
};

struct Manifest {
    std::vector<ManifestEntry> entries;

    void validate() const;
};

/// `<path><TAB><class_label>` per line; blank and '#' lines skipped.
Manifest load_manifest(const std::string& path);
void save_manifest(const Manifest& manifest, const std::string& path);

struct Features {
    int corner_count = 0;
    HuVector hu;

    friend bool operator==(const Features&, const Features&) = default;
};

/// Corner count on the prompt edge map plus Hu moments of the grayscale image.
Features extract_features(const GrayImage& image, const ExtractionConfig& config = {});

/// Joins a manifest-relative path onto `root` (absolute paths pass through).
std::string resolve_path(const std::string& root, const std::string& path);

/// Extracts every manifest entry (record_id = entry index) and writes the
/// database to `out` when non-empty. Any failing entry aborts the build.
/// `jobs` <= 0 uses all hardware threads.
FeatureDatabase build_index(const Manifest& manifest, const std::string& root, const ExtractionConfig& config,
                            const std::string& out = {}, int jobs = 0);

void save_index(const FeatureDatabase& db, const std::string& path);
FeatureDatabase load_index(const std::string& path);

/// Serialized form, exactly as written by save_index.
std::string format_index(const FeatureDatabase& db);
FeatureDatabase parse_index(const std::string& text);

struct QueryOptions {
    ThresholdConfig threshold;
    std::size_t top_k = 10;
    MomentDistance distance = MomentDistance::log_magnitude;
};

/// Corner-window filter followed by moment ranking, for precomputed features.
std::vector<RankedMatch> query_features(const FeatureDatabase& db, const Features& features,
                                        const QueryOptions& options = {});

/// Full online pipeline for an image. Pixmaps are converted to grayscale first.
std::vector<RankedMatch> query(const FeatureDatabase& db, const AnyImage& image, const QueryOptions& options = {});

}  // namespace tir
