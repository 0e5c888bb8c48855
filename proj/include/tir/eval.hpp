#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "tir/index.hpp"

namespace tir {

struct PRPoint {
    double precision = 0;
    double recall = 0;
};

enum class EvalMode { corner_only, moments_only, hybrid };

/// "corner", "moments" or "hybrid".
const char* to_string(EvalMode mode);
EvalMode parse_eval_mode(const std::string& name);

/// |retrieved & relevant| / |retrieved|. Throws UndefinedMetricError when
/// nothing was retrieved.
double precision(std::span<const std::uint64_t> retrieved, const std::set<std::uint64_t>& relevant);

/// |retrieved & relevant| / |relevant|. Throws UndefinedMetricError when the
/// relevant set is empty.
double recall(std::span<const std::uint64_t> retrieved, const std::set<std::uint64_t>& relevant);

/// `<stem>_rot<degrees>.pgm`, degrees rounded to an integer.
std::string rotated_name(const std::string& path, double angle_degrees);

/// Writes every base image rotated by every angle under `out_dir` and returns
/// the manifest of the written files (base-major order, paths relative to
/// `out_dir`, class labels inherited).
Manifest generate_rotated_dataset(const Manifest& base, const std::string& root, std::span<const double> angles,
                                  const std::string& out_dir);

struct EvalOptions {
    EvalMode mode = EvalMode::hybrid;
    ThresholdConfig threshold;
    std::size_t top_k = 6;
    bool exclude_self = false;
    MomentDistance distance = MomentDistance::log_magnitude;
    int jobs = 0;
};

struct QueryResult {
    std::string query_path;
    std::string class_label;
    std::vector<std::uint64_t> retrieved;  ///< record ids in rank order
    PRPoint pr;
};

struct EvalReport {
    EvalMode mode = EvalMode::hybrid;
    std::vector<QueryResult> queries;  ///< manifest order
    PRPoint mean;

    /// Average of mean precision and mean recall.
    double combined() const { return (mean.precision + mean.recall) / 2; }
};

/// Record ids retrieved for one query under the given mode. `self_id` (when
/// non-null) is removed from the candidates first.
std::vector<std::uint64_t> retrieve(const FeatureDatabase& db, const Features& query, const EvalOptions& options,
                                    const std::uint64_t* self_id = nullptr);

/// Runs every manifest entry as a query. The relevant set of a query is every
/// record sharing its class label; a query's own record (same path) counts
/// unless `exclude_self` is set, in which case it is removed from both the
/// candidates and the relevant set. An empty retrieval scores (0, 0).
EvalReport evaluate(const FeatureDatabase& db, const Manifest& queries, const std::string& root,
                    const EvalOptions& options = {});

/// Table-style CSV: header, one row per query, final MEAN row.
std::string format_pr_csv(const EvalReport& report);
void emit_pr_csv(const EvalReport& report, const std::string& path);

}  // namespace tir
