#include "tir/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "parallel.hpp"

namespace tir {

namespace fs = std::filesystem;

namespace {

std::size_t overlap(std::span<const std::uint64_t> retrieved, const std::set<std::uint64_t>& relevant) {
    std::set<std::uint64_t> seen;
    std::size_t n = 0;
    for (auto id : retrieved)
        if (seen.insert(id).second && relevant.count(id)) ++n;
    return n;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

}  // namespace

const char* to_string(EvalMode mode) {
    switch (mode) {
        case EvalMode::corner_only: return "corner";
        case EvalMode::moments_only: return "moments";
        case EvalMode::hybrid: return "hybrid";
    }
    return "?";
}

EvalMode parse_eval_mode(const std::string& name) {
    if (name == "corner") return EvalMode::corner_only;
    if (name == "moments") return EvalMode::moments_only;
    if (name == "hybrid") return EvalMode::hybrid;
    throw InvalidArgument("unknown evaluation mode '" + name + "' (expected hybrid, corner or moments)");
}

double precision(std::span<const std::uint64_t> retrieved, const std::set<std::uint64_t>& relevant) {
    std::set<std::uint64_t> unique(retrieved.begin(), retrieved.end());
    if (unique.empty()) throw UndefinedMetricError("precision is undefined for an empty retrieved set");
    return static_cast<double>(overlap(retrieved, relevant)) / static_cast<double>(unique.size());
}

double recall(std::span<const std::uint64_t> retrieved, const std::set<std::uint64_t>& relevant) {
    if (relevant.empty()) throw UndefinedMetricError("recall is undefined for an empty relevant set");
    return static_cast<double>(overlap(retrieved, relevant)) / static_cast<double>(relevant.size());
}

std::string rotated_name(const std::string& path, double angle_degrees) {
    return fs::path(path).stem().string() + "_rot" + std::to_string(std::lround(angle_degrees)) + ".pgm";
}

Manifest generate_rotated_dataset(const Manifest& base, const std::string& root, std::span<const double> angles,
                                  const std::string& out_dir) {
    base.validate();
    if (angles.empty()) throw InvalidArgument("at least one rotation angle is required");

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw ImageError(ImageError::Kind::write_failed, out_dir + ": cannot create directory: " + ec.message());

    Manifest out;
    std::set<std::string> written;
    for (const auto& entry : base.entries) {
        const GrayImage image = load_gray(resolve_path(root, entry.path));
        for (double angle : angles) {
            const std::string name = rotated_name(entry.path, angle);
            if (!written.insert(name).second)
                throw InvalidArgument("rotated output name collision: " + name + " (from " + entry.path + ")");
            save_pgm(rotate(image, angle), (fs::path(out_dir) / name).string());
            out.entries.push_back({name, entry.class_label});
        }
    }
    return out;
}

std::vector<std::uint64_t> retrieve(const FeatureDatabase& db, const Features& query, const EvalOptions& options,
                                    const std::uint64_t* self_id) {
    if (options.top_k < 1) throw InvalidArgument("k must be >= 1");

    std::vector<FeatureRecord> pool;
    pool.reserve(db.records.size());
    for (const auto& r : db.records)
        if (!self_id || r.record_id != *self_id) pool.push_back(r);

    std::vector<std::uint64_t> ids;
    switch (options.mode) {
        case EvalMode::corner_only: {
            auto kept = corner_filter(query.corner_count, pool, options.threshold);
            std::stable_sort(kept.begin(), kept.end(), [&](const FeatureRecord& a, const FeatureRecord& b) {
                const int da = std::abs(a.corner_count - query.corner_count);
                const int db_ = std::abs(b.corner_count - query.corner_count);
                return da != db_ ? da < db_ : a.record_id < b.record_id;
            });
            for (std::size_t i = 0; i < kept.size() && i < options.top_k; ++i) ids.push_back(kept[i].record_id);
            break;
        }
        case EvalMode::moments_only:
            if (!pool.empty())
                for (const auto& m : rank_by_moments(query.hu, query.corner_count, pool, options.top_k, options.distance))
                    ids.push_back(m.record_id);
            break;
        case EvalMode::hybrid: {
            const auto kept = corner_filter(query.corner_count, pool, options.threshold);
            if (!kept.empty())
                for (const auto& m : rank_by_moments(query.hu, query.corner_count, kept, options.top_k, options.distance))
                    ids.push_back(m.record_id);
            break;
        }
    }
    return ids;
}

EvalReport evaluate(const FeatureDatabase& db, const Manifest& queries, const std::string& root,
                    const EvalOptions& options) {
    queries.validate();
    options.threshold.validate();
    if (db.records.empty()) throw InvalidArgument("feature database is empty");

    EvalReport report;
    report.mode = options.mode;
    report.queries.resize(queries.entries.size());

    detail::parallel_for(queries.entries.size(), options.jobs, [&](std::size_t i) {
        const auto& entry = queries.entries[i];
        try {
            const Features f = extract_features(load_gray(resolve_path(root, entry.path)), db.extraction);

            const FeatureRecord* self = db.find_path(entry.path);
            const std::uint64_t* self_id = (options.exclude_self && self) ? &self->record_id : nullptr;

            std::set<std::uint64_t> relevant;
            for (const auto& r : db.records)
                if (r.class_label == entry.class_label && (!self_id || r.record_id != *self_id))
                    relevant.insert(r.record_id);
            if (relevant.empty())
                throw InvalidArgument("class '" + entry.class_label + "' has no other members in the database");

            QueryResult& out = report.queries[i];
            out.query_path = entry.path;
            out.class_label = entry.class_label;
            out.retrieved = retrieve(db, f, options, self_id);
            if (!out.retrieved.empty()) out.pr = {precision(out.retrieved, relevant), recall(out.retrieved, relevant)};
        } catch (const Error& e) {
            throw Error("query " + std::to_string(i + 1) + " (" + entry.path + "): " + e.what());
        }
    });

    for (const auto& q : report.queries) {
        report.mean.precision += q.pr.precision;
        report.mean.recall += q.pr.recall;
    }
    const double n = static_cast<double>(report.queries.size());
    report.mean.precision /= n;
    report.mean.recall /= n;
    return report;
}

std::string format_pr_csv(const EvalReport& report) {
    if (report.queries.empty()) throw InvalidArgument("no query results to write");
    const std::string mode = to_string(report.mode);
    std::string text = "query_path,class,mode,precision,recall\n";
    for (const auto& q : report.queries)
        text += csv_field(q.query_path) + ',' + csv_field(q.class_label) + ',' + mode + ',' + fixed6(q.pr.precision) +
                ',' + fixed6(q.pr.recall) + '\n';
    text += "MEAN,," + mode + ',' + fixed6(report.mean.precision) + ',' + fixed6(report.mean.recall) + '\n';
    return text;
}

void emit_pr_csv(const EvalReport& report, const std::string& path) {
    const std::string text = format_pr_csv(report);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DatabaseError(DatabaseError::Kind::io, path + ": cannot open for writing");
    out << text;
    out.close();
    if (!out) throw DatabaseError(DatabaseError::Kind::io, path + ": write failed");
}

}  // namespace tir
