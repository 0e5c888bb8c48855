#include "tir/index.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

#include "parallel.hpp"

namespace tir {

namespace {

using DbKind = DatabaseError::Kind;

std::string format_real(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 16);
    return std::string(buf, res.ptr);
}

template <class T>
bool parse_number(std::string_view s, T& out) {
    if (s.empty()) return false;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

std::vector<std::string_view> lines_of(std::string_view text) {
    auto lines = split(text, '\n');
    if (!lines.empty() && lines.back().empty()) lines.pop_back();
    for (auto& l : lines)
        if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
    return lines;
}

std::string read_file(const std::string& path, const char* what) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DatabaseError(DbKind::io, path + ": cannot open " + what);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DatabaseError(DbKind::io, path + ": cannot open for writing");
    out << text;
    out.close();
    if (!out) throw DatabaseError(DbKind::io, path + ": write failed");
}

bool has_field_separator(const std::string& s) {
    return s.find_first_of("\t\n\r") != std::string::npos;
}

[[noreturn]] void malformed(std::size_t line, const std::string& msg) {
    throw DatabaseError(DbKind::malformed_record, "line " + std::to_string(line) + ": " + msg, line);
}

ExtractionConfig parse_cfg(std::string_view line, std::size_t line_no) {
    const auto f = split(line, '\t');
    static constexpr const char* keys[] = {"edge_T", "kappa", "sigma", "win", "peak", "nms"};
    if (f.size() != 7 || f[0] != "CFG") malformed(line_no, "expected CFG line with 6 settings");

    std::string_view values[6];
    for (int i = 0; i < 6; ++i) {
        const std::string prefix = std::string(keys[i]) + "=";
        if (f[i + 1].substr(0, prefix.size()) != prefix) malformed(line_no, "expected setting " + prefix);
        values[i] = f[i + 1].substr(prefix.size());
    }

    ExtractionConfig cfg;
    bool ok = parse_number(values[0], cfg.edge.threshold) && parse_number(values[1], cfg.corner.kappa) &&
              parse_number(values[2], cfg.corner.window_sigma) && parse_number(values[3], cfg.corner.window_radius) &&
              parse_number(values[4], cfg.corner.peak_rel_threshold) && parse_number(values[5], cfg.corner.nms_radius);
    if (!ok) malformed(line_no, "unparsable CFG value");
    try {
        cfg.validate();
    } catch (const InvalidArgument& e) {
        malformed(line_no, e.what());
    }
    return cfg;
}

}  // namespace

void ExtractionConfig::validate() const {
    edge.validate();
    corner.validate();
}

bool operator==(const ExtractionConfig& a, const ExtractionConfig& b) {
    return a.edge.threshold == b.edge.threshold && a.corner.kappa == b.corner.kappa &&
           a.corner.window_sigma == b.corner.window_sigma && a.corner.window_radius == b.corner.window_radius &&
           a.corner.peak_rel_threshold == b.corner.peak_rel_threshold && a.corner.nms_radius == b.corner.nms_radius;
}

const FeatureRecord* FeatureDatabase::find_path(const std::string& path) const {
    for (const auto& r : records)
        if (r.path == path) return &r;
    return nullptr;
}

void Manifest::validate() const {
    if (entries.empty()) throw InvalidArgument("manifest has no entries");
    for (const auto& e : entries) {
        if (e.path.empty()) throw InvalidArgument("manifest entry with empty path");
        if (e.class_label.empty()) throw InvalidArgument("manifest entry " + e.path + " has no class label");
        if (has_field_separator(e.path) || has_field_separator(e.class_label))
            throw InvalidArgument("manifest entry " + e.path + " contains a tab or newline");
    }
}

Manifest load_manifest(const std::string& path) {
    const std::string text = read_file(path, "manifest");
    Manifest m;
    std::size_t line_no = 0;
    for (std::string_view line : lines_of(text)) {
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        const auto f = split(line, '\t');
        if (f.size() != 2 || f[0].empty() || f[1].empty())
            throw DatabaseError(DbKind::malformed_record,
                                path + ": line " + std::to_string(line_no) + ": expected <path><TAB><class>", line_no);
        m.entries.push_back({std::string(f[0]), std::string(f[1])});
    }
    if (m.entries.empty()) throw DatabaseError(DbKind::malformed_record, path + ": manifest has no entries");
    return m;
}

void save_manifest(const Manifest& manifest, const std::string& path) {
    manifest.validate();
    std::string text;
    for (const auto& e : manifest.entries) text += e.path + '\t' + e.class_label + '\n';
    write_file(path, text);
}

Features extract_features(const GrayImage& image, const ExtractionConfig& config) {
    Features f;
    f.hu = hu_moments(image);
    f.corner_count = corner_count(image, config.edge, config.corner);
    return f;
}

std::string resolve_path(const std::string& root, const std::string& path) {
    const std::filesystem::path p(path);
    if (p.is_absolute() || root.empty()) return path;
    return (std::filesystem::path(root) / p).string();
}

FeatureDatabase build_index(const Manifest& manifest, const std::string& root, const ExtractionConfig& config,
                            const std::string& out, int jobs) {
    manifest.validate();
    config.validate();

    FeatureDatabase db;
    db.extraction = config;
    db.records.resize(manifest.entries.size());

    detail::parallel_for(manifest.entries.size(), jobs, [&](std::size_t i) {
        const auto& entry = manifest.entries[i];
        try {
            const Features f = extract_features(load_gray(resolve_path(root, entry.path)), config);
            db.records[i] = FeatureRecord{i, entry.path, entry.class_label, f.corner_count, f.hu};
        } catch (const DegenerateImageError& e) {
            throw DegenerateImageError("manifest entry " + std::to_string(i + 1) + " (" + entry.path + "): " + e.what());
        } catch (const ImageError& e) {
            throw ImageError(e.kind(), "manifest entry " + std::to_string(i + 1) + " (" + entry.path + "): " + e.what());
        }
    });

    if (!out.empty()) save_index(db, out);
    return db;
}

std::string format_index(const FeatureDatabase& db) {
    std::ostringstream os;
    const auto& c = db.extraction;
    os << "TIRDB\t" << FeatureDatabase::kVersion << '\n';
    os << "CFG\tedge_T=" << c.edge.threshold << "\tkappa=" << format_real(c.corner.kappa)
       << "\tsigma=" << format_real(c.corner.window_sigma) << "\twin=" << c.corner.window_radius
       << "\tpeak=" << format_real(c.corner.peak_rel_threshold) << "\tnms=" << c.corner.nms_radius << '\n';
    for (const auto& r : db.records) {
        if (has_field_separator(r.path) || has_field_separator(r.class_label))
            throw InvalidArgument("record " + std::to_string(r.record_id) + " contains a tab or newline");
        os << r.record_id << '\t' << r.path << '\t' << r.class_label << '\t' << r.corner_count;
        for (double v : r.hu.phi) os << '\t' << format_real(v);
        os << '\n';
    }
    return os.str();
}

FeatureDatabase parse_index(const std::string& text) {
    const auto lines = lines_of(text);
    if (lines.empty()) throw DatabaseError(DbKind::version, "empty database file", 1);

    {
        std::istringstream header{std::string(lines[0])};
        std::string tag;
        int version = 0;
        if (!(header >> tag) || tag != "TIRDB")
            throw DatabaseError(DbKind::version, "line 1: not a feature database (missing TIRDB tag)", 1);
        if (!(header >> version) || version != FeatureDatabase::kVersion)
            throw DatabaseError(DbKind::version,
                                "line 1: unsupported database version (expected " +
                                    std::to_string(FeatureDatabase::kVersion) + ")",
                                1);
    }
    if (lines.size() < 2) malformed(2, "missing CFG line");

    FeatureDatabase db;
    db.extraction = parse_cfg(lines[1], 2);

    std::set<std::uint64_t> seen;
    for (std::size_t i = 2; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        const auto f = split(lines[i], '\t');
        if (f.size() != 11)
            malformed(line_no, "expected 11 tab-separated fields (id, path, class, corners, 7 moments), found " +
                                   std::to_string(f.size()));
        FeatureRecord r;
        if (!parse_number(f[0], r.record_id)) malformed(line_no, "invalid record id");
        if (f[1].empty() || f[2].empty()) malformed(line_no, "empty path or class label");
        r.path = std::string(f[1]);
        r.class_label = std::string(f[2]);
        if (!parse_number(f[3], r.corner_count) || r.corner_count < 0) malformed(line_no, "invalid corner count");
        for (int k = 0; k < 7; ++k)
            if (!parse_number(f[4 + k], r.hu.phi[k]) || !std::isfinite(r.hu.phi[k]))
                malformed(line_no, "invalid moment value phi" + std::to_string(k + 1));
        if (!seen.insert(r.record_id).second)
            throw DatabaseError(DbKind::duplicate_id,
                                "line " + std::to_string(line_no) + ": duplicate record id " +
                                    std::to_string(r.record_id),
                                line_no);
        db.records.push_back(std::move(r));
    }
    return db;
}

void save_index(const FeatureDatabase& db, const std::string& path) { write_file(path, format_index(db)); }

FeatureDatabase load_index(const std::string& path) {
    const std::string text = read_file(path, "database");
    try {
        return parse_index(text);
    } catch (const DatabaseError& e) {
        throw DatabaseError(e.kind(), path + ": " + e.what(), e.line());
    }
}

std::vector<RankedMatch> query_features(const FeatureDatabase& db, const Features& features,
                                        const QueryOptions& options) {
    if (db.records.empty()) throw InvalidArgument("feature database is empty");
    if (options.top_k < 1) throw InvalidArgument("k must be >= 1");
    const auto candidates = corner_filter(features.corner_count, db.records, options.threshold);
    if (candidates.empty()) return {};
    return rank_by_moments(features.hu, features.corner_count, candidates, options.top_k, options.distance);
}

std::vector<RankedMatch> query(const FeatureDatabase& db, const AnyImage& image, const QueryOptions& options) {
    return query_features(db, extract_features(to_gray(image), db.extraction), options);
}

}  // namespace tir
