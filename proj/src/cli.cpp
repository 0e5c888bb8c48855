#include "tir/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <map>

#include "tir/eval.hpp"
#include "tir/index.hpp"

namespace tir::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

void add_threshold_flags(CLI::App& sub, ThresholdConfig& cfg) {
    sub.add_option("--band-width", cfg.band_width, "Corners per threshold band (R)")->capture_default_str();
    sub.add_option("--base-threshold", cfg.base_threshold, "Window half-width of the first band (T0)")
        ->capture_default_str();
    sub.add_option("--multiplier", cfg.multiplier, "Half-width growth per band")->capture_default_str();
}

void add_jobs_flag(CLI::App& sub, int& jobs) {
    sub.add_option("--jobs", jobs, "Worker threads (0 = all processors)")->capture_default_str();
}

template <class Fn>
void validated(Fn&& fn) {
    try {
        fn();
    } catch (const InvalidArgument& e) {
        throw UsageError(e.what());
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Shape-based trademark image retrieval", "tir"};
    app.require_subcommand(1);

    int jobs = 0;

    // index
    std::string manifest_path, root, out_path, db_path, image_path, mode_name, out_dir, out_manifest;
    ExtractionConfig extraction;
    auto* index_cmd = app.add_subcommand("index", "Extract features for a manifest and write a feature database");
    index_cmd->add_option("--manifest", manifest_path, "Manifest file (<path><TAB><class> per line)")->required();
    index_cmd->add_option("--root", root, "Directory manifest paths are relative to")->required();
    index_cmd->add_option("--out", out_path, "Database file to write")->required();
    index_cmd->add_option("--edge-threshold", extraction.edge.threshold, "Prompt edge difference threshold")
        ->capture_default_str();
    index_cmd->add_option("--harris-kappa", extraction.corner.kappa, "Harris sensitivity")->capture_default_str();
    index_cmd->add_option("--harris-sigma", extraction.corner.window_sigma, "Harris Gaussian window sigma")
        ->capture_default_str();
    index_cmd->add_option("--harris-window", extraction.corner.window_radius, "Harris window radius")
        ->capture_default_str();
    index_cmd->add_option("--peak-threshold", extraction.corner.peak_rel_threshold,
                          "Corner peak threshold relative to the maximum response")
        ->capture_default_str();
    index_cmd->add_option("--nms-radius", extraction.corner.nms_radius, "Non-maximum suppression radius")
        ->capture_default_str();
    add_jobs_flag(*index_cmd, jobs);

    // query
    QueryOptions qopts;
    bool raw_distance = false;
    auto* query_cmd = app.add_subcommand("query", "Retrieve the database images most similar to a query image");
    query_cmd->add_option("--db", db_path, "Feature database")->required();
    query_cmd->add_option("--image", image_path, "Query image (PGM/PPM)")->required();
    query_cmd->add_option("--top", qopts.top_k, "Maximum number of results")->capture_default_str();
    add_threshold_flags(*query_cmd, qopts.threshold);
    query_cmd->add_flag("--raw-moment-distance", raw_distance, "Compare Hu moments without the log transform");

    // eval
    EvalOptions eopts;
    bool eval_raw_distance = false;
    auto* eval_cmd = app.add_subcommand("eval", "Precision/recall of every manifest image used as a query");
    eval_cmd->add_option("--db", db_path, "Feature database")->required();
    eval_cmd->add_option("--manifest", manifest_path, "Query manifest")->required();
    eval_cmd->add_option("--root", root, "Directory manifest paths are relative to")->required();
    eval_cmd->add_option("--mode", mode_name, "hybrid, corner or moments")
        ->required()
        ->check(CLI::IsMember({"hybrid", "corner", "moments"}));
    eval_cmd->add_option("--out", out_path, "CSV file to write")->required();
    eval_cmd->add_option("--top", eopts.top_k, "Results retrieved per query")->capture_default_str();
    eval_cmd->add_flag("--exclude-self", eopts.exclude_self, "Leave each query's own record out");
    eval_cmd->add_flag("--raw-moment-distance", eval_raw_distance, "Compare Hu moments without the log transform");
    add_threshold_flags(*eval_cmd, eopts.threshold);
    add_jobs_flag(*eval_cmd, jobs);

    // gen-rotations
    std::vector<double> angles;
    auto* gen_cmd = app.add_subcommand("gen-rotations", "Write rotated copies of every manifest image");
    gen_cmd->add_option("--manifest", manifest_path, "Base manifest")->required();
    gen_cmd->add_option("--root", root, "Directory manifest paths are relative to")->required();
    gen_cmd->add_option("--angles", angles, "Comma-separated angles in degrees, counterclockwise")
        ->required()
        ->delimiter(',');
    gen_cmd->add_option("--out-dir", out_dir, "Directory for the rotated images")->required();
    gen_cmd->add_option("--out-manifest", out_manifest, "Manifest of the rotated images")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
        if (index_cmd->parsed()) validated([&] { extraction.validate(); });
        if (query_cmd->parsed()) validated([&] {
                qopts.threshold.validate();
                if (qopts.top_k < 1) throw InvalidArgument("--top must be >= 1");
            });
        if (eval_cmd->parsed()) validated([&] {
                eopts.threshold.validate();
                if (eopts.top_k < 1) throw InvalidArgument("--top must be >= 1");
            });
    } catch (const CLI::CallForHelp&) {
        const CLI::App* target = &app;
        for (const CLI::App* sub : app.get_subcommands()) target = sub;
        out << target->help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const std::exception& e) {
        const CLI::App* target = &app;
        for (const CLI::App* sub : {index_cmd, query_cmd, eval_cmd, gen_cmd})
            if (sub->parsed()) target = sub;
        err << "error: " << e.what() << "\n\n" << target->help();
        return kExitUsage;
    }

    try {
        if (index_cmd->parsed()) {
            const Manifest manifest = load_manifest(manifest_path);
            build_index(manifest, root, extraction, out_path, jobs);
        } else if (query_cmd->parsed()) {
            qopts.distance = raw_distance ? MomentDistance::raw : MomentDistance::log_magnitude;
            const FeatureDatabase db = load_index(db_path);
            std::map<std::uint64_t, const FeatureRecord*> by_id;
            for (const auto& r : db.records) by_id[r.record_id] = &r;
            const auto matches = query(db, load_image(image_path), qopts);
            for (std::size_t i = 0; i < matches.size(); ++i) {
                const FeatureRecord& r = *by_id.at(matches[i].record_id);
                out << (i + 1) << '\t' << r.path << '\t' << r.class_label << '\t' << matches[i].corner_difference
                    << '\t' << fmt("%.9e", matches[i].moment_distance) << '\n';
            }
        } else if (eval_cmd->parsed()) {
            eopts.mode = parse_eval_mode(mode_name);
            eopts.distance = eval_raw_distance ? MomentDistance::raw : MomentDistance::log_magnitude;
            eopts.jobs = jobs;
            const FeatureDatabase db = load_index(db_path);
            const EvalReport report = evaluate(db, load_manifest(manifest_path), root, eopts);
            emit_pr_csv(report, out_path);
            out << to_string(report.mode) << "\tprecision=" << fmt("%.6f", report.mean.precision)
                << "\trecall=" << fmt("%.6f", report.mean.recall) << "\tcombined=" << fmt("%.6f", report.combined())
                << '\n';
        } else if (gen_cmd->parsed()) {
            const Manifest base = load_manifest(manifest_path);
            const Manifest rotated = generate_rotated_dataset(base, root, angles, out_dir);
            save_manifest(rotated, out_manifest);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitOk;
}

}  // namespace tir::cli
