#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <cstring>

#include "tir/corners.hpp"
#include "tir/edge.hpp"
#include "tir/eval.hpp"
#include "tir/index.hpp"
#include "tir/matching.hpp"
#include "tir/moments.hpp"

namespace py = pybind11;
using namespace tir;

namespace {

using U8Array = py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>;

GrayImage gray_from(const U8Array& a) {
    if (a.ndim() != 2) throw InvalidArgument("expected a 2-D uint8 array (height, width)");
    const auto h = static_cast<int>(a.shape(0)), w = static_cast<int>(a.shape(1));
    std::vector<std::uint8_t> px(a.data(), a.data() + a.size());
    return GrayImage(w, h, std::move(px));
}

AnyImage any_from(const U8Array& a) {
    if (a.ndim() == 2) return gray_from(a);
    if (a.ndim() != 3 || a.shape(2) != 3) throw InvalidArgument("expected (height, width) or (height, width, 3)");
    RgbImage img(static_cast<int>(a.shape(1)), static_cast<int>(a.shape(0)));
    std::memcpy(img.pixels().data(), a.data(), static_cast<std::size_t>(a.size()));
    return img;
}

template <class Raster>
py::array_t<typename Raster::value_type> to_array(const Raster& img) {
    py::array_t<typename Raster::value_type> out({img.height(), img.width()});
    std::memcpy(out.mutable_data(), img.pixels().data(), img.size() * sizeof(typename Raster::value_type));
    return out;
}

py::array to_array_any(const AnyImage& any) {
    if (const auto* g = std::get_if<GrayImage>(&any)) return to_array(*g);
    const auto& rgb = std::get<RgbImage>(any);
    py::array_t<std::uint8_t> out({rgb.height(), rgb.width(), 3});
    std::memcpy(out.mutable_data(), rgb.pixels().data(), rgb.size() * 3);
    return out;
}

ExtractionConfig extraction(int edge_threshold, double kappa, double sigma, int window, double peak, int nms) {
    ExtractionConfig c;
    c.edge.threshold = edge_threshold;
    c.corner = {kappa, sigma, window, peak, nms};
    return c;
}

#define EXTRACTION_ARGS                                                                              \
    py::arg("edge_threshold") = 30, py::arg("kappa") = 0.04, py::arg("sigma") = 1.5,                \
        py::arg("window") = 2, py::arg("peak_threshold") = 0.01, py::arg("nms_radius") = 2

}  // namespace

PYBIND11_MODULE(_tir, m) {
    m.doc() = "Shape-based trademark image retrieval (corner counts + Hu moments)";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
    py::register_exception<ImageError>(m, "ImageError", base.ptr());
    py::register_exception<DegenerateImageError>(m, "DegenerateImageError", base.ptr());
    py::register_exception<DatabaseError>(m, "DatabaseError", base.ptr());
    py::register_exception<UndefinedMetricError>(m, "UndefinedMetricError", base.ptr());

    // imaging
    m.def("load_image", [](const std::string& path) { return to_array_any(load_image(path)); }, py::arg("path"),
          "PGM/PPM file as a uint8 array, (h, w) or (h, w, 3).");
    m.def("save_pgm", [](const U8Array& a, const std::string& path) { save_pgm(gray_from(a), path); },
          py::arg("image"), py::arg("path"));
    m.def("to_gray", [](const U8Array& a) { return to_array(to_gray(any_from(a))); }, py::arg("image"));
    m.def("rotate", [](const U8Array& a, double deg) { return to_array(rotate(gray_from(a), deg)); },
          py::arg("image"), py::arg("degrees"), "Counterclockwise rotation about the center, same size.");

    // edges and corners
    m.def("prompt_edge", [](const U8Array& a, int t) { return to_array(prompt_edge(gray_from(a), {t})); },
          py::arg("image"), py::arg("threshold") = 30, "0/1 edge map.");
    m.def(
        "corner_metric",
        [](const U8Array& a, double kappa, double sigma, int window) {
            return to_array(corner_metric(gray_from(a), {kappa, sigma, window, 0.01, 2}));
        },
        py::arg("image"), py::arg("kappa") = 0.04, py::arg("sigma") = 1.5, py::arg("window") = 2);
    m.def(
        "corners",
        [](const U8Array& a, int edge_threshold, double kappa, double sigma, int window, double peak, int nms) {
            const auto c = extraction(edge_threshold, kappa, sigma, window, peak, nms);
            std::vector<std::pair<int, int>> pts;
            for (const auto& p : corner_peaks(corner_metric(prompt_edge(gray_from(a), c.edge), c.corner), c.corner).points)
                pts.emplace_back(p.x, p.y);
            return pts;
        },
        py::arg("image"), EXTRACTION_ARGS, "(x, y) corner locations on the prompt edge map.");
    m.def(
        "corner_count",
        [](const U8Array& a, int edge_threshold, double kappa, double sigma, int window, double peak, int nms) {
            const auto c = extraction(edge_threshold, kappa, sigma, window, peak, nms);
            return corner_count(gray_from(a), c.edge, c.corner);
        },
        py::arg("image"), EXTRACTION_ARGS);

    // moments and matching
    m.def("hu_moments", [](const U8Array& a) { return hu_moments(gray_from(a)).phi; }, py::arg("image"));
    m.def("log_transform", [](const std::array<double, 7>& phi) { return log_transform(HuVector{phi}).phi; },
          py::arg("phi"));
    m.def("euclidean_distance", [](const std::vector<double>& a, const std::vector<double>& b) {
        return euclidean_distance(a, b);
    });
    m.def(
        "adaptive_threshold",
        [](int count, int band_width, double base, double mult) {
            const auto w = adaptive_threshold(count, {band_width, base, mult});
            return std::make_pair(w.min_t, w.max_t);
        },
        py::arg("count"), py::arg("band_width") = 20, py::arg("base_threshold") = 5.0, py::arg("multiplier") = 1.5,
        "(min, max) of the accepted corner-count window.");

    // database
    py::class_<FeatureRecord>(m, "FeatureRecord")
        .def_readonly("record_id", &FeatureRecord::record_id)
        .def_readonly("path", &FeatureRecord::path)
        .def_readonly("class_label", &FeatureRecord::class_label)
        .def_readonly("corner_count", &FeatureRecord::corner_count)
        .def_property_readonly("hu", [](const FeatureRecord& r) { return r.hu.phi; })
        .def("__repr__", [](const FeatureRecord& r) {
            return "<FeatureRecord " + std::to_string(r.record_id) + " " + r.path + " [" + r.class_label + "]>";
        });

    py::class_<FeatureDatabase>(m, "FeatureDatabase")
        .def_readonly("records", &FeatureDatabase::records)
        .def("__len__", [](const FeatureDatabase& db) { return db.records.size(); })
        .def("save", &save_index, py::arg("path"));

    m.def(
        "build_index",
        [](const std::string& manifest, const std::string& root, const std::string& out, int edge_threshold,
           double kappa, double sigma, int window, double peak, int nms, int jobs) {
            const auto c = extraction(edge_threshold, kappa, sigma, window, peak, nms);
            py::gil_scoped_release release;
            return build_index(load_manifest(manifest), root, c, out, jobs);
        },
        py::arg("manifest"), py::arg("root"), py::arg("out") = "", EXTRACTION_ARGS, py::arg("jobs") = 0);
    m.def("load_index", &load_index, py::arg("path"));

    py::class_<RankedMatch>(m, "Match")
        .def_readonly("record_id", &RankedMatch::record_id)
        .def_readonly("corner_difference", &RankedMatch::corner_difference)
        .def_readonly("moment_distance", &RankedMatch::moment_distance)
        .def("__repr__", [](const RankedMatch& r) {
            return "<Match " + std::to_string(r.record_id) + " d=" + std::to_string(r.moment_distance) + ">";
        });

    m.def(
        "query",
        [](const FeatureDatabase& db, const U8Array& image, std::size_t top_k, int band_width, double base,
           double mult, bool raw_distance) {
            QueryOptions o;
            o.top_k = top_k;
            o.threshold = {band_width, base, mult};
            o.distance = raw_distance ? MomentDistance::raw : MomentDistance::log_magnitude;
            return query(db, any_from(image), o);
        },
        py::arg("db"), py::arg("image"), py::arg("top_k") = 10, py::arg("band_width") = 20,
        py::arg("base_threshold") = 5.0, py::arg("multiplier") = 1.5, py::arg("raw_distance") = false);

    // evaluation
    m.def("precision", [](const std::vector<std::uint64_t>& r, const std::set<std::uint64_t>& rel) {
        return precision(r, rel);
    });
    m.def("recall", [](const std::vector<std::uint64_t>& r, const std::set<std::uint64_t>& rel) {
        return recall(r, rel);
    });
    m.def(
        "generate_rotated_dataset",
        [](const std::string& manifest, const std::string& root, const std::vector<double>& angles,
           const std::string& out_dir, const std::string& out_manifest) {
            const Manifest rotated = generate_rotated_dataset(load_manifest(manifest), root, angles, out_dir);
            save_manifest(rotated, out_manifest);
            return rotated.entries.size();
        },
        py::arg("manifest"), py::arg("root"), py::arg("angles"), py::arg("out_dir"), py::arg("out_manifest"),
        "Writes rotated copies and their manifest; returns the number of images.");
    m.def(
        "evaluate",
        [](const FeatureDatabase& db, const std::string& manifest, const std::string& root, const std::string& mode,
           std::size_t top_k, bool exclude_self, const std::string& csv, int jobs) {
            EvalOptions o;
            o.mode = parse_eval_mode(mode);
            o.top_k = top_k;
            o.exclude_self = exclude_self;
            o.jobs = jobs;
            EvalReport r;
            {
                py::gil_scoped_release release;
                r = evaluate(db, load_manifest(manifest), root, o);
            }
            if (!csv.empty()) emit_pr_csv(r, csv);
            py::list rows;
            for (const auto& q : r.queries)
                rows.append(py::make_tuple(q.query_path, q.class_label, q.pr.precision, q.pr.recall));
            py::dict d;
            d["precision"] = r.mean.precision;
            d["recall"] = r.mean.recall;
            d["queries"] = rows;
            return d;
        },
        py::arg("db"), py::arg("manifest"), py::arg("root"), py::arg("mode") = "hybrid", py::arg("top_k") = 6,
        py::arg("exclude_self") = false, py::arg("csv") = "", py::arg("jobs") = 0,
        "Mean and per-query precision/recall; also writes the CSV when `csv` is given.");
}
