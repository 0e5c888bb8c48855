#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "tir/corners.hpp"

using namespace tir;

namespace {

GrayImage square_scene() {
    GrayImage img(64, 64, 0);
    for (int y = 20; y < 44; ++y)
        for (int x = 20; x < 44; ++x) img.at(x, y) = 255;
    return img;
}

// Largest elementwise |a - b| / |b| over the map, ignoring entries where both
// are below `floor` in magnitude.
double max_rel_error(const RealImage& got, const std::vector<std::vector<double>>& ref, double floor) {
    double worst = 0;
    for (int y = 0; y < got.height(); ++y)
        for (int x = 0; x < got.width(); ++x) {
            const double a = got.at(x, y), b = ref[y][x];
            if (std::abs(a) < floor && std::abs(b) < floor) continue;
            worst = std::max(worst, std::abs(a - b) / std::abs(b));
        }
    return worst;
}

std::vector<std::vector<double>> as_rows(const RealImage& m) {
    std::vector<std::vector<double>> rows(m.height(), std::vector<double>(m.width()));
    for (int y = 0; y < m.height(); ++y)
        for (int x = 0; x < m.width(); ++x) rows[y][x] = m.at(x, y);
    return rows;
}

}  // namespace

TEST_SUITE("corners") {

TEST_CASE("uniform image has zero response") {
    const RealImage r = corner_metric(GrayImage(16, 12, 90));
    for (double v : r.pixels()) CHECK(v == 0.0);
    CHECK(corner_peaks(r).count() == 0);
    CHECK(corner_count(GrayImage(16, 12, 90)) == 0);
}

TEST_CASE("horizontal ramp has non-positive response") {
    GrayImage img(20, 20);
    for (int y = 0; y < 20; ++y)
        for (int x = 0; x < 20; ++x) img.at(x, y) = static_cast<std::uint8_t>(10 * x);
    const RealImage r = corner_metric(img);
    for (int y = 1; y < 19; ++y)
        for (int x = 1; x < 19; ++x) CHECK(r.at(x, y) <= 0.0);
}

TEST_CASE("square scene response matches the 2-D reference") {
    const GrayImage img = square_scene();
    const CornerConfig cfg;
    const auto ref = oracle::harris(img, cfg.kappa, cfg.window_sigma, cfg.window_radius);
    const RealImage got = corner_metric(img, cfg);
    double scale = 0;
    for (const auto& row : ref)
        for (double v : row) scale = std::max(scale, std::abs(v));
    CHECK(max_rel_error(got, ref, 1e-9 * scale) <= 1e-9);
}

TEST_CASE("random images match the 2-D reference under several configs") {
    std::mt19937 rng(5);
    const CornerConfig configs[] = {{}, {0.06, 1.0, 1, 0.05, 1}, {0.1, 2.5, 4, 0.2, 3}};
    for (const auto& cfg : configs)
        for (int i = 0; i < 5; ++i) {
            const GrayImage img = oracle::random_image(rng, 6 + 3 * i, 9 + i);
            const auto ref = oracle::harris(img, cfg.kappa, cfg.window_sigma, cfg.window_radius);
            double scale = 0;
            for (const auto& row : ref)
                for (double v : row) scale = std::max(scale, std::abs(v));
            CHECK(max_rel_error(corner_metric(img, cfg), ref, 1e-9 * scale) <= 1e-9);
        }
}

TEST_CASE("peaks: empty and single") {
    CHECK(corner_peaks(RealImage(8, 8, 0.0)).count() == 0);
    CHECK(corner_peaks(RealImage(8, 8, -3.0)).count() == 0);
    RealImage one(8, 8, 0.0);
    one.at(5, 2) = 1.5;
    const CornerSet s = corner_peaks(one);
    REQUIRE(s.count() == 1);
    CHECK(s.points[0] == CornerPoint{5, 2});
}

TEST_CASE("peaks: plateau keeps the first pixel in row-major order") {
    RealImage m(10, 10, 0.0);
    m.at(4, 4) = m.at(5, 4) = m.at(4, 5) = 2.0;
    const CornerSet s = corner_peaks(m);
    REQUIRE(s.count() == 1);
    CHECK(s.points[0] == CornerPoint{4, 4});
}

TEST_CASE("peaks: relative threshold and separation") {
    RealImage m(20, 20, 0.0);
    m.at(2, 2) = 100;
    m.at(10, 10) = 0.5;   // below 1% of max
    m.at(15, 15) = 1.0;   // exactly 1% of max, kept
    m.at(4, 2) = 50;      // inside nms radius of the maximum
    m.at(5, 2) = 40;      // beaten by (4, 2)
    const CornerSet s = corner_peaks(m);
    std::vector<CornerPoint> expected{{2, 2}, {15, 15}};
    CHECK(s.points == expected);
}

TEST_CASE("peaks agree with exhaustive reference on random maps") {
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> d(-1, 1);
    std::uniform_int_distribution<int> coarse(-3, 3);
    for (int i = 0; i < 40; ++i) {
        RealImage m(7 + i % 9, 5 + i % 11);
        // Coarse values make plateaus common.
        for (auto& v : m.pixels()) v = i % 2 ? d(rng) : coarse(rng);
        for (int nms : {1, 2, 3})
            for (double rel : {0.01, 0.5, 1.0}) {
                CornerConfig cfg;
                cfg.nms_radius = nms;
                cfg.peak_rel_threshold = rel;
                const auto ref = oracle::peaks(as_rows(m), rel, nms);
                const CornerSet got = corner_peaks(m, cfg);
                REQUIRE(got.count() == ref.size());
                for (std::size_t k = 0; k < ref.size(); ++k)
                    CHECK(got.points[k] == CornerPoint{ref[k].x, ref[k].y});
            }
    }
}

TEST_CASE("square scene yields its four corners") {
    const GrayImage img = square_scene();
    const CornerConfig cfg;
    const int truth[4][2] = {{20, 20}, {43, 20}, {20, 43}, {43, 43}};
    auto near_truth = [&](const CornerSet& s) {
        REQUIRE(s.count() == 4);
        for (const auto& t : truth) {
            bool hit = false;
            for (const auto& p : s.points) hit |= std::max(std::abs(p.x - t[0]), std::abs(p.y - t[1])) <= 2;
            CHECK(hit);
        }
    };
    near_truth(corner_peaks(corner_metric(img, cfg), cfg));
    near_truth(corner_peaks(corner_metric(prompt_edge(img), cfg), cfg));

    // Composed oracle: brute-force edges, 2-D Harris, exhaustive peaks.
    const auto edges = oracle::prompt_edge(img, 30);
    GrayImage edge_gray(64, 64);
    for (int y = 0; y < 64; ++y)
        for (int x = 0; x < 64; ++x) edge_gray.at(x, y) = edges[y][x] ? 255 : 0;
    const auto ref = oracle::peaks(oracle::harris(edge_gray, cfg.kappa, cfg.window_sigma, cfg.window_radius),
                                   cfg.peak_rel_threshold, cfg.nms_radius);
    CHECK(corner_count(img) == static_cast<int>(ref.size()));
    CHECK(corner_count(img) == 4);
}

TEST_CASE("corner_count is deterministic") {
    std::mt19937 rng(3);
    const GrayImage img = oracle::random_image(rng, 40, 30);
    CHECK(corner_count(img) == corner_count(img));
}

TEST_CASE("edge map reads as 0/255") {
    BinaryImage e(3, 1);
    e.at(1, 0) = 1;
    CHECK(edges_to_gray(e) == GrayImage(3, 1, std::vector<std::uint8_t>{0, 255, 0}));
}

TEST_CASE("invalid configs are rejected") {
    const GrayImage img(8, 8);
    auto bad = [&](CornerConfig c) { CHECK_THROWS_AS(corner_metric(img, c), InvalidArgument); };
    CornerConfig c;
    c.kappa = 0;
    bad(c);
    c = {};
    c.kappa = 0.25;
    bad(c);
    c = {};
    c.window_sigma = 0;
    bad(c);
    c = {};
    c.window_radius = 0;
    bad(c);
    c = {};
    c.peak_rel_threshold = 0;
    CHECK_THROWS_AS(corner_peaks(RealImage(4, 4), c), InvalidArgument);
    c.peak_rel_threshold = 1.5;
    CHECK_THROWS_AS(corner_peaks(RealImage(4, 4), c), InvalidArgument);
    c = {};
    c.nms_radius = 0;
    CHECK_THROWS_AS(corner_peaks(RealImage(4, 4), c), InvalidArgument);
}

}
