#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "tir/moments.hpp"
#include "tir/shapes.hpp"

using namespace tir;

namespace {

GrayImage square(int canvas, int side, std::uint8_t value) {
    GrayImage img(canvas, canvas);
    const int lo = (canvas - side) / 2;
    for (int y = lo; y < lo + side; ++y)
        for (int x = lo; x < lo + side; ++x) img.at(x, y) = value;
    return img;
}

GrayImage shifted(const GrayImage& img, int dx, int dy) {
    GrayImage out(img.width() + dx, img.height() + dy);
    for (int y = 0; y < img.height(); ++y)
        for (int x = 0; x < img.width(); ++x) out.at(x + dx, y + dy) = img.at(x, y);
    return out;
}

bool close(long double got, long double ref, long double scale, long double tol) {
    return std::fabs(got - ref) <= tol * scale;
}

}  // namespace

TEST_SUITE("moments") {

TEST_CASE("raw moment small cases") {
    CHECK(raw_moment(GrayImage(4, 4, 1), 0, 0) == 16);
    CHECK(raw_moment(GrayImage(1, 1, 9), 1, 0) == 0);
    CHECK(raw_moment(GrayImage(1, 1, 9), 0, 0) == 9);
    GrayImage img(3, 2);
    img.at(2, 1) = 5;
    CHECK(raw_moment(img, 2, 1) == 5 * 4 * 1);
    CHECK(raw_moment(GrayImage(3, 3), 1, 1) == 0);
}

TEST_CASE("orders above three are rejected") {
    CHECK_THROWS_AS(raw_moment(GrayImage(2, 2, 1), 4, 0), InvalidArgument);
    CHECK_THROWS_AS(raw_moment(GrayImage(2, 2, 1), -1, 0), InvalidArgument);
    CHECK_THROWS_AS(normalized_central_moment(GrayImage(2, 2, 1), 1, 0), InvalidArgument);
    CHECK_THROWS_AS(central_moment(GrayImage(2, 2, 1), 2, 2), InvalidArgument);
}

TEST_CASE("all-zero image is degenerate") {
    const GrayImage zero(6, 6);
    CHECK_THROWS_AS(central_moment(zero, 2, 0), DegenerateImageError);
    CHECK_THROWS_AS(normalized_central_moment(zero, 2, 0), DegenerateImageError);
    CHECK_THROWS_AS(moment_table(zero), DegenerateImageError);
    CHECK_THROWS_AS(hu_moments(zero), DegenerateImageError);
}

TEST_CASE("central moments of order 0 and 1") {
    std::mt19937 rng(4);
    for (int i = 0; i < 10; ++i) {
        const GrayImage img = oracle::random_image(rng, 5 + i, 7);
        CHECK(central_moment(img, 0, 0) == raw_moment(img, 0, 0));
        CHECK(std::abs(central_moment(img, 1, 0)) <= 1e-9 * raw_moment(img, 1, 0));
        CHECK(std::abs(central_moment(img, 0, 1)) <= 1e-9 * raw_moment(img, 0, 1));
    }
}

TEST_CASE("agree with the nested-loop oracle") {
    std::mt19937 rng(20240611);
    for (int i = 0; i < 50; ++i) {
        std::uniform_int_distribution<int> side(8, 16);
        const GrayImage img = oracle::random_image(rng, side(rng), side(rng));
        const auto ref = oracle::moments(img);
        const auto ref_hu = oracle::hu(ref);
        const auto ref_hu_scale = oracle::hu_scale(ref);
        const HuVector h = hu_moments(img);
        for (int p = 0; p <= 3; ++p)
            for (int q = 0; p + q <= 3; ++q) {
                CHECK(close(raw_moment(img, p, q), ref.m[p][q], ref.m[p][q], 1e-12L));
                CHECK(close(central_moment(img, p, q), ref.mu[p][q], ref.mu_abs[p][q], 1e-12L));
                if (p + q >= 2) {
                    const long double eta_scale = ref.mu_abs[p][q] / std::pow(ref.m[0][0], (p + q) / 2.0L + 1);
                    CHECK(close(normalized_central_moment(img, p, q), ref.eta[p][q], eta_scale, 1e-12L));
                }
            }
        for (int k = 0; k < 7; ++k) CHECK(close(h[k], ref_hu[k], ref_hu_scale[k], 1e-12L));
    }
}

TEST_CASE("table matches the single-moment functions") {
    std::mt19937 rng(8);
    const GrayImage img = oracle::random_image(rng, 12, 9);
    const MomentTable t = moment_table(img);
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; p + q <= 3; ++q) {
            CHECK(t.m[p][q] == raw_moment(img, p, q));
            CHECK(t.mu[p][q] == central_moment(img, p, q));
        }
    CHECK(hu_moments(t) == hu_moments(img));
}

TEST_CASE("square: continuous-limit values") {
    const GrayImage img = square(64, 64, 1);
    CHECK(normalized_central_moment(img, 2, 0) == doctest::Approx(1.0 / 12).epsilon(0.02));
    CHECK(normalized_central_moment(img, 0, 2) == doctest::Approx(1.0 / 12).epsilon(0.02));
    CHECK(hu_moments(img)[0] == doctest::Approx(1.0 / 6).epsilon(0.02));
    // Exact discrete value for an s x s block: (s^2 - 1) / (6 s^2).
    CHECK(hu_moments(square(70, 24, 1))[0] == doctest::Approx((24.0 * 24 - 1) / (6 * 24.0 * 24)).epsilon(1e-12));
}

TEST_CASE("intensity scaling multiplies eta by c^(1 - (p+q)/2 - 1)") {
    std::mt19937 rng(12);
    const GrayImage f = oracle::random_image(rng, 10, 10, 0, 127);
    GrayImage f2 = f;
    for (auto& v : f2.pixels()) v = static_cast<std::uint8_t>(2 * v);
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; p + q <= 3; ++q) {
            if (p + q < 2) continue;
            const double gamma = (p + q) / 2.0 + 1;
            const double a = normalized_central_moment(f, p, q);
            const double b = normalized_central_moment(f2, p, q);
            CHECK(b == doctest::Approx(a * std::pow(2.0, 1 - gamma)).epsilon(1e-9));
        }
    const GrayImage white = square(64, 64, 255);
    CHECK(hu_moments(white)[0] == doctest::Approx(hu_moments(square(64, 64, 1))[0] / 255).epsilon(1e-12));
}

TEST_CASE("nearest-neighbor upscale keeps eta within 5%") {
    const GrayImage blob = rasterize(synthetic_shapes()[2], 48, 20);
    GrayImage big(96, 96);
    for (int y = 0; y < 96; ++y)
        for (int x = 0; x < 96; ++x) big.at(x, y) = blob.at(x / 2, y / 2);
    for (auto [p, q] : {std::pair{2, 0}, {0, 2}, {1, 1}, {3, 0}, {0, 3}, {2, 1}, {1, 2}}) {
        const double a = normalized_central_moment(blob, p, q);
        const double b = normalized_central_moment(big, p, q);
        const double scale = std::max(std::abs(a), 0.01 * normalized_central_moment(blob, 2, 0));
        CHECK(std::abs(a - b) <= 0.05 * scale);
    }
}

TEST_CASE("integer translation leaves central moments and Hu identical") {
    std::mt19937 rng(13);
    for (int i = 0; i < 20; ++i) {
        GrayImage img(32, 32);
        std::uniform_int_distribution<int> pos(0, 26), val(1, 255);
        for (int k = 0; k < 40; ++k) img.at(pos(rng), pos(rng)) = static_cast<std::uint8_t>(val(rng));
        const GrayImage moved = shifted(img, 3, 2);
        const MomentTable a = moment_table(img), b = moment_table(moved);
        CHECK(a.mu == b.mu);
        CHECK(hu_moments(img) == hu_moments(moved));
    }
}

TEST_CASE("mirror image flips only phi7") {
    const GrayImage img = rasterize(synthetic_shapes()[1], 64, 24);
    GrayImage mirrored(64, 64);
    for (int y = 0; y < 64; ++y)
        for (int x = 0; x < 64; ++x) mirrored.at(x, y) = img.at(63 - x, y);
    const HuVector a = hu_moments(img), b = hu_moments(mirrored);
    for (int k = 0; k < 6; ++k) CHECK(b[k] == doctest::Approx(a[k]).epsilon(1e-9));
    CHECK(b[6] == doctest::Approx(-a[6]).epsilon(1e-9));
    CHECK(a[6] != 0.0);
}

TEST_CASE("rotation invariance on raster shapes") {
    const GrayImage disc = disc_image(128, 40);
    const GrayImage tri = rasterize(synthetic_shapes()[1], 128, 48);
    for (const GrayImage* img : {&disc, &tri}) {
        const HuVector base = hu_moments(*img);
        for (double angle : {60.0, 120.0, 180.0, 240.0, 300.0}) {
            const HuVector r = hu_moments(rotate(*img, angle));
            for (int k = 0; k < 6; ++k) CHECK(std::abs(r[k] - base[k]) <= 0.05 * std::abs(base[k]));
        }
    }
}

}
