#include <doctest.h>

#include <cmath>

#include "hclpal/cvd.hpp"
#include "hclpal/errors.hpp"
#include "support.hpp"

using namespace hclpal;

using Matrix = std::array<std::array<double, 3>, 3>;

namespace {

// Severity 1.0 rows of the published tables, transcribed independently.
const Matrix kDeutan1 = {{{0.367322, 0.860646, -0.227968}, {0.280085, 0.672501, 0.047413}, {-0.011820, 0.042940, 0.968881}}};
const Matrix kProtan1 = {{{0.152286, 1.052583, -0.204868}, {0.114503, 0.786281, 0.099216}, {-0.003882, -0.048116, 1.051998}}};
const Matrix kTritan1 = {{{1.255528, -0.076749, -0.178779}, {-0.078411, 0.930809, 0.147602}, {0.004733, 0.691367, 0.303900}}};

}  // namespace

TEST_CASE("zero severity is the identity") {
    for (auto kind : {CvdKind::Deutan, CvdKind::Protan, CvdKind::Tritan}) {
        const auto m = cvd_matrix(kind, 0.0).m;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) CHECK(m[i][j] == (i == j ? 1.0 : 0.0));
        }
        const auto colors = test::random_colors(300, 5);
        CHECK(test::hexes(simulate(colors, kind, 0.0)) == test::hexes(colors));
    }
}

TEST_CASE("full severity matrices match the published values") {
    const std::pair<CvdKind, const Matrix*> cases[] = {
        {CvdKind::Deutan, &kDeutan1}, {CvdKind::Protan, &kProtan1}, {CvdKind::Tritan, &kTritan1}};
    for (const auto& [kind, expect] : cases) {
        const auto m = cvd_matrix(kind, 1.0).m;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) CHECK(m[i][j] == doctest::Approx((*expect)[i][j]).epsilon(1e-9));
        }
    }
}

TEST_CASE("every tabulated row sums to one") {
    for (auto kind : {CvdKind::Deutan, CvdKind::Protan, CvdKind::Tritan}) {
        for (int step = 0; step <= 10; ++step) {
            const auto& m = cvd_table(kind, step);
            for (const auto& row : m) CHECK(std::abs(row[0] + row[1] + row[2] - 1.0) < 1e-5);
        }
    }
    CHECK_THROWS_AS(cvd_table(CvdKind::Deutan, 11), DomainError);
}

TEST_CASE("intermediate severities interpolate entrywise") {
    const auto mid = cvd_matrix(CvdKind::Protan, 0.55).m;
    const auto& a = cvd_table(CvdKind::Protan, 5);
    const auto& b = cvd_table(CvdKind::Protan, 6);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) CHECK(mid[i][j] == doctest::Approx((a[i][j] + b[i][j]) / 2).epsilon(1e-12));
    }
    CHECK(cvd_matrix(CvdKind::Tritan, 0.3).m == cvd_table(CvdKind::Tritan, 3));
    CHECK_THROWS_AS(cvd_matrix(CvdKind::Deutan, 1.01), DomainError);
    CHECK_THROWS_AS(cvd_matrix(CvdKind::Deutan, -0.01), DomainError);
    CHECK_THROWS_AS(cvd_matrix(CvdKind::Deutan, std::nan("")), DomainError);
}

TEST_CASE("deutan red by hand multiplication") {
    // Linear red is (1,0,0): the result is the first column, clamped.
    const auto encode = [](double x) {
        x = std::clamp(x, 0.0, 1.0);
        return x <= 0.0031308 ? 12.92 * x : 1.055 * std::pow(x, 1 / 2.4) - 0.055;
    };
    const Color expect(encode(kDeutan1[0][0]), encode(kDeutan1[1][0]), encode(kDeutan1[2][0]));
    const auto got = simulate(std::vector<Color>{parse_hex("#FF0000")}, CvdKind::Deutan, 1.0).front();
    CHECK(format_hex(got) == format_hex(expect));
    CHECK(format_hex(got) == "#A39000");
}

TEST_CASE("grays are fixed points") {
    for (auto kind : {CvdKind::Deutan, CvdKind::Protan, CvdKind::Tritan}) {
        for (double severity : {0.25, 0.5, 1.0}) {
            for (int k = 0; k < 100; ++k) {
                const double g = k / 99.0;
                const auto out = simulate(Color(g, g, g), cvd_matrix(kind, severity));
                const double spread = std::max({out.r(), out.g(), out.b()}) - std::min({out.r(), out.g(), out.b()});
                CHECK(spread < 1.0 / 255);
                CHECK(std::abs(out.r() - g) < 1.0 / 255);
            }
        }
    }
}

TEST_CASE("severity sweep is continuous") {
    // Interpolation and clamping are Lipschitz in linear RGB, bounded by the
    // largest row change between adjacent tabulated matrices.
    const auto colors = test::random_colors(40, 11);
    for (auto kind : {CvdKind::Deutan, CvdKind::Protan, CvdKind::Tritan}) {
        double row_step = 0.0;
        for (int t = 0; t < 10; ++t) {
            for (int i = 0; i < 3; ++i) {
                double sum = 0.0;
                for (int j = 0; j < 3; ++j) sum += std::abs(cvd_table(kind, t + 1)[i][j] - cvd_table(kind, t)[i][j]);
                row_step = std::max(row_step, sum);
            }
        }
        const double bound = row_step / 10.0 + 1e-9;
        std::vector<Color> prev = simulate(colors, kind, 0.0);
        for (int s = 1; s <= 100; ++s) {
            const auto cur = simulate(colors, kind, s / 100.0);
            for (std::size_t k = 0; k < colors.size(); ++k) {
                const auto a = to_linear(cur[k]), b = to_linear(prev[k]);
                CHECK(std::abs(a.r - b.r) <= bound);
                CHECK(std::abs(a.g - b.g) <= bound);
                CHECK(std::abs(a.b - b.b) <= bound);
            }
            prev = cur;
        }
    }
}

TEST_CASE("alpha survives simulation") {
    const auto out = simulate(std::vector<Color>{parse_hex("#3366CC80")}, CvdKind::Protan, 1.0);
    REQUIRE(out.front().alpha().has_value());
    CHECK(format_hex(out.front()).substr(7) == "80");
}

TEST_CASE("cvd spec tokens") {
    CHECK(parse_cvd_specs("deutan").front().severity == 1.0);
    CHECK(parse_cvd_specs("protan:0.4").front().kind == CvdKind::Protan);
    CHECK(parse_cvd_specs("protan:0.4").front().severity == doctest::Approx(0.4));
    CHECK(parse_cvd_specs("all:0.5").size() == 3);
    CHECK(parse_cvd_kind("deuteranopia") == CvdKind::Deutan);
    CHECK_THROWS_AS(parse_cvd_specs("deutan:2"), DomainError);
    CHECK_THROWS_AS(parse_cvd_specs("deutan:x"), DomainError);
    CHECK_THROWS_AS(parse_cvd_specs("mono"), DomainError);
}
