#include <doctest.h>

#include "hclpal/kernels.hpp"
#include "hclpal/errors.hpp"
#include "support.hpp"

using namespace hclpal;

TEST_CASE("parallel kernels agree with the serial loops") {
    // Sizes straddle the parallel threshold.
    for (std::size_t n : {std::size_t{2}, std::size_t{100}, kernels::kParallelThreshold + 17}) {
        CAPTURE(n);
        const auto colors = test::random_colors(n, static_cast<unsigned>(n));

        std::vector<Luv> a(n), b(n);
        kernels::srgb_to_luv_batch(colors, a);
        kernels::serial::srgb_to_luv_batch(colors, b);
        for (std::size_t k = 0; k < n; ++k) {
            CHECK(a[k].l == b[k].l);
            CHECK(a[k].u == b[k].u);
            CHECK(a[k].v == b[k].v);
        }

        const auto m = cvd_matrix(CvdKind::Deutan, 0.7);
        std::vector<Color> sa(n), sb(n);
        kernels::simulate_batch(colors, m, sa);
        kernels::serial::simulate_batch(colors, m, sb);
        CHECK(sa == sb);

        std::vector<HclCoord> coords;
        for (const auto& c : colors) coords.push_back(srgb_to_hcl(c));
        std::vector<std::optional<Color>> ha(n), hb(n);
        kernels::hcl_to_srgb_batch(coords, ha, false);
        kernels::serial::hcl_to_srgb_batch(coords, hb, false);
        CHECK(ha == hb);
    }
}

TEST_CASE("closest pair is deterministic and matches the serial search") {
    for (std::size_t n : {std::size_t{2}, std::size_t{50}, std::size_t{700}}) {
        CAPTURE(n);
        const auto colors = test::random_colors(n, 3);
        std::vector<Luv> luv(n);
        kernels::serial::srgb_to_luv_batch(colors, luv);
        const auto p = kernels::min_pairwise_distance(luv);
        const auto s = kernels::serial::min_pairwise_distance(luv);
        CHECK(p.distance == s.distance);
        CHECK(p.i == s.i);
        CHECK(p.j == s.j);
        CHECK(p.i < p.j);
    }
}

TEST_CASE("ties resolve to the lexicographically first pair") {
    // Duplicates at (1,4) and (2,3); both at distance zero.
    std::vector<Luv> pts = {{10, 0, 0}, {50, 5, 5}, {70, 1, 1}, {70, 1, 1}, {50, 5, 5}};
    std::vector<Luv> many;
    for (int k = 0; k < 300; ++k) many.push_back({static_cast<double>(k % 100), static_cast<double>(k), 0});
    const auto a = kernels::min_pairwise_distance(pts);
    CHECK(a.distance == 0.0);
    CHECK(a.i == 1);
    CHECK(a.j == 4);
    const auto b = kernels::min_pairwise_distance(many);
    const auto c = kernels::serial::min_pairwise_distance(many);
    CHECK(b.i == c.i);
    CHECK(b.j == c.j);
}

TEST_CASE("kernel argument checks") {
    std::vector<Luv> one(1);
    CHECK_THROWS_AS(kernels::min_pairwise_distance(one), DomainError);
    std::vector<Color> in(3), out(2);
    CHECK_THROWS_AS(kernels::simulate_batch(in, cvd_matrix(CvdKind::Protan, 1), out), DomainError);
    CHECK(kernels::max_threads() >= 1);
}
