#include "hclpal/kernels.hpp"

#include <limits>

#include "hclpal/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hclpal::kernels {

namespace {

void check_sizes(std::size_t in, std::size_t out) {
    if (in != out) throw DomainError("batch input and output sizes differ");
}

void check_pairs(std::size_t n) {
    if (n < 2) throw DomainError("pairwise distance needs at least two colors");
}

// Loop counters for OpenMP need a signed type.
using Index = std::ptrdiff_t;

}  // namespace

bool closer(const ClosestPair& a, const ClosestPair& b) noexcept {
    if (a.distance != b.distance) return a.distance < b.distance;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

int max_threads() noexcept {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace serial {

void srgb_to_luv_batch(std::span<const Color> in, std::span<Luv> out) {
    check_sizes(in.size(), out.size());
    for (std::size_t k = 0; k < in.size(); ++k) out[k] = srgb_to_luv(in[k]);
}

void hcl_to_srgb_batch(std::span<const HclCoord> in, std::span<std::optional<Color>> out, bool fixup) {
    check_sizes(in.size(), out.size());
    for (std::size_t k = 0; k < in.size(); ++k) out[k] = hcl_to_srgb(in[k], fixup);
}

void simulate_batch(std::span<const Color> in, const CvdMatrix& matrix, std::span<Color> out) {
    check_sizes(in.size(), out.size());
    for (std::size_t k = 0; k < in.size(); ++k) out[k] = simulate(in[k], matrix);
}

ClosestPair min_pairwise_distance(std::span<const Luv> points) {
    check_pairs(points.size());
    ClosestPair best{std::numeric_limits<double>::infinity(), 0, 1};
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            const ClosestPair cand{distance(points[i], points[j]), i, j};
            if (closer(cand, best)) best = cand;
        }
    }
    return best;
}

}  // namespace serial

void srgb_to_luv_batch(std::span<const Color> in, std::span<Luv> out) {
    check_sizes(in.size(), out.size());
    const auto n = static_cast<Index>(in.size());
#pragma omp parallel for schedule(static) if (in.size() >= kParallelThreshold)
    for (Index k = 0; k < n; ++k) out[k] = srgb_to_luv(in[k]);
}

void hcl_to_srgb_batch(std::span<const HclCoord> in, std::span<std::optional<Color>> out, bool fixup) {
    check_sizes(in.size(), out.size());
    const auto n = static_cast<Index>(in.size());
#pragma omp parallel for schedule(static) if (in.size() >= kParallelThreshold)
    for (Index k = 0; k < n; ++k) out[k] = hcl_to_srgb(in[k], fixup);
}

void simulate_batch(std::span<const Color> in, const CvdMatrix& matrix, std::span<Color> out) {
    check_sizes(in.size(), out.size());
    const auto n = static_cast<Index>(in.size());
#pragma omp parallel for schedule(static) if (in.size() >= kParallelThreshold)
    for (Index k = 0; k < n; ++k) out[k] = simulate(in[k], matrix);
}

ClosestPair min_pairwise_distance(std::span<const Luv> points) {
    check_pairs(points.size());
    const auto n = static_cast<Index>(points.size());
    ClosestPair best{std::numeric_limits<double>::infinity(), 0, 1};
    // Pair count grows quadratically, so the threshold is on points, not pairs.
#pragma omp parallel if (points.size() >= 256)
    {
        ClosestPair local{std::numeric_limits<double>::infinity(), 0, 1};
#pragma omp for schedule(dynamic, 16) nowait
        for (Index i = 0; i < n - 1; ++i) {
            for (Index j = i + 1; j < n; ++j) {
                const ClosestPair cand{distance(points[i], points[j]), static_cast<std::size_t>(i),
                                       static_cast<std::size_t>(j)};
                if (closer(cand, local)) local = cand;
            }
        }
#pragma omp critical(hclpal_min_pair)
        if (closer(local, best)) best = local;
    }
    return best;
}

}  // namespace hclpal::kernels
