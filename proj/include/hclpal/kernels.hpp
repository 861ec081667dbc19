#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "hclpal/color.hpp"
#include "hclpal/cvd.hpp"

// Batch kernels over color arrays. The top-level functions are OpenMP-parallel
// above kParallelThreshold elements; kernels::serial holds the plain loops they
// are tested and benchmarked against. Both produce identical results.
namespace hclpal::kernels {

inline constexpr std::size_t kParallelThreshold = 2048;

struct ClosestPair {
    double distance = 0.0;
    std::size_t i = 0;
    std::size_t j = 0;
};

/// Orders by distance, then by (i, j); the parallel reduction relies on it.
bool closer(const ClosestPair& a, const ClosestPair& b) noexcept;

void srgb_to_luv_batch(std::span<const Color> in, std::span<Luv> out);
void hcl_to_srgb_batch(std::span<const HclCoord> in, std::span<std::optional<Color>> out, bool fixup);
void simulate_batch(std::span<const Color> in, const CvdMatrix& matrix, std::span<Color> out);

/// Minimum over all unordered pairs i < j. Needs at least two points.
ClosestPair min_pairwise_distance(std::span<const Luv> points);

int max_threads() noexcept;

namespace serial {

void srgb_to_luv_batch(std::span<const Color> in, std::span<Luv> out);
void hcl_to_srgb_batch(std::span<const HclCoord> in, std::span<std::optional<Color>> out, bool fixup);
void simulate_batch(std::span<const Color> in, const CvdMatrix& matrix, std::span<Color> out);
ClosestPair min_pairwise_distance(std::span<const Luv> points);

}  // namespace serial

}  // namespace hclpal::kernels
