#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hclpal/color.hpp"

namespace hclpal {

/// Hue, chroma and luminance of a palette, one entry per color. Hue is
/// unwrapped so successive defined values differ by at most 180 degrees;
/// grays leave gaps.
struct SpectrumPath {
    std::vector<Color> colors;
    std::vector<std::optional<double>> hue;
    std::vector<double> chroma;
    std::vector<double> luminance;

    std::size_t size() const noexcept { return colors.size(); }
};

/// Throws DomainError for fewer than two colors.
SpectrumPath spectrum(std::span<const Color> colors);

/// Unwraps a hue sequence in place; absent entries are skipped.
void unwrap_hues(std::vector<std::optional<double>>& hue);

enum class Vision { Normal, Deutan, Protan, Tritan };

std::string_view to_string(Vision vision) noexcept;

inline constexpr std::array<Vision, 4> kVisions{Vision::Normal, Vision::Deutan, Vision::Protan, Vision::Tritan};
inline constexpr double kDefaultSafetyThreshold = 9.0;

struct VisionResult {
    Vision vision = Vision::Normal;
    double min_distance = 0.0;
    std::size_t i = 0;
    std::size_t j = 1;
    bool pass = false;
};

struct SafetyReport {
    double threshold = kDefaultSafetyThreshold;
    std::array<VisionResult, 4> results{};

    const VisionResult& operator[](Vision vision) const noexcept {
        return results[static_cast<std::size_t>(vision)];
    }
    bool pass() const noexcept;
};

/// Minimum pairwise CIELUV distance under normal vision and each deficiency at
/// full severity. Throws DomainError for fewer than two colors or threshold <= 0.
SafetyReport safety_check(std::span<const Color> colors, double threshold = kDefaultSafetyThreshold);

enum class Shape { Constant, Increasing, Decreasing, Triangular, Irregular };

std::string_view to_string(Shape shape) noexcept;

struct ShapeTolerance {
    double constant = 2.0;  // range below this is constant
    double step = 0.5;      // per-step violations allowed in a monotone run
};

inline constexpr ShapeTolerance kValueTolerance{2.0, 0.5};
// Gamut clamping bends the hue of a fixed-hue palette by several degrees at its ends.
inline constexpr ShapeTolerance kHueTolerance{15.0, 1.5};

/// Hues of entries with less chroma than this carry no shape information.
inline constexpr double kHueChromaFloor = kValueTolerance.constant;

Shape classify_sequence(std::span<const double> values, const ShapeTolerance& tol = kValueTolerance);

struct ShapeDescriptor {
    Shape hue = Shape::Constant;
    Shape chroma = Shape::Constant;
    Shape luminance = Shape::Constant;
};

/// Hue is classified over its defined entries only; no defined hue is constant.
ShapeDescriptor classify_shape(const SpectrumPath& path);

bool is_monotone(Shape shape) noexcept;

}  // namespace hclpal
