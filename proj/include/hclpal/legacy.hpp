#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "hclpal/color.hpp"

namespace hclpal {

enum class LegacyKind { Rainbow, Heat, Terrain, Topo, Cm, Gray, R3 };

LegacyKind parse_legacy_kind(std::string_view token);
std::string_view to_string(LegacyKind kind) noexcept;

/// Kind-specific knobs of the classic generators. Unset fields use the
/// classic defaults: rainbow s = v = 1, start = 0, end = max(1, n-1)/n;
/// gray start = 0.3, end = 0.9, gamma = 2.2.
struct LegacyOptions {
    std::optional<double> saturation;
    std::optional<double> value;
    std::optional<double> start;
    std::optional<double> end;
    std::optional<double> gamma;
};

/// HSV (all components in [0,1]) to sRGB.
Color hsv_to_srgb(double h, double s, double v);

std::vector<Color> legacy_palette(LegacyKind kind, int n, const LegacyOptions& opts = {});

enum class RampSpace { Srgb, Luv };

RampSpace parse_ramp_space(std::string_view token);

/// Piecewise-linear interpolation through the anchors at n evenly spaced
/// positions. Positions that coincide with an anchor return it unchanged.
std::vector<Color> ramp(const std::vector<Color>& anchors, int n, RampSpace space = RampSpace::Srgb);

}  // namespace hclpal
