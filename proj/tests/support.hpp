#pragma once

#include <cmath>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "hclpal/color.hpp"

namespace test {

inline std::vector<std::string> hexes(const std::vector<hclpal::Color>& colors) {
    std::vector<std::string> out;
    for (const auto& c : colors) out.push_back(hclpal::format_hex(c));
    return out;
}

inline int max_channel_diff(const hclpal::Color& a, const hclpal::Color& b) {
    const auto x = a.bytes();
    const auto y = b.bytes();
    int d = 0;
    for (int k = 0; k < 3; ++k) d = std::max(d, std::abs(x[k] - y[k]));
    return d;
}

inline std::vector<hclpal::Color> random_colors(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> byte(0, 255);
    std::vector<hclpal::Color> out;
    for (std::size_t k = 0; k < n; ++k) {
        out.push_back(hclpal::Color::from_bytes(static_cast<std::uint8_t>(byte(rng)), static_cast<std::uint8_t>(byte(rng)),
                                                static_cast<std::uint8_t>(byte(rng))));
    }
    return out;
}

/// CIE 1976 L*u*v* evaluated directly from the published formulas, with the
/// four-decimal sRGB primaries matrix. Kept separate from the library chain.
struct OracleLuv {
    double l, u, v;
};

inline OracleLuv oracle_luv(int r8, int g8, int b8) {
    const auto lin = [](int c8) {
        const double c = c8 / 255.0;
        return c <= 0.04045 ? c / 12.92 : std::pow((c + 0.055) / 1.055, 2.4);
    };
    const double r = lin(r8), g = lin(g8), b = lin(b8);
    const double X = 100 * (0.4124564 * r + 0.3575761 * g + 0.1804375 * b);
    const double Y = 100 * (0.2126729 * r + 0.7151522 * g + 0.0721750 * b);
    const double Z = 100 * (0.0193339 * r + 0.1191920 * g + 0.9503041 * b);
    const double Xn = 95.047, Yn = 100.0, Zn = 108.883;
    const double yr = Y / Yn;
    const double L = yr > std::pow(6.0 / 29.0, 3) ? 116 * std::cbrt(yr) - 16 : std::pow(29.0 / 3.0, 3) * yr;
    const double d = X + 15 * Y + 3 * Z, dn = Xn + 15 * Yn + 3 * Zn;
    const double up = d > 0 ? 4 * X / d : 0, vp = d > 0 ? 9 * Y / d : 0;
    return {L, 13 * L * (up - 4 * Xn / dn), 13 * L * (vp - 9 * Yn / dn)};
}

}  // namespace test
