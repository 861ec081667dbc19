#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hclpal {

/// An sRGB color with nonlinear channels in [0,1] and an optional alpha.
class Color {
public:
    constexpr Color() = default;

    /// Throws DomainError unless every channel (and alpha, if given) is in [0,1].
    Color(double r, double g, double b, std::optional<double> alpha = std::nullopt);

    static Color from_bytes(std::uint8_t r, std::uint8_t g, std::uint8_t b,
                            std::optional<std::uint8_t> alpha = std::nullopt);

    double r() const noexcept { return r_; }
    double g() const noexcept { return g_; }
    double b() const noexcept { return b_; }
    std::optional<double> alpha() const noexcept { return alpha_; }

    Color with_alpha(std::optional<double> alpha) const;
    Color opaque() const noexcept;

    /// Channels quantized to 8 bits.
    std::array<int, 3> bytes() const noexcept;

    /// The color its hex code denotes: every channel, alpha included, snapped to 8 bits.
    Color quantized() const noexcept;

    friend bool operator==(const Color&, const Color&) = default;

private:
    double r_ = 0.0;
    double g_ = 0.0;
    double b_ = 0.0;
    std::optional<double> alpha_;
};

/// Polar CIELUV coordinate. Hue is absent when chroma is below kHueEpsilon.
struct HclCoord {
    std::optional<double> h;
    double c = 0.0;
    double l = 0.0;

    double hue_or_zero() const noexcept { return h.value_or(0.0); }
};

struct Luv {
    double l = 0.0;
    double u = 0.0;
    double v = 0.0;
};

struct Xyz {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

struct LinearRgb {
    double r = 0.0;
    double g = 0.0;
    double b = 0.0;
};

struct WhitePoint {
    double x;
    double y;
    double z;
};

inline constexpr WhitePoint kD65{95.047, 100.0, 108.883};
inline constexpr double kHueEpsilon = 1e-8;

/// round(255 x) with halves rounded up, clamped to [0,255].
int quantize(double channel) noexcept;

Color parse_hex(std::string_view text);
std::string format_hex(const Color& color);

/// Hex code or one of the few classic color names used by the built-in palettes.
Color parse_color(std::string_view text);
std::optional<Color> named_color(std::string_view name);

/// Colors separated by commas and/or whitespace. Throws ParseError on an empty list.
std::vector<Color> parse_color_list(std::string_view text);

double srgb_to_linear(double channel) noexcept;
double linear_to_srgb(double channel) noexcept;

LinearRgb to_linear(const Color& color) noexcept;
Xyz linear_to_xyz(const LinearRgb& rgb) noexcept;
LinearRgb xyz_to_linear(const Xyz& xyz) noexcept;
Luv xyz_to_luv(const Xyz& xyz) noexcept;
Xyz luv_to_xyz(const Luv& luv) noexcept;

Luv srgb_to_luv(const Color& color) noexcept;
HclCoord luv_to_hcl(const Luv& luv) noexcept;
Luv hcl_to_luv(const HclCoord& coord) noexcept;

HclCoord srgb_to_hcl(const Color& color) noexcept;

/// Encodes linear RGB as sRGB. Out-of-gamut input is clamped when fixup is set,
/// otherwise the result is empty.
std::optional<Color> encode_linear(const LinearRgb& rgb, bool fixup) noexcept;

std::optional<Color> luv_to_srgb(const Luv& luv, bool fixup = true) noexcept;
std::optional<Color> hcl_to_srgb(const HclCoord& coord, bool fixup = true) noexcept;

/// Euclidean distance in CIELUV.
double distance(const Luv& a, const Luv& b) noexcept;
double distance(const Color& a, const Color& b) noexcept;

}  // namespace hclpal
