#include "hclpal/color.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

#include "hclpal/errors.hpp"

namespace hclpal {

namespace {

using Matrix3 = std::array<std::array<double, 3>, 3>;

// XYZ (Y scaled to 1) to linear sRGB, D65.
constexpr Matrix3 kXyzToRgb{{
    {3.240479, -1.537150, -0.498535},
    {-0.969256, 1.875992, 0.041556},
    {0.055648, -0.204043, 1.057311},
}};

constexpr Matrix3 invert(const Matrix3& m) {
    const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    Matrix3 r{};
    r[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) / det;
    r[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / det;
    r[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / det;
    r[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) / det;
    r[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / det;
    r[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / det;
    r[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) / det;
    r[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / det;
    r[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / det;
    return r;
}

// Inverse of kXyzToRgb with rows rescaled so that RGB white lands exactly on the
// reference white. Keeps grays at zero chroma.
constexpr Matrix3 make_rgb_to_xyz() {
    Matrix3 m = invert(kXyzToRgb);
    const std::array<double, 3> white{kD65.x / kD65.y, 1.0, kD65.z / kD65.y};
    for (std::size_t i = 0; i < 3; ++i) {
        const double sum = m[i][0] + m[i][1] + m[i][2];
        for (auto& v : m[i]) v *= white[i] / sum;
    }
    return m;
}

constexpr Matrix3 kRgbToXyz = make_rgb_to_xyz();

constexpr double kGamma = 2.4;
constexpr double kLinearCutoff = 0.00304;
constexpr double kEncodedCutoff = 12.92 * kLinearCutoff;

constexpr double kWhiteDenom = kD65.x + 15.0 * kD65.y + 3.0 * kD65.z;
constexpr double kWhiteU = 4.0 * kD65.x / kWhiteDenom;
constexpr double kWhiteV = 9.0 * kD65.y / kWhiteDenom;

constexpr double kEpsilonY = 0.008856;
constexpr double kKappa = 903.3;
constexpr double kLuminanceCutoff = 7.999592;

// Channels within half a quantization step of [0,1] still round into range.
constexpr double kGamutSlack = 0.5 / 255.0;

int hex_digit(char ch) {
    if (ch >= '0' && ch <= '9') return ch - '0';
    if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
    if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
    return -1;
}

void check_unit(double v, const char* what) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw DomainError(std::string(what) + " must be in [0,1], got " + std::to_string(v));
    }
}

double clamp_unit(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

Color::Color(double r, double g, double b, std::optional<double> alpha)
    : r_(r), g_(g), b_(b), alpha_(alpha) {
    check_unit(r, "red channel");
    check_unit(g, "green channel");
    check_unit(b, "blue channel");
    if (alpha) check_unit(*alpha, "alpha");
}

Color Color::from_bytes(std::uint8_t r, std::uint8_t g, std::uint8_t b,
                        std::optional<std::uint8_t> alpha) {
    std::optional<double> a;
    if (alpha) a = *alpha / 255.0;
    return Color(r / 255.0, g / 255.0, b / 255.0, a);
}

Color Color::with_alpha(std::optional<double> alpha) const {
    return Color(r_, g_, b_, alpha);
}

Color Color::opaque() const noexcept {
    Color c = *this;
    c.alpha_.reset();
    return c;
}

std::array<int, 3> Color::bytes() const noexcept {
    return {quantize(r_), quantize(g_), quantize(b_)};
}

Color Color::quantized() const noexcept {
    Color c;
    c.r_ = quantize(r_) / 255.0;
    c.g_ = quantize(g_) / 255.0;
    c.b_ = quantize(b_) / 255.0;
    if (alpha_) c.alpha_ = quantize(*alpha_) / 255.0;
    return c;
}

int quantize(double channel) noexcept {
    const double v = std::floor(255.0 * channel + 0.5);
    return static_cast<int>(std::clamp(v, 0.0, 255.0));
}

Color parse_hex(std::string_view text) {
    const auto fail = [&](const char* why) {
        return ParseError("invalid hex color '" + std::string(text) + "': " + why);
    };
    if (text.empty() || text.front() != '#') throw fail("expected leading '#'");
    const auto digits = text.substr(1);
    if (digits.size() != 6 && digits.size() != 8) throw fail("expected 6 or 8 hex digits");
    std::array<std::uint8_t, 4> bytes{};
    for (std::size_t i = 0; i < digits.size(); i += 2) {
        const int hi = hex_digit(digits[i]);
        const int lo = hex_digit(digits[i + 1]);
        if (hi < 0 || lo < 0) throw fail("non-hex digit");
        bytes[i / 2] = static_cast<std::uint8_t>(hi * 16 + lo);
    }
    std::optional<std::uint8_t> alpha;
    if (digits.size() == 8) alpha = bytes[3];
    return Color::from_bytes(bytes[0], bytes[1], bytes[2], alpha);
}

std::string format_hex(const Color& color) {
    static constexpr char kDigits[] = "0123456789ABCDEF";
    std::string out = "#";
    const auto put = [&](double channel) {
        const int v = quantize(channel);
        out.push_back(kDigits[v / 16]);
        out.push_back(kDigits[v % 16]);
    };
    put(color.r());
    put(color.g());
    put(color.b());
    if (color.alpha()) put(*color.alpha());
    return out;
}

std::optional<Color> named_color(std::string_view name) {
    struct Entry {
        std::string_view name;
        std::uint8_t r, g, b;
    };
    static constexpr Entry kNames[] = {
        {"black", 0, 0, 0},          {"white", 255, 255, 255},  {"red", 255, 0, 0},
        {"green3", 0, 205, 0},       {"blue", 0, 0, 255},       {"cyan", 0, 255, 255},
        {"magenta", 255, 0, 255},    {"yellow", 255, 255, 0},   {"gray", 190, 190, 190},
        {"grey", 190, 190, 190},     {"gray62", 158, 158, 158}, {"grey62", 158, 158, 158},
    };
    for (const auto& e : kNames) {
        if (e.name == name) return Color::from_bytes(e.r, e.g, e.b);
    }
    return std::nullopt;
}

Color parse_color(std::string_view text) {
    if (!text.empty() && text.front() == '#') return parse_hex(text);
    if (auto c = named_color(text)) return *c;
    throw ParseError("unknown color '" + std::string(text) + "'");
}

std::vector<Color> parse_color_list(std::string_view text) {
    std::vector<Color> out;
    std::size_t i = 0;
    const auto sep = [&](char ch) { return ch == ',' || std::isspace(static_cast<unsigned char>(ch)); };
    while (i < text.size()) {
        while (i < text.size() && sep(text[i])) ++i;
        const auto start = i;
        while (i < text.size() && !sep(text[i])) ++i;
        if (i > start) out.push_back(parse_color(text.substr(start, i - start)));
    }
    if (out.empty()) throw ParseError("empty color list");
    return out;
}

double srgb_to_linear(double channel) noexcept {
    if (channel > kEncodedCutoff) return std::pow((channel + 0.055) / 1.055, kGamma);
    return channel / 12.92;
}

double linear_to_srgb(double channel) noexcept {
    if (channel > kLinearCutoff) return 1.055 * std::pow(channel, 1.0 / kGamma) - 0.055;
    return 12.92 * channel;
}

LinearRgb to_linear(const Color& color) noexcept {
    return {srgb_to_linear(color.r()), srgb_to_linear(color.g()), srgb_to_linear(color.b())};
}

Xyz linear_to_xyz(const LinearRgb& rgb) noexcept {
    const auto row = [&](std::size_t i) {
        return kD65.y * (kRgbToXyz[i][0] * rgb.r + kRgbToXyz[i][1] * rgb.g + kRgbToXyz[i][2] * rgb.b);
    };
    return {row(0), row(1), row(2)};
}

LinearRgb xyz_to_linear(const Xyz& xyz) noexcept {
    const auto row = [&](std::size_t i) {
        return (kXyzToRgb[i][0] * xyz.x + kXyzToRgb[i][1] * xyz.y + kXyzToRgb[i][2] * xyz.z) / kD65.y;
    };
    return {row(0), row(1), row(2)};
}

Luv xyz_to_luv(const Xyz& xyz) noexcept {
    const double y = xyz.y / kD65.y;
    const double l = y > kEpsilonY ? 116.0 * std::cbrt(y) - 16.0 : kKappa * y;
    const double denom = xyz.x + 15.0 * xyz.y + 3.0 * xyz.z;
    if (denom <= 0.0) return {l, 0.0, 0.0};
    const double up = 4.0 * xyz.x / denom;
    const double vp = 9.0 * xyz.y / denom;
    return {l, 13.0 * l * (up - kWhiteU), 13.0 * l * (vp - kWhiteV)};
}

Xyz luv_to_xyz(const Luv& luv) noexcept {
    if (luv.l <= 0.0) return {};
    const double y = kD65.y * (luv.l > kLuminanceCutoff ? std::pow((luv.l + 16.0) / 116.0, 3.0)
                                                        : luv.l / kKappa);
    const double up = luv.u / (13.0 * luv.l) + kWhiteU;
    const double vp = luv.v / (13.0 * luv.l) + kWhiteV;
    const double x = 9.0 * y * up / (4.0 * vp);
    const double z = -x / 3.0 - 5.0 * y + 3.0 * y / vp;
    return {x, y, z};
}

Luv srgb_to_luv(const Color& color) noexcept {
    return xyz_to_luv(linear_to_xyz(to_linear(color)));
}

HclCoord luv_to_hcl(const Luv& luv) noexcept {
    HclCoord out;
    out.l = luv.l;
    out.c = std::hypot(luv.u, luv.v);
    if (out.c >= kHueEpsilon) {
        double h = std::atan2(luv.v, luv.u) * 180.0 / std::numbers::pi;
        if (h < 0.0) h += 360.0;
        if (h >= 360.0) h -= 360.0;
        out.h = h;
    }
    return out;
}

Luv hcl_to_luv(const HclCoord& coord) noexcept {
    const double h = coord.hue_or_zero() * std::numbers::pi / 180.0;
    return {coord.l, coord.c * std::cos(h), coord.c * std::sin(h)};
}

HclCoord srgb_to_hcl(const Color& color) noexcept { return luv_to_hcl(srgb_to_luv(color)); }

std::optional<Color> encode_linear(const LinearRgb& rgb, bool fixup) noexcept {
    const std::array<double, 3> enc{linear_to_srgb(rgb.r), linear_to_srgb(rgb.g), linear_to_srgb(rgb.b)};
    for (double v : enc) {
        if (!std::isfinite(v)) return std::nullopt;
        if (!fixup && (v < -kGamutSlack || v >= 1.0 + kGamutSlack)) return std::nullopt;
    }
    return Color(clamp_unit(enc[0]), clamp_unit(enc[1]), clamp_unit(enc[2]));
}

std::optional<Color> luv_to_srgb(const Luv& luv, bool fixup) noexcept {
    return encode_linear(xyz_to_linear(luv_to_xyz(luv)), fixup);
}

std::optional<Color> hcl_to_srgb(const HclCoord& coord, bool fixup) noexcept {
    return luv_to_srgb(hcl_to_luv(coord), fixup);
}

double distance(const Luv& a, const Luv& b) noexcept {
    return std::sqrt((a.l - b.l) * (a.l - b.l) + (a.u - b.u) * (a.u - b.u) + (a.v - b.v) * (a.v - b.v));
}

double distance(const Color& a, const Color& b) noexcept {
    return distance(srgb_to_luv(a), srgb_to_luv(b));
}

}  // namespace hclpal
