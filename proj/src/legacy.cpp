#include "hclpal/legacy.hpp"

#include <cmath>
#include <string>

#include "hclpal/errors.hpp"

namespace hclpal {

namespace {

// seq(from, to, length.out = n)
std::vector<double> linspace(double from, double to, int n) {
    std::vector<double> out(static_cast<std::size_t>(std::max(n, 0)));
    for (int k = 0; k < n; ++k) out[k] = n == 1 ? from : from + (to - from) * k / (n - 1);
    return out;
}

void check_n(int n) {
    if (n < 1) throw DomainError("number of colors must be at least 1");
}

void check_unit_option(std::optional<double> v, const char* what) {
    if (v && !(*v >= 0.0 && *v <= 1.0)) throw DomainError(std::string(what) + " must be in [0,1]");
}

void append_hsv(std::vector<Color>& out, const std::vector<double>& h, const std::vector<double>& s,
                const std::vector<double>& v) {
    for (std::size_t k = 0; k < h.size(); ++k) out.push_back(hsv_to_srgb(h[k], s[k], v[k]));
}

std::vector<Color> rainbow(int n, double s, double v, double start, double end) {
    // Hues at (k-1)/n of the circle by default; wrap when end < start.
    std::vector<Color> out;
    const auto hues = linspace(start, (start > end ? 1.0 : 0.0) + end, n);
    for (double h : hues) out.push_back(hsv_to_srgb(h - std::floor(h), s, v));
    return out;
}

std::vector<Color> heat(int n) {
    const int j = n / 4;
    const int i = n - j;
    auto out = rainbow(i, 1.0, 1.0, 0.0, 1.0 / 6.0);
    if (j > 0) {
        const auto s = linspace(1.0 - 1.0 / (2 * j), 1.0 / (2 * j), j);
        append_hsv(out, std::vector<double>(j, 1.0 / 6.0), s, std::vector<double>(j, 1.0));
    }
    return out;
}

std::vector<Color> terrain(int n) {
    const int k = n / 2;
    std::vector<Color> out;
    append_hsv(out, linspace(4.0 / 12, 2.0 / 12, k), linspace(1.0, 1.0, k), linspace(0.65, 0.9, k));
    auto tail = [&](double a, double b) {
        auto seq = linspace(a, b, n - k + 1);
        seq.erase(seq.begin());
        return seq;
    };
    append_hsv(out, tail(2.0 / 12, 0.0), tail(1.0, 0.0), tail(0.9, 0.95));
    return out;
}

std::vector<Color> topo(int n) {
    const int j = n / 3;
    const int k = n / 3;
    const int i = n - j - k;
    std::vector<Color> out;
    append_hsv(out, linspace(43.0 / 60, 31.0 / 60, i), std::vector<double>(i, 1.0), std::vector<double>(i, 1.0));
    append_hsv(out, linspace(23.0 / 60, 11.0 / 60, j), std::vector<double>(j, 1.0), std::vector<double>(j, 1.0));
    append_hsv(out, linspace(10.0 / 60, 6.0 / 60, k), linspace(1.0, 0.3, k), std::vector<double>(k, 1.0));
    return out;
}

std::vector<Color> cm(int n) {
    const bool even = n % 2 == 0;
    const int k = n / 2;
    const int l1 = k + 1 - (even ? 1 : 0);
    const int l2 = n - k + (even ? 1 : 0);
    std::vector<Color> out;
    if (l1 > 0) {
        append_hsv(out, std::vector<double>(l1, 6.0 / 12), linspace(0.5, even ? 0.5 / k : 0.0, l1),
                   std::vector<double>(l1, 1.0));
    }
    if (l2 > 1) {
        auto s = linspace(0.0, 0.5, l2);
        s.erase(s.begin());
        append_hsv(out, std::vector<double>(l2 - 1, 10.0 / 12), s, std::vector<double>(l2 - 1, 1.0));
    }
    return out;
}

std::vector<Color> gray(int n, double start, double end, double gamma) {
    std::vector<Color> out;
    for (double level : linspace(std::pow(start, gamma), std::pow(end, gamma), n)) {
        const double g = std::pow(level, 1.0 / gamma);
        out.emplace_back(g, g, g);
    }
    return out;
}

std::vector<Color> r3(int n) {
    static constexpr std::string_view kNames[] = {"black", "red",     "green3", "blue",
                                                  "cyan",  "magenta", "yellow", "gray"};
    std::vector<Color> out;
    for (int k = 0; k < n; ++k) out.push_back(*named_color(kNames[k % 8]));
    return out;
}

}  // namespace

LegacyKind parse_legacy_kind(std::string_view token) {
    if (token == "rainbow") return LegacyKind::Rainbow;
    if (token == "heat") return LegacyKind::Heat;
    if (token == "terrain") return LegacyKind::Terrain;
    if (token == "topo") return LegacyKind::Topo;
    if (token == "cm") return LegacyKind::Cm;
    if (token == "gray" || token == "grey") return LegacyKind::Gray;
    if (token == "R3" || token == "r3") return LegacyKind::R3;
    throw DomainError("unknown legacy palette '" + std::string(token) +
                      "' (expected rainbow, heat, terrain, topo, cm, gray or R3)");
}

std::string_view to_string(LegacyKind kind) noexcept {
    switch (kind) {
        case LegacyKind::Rainbow: return "rainbow";
        case LegacyKind::Heat: return "heat";
        case LegacyKind::Terrain: return "terrain";
        case LegacyKind::Topo: return "topo";
        case LegacyKind::Cm: return "cm";
        case LegacyKind::Gray: return "gray";
        case LegacyKind::R3: return "R3";
    }
    return "unknown";
}

Color hsv_to_srgb(double h, double s, double v) {
    if (!(h >= 0.0 && h <= 1.0) || !(s >= 0.0 && s <= 1.0) || !(v >= 0.0 && v <= 1.0)) {
        throw DomainError("HSV components out of range");
    }
    double sector = 0.0;
    const double f = std::modf(h * 6.0, &sector);
    const int i = static_cast<int>(sector) % 6;
    const double p = v * (1.0 - s);
    const double q = v * (1.0 - s * f);
    const double t = v * (1.0 - s * (1.0 - f));
    switch (i) {
        case 0: return Color(v, t, p);
        case 1: return Color(q, v, p);
        case 2: return Color(p, v, t);
        case 3: return Color(p, q, v);
        case 4: return Color(t, p, v);
        default: return Color(v, p, q);
    }
}

namespace {

std::vector<Color> generate(LegacyKind kind, int n, const LegacyOptions& opts) {
    switch (kind) {
        case LegacyKind::Rainbow: {
            check_unit_option(opts.saturation, "saturation");
            check_unit_option(opts.value, "value");
            check_unit_option(opts.start, "start");
            check_unit_option(opts.end, "end");
            const double end = opts.end.value_or(static_cast<double>(std::max(1, n - 1)) / n);
            return rainbow(n, opts.saturation.value_or(1.0), opts.value.value_or(1.0), opts.start.value_or(0.0),
                           end);
        }
        case LegacyKind::Heat: return heat(n);
        case LegacyKind::Terrain: return terrain(n);
        case LegacyKind::Topo: return topo(n);
        case LegacyKind::Cm: return cm(n);
        case LegacyKind::Gray: {
            check_unit_option(opts.start, "start");
            check_unit_option(opts.end, "end");
            const double gamma = opts.gamma.value_or(2.2);
            if (!(gamma > 0.0) || !std::isfinite(gamma)) throw DomainError("gamma must be positive");
            return gray(n, opts.start.value_or(0.3), opts.end.value_or(0.9), gamma);
        }
        case LegacyKind::R3: return r3(n);
    }
    throw DomainError("unknown legacy palette");
}

}  // namespace

std::vector<Color> legacy_palette(LegacyKind kind, int n, const LegacyOptions& opts) {
    check_n(n);
    auto out = generate(kind, n, opts);
    for (auto& c : out) c = c.quantized();
    return out;
}

RampSpace parse_ramp_space(std::string_view token) {
    if (token == "srgb" || token == "rgb") return RampSpace::Srgb;
    if (token == "luv") return RampSpace::Luv;
    throw DomainError("invalid ramp space '" + std::string(token) + "' (expected srgb or luv)");
}

std::vector<Color> ramp(const std::vector<Color>& anchors, int n, RampSpace space) {
    if (anchors.size() < 2) throw DomainError("ramp needs at least two anchor colors");
    check_n(n);
    const auto segments = static_cast<double>(anchors.size() - 1);

    std::vector<Luv> luv;
    if (space == RampSpace::Luv) {
        for (const auto& a : anchors) luv.push_back(srgb_to_luv(a));
    }

    std::vector<Color> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double pos = n == 1 ? 0.0 : segments * k / (n - 1);
        const double seg = std::floor(pos);
        const double frac = pos - seg;
        const auto lo = static_cast<std::size_t>(seg);
        if (frac == 0.0) {
            out.push_back(anchors[lo]);
            continue;
        }
        const auto hi = lo + 1;
        const auto lerp = [frac](double a, double b) { return a + (b - a) * frac; };
        if (space == RampSpace::Srgb) {
            const auto& a = anchors[lo];
            const auto& b = anchors[hi];
            out.emplace_back(lerp(a.r(), b.r()), lerp(a.g(), b.g()), lerp(a.b(), b.b()));
        } else {
            const Luv mixed{lerp(luv[lo].l, luv[hi].l), lerp(luv[lo].u, luv[hi].u), lerp(luv[lo].v, luv[hi].v)};
            out.push_back(*luv_to_srgb(mixed, true));
        }
    }
    return out;
}

}  // namespace hclpal
