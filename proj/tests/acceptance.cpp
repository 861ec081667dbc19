// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hclpal/analysis.hpp"
#include "hclpal/cli.hpp"
#include "hclpal/cvd.hpp"
#include "hclpal/registry.hpp"
#include "hclpal/render.hpp"

using namespace hclpal;

namespace {

// Tolerances.
constexpr int kGoldenChannelSlack = 0;        // exact hex match
constexpr double kSymmetryTolerance = 1.0;    // chroma and luminance units
constexpr int kGrayFixedPointSlack = 1;       // 1/255 per channel
constexpr int kRoundTripSlack = 1;            // 1/255 per channel
constexpr int kRoundTripSamples = 1000;
constexpr double kDeutanOkabeIto5 = 19.0700;  // frozen from the implementation
constexpr double kDeutanR3_5 = 11.6253;
constexpr double kPinTolerance = 1e-3;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (ok) return;
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
};

std::vector<std::string> hexes(const std::vector<Color>& colors) {
    std::vector<std::string> out;
    for (const auto& c : colors) out.push_back(format_hex(c));
    return out;
}

std::vector<std::string> hexes(const std::vector<NamedColor>& colors) { return hexes(plain_colors(colors)); }

int channel_diff(const Color& a, const Color& b) {
    const auto x = a.bytes(), y = b.bytes();
    int d = 0;
    for (int k = 0; k < 3; ++k) d = std::max(d, std::abs(int(x[k]) - int(y[k])));
    return d;
}

bool close_hexes(const std::vector<Color>& got, const std::vector<std::string>& want) {
    if (got.size() != want.size()) return false;
    for (std::size_t k = 0; k < got.size(); ++k) {
        if (channel_diff(got[k], parse_hex(want[k])) > kGoldenChannelSlack) return false;
    }
    return true;
}

bool monotone(Shape s) { return s == Shape::Increasing || s == Shape::Decreasing; }

std::string run_cli(const std::vector<std::string>& args, int& code) {
    std::ostringstream out, err;
    code = cli::run(args, out, err);
    return out.str();
}

Outcome golden_hexes() {
    Outcome o;
    o.require(close_hexes(hcl_colors(8, "Blues 3"), {"#00366C", "#005893", "#007BC0", "#5E9BD8", "#91BAEB", "#BAD5FA",
                                                     "#DDECFF", "#F9F9F9"}),
              "Blues 3");
    o.require(close_hexes(hcl_colors(5, "YlGnBu"), {"#26185F", "#007EB3", "#18BDB0", "#BCE9C5", "#FCFFDD"}), "YlGnBu");
    o.require(close_hexes(hcl_colors(9, "Purple-Green"), {"#492050", "#90529C", "#C490CF", "#E4CAE9", "#F1F1F1",
                                                          "#BCDABC", "#72B173", "#2C792D", "#023903"}),
              "Purple-Green");
    return o;
}

Outcome fixed_catalogs() {
    Outcome o;
    const auto oi = palette_colors();
    o.require(hexes(oi) == std::vector<std::string>{"#000000", "#E69F00", "#56B4E9", "#009E73", "#F0E442", "#0072B2",
                                                    "#D55E00", "#CC79A7", "#999999"},
              "Okabe-Ito default");
    o.require(hexes(palette_colors(4, "R4")) == std::vector<std::string>{"#000000", "#DF536B", "#61D04F", "#2297E6"},
              "R4 prefix");
    const auto ten = palette_colors(10, "Okabe-Ito", true);
    o.require(ten.size() == 10 && format_hex(ten[9].color) == "#000000", "recycled tenth color");
    o.require(list_palettes(Scope::Fixed) ==
                  std::vector<std::string>{"R3", "R4", "ggplot2", "Okabe-Ito", "Accent", "Dark 2", "Paired",
                                           "Pastel 1", "Pastel 2", "Set 1", "Set 2", "Set 3", "Tableau 10",
                                           "Classic Tableau", "Polychrome 36", "Alphabet"},
              "fixed names");
    return o;
}

Outcome catalog_breadth() {
    static const char* gallery[] = {
        "Pastel 1", "Dark 2", "Dark 3", "Set 2", "Set 3", "Warm", "Cold", "Harmonic", "Dynamic", "Grays",
        "Light Grays", "Blues 2", "Blues 3", "Purples 2", "Purples 3", "Reds 2", "Reds 3", "Greens 2", "Greens 3",
        "Oslo", "Purple-Blue", "Red-Purple", "Red-Blue", "Purple-Orange", "Purple-Yellow", "Blue-Yellow",
        "Green-Yellow", "Red-Yellow", "Heat", "Heat 2", "Terrain", "Terrain 2", "Viridis", "Plasma", "Inferno",
        "Rocket", "Mako", "Dark Mint", "Mint", "BluGrn", "Teal", "TealGrn", "Emrld", "BluYl", "ag_GrnYl", "Peach",
        "PinkYl", "Burg", "BurgYl", "RedOr", "OrYel", "Purp", "PurpOr", "Sunset", "Magenta", "SunsetDark",
        "ag_Sunset", "BrwnYl", "YlOrRd", "YlOrBr", "OrRd", "Oranges", "YlGn", "YlGnBu", "Reds", "RdPu", "PuRd",
        "Purples", "PuBuGn", "PuBu", "Greens", "BuGn", "GnBu", "BuPu", "Blues", "Lajolla", "Turku", "Hawaii",
        "Batlow", "Blue-Red", "Blue-Red 2", "Blue-Red 3", "Red-Green", "Purple-Green", "Purple-Brown",
        "Green-Brown", "Blue-Yellow 2", "Blue-Yellow 3", "Green-Orange", "Cyan-Magenta", "Tropic", "Broc", "Cork",
        "Vik", "Berlin", "Lisbon", "Tofino", "ArmyRose", "Earth", "Fall", "Geyser", "TealRose", "Temps", "PuOr",
        "RdBu", "RdGy", "PiYG", "PRGn", "BrBG", "RdYlBu", "RdYlGn", "Spectral", "Zissou 1", "Cividis", "Roma"};
    Outcome o;
    const auto& cat = Catalog::builtin();
    o.require(cat.hcl().size() >= 100, "only " + std::to_string(cat.hcl().size()) + " hcl palettes");
    for (const char* name : gallery) o.require(cat.try_find(Scope::Hcl, name) != nullptr, std::string("missing ") + name);
    if (o.pass) o.detail = std::to_string(cat.hcl().size()) + " hcl palettes";
    return o;
}

Outcome shape_classification() {
    Outcome o;
    const auto blues = classify_shape(spectrum(hcl_colors(8, "Blues 3")));
    o.require(blues.hue == Shape::Constant, std::string("Blues 3 hue ") + std::string(to_string(blues.hue)));
    o.require(blues.chroma == Shape::Triangular, std::string("Blues 3 chroma ") + std::string(to_string(blues.chroma)));
    o.require(monotone(blues.luminance), "Blues 3 luminance");

    const auto ylgnbu = classify_shape(spectrum(hcl_colors(9, "YlGnBu")));
    o.require(monotone(ylgnbu.hue), std::string("YlGnBu hue ") + std::string(to_string(ylgnbu.hue)));
    o.require(monotone(ylgnbu.luminance), "YlGnBu luminance");

    const auto pg = spectrum(hcl_colors(9, "Purple-Green"));
    for (std::size_t k = 0; k < pg.size() / 2; ++k) {
        const auto m = pg.size() - 1 - k;
        o.require(std::abs(pg.chroma[k] - pg.chroma[m]) <= kSymmetryTolerance &&
                      std::abs(pg.luminance[k] - pg.luminance[m]) <= kSymmetryTolerance,
                  "Purple-Green asymmetric at " + std::to_string(k));
    }

    int checked = 0;
    for (const auto& e : Catalog::builtin().hcl()) {
        if (e.kind != PaletteKind::Sequential) continue;
        ++checked;
        const auto shape = classify_shape(spectrum(hcl_colors(16, e.name)));
        o.require(monotone(shape.luminance), e.name + " luminance " + std::string(to_string(shape.luminance)));
    }
    if (o.pass) o.detail = std::to_string(checked) + " sequential palettes monotone at n=16";
    return o;
}

Outcome cvd() {
    Outcome o;
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> byte(0, 255);
    std::vector<Color> sample;
    for (int k = 0; k < 500; ++k) {
        sample.push_back(Color::from_bytes(std::uint8_t(byte(rng)), std::uint8_t(byte(rng)), std::uint8_t(byte(rng))));
    }
    for (CvdKind kind : {CvdKind::Deutan, CvdKind::Protan, CvdKind::Tritan}) {
        const auto same = simulate(sample, kind, 0.0);
        bool identical = true;
        for (std::size_t k = 0; k < sample.size(); ++k) identical = identical && same[k] == sample[k];
        o.require(identical, std::string("severity 0 not identity for ") + std::string(to_string(kind)));

        std::vector<Color> grays;
        for (int g = 0; g <= 255; ++g) grays.push_back(Color::from_bytes(std::uint8_t(g), std::uint8_t(g), std::uint8_t(g)));
        for (double sev : {0.3, 0.7, 1.0}) {
            const auto sim = simulate(grays, kind, sev);
            int worst = 0;
            for (std::size_t k = 0; k < grays.size(); ++k) worst = std::max(worst, channel_diff(grays[k], sim[k]));
            o.require(worst <= kGrayFixedPointSlack, std::string("gray moved under ") + std::string(to_string(kind)));
        }
    }
    const double ok = safety_check(plain_colors(palette_colors(5, "Okabe-Ito")))[Vision::Deutan].min_distance;
    const double r3 = safety_check(plain_colors(palette_colors(5, "R3")))[Vision::Deutan].min_distance;
    o.require(ok > r3, "deutan ordering");
    o.require(std::abs(ok - kDeutanOkabeIto5) < kPinTolerance && std::abs(r3 - kDeutanR3_5) < kPinTolerance,
              "deutan pins drifted");
    char buf[96];
    std::snprintf(buf, sizeof buf, "deutan min distance Okabe-Ito %.4f > R3 %.4f", ok, r3);
    if (o.pass) o.detail = buf;
    return o;
}

Outcome conversion() {
    Outcome o;
    std::mt19937 rng(20201);
    std::uniform_int_distribution<int> byte(0, 255);
    int worst = 0;
    for (int k = 0; k < kRoundTripSamples; ++k) {
        const auto c = Color::from_bytes(std::uint8_t(byte(rng)), std::uint8_t(byte(rng)), std::uint8_t(byte(rng)));
        const auto back = hcl_to_srgb(srgb_to_hcl(parse_hex(format_hex(c))), true);
        worst = back ? std::max(worst, channel_diff(c, *back)) : 256;
    }
    o.require(worst <= kRoundTripSlack, "round trip off by " + std::to_string(worst));
    const auto white = srgb_to_hcl(parse_hex("#FFFFFF"));
    const auto black = srgb_to_hcl(parse_hex("#000000"));
    o.require(std::abs(white.l - 100.0) < 1e-9 && !white.h, "white");
    o.require(black.l == 0.0 && black.c == 0.0 && !black.h, "black");
    o.require(format_hex(*hcl_to_srgb({std::nullopt, 0.0, 100.0})) == "#FFFFFF", "white inverse");
    o.require(format_hex(*hcl_to_srgb({std::nullopt, 0.0, 0.0})) == "#000000", "black inverse");
    if (o.pass) o.detail = "worst channel error " + std::to_string(worst) + "/255 over " +
                           std::to_string(kRoundTripSamples) + " colors";
    return o;
}

Outcome determinism() {
    Outcome o;
    const std::vector<std::vector<std::string>> invocations = {
        {"colors", "Blues 3", "-n", "8"},
        {"colors", "Okabe-Ito", "--format", "json"},
        {"swatch", "Okabe-Ito", "Purple-Green", "--cvd", "all"},
        {"swatch", "YlGnBu", "--style", "circles"},
        {"specplot", "Purple-Green", "-n", "9"},
    };
    for (const auto& args : invocations) {
        int c1 = 0, c2 = 0;
        const auto a = run_cli(args, c1), b = run_cli(args, c2);
        o.require(c1 == 0 && c2 == 0 && !a.empty() && a == b, "differs: " + args[0] + " " + args[1]);
    }
    const auto spec = specplot_svg(spectrum(hcl_colors(9, "Purple-Green")));
    o.require(spec == specplot_svg(spectrum(hcl_colors(9, "Purple-Green"))), "specplot snapshot");
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"golden-hexes", golden_hexes},
        {"fixed-catalogs", fixed_catalogs},
        {"catalog-breadth", catalog_breadth},
        {"shape-classification", shape_classification},
        {"cvd", cvd},
        {"conversion", conversion},
        {"determinism", determinism},
    };
    int failures = 0;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        failures += !o.pass;
        if (o.detail.empty()) {
            std::printf("%s %s\n", o.pass ? "PASS" : "FAIL", name);
        } else {
            std::printf("%s %-22s %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%d/%zu criteria passed in %.2f s\n", int(criteria.size()) - failures, criteria.size(), secs);
    return failures == 0 ? 0 : 1;
}
