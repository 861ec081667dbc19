#include "hclpal/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "hclpal/errors.hpp"

namespace hclpal {

namespace {

// Fixed two-decimal formatting; -0.00 is printed as 0.00.
std::string num(double x) {
    if (std::fabs(x) < 0.005) x = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

std::string escape(std::string_view text) {
    std::string out;
    for (char ch : text) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out.push_back(ch);
        }
    }
    return out;
}

std::string fill_attrs(const Color& c) {
    std::string out = "fill=\"" + format_hex(c.opaque()) + "\"";
    if (c.alpha()) out += " fill-opacity=\"" + num(*c.alpha()) + "\"";
    return out;
}

void open_svg(std::ostringstream& os, double width, double height) {
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\""
       << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n";
}

}  // namespace

SwatchStyle parse_swatch_style(std::string_view token) {
    if (token == "rects" || token == "rect") return SwatchStyle::Rects;
    if (token == "circles" || token == "circle") return SwatchStyle::Circles;
    throw DomainError("invalid swatch style '" + std::string(token) + "' (expected rects or circles)");
}

std::vector<SwatchRow> with_cvd_rows(const std::vector<SwatchRow>& rows, std::span<const CvdSpec> specs) {
    std::vector<SwatchRow> out;
    for (const auto& row : rows) {
        out.push_back(row);
        for (const auto& spec : specs) {
            std::string label = row.label + " (" + std::string(to_string(spec.kind));
            if (spec.severity < 1.0) label += " " + num(spec.severity);
            out.push_back(SwatchRow{label + ")", simulate(row.colors, spec.kind, spec.severity)});
        }
    }
    return out;
}

std::string swatch_svg(const SwatchSpec& spec) {
    const auto& g = spec.geometry;
    if (spec.rows.empty()) throw DomainError("swatch needs at least one row");
    if (!(g.width > 0 && g.height > 0 && g.margin >= 0 && g.label_width >= 0)) {
        throw DomainError("swatch geometry must be positive");
    }
    std::set<std::string> labels;
    std::size_t widest = 0;
    for (const auto& row : spec.rows) {
        if (row.colors.empty()) throw DomainError("swatch row '" + row.label + "' has no colors");
        if (!labels.insert(row.label).second) throw DomainError("duplicate swatch label '" + row.label + "'");
        widest = std::max(widest, row.colors.size());
    }

    const double x0 = g.margin + g.label_width;
    const double total_w = x0 + static_cast<double>(widest) * g.width + g.margin;
    const double total_h = 2 * g.margin + static_cast<double>(spec.rows.size()) * (g.height + g.margin) - g.margin;

    std::ostringstream os;
    open_svg(os, total_w, total_h);
    for (std::size_t r = 0; r < spec.rows.size(); ++r) {
        const auto& row = spec.rows[r];
        const double y = g.margin + static_cast<double>(r) * (g.height + g.margin);
        os << "<g class=\"swatch-row\" data-label=\"" << escape(row.label) << "\">\n";
        if (g.label_width > 0) {
            os << "<text x=\"" << num(g.margin) << "\" y=\"" << num(y + g.height / 2) << "\" font-family=\"sans-serif\""
               << " font-size=\"12.00\" dominant-baseline=\"middle\">" << escape(row.label) << "</text>\n";
        }
        for (std::size_t k = 0; k < row.colors.size(); ++k) {
            const double x = x0 + static_cast<double>(k) * g.width;
            const auto& c = row.colors[k];
            if (spec.style == SwatchStyle::Rects) {
                os << "<rect x=\"" << num(x) << "\" y=\"" << num(y) << "\" width=\"" << num(g.width) << "\" height=\""
                   << num(g.height) << "\" " << fill_attrs(c) << "/>\n";
            } else {
                const double radius = 0.45 * std::min(g.width, g.height);
                os << "<circle cx=\"" << num(x + g.width / 2) << "\" cy=\"" << num(y + g.height / 2) << "\" r=\""
                   << num(radius) << "\" " << fill_attrs(c) << "/>\n";
            }
        }
        os << "</g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string specplot_svg(const SpectrumPath& path, bool labels, const SpecplotGeometry& g) {
    const std::size_t n = path.size();
    if (n < 2 || path.hue.size() != n || path.chroma.size() != n || path.luminance.size() != n) {
        throw DomainError("spectrum path needs at least two entries of equal length");
    }

    // Hue is drawn from its first defined value taken mod 360, divided by 3.6.
    std::vector<std::optional<double>> hue(n);
    double shift = 0.0;
    for (const auto& h : path.hue) {
        if (h) {
            shift = *h - std::fmod(std::fmod(*h, 360.0) + 360.0, 360.0);
            break;
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        if (path.hue[k]) hue[k] = (*path.hue[k] - shift) / 3.6;
    }

    double lo = 0.0, hi = 100.0;
    for (std::size_t k = 0; k < n; ++k) {
        lo = std::min({lo, path.chroma[k], path.luminance[k], hue[k].value_or(0.0)});
        hi = std::max({hi, path.chroma[k], path.luminance[k], hue[k].value_or(0.0)});
    }
    lo = std::floor(lo / 20.0) * 20.0;
    hi = std::ceil(hi / 20.0) * 20.0;

    const double plot_w = g.width - 2 * g.margin;
    const double top = g.margin;
    const double total_h = top + g.plot_height + g.margin / 2 + g.strip_height + g.margin;
    const auto px = [&](std::size_t k) { return g.margin + plot_w * static_cast<double>(k) / static_cast<double>(n - 1); };
    const auto py = [&](double v) { return top + g.plot_height * (hi - v) / (hi - lo); };

    std::ostringstream os;
    open_svg(os, g.width, total_h);
    for (double v = lo; v <= hi + 1e-9; v += 20.0) {
        os << "<polyline class=\"grid\" points=\"" << num(g.margin) << ',' << num(py(v)) << ' ' << num(g.margin + plot_w)
           << ',' << num(py(v)) << "\" style=\"fill:none\" stroke=\"#E5E5E5\"/>\n";
        if (labels) {
            os << "<text x=\"" << num(g.margin - 6) << "\" y=\"" << num(py(v)) << "\" font-family=\"sans-serif\""
               << " font-size=\"10.00\" text-anchor=\"end\" dominant-baseline=\"middle\">" << num(v) << "</text>\n";
        }
    }

    const auto polyline = [&](const char* cls, const char* stroke, const std::vector<std::optional<double>>& values) {
        std::vector<std::string> runs;
        std::string pts;
        for (std::size_t k = 0; k <= n; ++k) {
            if (k < n && values[k]) {
                if (!pts.empty()) pts.push_back(' ');
                pts += num(px(k)) + ',' + num(py(*values[k]));
            } else if (!pts.empty()) {
                runs.push_back(std::move(pts));
                pts.clear();
            }
        }
        for (const auto& run : runs) {
            os << "<polyline class=\"" << cls << "\" points=\"" << run << "\" style=\"fill:none\" stroke=\"" << stroke
               << "\" stroke-width=\"2.00\"/>\n";
        }
    };
    const auto wrap = [](const std::vector<double>& v) {
        return std::vector<std::optional<double>>(v.begin(), v.end());
    };
    polyline("hue", "#B2182B", hue);
    polyline("chroma", "#2166AC", wrap(path.chroma));
    polyline("luminance", "#000000", wrap(path.luminance));

    const double strip_y = top + g.plot_height + g.margin / 2;
    const double cell = plot_w / static_cast<double>(n);
    for (std::size_t k = 0; k < n; ++k) {
        os << "<rect x=\"" << num(g.margin + cell * static_cast<double>(k)) << "\" y=\"" << num(strip_y) << "\" width=\""
           << num(cell) << "\" height=\"" << num(g.strip_height) << "\" " << fill_attrs(path.colors[k]) << "/>\n";
    }

    if (labels) {
        const char* names[] = {"Hue / 3.6", "Chroma", "Luminance"};
        const char* strokes[] = {"#B2182B", "#2166AC", "#000000"};
        for (int k = 0; k < 3; ++k) {
            const double x = g.margin + 110.0 * k;
            os << "<text x=\"" << num(x) << "\" y=\"" << num(top - 16) << "\" font-family=\"sans-serif\""
               << " font-size=\"12.00\" fill=\"" << strokes[k] << "\">" << names[k] << "</text>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace hclpal
