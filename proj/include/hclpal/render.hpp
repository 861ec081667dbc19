#pragma once

#include <string>
#include <vector>

#include "hclpal/analysis.hpp"
#include "hclpal/color.hpp"
#include "hclpal/cvd.hpp"

namespace hclpal {

enum class SwatchStyle { Rects, Circles };

SwatchStyle parse_swatch_style(std::string_view token);

struct SwatchRow {
    std::string label;
    std::vector<Color> colors;
};

/// Cell size and spacing in SVG user units.
struct SwatchGeometry {
    double width = 40.0;
    double height = 40.0;
    double margin = 10.0;
    double label_width = 120.0;
};

struct SwatchSpec {
    std::vector<SwatchRow> rows;
    SwatchStyle style = SwatchStyle::Rects;
    SwatchGeometry geometry;
};

/// Each row followed by its simulation under every spec, labeled
/// "label (deutan)" or "label (deutan 0.50)" below full severity.
std::vector<SwatchRow> with_cvd_rows(const std::vector<SwatchRow>& rows, std::span<const CvdSpec> specs);

/// One shape per color, rows stacked top to bottom. Throws DomainError for no
/// rows, an empty row, duplicate labels or nonpositive geometry.
std::string swatch_svg(const SwatchSpec& spec);

struct SpecplotGeometry {
    double width = 640.0;
    double plot_height = 320.0;
    double strip_height = 40.0;
    double margin = 48.0;
};

/// Hue / 3.6, chroma and luminance as polylines over a strip of the colors.
/// Undefined hues split the hue line. Throws DomainError for an inconsistent path.
std::string specplot_svg(const SpectrumPath& path, bool labels = true, const SpecplotGeometry& geometry = {});

}  // namespace hclpal
