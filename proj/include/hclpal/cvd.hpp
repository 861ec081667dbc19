#pragma once

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "hclpal/color.hpp"

namespace hclpal {

enum class CvdKind { Deutan, Protan, Tritan };

CvdKind parse_cvd_kind(std::string_view token);
std::string_view to_string(CvdKind kind) noexcept;

/// Linear-RGB transform simulating a deficiency at a given severity. Rows sum
/// to one, so grays are fixed points.
struct CvdMatrix {
    CvdKind kind = CvdKind::Deutan;
    double severity = 0.0;
    std::array<std::array<double, 3>, 3> m{};

    LinearRgb apply(const LinearRgb& rgb) const noexcept;
};

/// Tabulated matrices at severities 0, 0.1, ..., 1.0, entrywise linear in between.
/// Throws DomainError for severity outside [0,1].
CvdMatrix cvd_matrix(CvdKind kind, double severity);

/// The tabulated matrix at 10 * severity == step, step in [0,10].
const std::array<std::array<double, 3>, 3>& cvd_table(CvdKind kind, int step);

Color simulate(const Color& color, const CvdMatrix& matrix) noexcept;
std::vector<Color> simulate(std::span<const Color> colors, CvdKind kind, double severity);

/// A deficiency with its severity, written "kind" or "kind:severity".
struct CvdSpec {
    CvdKind kind = CvdKind::Deutan;
    double severity = 1.0;
};

/// One spec, or all three kinds for "all" / "all:severity". Throws DomainError.
std::vector<CvdSpec> parse_cvd_specs(std::string_view token);

}  // namespace hclpal
