#include "hclpal/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "hclpal/cvd.hpp"
#include "hclpal/errors.hpp"
#include "hclpal/kernels.hpp"

namespace hclpal {

namespace {

void require_pair(std::size_t n) {
    if (n < 2) throw DomainError("at least two colors are required");
}

bool nondecreasing(std::span<const double> v, double tol) {
    for (std::size_t k = 1; k < v.size(); ++k) {
        if (v[k] - v[k - 1] <= -tol) return false;
    }
    return true;
}

bool nonincreasing(std::span<const double> v, double tol) {
    for (std::size_t k = 1; k < v.size(); ++k) {
        if (v[k] - v[k - 1] >= tol) return false;
    }
    return true;
}

}  // namespace

void unwrap_hues(std::vector<std::optional<double>>& hue) {
    std::optional<double> prev;
    for (auto& h : hue) {
        if (!h) continue;
        if (prev) {
            double value = *h;
            // Shift by whole turns to land within 180 degrees of the previous hue.
            value -= 360.0 * std::round((value - *prev) / 360.0);
            h = value;
        }
        prev = h;
    }
}

SpectrumPath spectrum(std::span<const Color> colors) {
    require_pair(colors.size());
    SpectrumPath path;
    path.colors.assign(colors.begin(), colors.end());
    path.hue.reserve(colors.size());
    path.chroma.reserve(colors.size());
    path.luminance.reserve(colors.size());
    for (const auto& c : colors) {
        const auto hcl = srgb_to_hcl(c);
        path.hue.push_back(hcl.h);
        path.chroma.push_back(hcl.c);
        path.luminance.push_back(hcl.l);
    }
    unwrap_hues(path.hue);
    return path;
}

std::string_view to_string(Vision vision) noexcept {
    switch (vision) {
        case Vision::Normal: return "normal";
        case Vision::Deutan: return "deutan";
        case Vision::Protan: return "protan";
        case Vision::Tritan: return "tritan";
    }
    return "unknown";
}

bool SafetyReport::pass() const noexcept {
    return std::all_of(results.begin(), results.end(), [](const VisionResult& r) { return r.pass; });
}

SafetyReport safety_check(std::span<const Color> colors, double threshold) {
    require_pair(colors.size());
    if (!(threshold > 0.0) || !std::isfinite(threshold)) throw DomainError("threshold must be positive");
    SafetyReport report;
    report.threshold = threshold;
    std::vector<Luv> luv(colors.size());
    for (std::size_t v = 0; v < kVisions.size(); ++v) {
        const Vision vision = kVisions[v];
        if (vision == Vision::Normal) {
            kernels::srgb_to_luv_batch(colors, luv);
        } else {
            const CvdKind kind = vision == Vision::Deutan   ? CvdKind::Deutan
                                 : vision == Vision::Protan ? CvdKind::Protan
                                                            : CvdKind::Tritan;
            const auto simulated = simulate(colors, kind, 1.0);
            kernels::srgb_to_luv_batch(simulated, luv);
        }
        const auto best = kernels::min_pairwise_distance(luv);
        report.results[v] = VisionResult{vision, best.distance, best.i, best.j, best.distance >= threshold};
    }
    return report;
}

std::string_view to_string(Shape shape) noexcept {
    switch (shape) {
        case Shape::Constant: return "constant";
        case Shape::Increasing: return "monotone-increasing";
        case Shape::Decreasing: return "monotone-decreasing";
        case Shape::Triangular: return "triangular";
        case Shape::Irregular: return "irregular";
    }
    return "unknown";
}

bool is_monotone(Shape shape) noexcept { return shape == Shape::Increasing || shape == Shape::Decreasing; }

Shape classify_sequence(std::span<const double> v, const ShapeTolerance& tol) {
    if (v.size() < 2) return Shape::Constant;
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    if (*hi - *lo < tol.constant) return Shape::Constant;

    const double net = v.back() - v.front();
    if (net > 0.0 && nondecreasing(v, tol.step)) return Shape::Increasing;
    if (net < 0.0 && nonincreasing(v, tol.step)) return Shape::Decreasing;

    // One interior extremum: monotone up to it and monotone after, with the
    // extremum standing clear of both ends.
    const auto n = v.size();
    const auto peak = static_cast<std::size_t>(hi - v.begin());
    if (peak > 0 && peak + 1 < n && *hi - v.front() >= tol.step && *hi - v.back() >= tol.step &&
        nondecreasing(v.subspan(0, peak + 1), tol.step) && nonincreasing(v.subspan(peak), tol.step)) {
        return Shape::Triangular;
    }
    const auto trough = static_cast<std::size_t>(lo - v.begin());
    if (trough > 0 && trough + 1 < n && v.front() - *lo >= tol.step && v.back() - *lo >= tol.step &&
        nonincreasing(v.subspan(0, trough + 1), tol.step) && nondecreasing(v.subspan(trough), tol.step)) {
        return Shape::Triangular;
    }
    return Shape::Irregular;
}

ShapeDescriptor classify_shape(const SpectrumPath& path) {
    std::vector<double> hue;
    for (std::size_t k = 0; k < path.size(); ++k) {
        if (path.hue[k] && path.chroma[k] >= kHueChromaFloor) hue.push_back(*path.hue[k]);
    }
    ShapeDescriptor d;
    d.hue = classify_sequence(hue, kHueTolerance);
    d.chroma = classify_sequence(path.chroma);
    d.luminance = classify_sequence(path.luminance);
    return d;
}

}  // namespace hclpal
