#include "hclpal/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hclpal/errors.hpp"

namespace hclpal {

namespace {

void require(ParamRole role, double v, const char* field) {
    if (auto problem = param_problem(role, v)) throw ParameterError(field, *problem);
}

void require_finite(double v, const char* field) { require(ParamRole::Hue, v, field); }
void require_luminance(double v, const char* field) { require(ParamRole::Luminance, v, field); }
void require_chroma(double v, const char* field) { require(ParamRole::Chroma, v, field); }
void require_power(double v, const char* field) { require(ParamRole::Power, v, field); }

void require_unit(double v, const char* what) {
    if (!(v >= 0.0 && v <= 1.0)) throw DomainError(std::string(what) + " must be in [0,1]");
}

HclCoord make_coord(double h, double c, double l) {
    HclCoord out;
    out.c = std::max(0.0, c);
    out.l = l;
    if (out.c >= kHueEpsilon) out.h = h;
    return out;
}

}  // namespace

std::optional<std::string> param_problem(ParamRole role, double v) {
    if (!std::isfinite(v)) return "must be a finite number";
    switch (role) {
        case ParamRole::Hue: break;
        case ParamRole::Chroma:
            if (v < 0.0) return "chroma must be non-negative";
            break;
        case ParamRole::Luminance:
            if (v < 0.0 || v > 100.0) return "luminance must be in [0,100]";
            break;
        case ParamRole::Power:
            if (v <= 0.0) return "power must be positive";
            break;
    }
    return std::nullopt;
}

void SeqTrajectory::validate() const {
    require_finite(h1, "h1");
    require_finite(h2, "h2");
    require_chroma(c1, "c1");
    require_chroma(c2, "c2");
    if (cmax) require_chroma(*cmax, "cmax");
    require_luminance(l1, "l1");
    require_luminance(l2, "l2");
    require_power(p1, "p1");
    require_power(p2, "p2");
}

void DivTrajectory::validate() const {
    require_finite(h1, "h1");
    require_finite(h2, "h2");
    require_chroma(c1, "c1");
    if (cmax) require_chroma(*cmax, "cmax");
    require_luminance(l1, "l1");
    require_luminance(l2, "l2");
    require_power(p1, "p1");
    require_power(p2, "p2");
}

void DivxTrajectory::validate() const {
    require_finite(h1, "h1");
    require_finite(h2, "h2");
    require_finite(h3, "h3");
    require_chroma(c1, "c1");
    require_chroma(c2, "c2");
    require_chroma(c3, "c3");
    if (cmax1) require_chroma(*cmax1, "cmax1");
    if (cmax2) require_chroma(*cmax2, "cmax2");
    require_luminance(l1, "l1");
    require_luminance(l2, "l2");
    require_luminance(l3, "l3");
    require_power(p1, "p1");
    require_power(p2, "p2");
    require_power(p3, "p3");
    require_power(p4, "p4");
}

SeqTrajectory DivxTrajectory::left_arm() const {
    return {h1, h2, c1, c2, cmax1, l1, l2, p1, p2};
}

SeqTrajectory DivxTrajectory::right_arm() const {
    return {h3, h2, c3, c2, cmax2, l3, l2, p3, p4};
}

void QualTrajectory::validate() const {
    require_finite(h1, "h1");
    if (h2) require_finite(*h2, "h2");
    require_chroma(c1, "c1");
    require_luminance(l1, "l1");
}

void validate(const Trajectory& traj) {
    std::visit([](const auto& t) { t.validate(); }, traj);
}

double arm_chroma(double i, double c1, double c2, std::optional<double> cmax, double power) noexcept {
    const double j = std::pow(i, power);
    if (cmax) {
        // Peak position in the transformed coordinate; degenerate peaks fall back to linear.
        const double rise = std::abs(*cmax - c2);
        const double fall = std::abs(*cmax - c1);
        if (rise > 0.0 && fall > 0.0) {
            const double peak = 1.0 / (1.0 + fall / rise);
            if (j <= peak) return c2 - (c2 - *cmax) * j / peak;
            return *cmax - (*cmax - c1) * (j - peak) / (1.0 - peak);
        }
    }
    return c2 - (c2 - c1) * j;
}

HclCoord eval_sequential(const SeqTrajectory& traj, double i) {
    require_unit(i, "position i");
    const double h = traj.h2 - i * (traj.h2 - traj.h1);
    const double c = arm_chroma(i, traj.c1, traj.c2, traj.cmax, traj.p1);
    const double l = traj.l2 - std::pow(i, traj.p2) * (traj.l2 - traj.l1);
    return make_coord(h, c, l);
}

HclCoord eval_diverging(const DivTrajectory& traj, double t) {
    if (!(t >= -1.0 && t <= 1.0)) throw DomainError("position t must be in [-1,1]");
    const double i = std::abs(t);
    const double h = t < 0.0 ? traj.h1 : traj.h2;
    const double c = arm_chroma(i, traj.c1, 0.0, traj.cmax, traj.p1);
    const double l = traj.l2 - std::pow(i, traj.p2) * (traj.l2 - traj.l1);
    return make_coord(h, c, l);
}

HclCoord eval_divergingx(const DivxTrajectory& traj, double t) {
    if (!(t >= -1.0 && t <= 1.0)) throw DomainError("position t must be in [-1,1]");
    if (t <= 0.0) return eval_sequential(traj.left_arm(), -t);
    return eval_sequential(traj.right_arm(), t);
}

HclCoord eval_qualitative(const QualTrajectory& traj, int k, int n) {
    if (n < 1) throw DomainError("number of colors must be at least 1");
    if (k < 1 || k > n) throw DomainError("color index must be in [1,n]");
    const double h2 = traj.h2.value_or(traj.h1 + 360.0 * (n - 1) / n);
    const double step = static_cast<double>(k - 1) / std::max(n - 1, 1);
    return make_coord(traj.h1 + step * (h2 - traj.h1), traj.c1, traj.l1);
}

std::vector<double> sequential_positions(int n) {
    if (n < 1) throw DomainError("number of colors must be at least 1");
    if (n == 1) return {1.0};
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) out[j - 1] = static_cast<double>(n - j) / (n - 1);
    return out;
}

std::vector<double> diverging_positions(int n) {
    if (n < 1) throw DomainError("number of colors must be at least 1");
    if (n == 1) return {-1.0};
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) out[j - 1] = static_cast<double>(2 * j - n - 1) / (n - 1);
    return out;
}

std::vector<HclCoord> sample_coords(const Trajectory& traj, int n) {
    if (n < 1) throw DomainError("number of colors must be at least 1");
    validate(traj);
    std::vector<HclCoord> out;
    out.reserve(static_cast<std::size_t>(n));
    std::visit(
        [&](const auto& t) {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, QualTrajectory>) {
                for (int k = 1; k <= n; ++k) out.push_back(eval_qualitative(t, k, n));
            } else if constexpr (std::is_same_v<T, SeqTrajectory>) {
                for (double i : sequential_positions(n)) out.push_back(eval_sequential(t, i));
            } else if constexpr (std::is_same_v<T, DivTrajectory>) {
                for (double x : diverging_positions(n)) out.push_back(eval_diverging(t, x));
            } else {
                for (double x : diverging_positions(n)) out.push_back(eval_divergingx(t, x));
            }
        },
        traj);
    return out;
}

std::vector<Color> sample_palette(const Trajectory& traj, int n, const SampleOptions& opts) {
    if (opts.alpha && !(*opts.alpha >= 0.0 && *opts.alpha <= 1.0)) {
        throw DomainError("alpha must be in [0,1]");
    }
    const auto coords = sample_coords(traj, n);
    std::vector<Color> out;
    out.reserve(coords.size());
    std::vector<std::size_t> missing;
    for (std::size_t k = 0; k < coords.size(); ++k) {
        auto color = hcl_to_srgb(coords[k], opts.fixup);
        if (!color) {
            missing.push_back(k);
            continue;
        }
        out.push_back((opts.alpha ? color->with_alpha(opts.alpha) : *color).quantized());
    }
    if (!missing.empty()) throw OutOfGamutError(std::move(missing));
    if (opts.rev) std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace hclpal
