#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hclpal/color.hpp"

namespace hclpal {

/// Single-arm path from the dark/colorful end (i = 1) to the light end (i = 0).
///
/// Hue is linear in i, luminance follows a power law with exponent p2, and
/// chroma follows a power law with exponent p1. When cmax is set, chroma is
/// piecewise linear in j = i^p1 through (0, c2), (jmax, cmax) and (1, c1).
struct SeqTrajectory {
    double h1 = 0.0;
    double h2 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    std::optional<double> cmax;
    double l1 = 0.0;
    double l2 = 0.0;
    double p1 = 1.0;
    double p2 = 1.0;

    void validate() const;
};

/// Balanced diverging path: two arms that share chroma and luminance and meet
/// at a zero-chroma neutral of luminance l2.
struct DivTrajectory {
    double h1 = 0.0;
    double h2 = 0.0;
    double c1 = 0.0;
    std::optional<double> cmax;
    double l1 = 0.0;
    double l2 = 0.0;
    double p1 = 1.0;
    double p2 = 1.0;

    void validate() const;
};

/// Flexible diverging path: two independent sequential arms meeting at a center
/// color (h2, c2, l2) that need not be gray.
struct DivxTrajectory {
    double h1 = 0.0;
    double h2 = 0.0;
    double h3 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
    std::optional<double> cmax1;
    std::optional<double> cmax2;
    double l1 = 0.0;
    double l2 = 0.0;
    double l3 = 0.0;
    double p1 = 1.0;
    double p2 = 1.0;
    double p3 = 1.0;
    double p4 = 1.0;

    void validate() const;

    SeqTrajectory left_arm() const;
    SeqTrajectory right_arm() const;
};

/// Constant chroma and luminance; hue runs from h1 to h2. A missing h2 spans
/// the full circle without repeating the first hue.
struct QualTrajectory {
    double h1 = 0.0;
    std::optional<double> h2;
    double c1 = 0.0;
    double l1 = 0.0;

    void validate() const;
};

using Trajectory = std::variant<QualTrajectory, SeqTrajectory, DivTrajectory, DivxTrajectory>;

void validate(const Trajectory& traj);

enum class ParamRole { Hue, Chroma, Luminance, Power };

/// Why a parameter value is outside its domain, or nothing when it is valid.
std::optional<std::string> param_problem(ParamRole role, double value);

/// Chroma along one arm at position i in [0,1].
double arm_chroma(double i, double c1, double c2, std::optional<double> cmax, double power) noexcept;

HclCoord eval_sequential(const SeqTrajectory& traj, double i);
HclCoord eval_diverging(const DivTrajectory& traj, double t);
HclCoord eval_divergingx(const DivxTrajectory& traj, double t);
HclCoord eval_qualitative(const QualTrajectory& traj, int k, int n);

/// Positions used for an n-color palette: i in [1,0] for sequential and t in
/// [-1,1] for diverging kinds.
std::vector<double> sequential_positions(int n);
std::vector<double> diverging_positions(int n);

/// The n HCL coordinates of a palette, in output order (rev not applied).
std::vector<HclCoord> sample_coords(const Trajectory& traj, int n);

struct SampleOptions {
    bool rev = false;
    std::optional<double> alpha;
    bool fixup = true;
};

/// Throws DomainError for n < 1 and OutOfGamutError when fixup is off and
/// some coordinate cannot be displayed.
std::vector<Color> sample_palette(const Trajectory& traj, int n, const SampleOptions& opts = {});

}  // namespace hclpal
