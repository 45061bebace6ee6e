#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "djcm/analytic.hpp"
#include "djcm/conic.hpp"
#include "djcm/execution.hpp"
#include "djcm/pairs.hpp"
#include "djcm/trace.hpp"

namespace djcm {

// ---------------------------------------------------------------------------
// Relations in concurrence diagrams

enum class CheckStatus { pass, fail, vacuous, skipped_degenerate };

std::string_view name(CheckStatus s);

/// Max absolute residual of one implicit relation along a trajectory.
///
/// Only masked points count: for the phi family a point enters when every clamped
/// concurrence taking part in the relation has unclamped value > kMaskThreshold.
struct RelationCheck {
    std::string id;
    std::string equation;
    double max_residual = 0.0;
    double worst_gt = 0.0;
    std::size_t evaluated = 0;  ///< mask size
    std::size_t total = 0;
    double tolerance = 0.0;
    CheckStatus status = CheckStatus::vacuous;

    bool failed() const { return status == CheckStatus::fail; }
};

inline constexpr double kMaskThreshold = 1e-9;
inline constexpr double kDefaultRelationTol = 1e-10;

/// Sum line, Ab/aB symmetry, Aa/Bb ratio line, the two ellipses, the circle and the two
/// slope lines (both (AB)/(ab) and (Ab)/(aB) variants folded into one residual), plus
/// the limiting circle C_AB^2 + C_aB^2 <= C0^2 as an inequality.
std::vector<RelationCheck> psi_relation_residuals(const TraceTable& trace,
                                                  double tol = kDefaultRelationTol);

/// The two parabolas in (C_ab, C_AB) and (C_Aa, C_AB + C_ab), the ellipse in
/// (C_AB - C_ab, C_Aa), the parabola in (C_Aa, C_Ab), and the Ab/aB and Aa/Bb symmetries.
std::vector<RelationCheck> phi_relation_residuals(const TraceTable& trace,
                                                  double tol = kDefaultRelationTol);

std::vector<RelationCheck> relation_residuals(const TraceTable& trace,
                                              double tol = kDefaultRelationTol);

// ---------------------------------------------------------------------------
// Conic parameters, printed closed forms vs. extraction from the implicit equation

struct ParameterComparison {
    std::string name;
    double printed = 0.0;
    double geometric = 0.0;
    double deviation = 0.0;
    double tolerance = 0.0;
    /// Hard check when true; otherwise a mismatch is only a warning.
    bool asserted = false;

    bool agrees() const { return deviation <= tolerance; }
};

struct ConicDescriptor {
    std::string id;
    std::string x_axis;
    std::string y_axis;
    ConicKind kind = ConicKind::degenerate;  ///< kind claimed by the closed form
    ImplicitConic implicit;
    ConicGeometry geometry;
    std::vector<ParameterComparison> comparisons;
};

inline constexpr double kConicTol = 1e-9;

/// Requires 0 < alpha < pi/2 (std::domain_error otherwise).
std::vector<ConicDescriptor> psi_conic_parameters(const Angle& alpha);
std::vector<ConicDescriptor> phi_conic_parameters(const Angle& alpha);

/// Printed piecewise phi-ellipse eccentricity and focal distance.
struct PhiEllipseBranch {
    int branch = 0;  ///< 1: alpha < atan(1/2), 2: atan(1/2) <= alpha < pi/4, 3: alpha >= pi/4
    double eccentricity = 0.0;
    double focal_distance = 0.0;
};
PhiEllipseBranch phi_ellipse_printed(const Angle& alpha);

// ---------------------------------------------------------------------------
// Hypersphere shell

struct ShellBounds {
    Family family = Family::psi;
    double alpha = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    double observed_min = 0.0;
    double observed_max = 0.0;
    double argmin_gt = 0.0;
    double argmax_gt = 0.0;
    std::vector<double> sum_of_squares;
    /// Largest excursion outside [lower, upper]; <= 0 when contained.
    double violation = 0.0;

    bool contained(double tol = 1e-9) const { return violation <= tol; }
};

/// psi: C0^2 <= sum C^2 <= 1 + C0^2/2;  phi: 0 <= sum C^2 <= 1 + C0^2/2 + sign P0.
ShellBounds shell_bounds(const TraceTable& trace);
double shell_radius(Family family, const Angle& alpha);

// ---------------------------------------------------------------------------
// Sudden death and birth

struct DeadWindow {
    double start = 0.0;
    double end = 0.0;
    bool open_end = false;  ///< still dead at the end of the trace

    double length() const { return end - start; }
};

struct DeathReport {
    Pair pair = Pair::AB;
    std::optional<double> death_gt;
    std::optional<double> birth_gt;
    double delta_gt = 0.0;  ///< birth - death of the first window, 0 if none
    std::vector<DeadWindow> windows;

    bool empty() const { return windows.empty(); }
};

/// Dead windows of one pair along a trace. A sample is dead when its unclamped value is
/// below -1e-12; window edges are refined by bisection on the sign of the unclamped
/// closed form to 1e-14 in gt. Touching zeros are not windows.
DeathReport detect_death_birth(const TraceTable& trace, Pair pair);

/// First interval on which all the given pairs are simultaneously dead.
std::optional<DeadWindow> collective_death_window(const TraceTable& trace, std::span<const Pair> pairs);

/// g * Delta tau = arccos(sqrt(tan a)) - arcsin(sqrt(tan a)) for 0 <= a < atan(1/2), else none.
/// At a = 0 this is the pi/2 stretch where all four pairs sit at zero from the start.
std::optional<double> predicted_collective_window(const Angle& alpha);

/// Bisection over alpha on (C_AB death gt) - (C_ab birth gt), detected from phi traces
/// sampled with `samples` points on [0, pi]. Returns the alpha where they coincide.
double locate_death_birth_threshold(double alpha_lo, double alpha_hi, std::size_t samples = 1025,
                                    double alpha_tol = 1e-9);

// ---------------------------------------------------------------------------
// Entanglement surfaces

struct SurfacePoint {
    double alpha = 0.0;
    double gt = 0.0;
    std::array<double, 3> c{};
    std::array<double, 3> unclamped{};
};

/// Row-major mesh: alpha outer, gt inner. Coordinates are the concurrences of the three
/// pairs containing `qubit`, ordered as pairs_of(qubit).
struct SurfaceMesh {
    Family family = Family::psi;
    Qubit qubit = Qubit::A;
    std::array<Pair, 3> pairs{};
    std::vector<Angle> alphas;
    std::vector<double> gts;
    std::vector<SurfacePoint> points;

    const SurfacePoint& at(std::size_t ia, std::size_t it) const { return points[ia * gts.size() + it]; }
};

SurfaceMesh surface_sample(Family family, Qubit qubit, std::span<const Angle> alpha_grid,
                           std::span<const double> gt_grid, Execution exec = Execution::parallel);

/// Checks every mesh point's three planar projections against the planar relation of
/// that diagram. psi: ellipse (same, own), circle (same, cross), slope line (own, cross).
/// phi: parabola (own, cross) and the quartic (C_s + C_o^2/(2cos^2 a) - C0/2)^2 +
/// C0^2 C_o^2/(4cos^4 a) = C0^2/4 for (same, own), both masked; (same, cross) has no
/// single-valued planar relation and is reported vacuous.
std::vector<RelationCheck> projection_residuals(const SurfaceMesh& mesh, double tol = kDefaultRelationTol);

}  // namespace djcm
