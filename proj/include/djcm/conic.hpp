#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace djcm {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

enum class ConicKind { line, ellipse, circle, parabola, hyperbola, degenerate };

std::string_view name(ConicKind k);

/// A x^2 + B xy + C y^2 + D x + E y + F = 0
struct ImplicitConic {
    double A = 0, B = 0, C = 0, D = 0, E = 0, F = 0;

    double operator()(double x, double y) const {
        return A * x * x + B * x * y + C * y * y + D * x + E * y + F;
    }
    std::array<double, 6> coefficients() const { return {A, B, C, D, E, F}; }
};

/// Geometry recovered from the implicit coefficients alone.
struct ConicGeometry {
    ConicKind kind = ConicKind::degenerate;
    double eccentricity = 0.0;
    std::optional<Point2> center;        ///< ellipse / circle
    double semi_major = 0.0;             ///< ellipse / circle
    double semi_minor = 0.0;
    double focal_distance = 0.0;         ///< centre-to-focus (ellipse)
    double major_axis_angle = 0.0;       ///< radians from the x axis, in [0, pi)
    std::array<Point2, 2> foci{};        ///< ellipse; both equal the centre for a circle
    std::optional<Point2> vertex;        ///< parabola
    std::optional<Point2> focus;         ///< parabola
    double focal_length = 0.0;           ///< parabola: vertex-to-focus distance
    std::optional<double> slope;         ///< line: dy/dx (none for a vertical line)
};

/// Classify and extract. Discriminant B^2 - 4AC is compared to zero with a relative
/// tolerance of `rel_tol` against the quadratic coefficients' scale.
ConicGeometry analyze(const ImplicitConic& conic, double rel_tol = 1e-12);

}  // namespace djcm
