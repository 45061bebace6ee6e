#include "djcm/conic.hpp"

#include <algorithm>
#include <cmath>

namespace djcm {

std::string_view name(ConicKind k) {
    switch (k) {
        case ConicKind::line: return "line";
        case ConicKind::ellipse: return "ellipse";
        case ConicKind::circle: return "circle";
        case ConicKind::parabola: return "parabola";
        case ConicKind::hyperbola: return "hyperbola";
        case ConicKind::degenerate: return "degenerate";
    }
    return "?";
}

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double wrap_angle(double a) {
    a = std::fmod(a, kPi);
    if (a < 0) a += kPi;
    if (a >= kPi) a -= kPi;
    return a;
}

// Eigen-decomposition of [[A, B/2], [B/2, C]]: eigenvalues l1 <= l2, unit eigenvector of l1.
struct QuadForm {
    double l1, l2;
    Point2 v1, v2;
};

QuadForm decompose(double A, double B, double C) {
    const double h = 0.5 * B;
    const double mean = 0.5 * (A + C);
    const double rad = std::hypot(0.5 * (A - C), h);
    QuadForm q;
    q.l1 = mean - rad;
    q.l2 = mean + rad;
    if (h == 0.0) {
        if (A <= C) {
            q.v1 = {1.0, 0.0};
        } else {
            q.v1 = {0.0, 1.0};
        }
    } else {
        // (A - l1) x + h y = 0 and h x + (C - l1) y = 0; use the better-conditioned row.
        Point2 a{-h, A - q.l1};
        Point2 b{C - q.l1, -h};
        const double na = std::hypot(a.x, a.y);
        const double nb = std::hypot(b.x, b.y);
        q.v1 = na >= nb ? Point2{a.x / na, a.y / na} : Point2{b.x / nb, b.y / nb};
    }
    q.v2 = {-q.v1.y, q.v1.x};
    return q;
}

}  // namespace

ConicGeometry analyze(const ImplicitConic& k, double rel_tol) {
    ConicGeometry g;
    const double quad_scale = std::max({std::abs(k.A), std::abs(k.B), std::abs(k.C)});
    const double lin_scale = std::max(std::abs(k.D), std::abs(k.E));

    if (quad_scale == 0.0) {
        if (lin_scale == 0.0) return g;
        g.kind = ConicKind::line;
        g.eccentricity = 0.0;
        if (k.E != 0.0) g.slope = -k.D / k.E;
        return g;
    }

    const double disc = k.B * k.B - 4.0 * k.A * k.C;
    const QuadForm q = decompose(k.A, k.B, k.C);

    if (std::abs(disc) <= rel_tol * quad_scale * quad_scale) {
        // Parabola. Null direction u = v1 if |l1| < |l2|; w the other.
        const bool first_null = std::abs(q.l1) <= std::abs(q.l2);
        const Point2 u = first_null ? q.v1 : q.v2;
        const Point2 w = first_null ? q.v2 : q.v1;
        const double lam = first_null ? q.l2 : q.l1;
        const double lu = k.D * u.x + k.E * u.y;
        const double lw = k.D * w.x + k.E * w.y;
        if (lu == 0.0) return g;  // pair of parallel lines
        // lam r^2 + lw r + lu s + F = 0 in coordinates p = s u + r w.
        const double r0 = -lw / (2.0 * lam);
        const double s0 = -(k.F - lw * lw / (4.0 * lam)) / lu;
        const double curv = -lam / lu;  // s - s0 = curv (r - r0)^2
        const double shift = 1.0 / (4.0 * curv);
        g.kind = ConicKind::parabola;
        g.eccentricity = 1.0;
        g.vertex = Point2{s0 * u.x + r0 * w.x, s0 * u.y + r0 * w.y};
        g.focus = Point2{g.vertex->x + shift * u.x, g.vertex->y + shift * u.y};
        g.focal_length = std::abs(shift);
        g.major_axis_angle = wrap_angle(std::atan2(u.y, u.x));
        return g;
    }

    // Central conic: centre solves [2A B; B 2C] c = -[D; E].
    const double det = 4.0 * k.A * k.C - k.B * k.B;
    const Point2 c{(-2.0 * k.C * k.D + k.B * k.E) / det, (-2.0 * k.A * k.E + k.B * k.D) / det};
    const double fc = k(c.x, c.y);
    g.center = c;

    if (disc > 0.0) {
        g.kind = ConicKind::hyperbola;
        return g;
    }
    // Ellipse: l_i x'^2 = -fc along each eigen-direction; same-sign requirement.
    const double a1 = -fc / q.l1;
    const double a2 = -fc / q.l2;
    if (!(a1 > 0.0 && a2 > 0.0)) return g;  // imaginary or point ellipse
    // Smaller eigenvalue -> longer axis.
    const double major = std::sqrt(a1);
    const double minor = std::sqrt(a2);
    g.semi_major = major;
    g.semi_minor = minor;
    g.focal_distance = std::sqrt(std::max(0.0, a1 - a2));
    g.eccentricity = std::sqrt(std::max(0.0, 1.0 - a2 / a1));
    g.major_axis_angle = wrap_angle(std::atan2(q.v1.y, q.v1.x));
    g.foci = {Point2{c.x + g.focal_distance * q.v1.x, c.y + g.focal_distance * q.v1.y},
              Point2{c.x - g.focal_distance * q.v1.x, c.y - g.focal_distance * q.v1.y}};
    g.kind = (q.l1 == q.l2) ? ConicKind::circle : ConicKind::ellipse;
    return g;
}

}  // namespace djcm
