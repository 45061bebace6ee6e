#include "djcm/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace djcm {

std::string_view name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::vacuous: return "vacuous";
        case CheckStatus::skipped_degenerate: return "skipped_degenerate";
    }
    return "?";
}

namespace {

constexpr double kDegenerate = 1e-12;

double sq(double x) { return x * x; }

/// One way of evaluating a relation on a row: the clamped pairs it depends on and the
/// residual of the implicit equation.
struct Variant {
    std::vector<Pair> clamped;
    std::function<double(const TraceRow&)> residual;
};

bool unmasked(const TraceRow& row, const std::vector<Pair>& clamped) {
    return std::all_of(clamped.begin(), clamped.end(),
                       [&](Pair p) { return row.unclamped[index_of(p)] > kMaskThreshold; });
}

RelationCheck run_relation(std::string id, std::string equation, const TraceTable& trace, double tol,
                           bool degenerate, const std::vector<Variant>& variants) {
    RelationCheck rc;
    rc.id = std::move(id);
    rc.equation = std::move(equation);
    rc.tolerance = tol;
    rc.total = trace.rows.size() * variants.size();
    if (degenerate) {
        rc.status = CheckStatus::skipped_degenerate;
        return rc;
    }
    for (const TraceRow& row : trace.rows) {
        for (const Variant& v : variants) {
            if (!unmasked(row, v.clamped)) continue;
            ++rc.evaluated;
            const double r = std::abs(v.residual(row));
            if (r > rc.max_residual || std::isnan(r)) {
                rc.max_residual = r;
                rc.worst_gt = row.gt;
            }
        }
    }
    if (rc.evaluated == 0) {
        rc.status = CheckStatus::vacuous;
    } else {
        rc.status = rc.max_residual <= tol ? CheckStatus::pass : CheckStatus::fail;
    }
    return rc;
}

double at(const TraceRow& r, Pair p) { return r.c[p]; }

}  // namespace

std::vector<RelationCheck> psi_relation_residuals(const TraceTable& trace, double tol) {
    if (trace.family != Family::psi) throw std::invalid_argument("psi_relation_residuals: phi trace");
    const Angle& a = trace.alpha;
    const double c0 = initial_concurrence(a);
    const double s2 = a.sin_sq();
    const double c2 = a.cos_sq();
    const bool c0_zero = c0 < kDegenerate;

    std::vector<RelationCheck> out;
    out.push_back(run_relation("psi.sum_line", "C_AB + C_ab = C0", trace, tol, false,
                               {{{}, [&](const TraceRow& r) { return at(r, Pair::AB) + at(r, Pair::ab) - c0; }}}));
    out.push_back(run_relation("psi.symmetry_Ab_aB", "C_Ab = C_aB", trace, tol, false,
                               {{{}, [&](const TraceRow& r) { return at(r, Pair::Ab) - at(r, Pair::aB); }}}));
    out.push_back(run_relation(
        "psi.ratio_line_Aa_Bb", "C_Aa sin^2(a) = C_Bb cos^2(a)", trace, tol, false,
        {{{}, [&](const TraceRow& r) { return at(r, Pair::Aa) * s2 - at(r, Pair::Bb) * c2; }}}));

    auto ellipse = [&](Pair axis, Pair other, double w4) {
        return Variant{{}, [=](const TraceRow& r) {
                           return sq(at(r, axis) - c0 / 2.0) / (c0 * c0 / 4.0) + sq(at(r, other)) / w4 - 1.0;
                       }};
    };
    out.push_back(run_relation("psi.ellipse_AB_Bb",
                               "(C_AB(ab) - C0/2)^2/(C0^2/4) + C_Bb^2/sin^4(a) = 1", trace, tol,
                               c0_zero || s2 < kDegenerate,
                               {ellipse(Pair::AB, Pair::Bb, s2 * s2), ellipse(Pair::ab, Pair::Bb, s2 * s2)}));
    out.push_back(run_relation("psi.ellipse_AB_Aa",
                               "(C_AB(ab) - C0/2)^2/(C0^2/4) + C_Aa^2/cos^4(a) = 1", trace, tol,
                               c0_zero || c2 < kDegenerate,
                               {ellipse(Pair::AB, Pair::Aa, c2 * c2), ellipse(Pair::ab, Pair::Aa, c2 * c2)}));

    auto circle = [&](Pair x, Pair y) {
        return Variant{{}, [=](const TraceRow& r) {
                           return sq(at(r, x) - c0 / 2.0) + sq(at(r, y)) - c0 * c0 / 4.0;
                       }};
    };
    out.push_back(run_relation("psi.circle_AB_aB", "(C_AB(ab) - C0/2)^2 + C_aB(Ab)^2 = C0^2/4", trace,
                               tol, false, {circle(Pair::AB, Pair::aB), circle(Pair::ab, Pair::Ab)}));

    auto line = [&](Pair y, Pair x, double w2) {
        return Variant{{}, [=](const TraceRow& r) { return at(r, y) - c0 / (2.0 * w2) * at(r, x); }};
    };
    out.push_back(run_relation("psi.line_aB_Aa", "C_aB(Ab) = |sin 2a|/(2cos^2 a) C_Aa", trace, tol,
                               c2 < kDegenerate, {line(Pair::aB, Pair::Aa, c2), line(Pair::Ab, Pair::Aa, c2)}));
    out.push_back(run_relation("psi.line_Ab_Bb", "C_Ab(aB) = |sin 2a|/(2sin^2 a) C_Bb", trace, tol,
                               s2 < kDegenerate, {line(Pair::Ab, Pair::Bb, s2), line(Pair::aB, Pair::Bb, s2)}));

    out.push_back(run_relation("psi.limit_circle", "C_AB^2 + C_aB^2 <= C0^2", trace, tol, false,
                               {{{}, [&](const TraceRow& r) {
                                     return std::max(0.0, sq(at(r, Pair::AB)) + sq(at(r, Pair::aB)) - c0 * c0);
                                 }}}));
    return out;
}

std::vector<RelationCheck> phi_relation_residuals(const TraceTable& trace, double tol) {
    if (trace.family != Family::phi) throw std::invalid_argument("phi_relation_residuals: psi trace");
    const Angle& a = trace.alpha;
    const double c0 = initial_concurrence(a);
    const double c2 = a.cos_sq();
    const bool degenerate = c0 < kDegenerate || c2 < kDegenerate;
    const std::vector<Pair> both{Pair::AB, Pair::ab};

    std::vector<RelationCheck> out;
    out.push_back(run_relation(
        "phi.parabola_AB_ab", "(C_AB - C_ab)^2/C0^2 + (C0 - (C_AB + C_ab))/cos^2(a) = 1", trace, tol,
        degenerate, {{both, [&](const TraceRow& r) {
                          const double d = at(r, Pair::AB) - at(r, Pair::ab);
                          const double s = at(r, Pair::AB) + at(r, Pair::ab);
                          return d * d / (c0 * c0) + (c0 - s) / c2 - 1.0;
                      }}}));

    auto ellipse = [&](Pair z) {
        return Variant{both, [=](const TraceRow& r) {
                           const double d = at(r, Pair::AB) - at(r, Pair::ab);
                           return d * d / (c0 * c0) + sq(at(r, z)) / (c2 * c2) - 1.0;
                       }};
    };
    out.push_back(run_relation("phi.ellipse_diff_Aa", "(C_AB - C_ab)^2/C0^2 + C_Aa(Bb)^2/cos^4(a) = 1",
                               trace, tol, degenerate, {ellipse(Pair::Aa), ellipse(Pair::Bb)}));

    auto sum_parabola = [&](Pair z) {
        return Variant{both, [=](const TraceRow& r) {
                           return at(r, Pair::AB) + at(r, Pair::ab) - c0 + sq(at(r, z)) / c2;
                       }};
    };
    out.push_back(run_relation("phi.parabola_sum_Aa", "C_AB + C_ab = C0 - C_Aa(Bb)^2/cos^2(a)", trace,
                               tol, degenerate, {sum_parabola(Pair::Aa), sum_parabola(Pair::Bb)}));

    auto cross_parabola = [&](Pair y, Pair z) {
        return Variant{{y}, [=](const TraceRow& r) {
                           return at(r, y) + sq(at(r, z) - c0 / 2.0) / (2.0 * c2) - c0 * c0 / (8.0 * c2);
                       }};
    };
    out.push_back(run_relation("phi.parabola_Ab_Aa",
                               "C_Ab(aB) + (C_Aa(Bb) - C0/2)^2/(2cos^2 a) = C0^2/(8cos^2 a)", trace, tol,
                               c2 < kDegenerate,
                               {cross_parabola(Pair::Ab, Pair::Aa), cross_parabola(Pair::aB, Pair::Bb)}));

    out.push_back(run_relation("phi.symmetry_Ab_aB", "C_Ab = C_aB", trace, tol, false,
                               {{{}, [&](const TraceRow& r) { return at(r, Pair::Ab) - at(r, Pair::aB); }}}));
    out.push_back(run_relation("phi.symmetry_Aa_Bb", "C_Aa = C_Bb", trace, tol, false,
                               {{{}, [&](const TraceRow& r) { return at(r, Pair::Aa) - at(r, Pair::Bb); }}}));
    return out;
}

std::vector<RelationCheck> relation_residuals(const TraceTable& trace, double tol) {
    return trace.family == Family::psi ? psi_relation_residuals(trace, tol)
                                       : phi_relation_residuals(trace, tol);
}

// ---------------------------------------------------------------------------

namespace {

void check_open_alpha(const Angle& alpha) {
    check_alpha(alpha);
    if (alpha.sin_sq() < kDegenerate || alpha.cos_sq() < kDegenerate) {
        throw std::domain_error("conic parameters need 0 < alpha < pi/2, got " + alpha.to_string());
    }
}

ParameterComparison compare(std::string name, double printed, double geometric, bool asserted,
                            double tol = kConicTol) {
    ParameterComparison pc;
    pc.name = std::move(name);
    pc.printed = printed;
    pc.geometric = geometric;
    pc.deviation = std::abs(printed - geometric);
    pc.tolerance = tol;
    pc.asserted = asserted;
    return pc;
}

/// (x - h)^2/a2 + y^2/b2 = 1, expanded.
ImplicitConic axis_ellipse(double h, double a2, double b2) {
    ImplicitConic k;
    k.A = 1.0 / a2;
    k.C = 1.0 / b2;
    k.D = -2.0 * h / a2;
    k.F = h * h / a2 - 1.0;
    return k;
}

}  // namespace

std::vector<ConicDescriptor> psi_conic_parameters(const Angle& alpha) {
    check_open_alpha(alpha);
    const double c0 = initial_concurrence(alpha);
    const double p0 = predictability(Family::psi, alpha).p0;
    const double s2 = alpha.sin_sq();
    const double c2 = alpha.cos_sq();
    const bool below = alpha.cos2() > 0.0;  // alpha < pi/4

    const double ecc = std::sqrt(2.0 * p0 / (1.0 + p0));
    const double fa = below ? std::sqrt(p0 * (1.0 - p0) / 2.0) : std::sqrt(p0 * (1.0 + p0) / 2.0);
    const double fb = below ? std::sqrt(p0 * (1.0 + p0) / 2.0) : std::sqrt(p0 * (1.0 - p0) / 2.0);
    const double ma = below ? std::sqrt((1.0 - p0) / (1.0 + p0)) : std::sqrt((1.0 + p0) / (1.0 - p0));
    const double mb = below ? std::sqrt((1.0 + p0) / (1.0 - p0)) : std::sqrt((1.0 - p0) / (1.0 + p0));

    std::vector<ConicDescriptor> out;

    ConicDescriptor ea{"psi.ellipse_AB_Bb", "C_AB", "C_Bb", ConicKind::ellipse,
                       axis_ellipse(c0 / 2.0, c0 * c0 / 4.0, s2 * s2), {}, {}};
    ea.geometry = analyze(ea.implicit);
    ea.comparisons.push_back(compare("eccentricity", ecc, ea.geometry.eccentricity, true));
    ea.comparisons.push_back(compare("focal_distance", fa, ea.geometry.focal_distance, true));
    out.push_back(ea);

    ConicDescriptor eb{"psi.ellipse_AB_Aa", "C_AB", "C_Aa", ConicKind::ellipse,
                       axis_ellipse(c0 / 2.0, c0 * c0 / 4.0, c2 * c2), {}, {}};
    eb.geometry = analyze(eb.implicit);
    eb.comparisons.push_back(compare("eccentricity", ecc, eb.geometry.eccentricity, true));
    eb.comparisons.push_back(compare("focal_distance", fb, eb.geometry.focal_distance, true));
    if (fa > 0.0 && ea.geometry.focal_distance > 0.0) {
        eb.comparisons.push_back(compare("focal_ratio_b_over_a", fb / fa,
                                         eb.geometry.focal_distance / ea.geometry.focal_distance, true));
    }
    out.push_back(eb);

    ImplicitConic circ;
    circ.A = 1.0;
    circ.C = 1.0;
    circ.D = -c0;
    circ.F = c0 * c0 / 4.0 - c0 * c0 / 4.0;
    ConicDescriptor ci{"psi.circle_AB_aB", "C_AB", "C_aB", ConicKind::circle, circ, analyze(circ), {}};
    ci.comparisons.push_back(compare("radius", c0 / 2.0, ci.geometry.semi_major, true));
    ci.comparisons.push_back(compare("eccentricity", 0.0, ci.geometry.eccentricity, true));
    out.push_back(ci);

    ImplicitConic la;
    la.D = c0 / (2.0 * c2);
    la.E = -1.0;
    ConicDescriptor lna{"psi.line_aB_Aa", "C_Aa", "C_aB", ConicKind::line, la, analyze(la), {}};
    lna.comparisons.push_back(compare("slope", ma, lna.geometry.slope.value_or(NAN), true));
    out.push_back(lna);

    ImplicitConic lb;
    lb.D = c0 / (2.0 * s2);
    lb.E = -1.0;
    ConicDescriptor lnb{"psi.line_Ab_Bb", "C_Bb", "C_Ab", ConicKind::line, lb, analyze(lb), {}};
    lnb.comparisons.push_back(compare("slope", mb, lnb.geometry.slope.value_or(NAN), true));
    out.push_back(lnb);

    return out;
}

PhiEllipseBranch phi_ellipse_printed(const Angle& alpha) {
    const double p0 = predictability(Family::phi, alpha).p0;
    PhiEllipseBranch b;
    if (alpha.cos2() > 0.0) {
        const double k = 5.0 * p0 - 3.0;
        if (k > 0.0) {
            b.branch = 1;
            b.eccentricity = std::sqrt(k / (1.0 + p0));
            b.focal_distance = std::sqrt(k * (1.0 + p0)) / 2.0;
        } else {
            b.branch = 2;
            b.eccentricity = std::sqrt((3.0 - 5.0 * p0) / (4.0 * (1.0 - p0)));
            b.focal_distance = std::sqrt((3.0 - 5.0 * p0) * (1.0 + p0)) / 2.0;
        }
    } else {
        b.branch = 3;
        b.eccentricity = std::sqrt((3.0 + 5.0 * p0) / (4.0 * (1.0 + p0)));
        b.focal_distance = std::sqrt((3.0 + 5.0 * p0) * (1.0 - p0)) / 2.0;
    }
    return b;
}

std::vector<ConicDescriptor> phi_conic_parameters(const Angle& alpha) {
    check_open_alpha(alpha);
    const double c0 = initial_concurrence(alpha);
    const double p0 = predictability(Family::phi, alpha).p0;
    const double c2 = alpha.cos_sq();
    const bool below = alpha.cos2() > 0.0;
    const double pm = below ? 1.0 : -1.0;  // upper sign of the <,> index pair

    std::vector<ConicDescriptor> out;

    // (C_ab, C_AB): axis at 45 degrees; positions reported as (C_AB - C_ab, C_AB + C_ab).
    ImplicitConic p1;
    p1.A = 1.0 / (c0 * c0);
    p1.B = -2.0 / (c0 * c0);
    p1.C = 1.0 / (c0 * c0);
    p1.D = -1.0 / c2;
    p1.E = -1.0 / c2;
    p1.F = c0 / c2 - 1.0;
    ConicDescriptor d1{"phi.parabola_AB_ab", "C_ab", "C_AB", ConicKind::parabola, p1, analyze(p1), {}};
    if (d1.geometry.vertex && d1.geometry.focus) {
        const Point2 v = *d1.geometry.vertex;
        const Point2 f = *d1.geometry.focus;
        d1.comparisons.push_back(compare("vertex_diff", 0.0, v.y - v.x, false));
        d1.comparisons.push_back(compare("vertex_sum", c0 - (1.0 + pm * p0) / 2.0, v.x + v.y, false));
        d1.comparisons.push_back(compare("focus_diff", 0.0, f.y - f.x, false));
        d1.comparisons.push_back(compare("focus_sum", c0 - pm * p0, f.x + f.y, false));
    }
    out.push_back(d1);

    // (C_AB - C_ab, C_Aa)
    const PhiEllipseBranch br = phi_ellipse_printed(alpha);
    ConicDescriptor d2{"phi.ellipse_diff_Aa", "C_AB-C_ab", "C_Aa", ConicKind::ellipse,
                       axis_ellipse(0.0, c0 * c0, c2 * c2), {}, {}};
    d2.geometry = analyze(d2.implicit);
    d2.comparisons.push_back(compare("eccentricity", br.eccentricity, d2.geometry.eccentricity, false));
    d2.comparisons.push_back(compare("focal_distance", br.focal_distance, d2.geometry.focal_distance, false));
    {
        // Printed claim: major axis along C_Aa for alpha < atan(1/2), along C_AB - C_ab above.
        const double printed_along_aa = br.branch == 1 ? 1.0 : 0.0;
        const double geometric_along_aa =
            (d2.geometry.kind == ConicKind::ellipse &&
             std::abs(d2.geometry.major_axis_angle - kPi / 2.0) < 1e-6) ? 1.0 : 0.0;
        if (d2.geometry.kind == ConicKind::ellipse) {
            d2.comparisons.push_back(compare("major_axis_along_Aa", printed_along_aa, geometric_along_aa, false));
        }
    }
    out.push_back(d2);

    // (C_Aa, C_AB + C_ab)
    ImplicitConic p3;
    p3.A = 1.0 / c2;
    p3.E = 1.0;
    p3.F = -c0;
    ConicDescriptor d3{"phi.parabola_sum_Aa", "C_Aa", "C_AB+C_ab", ConicKind::parabola, p3, analyze(p3), {}};
    if (d3.geometry.vertex && d3.geometry.focus) {
        d3.comparisons.push_back(compare("vertex_x", 0.0, d3.geometry.vertex->x, false));
        d3.comparisons.push_back(compare("vertex_y", std::sqrt(1.0 - p0 * p0), d3.geometry.vertex->y, false));
        d3.comparisons.push_back(compare("focus_x", 0.0, d3.geometry.focus->x, false));
        d3.comparisons.push_back(
            compare("focus_y", std::sqrt(1.0 - p0) - (1.0 + pm * p0), d3.geometry.focus->y, false));
    }
    out.push_back(d3);

    // (C_Aa, C_Ab)
    ImplicitConic p4;
    p4.A = 1.0 / (2.0 * c2);
    p4.D = -c0 / (2.0 * c2);
    p4.E = 1.0;
    p4.F = c0 * c0 / (8.0 * c2) - c0 * c0 / (8.0 * c2);
    ConicDescriptor d4{"phi.parabola_Ab_Aa", "C_Aa", "C_Ab", ConicKind::parabola, p4, analyze(p4), {}};
    if (d4.geometry.vertex && d4.geometry.focus) {
        const double x = std::sqrt(1.0 - p0 * p0) / 2.0;
        d4.comparisons.push_back(compare("vertex_x", x, d4.geometry.vertex->x, false));
        d4.comparisons.push_back(compare("vertex_y", (1.0 - pm * p0) / 2.0, d4.geometry.vertex->y, false));
        d4.comparisons.push_back(compare("focus_x", x, d4.geometry.focus->x, false));
        d4.comparisons.push_back(compare("focus_y", -pm * p0 / 2.0, d4.geometry.focus->y, false));
    }
    out.push_back(d4);

    return out;
}

// ---------------------------------------------------------------------------

double shell_radius(Family family, const Angle& alpha) {
    const double c0 = initial_concurrence(alpha);
    if (family == Family::psi) return std::sqrt(1.0 + c0 * c0 / 2.0);
    const Predictability p = predictability(Family::phi, alpha);
    return std::sqrt(1.0 + c0 * c0 / 2.0 + p.sign * p.p0);
}

ShellBounds shell_bounds(const TraceTable& trace) {
    if (trace.rows.empty()) throw std::invalid_argument("shell_bounds: empty trace");
    ShellBounds sb;
    sb.family = trace.family;
    sb.alpha = trace.alpha.radians();
    const double c0 = initial_concurrence(trace.alpha);
    const double r = shell_radius(trace.family, trace.alpha);
    sb.upper = r * r;
    if (trace.family == Family::psi) {
        sb.upper = 1.0 + c0 * c0 / 2.0;
        sb.lower = c0 * c0;
    } else {
        const Predictability p = predictability(Family::phi, trace.alpha);
        sb.upper = 1.0 + c0 * c0 / 2.0 + p.sign * p.p0;
        sb.lower = 0.0;
    }
    sb.observed_min = trace.rows.front().sum_sq;
    sb.observed_max = trace.rows.front().sum_sq;
    sb.argmin_gt = sb.argmax_gt = trace.rows.front().gt;
    sb.violation = -std::numeric_limits<double>::infinity();
    sb.sum_of_squares.reserve(trace.rows.size());
    for (const TraceRow& row : trace.rows) {
        const double s = row.sum_sq;
        sb.sum_of_squares.push_back(s);
        if (s < sb.observed_min) {
            sb.observed_min = s;
            sb.argmin_gt = row.gt;
        }
        if (s > sb.observed_max) {
            sb.observed_max = s;
            sb.argmax_gt = row.gt;
        }
        sb.violation = std::max({sb.violation, s - sb.upper, sb.lower - s});
    }
    return sb;
}

// ---------------------------------------------------------------------------

namespace {

constexpr double kDeadThreshold = -1e-12;

double bisect_edge(const TraceTable& trace, Pair pair, double lo, double hi) {
    auto dead = [&](double gt) { return evaluate(trace.family, trace.alpha, gt).unclamped[index_of(pair)] < 0.0; };
    const bool dead_lo = dead(lo);
    for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (dead(mid) == dead_lo) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

DeathReport detect_death_birth(const TraceTable& trace, Pair pair) {
    DeathReport rep;
    rep.pair = pair;
    const auto& rows = trace.rows;
    if (rows.empty()) return rep;
    auto dead_at = [&](std::size_t i) { return rows[i].unclamped[index_of(pair)] < kDeadThreshold; };

    bool in_window = dead_at(0);
    DeadWindow current;
    if (in_window) current.start = rows[0].gt;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const bool d = dead_at(i);
        if (d == in_window) continue;
        const double edge = bisect_edge(trace, pair, rows[i - 1].gt, rows[i].gt);
        if (d) {
            current = DeadWindow{};
            current.start = edge;
        } else {
            current.end = edge;
            rep.windows.push_back(current);
        }
        in_window = d;
    }
    if (in_window) {
        current.end = rows.back().gt;
        current.open_end = true;
        rep.windows.push_back(current);
    }
    if (!rep.windows.empty()) {
        const DeadWindow& w = rep.windows.front();
        rep.death_gt = w.start;
        if (!w.open_end) {
            rep.birth_gt = w.end;
            rep.delta_gt = w.length();
        }
    }
    return rep;
}

std::optional<DeadWindow> collective_death_window(const TraceTable& trace, std::span<const Pair> pairs) {
    if (pairs.empty()) return std::nullopt;
    std::vector<DeadWindow> acc = detect_death_birth(trace, pairs.front()).windows;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
        const std::vector<DeadWindow> other = detect_death_birth(trace, pairs[k]).windows;
        std::vector<DeadWindow> next;
        for (const DeadWindow& x : acc) {
            for (const DeadWindow& y : other) {
                DeadWindow w;
                w.start = std::max(x.start, y.start);
                w.end = std::min(x.end, y.end);
                w.open_end = (w.end == x.end && x.open_end) || (w.end == y.end && y.open_end);
                if (w.end > w.start) next.push_back(w);
            }
        }
        acc = std::move(next);
    }
    if (acc.empty()) return std::nullopt;
    std::sort(acc.begin(), acc.end(), [](const DeadWindow& l, const DeadWindow& r) { return l.start < r.start; });
    return acc.front();
}

std::optional<double> predicted_collective_window(const Angle& alpha) {
    const double t = alpha.tan();
    if (!(t >= 0.0 && t < 0.5)) return std::nullopt;
    const double r = std::sqrt(t);
    return std::acos(r) - std::asin(r);
}

double locate_death_birth_threshold(double alpha_lo, double alpha_hi, std::size_t samples, double alpha_tol) {
    const std::vector<double> gts = uniform_grid(kPi, samples);
    auto gap = [&](double a) {
        const TraceTable t = make_trace(Family::phi, Angle(a), gts);
        const DeathReport ab_upper = detect_death_birth(t, Pair::AB);
        const DeathReport ab_lower = detect_death_birth(t, Pair::ab);
        if (!ab_upper.death_gt || !ab_lower.birth_gt) {
            throw std::runtime_error("locate_death_birth_threshold: no AB death / ab birth at alpha " +
                                     std::to_string(a));
        }
        return *ab_upper.death_gt - *ab_lower.birth_gt;
    };
    double lo = alpha_lo;
    double hi = alpha_hi;
    const double glo = gap(lo);
    const double ghi = gap(hi);
    if (!(glo < 0.0 && ghi > 0.0)) {
        throw std::runtime_error("locate_death_birth_threshold: bracket does not change sign");
    }
    while (hi - lo > alpha_tol) {
        const double mid = 0.5 * (lo + hi);
        if (gap(mid) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// ---------------------------------------------------------------------------

SurfaceMesh surface_sample(Family family, Qubit qubit, std::span<const Angle> alpha_grid,
                           std::span<const double> gt_grid, Execution exec) {
    if (alpha_grid.empty() || gt_grid.empty()) throw std::invalid_argument("surface_sample: empty grid");
    SurfaceMesh mesh;
    mesh.family = family;
    mesh.qubit = qubit;
    mesh.pairs = pairs_of(qubit);
    mesh.alphas.assign(alpha_grid.begin(), alpha_grid.end());
    mesh.gts.assign(gt_grid.begin(), gt_grid.end());
    mesh.points.resize(alpha_grid.size() * gt_grid.size());

    const auto rows = static_cast<std::ptrdiff_t>(alpha_grid.size());
    const std::size_t cols = gt_grid.size();
    auto fill_row = [&](std::ptrdiff_t ia) {
        const Angle& a = mesh.alphas[static_cast<std::size_t>(ia)];
        for (std::size_t it = 0; it < cols; ++it) {
            const PhiConcurrences e = evaluate(family, a, mesh.gts[it]);
            SurfacePoint& p = mesh.points[static_cast<std::size_t>(ia) * cols + it];
            p.alpha = a.radians();
            p.gt = mesh.gts[it];
            for (std::size_t k = 0; k < 3; ++k) {
                p.c[k] = e.clamped[mesh.pairs[k]];
                p.unclamped[k] = e.unclamped[index_of(mesh.pairs[k])];
            }
        }
    };
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t ia = 0; ia < rows; ++ia) fill_row(ia);
    } else {
        for (std::ptrdiff_t ia = 0; ia < rows; ++ia) fill_row(ia);
    }
    return mesh;
}

std::vector<RelationCheck> projection_residuals(const SurfaceMesh& mesh, double tol) {
    const std::string q(name(mesh.qubit));
    const std::string same(name(mesh.pairs[0]));
    const std::string own(name(mesh.pairs[1]));
    const std::string cross(name(mesh.pairs[2]));

    struct Acc {
        RelationCheck rc;
        void add(double r, double gt) {
            ++rc.evaluated;
            r = std::abs(r);
            if (r > rc.max_residual || std::isnan(r)) {
                rc.max_residual = r;
                rc.worst_gt = gt;
            }
        }
    };
    std::array<Acc, 3> acc;
    const std::string prefix = std::string(name(mesh.family)) + ".projection_" + q + ".";
    acc[0].rc.id = prefix + same + "_" + own;
    acc[1].rc.id = prefix + same + "_" + cross;
    acc[2].rc.id = prefix + own + "_" + cross;
    // Own-cavity (or own-atom) concurrence scales with cos^2 for A/a and sin^2 for B/b (psi).
    const bool a_side = mesh.qubit == Qubit::A || mesh.qubit == Qubit::a;
    if (mesh.family == Family::psi) {
        acc[0].rc.equation = "(C_" + same + " - C0/2)^2/(C0^2/4) + C_" + own + "^2/w^4 = 1";
        acc[1].rc.equation = "(C_" + same + " - C0/2)^2 + C_" + cross + "^2 = C0^2/4";
        acc[2].rc.equation = "C_" + cross + " = C0/(2 w^2) C_" + own;
    } else {
        acc[0].rc.equation = "(C_" + same + " + C_" + own + "^2/(2cos^2 a) - C0/2)^2 + C0^2 C_" + own +
                             "^2/(4cos^4 a) = C0^2/4";
        acc[1].rc.equation = "no single-valued planar relation";
        acc[2].rc.equation = "C_" + cross + " + (C_" + own + " - C0/2)^2/(2cos^2 a) = C0^2/(8cos^2 a)";
    }
    std::array<bool, 3> degenerate{false, false, false};

    for (std::size_t ia = 0; ia < mesh.alphas.size(); ++ia) {
        const Angle& a = mesh.alphas[ia];
        const double c0 = initial_concurrence(a);
        const double c2 = a.cos_sq();
        const double w2 = mesh.family == Family::psi ? (a_side ? c2 : a.sin_sq()) : c2;
        const bool c0_zero = c0 < kDegenerate;
        for (std::size_t it = 0; it < mesh.gts.size(); ++it) {
            const SurfacePoint& p = mesh.at(ia, it);
            for (auto& x : acc) x.rc.total += 1;
            if (mesh.family == Family::psi) {
                if (!c0_zero && w2 >= kDegenerate) {
                    acc[0].add(sq(p.c[0] - c0 / 2.0) / (c0 * c0 / 4.0) + sq(p.c[1]) / (w2 * w2) - 1.0, p.gt);
                } else {
                    degenerate[0] = true;
                }
                acc[1].add(sq(p.c[0] - c0 / 2.0) + sq(p.c[2]) - c0 * c0 / 4.0, p.gt);
                if (w2 >= kDegenerate) {
                    acc[2].add(p.c[2] - c0 / (2.0 * w2) * p.c[1], p.gt);
                } else {
                    degenerate[2] = true;
                }
            } else {
                if (c2 < kDegenerate) {
                    degenerate[0] = degenerate[2] = true;
                    continue;
                }
                if (p.unclamped[0] > kMaskThreshold) {
                    acc[0].add(sq(p.c[0] + sq(p.c[1]) / (2.0 * c2) - c0 / 2.0) +
                                   c0 * c0 * sq(p.c[1]) / (4.0 * c2 * c2) - c0 * c0 / 4.0,
                               p.gt);
                }
                if (p.unclamped[2] > kMaskThreshold) {
                    acc[2].add(p.c[2] + sq(p.c[1] - c0 / 2.0) / (2.0 * c2) - c0 * c0 / (8.0 * c2), p.gt);
                }
            }
        }
    }

    std::vector<RelationCheck> out;
    for (std::size_t k = 0; k < 3; ++k) {
        RelationCheck rc = acc[k].rc;
        rc.tolerance = tol;
        if (rc.evaluated == 0) {
            rc.status = degenerate[k] ? CheckStatus::skipped_degenerate : CheckStatus::vacuous;
        } else {
            rc.status = rc.max_residual <= tol ? CheckStatus::pass : CheckStatus::fail;
        }
        out.push_back(rc);
    }
    return out;
}

}  // namespace djcm
