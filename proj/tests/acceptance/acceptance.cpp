// Acceptance suite: one PASS/FAIL line per criterion, tolerances fixed below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "djcm/analytic.hpp"
#include "djcm/entanglement.hpp"
#include "djcm/geometry.hpp"
#include "djcm/sweep.hpp"

using namespace djcm;

namespace {

constexpr double kOracleTol = 1e-8;
constexpr double kSumRuleTol = 1e-12;
constexpr double kRelationTol = 1e-10;
constexpr double kEccTol = 1e-9;
constexpr double kFocalRatioTol = 1e-12;
constexpr double kFocusTol = 1e-9;
constexpr double kP0Tol = 1e-12;
constexpr double kWindowTol = 1e-6;
constexpr double kDeadTol = 1e-10;
constexpr double kThresholdTol = 1e-3;
constexpr double kShellTol = 1e-12;
constexpr double kPhiShellTol = 1e-9;
constexpr double kProjectionTol = 1e-10;
constexpr double kOmegaTol = 1e-12;
constexpr double kCutoffTol = 1e-10;
constexpr double kLocalUnitaryTol = 1e-9;

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
    std::printf("%s [%2d] %-34s %s\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::string fmt(const char* f, double a, double b = NAN, double c = NAN) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

std::vector<Angle> full_alpha_grid() { return merge_alphas(uniform_alpha_grid(65), special_alphas()); }
std::vector<double> full_gt_grid() { return uniform_grid(2 * kPi, 257); }

bool interior(const Angle& a) { return a.sin_sq() > 1e-12 && a.cos_sq() > 1e-12; }

double max_sextet_gap(const ConcurrenceSextet& x, const ConcurrenceSextet& y) {
    double m = 0.0;
    for (Pair p : kAllPairs) m = std::max(m, std::abs(x[p] - y[p]));
    return m;
}

void oracle_equivalence() {
    const std::vector<Angle> alphas = uniform_alpha_grid(33);
    const std::vector<double> gts = uniform_grid(2 * kPi, 65);
    const SpaceConfig cfg;
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (Family f : {Family::psi, Family::phi}) {
        worst = std::max(worst, compare_oracle(f, alphas, gts, cfg, Execution::serial).max_concurrence_deviation);
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(1, "oracle equivalence (33x65, both)", worst <= kOracleTol && secs < 60.0,
           fmt("max|closed-numeric|=%.3g tol=%.0e serial=%.2fs", worst, kOracleTol, secs));
}

void psi_sum_rule() {
    double worst = 0.0;
    for (const TraceTable& t : analytic_traces(Family::psi, full_alpha_grid(), full_gt_grid())) {
        const double c0 = std::abs(std::sin(2.0 * t.alpha.radians()));
        for (const TraceRow& r : t.rows) worst = std::max(worst, std::abs(r.c[Pair::AB] + r.c[Pair::ab] - c0));
    }
    report(2, "psi sum rule", worst <= kSumRuleTol, fmt("max residual=%.3g tol=%.0e", worst, kSumRuleTol));
}

void psi_conic_suite() {
    double rel = 0.0;
    bool statuses_ok = true;
    for (const TraceTable& t : analytic_traces(Family::psi, full_alpha_grid(), full_gt_grid())) {
        for (const RelationCheck& rc : psi_relation_residuals(t, kRelationTol)) {
            if (rc.status == CheckStatus::fail) statuses_ok = false;
            if (rc.evaluated > 0) rel = std::max(rel, rc.max_residual);
        }
    }
    double ecc = 0.0;
    for (const Angle& a : full_alpha_grid()) {
        if (!interior(a)) continue;
        for (const ConicDescriptor& d : psi_conic_parameters(a)) {
            for (const ParameterComparison& c : d.comparisons) {
                if (c.name == "eccentricity") ecc = std::max(ecc, c.deviation);
            }
        }
    }
    double ratio = NAN;
    for (const ConicDescriptor& d : psi_conic_parameters(Angle(kPi / 6))) {
        for (const ParameterComparison& c : d.comparisons) {
            if (c.name == "focal_ratio_b_over_a") ratio = c.geometric;
        }
    }
    const double ratio_dev = std::abs(ratio - std::sqrt(3.0));
    report(3, "psi conic suite", statuses_ok && rel <= kRelationTol && ecc <= kEccTol && ratio_dev <= kFocalRatioTol,
           fmt("relations=%.3g ecc two-route=%.3g |f_b/f_a - sqrt3|=%.3g", rel, ecc, ratio_dev));
}

void phi_conic_suite() {
    double rel = 0.0;
    bool statuses_ok = true;
    std::size_t evaluated = 0;
    for (const TraceTable& t : analytic_traces(Family::phi, full_alpha_grid(), full_gt_grid())) {
        for (const RelationCheck& rc : phi_relation_residuals(t, kRelationTol)) {
            if (rc.status == CheckStatus::fail) statuses_ok = false;
            if (rc.evaluated > 0) rel = std::max(rel, rc.max_residual);
            evaluated += rc.evaluated;
        }
    }
    const Angle a0 = Angle::from_tan(1, 2);
    double printed = NAN, geometric = NAN;
    for (const ConicDescriptor& d : phi_conic_parameters(a0)) {
        if (d.id != "phi.ellipse_diff_Aa") continue;
        for (const ParameterComparison& c : d.comparisons) {
            if (c.name == "focal_distance") {
                printed = c.printed;
                geometric = c.geometric;
            }
        }
    }
    const double p0 = predictability(Family::phi, a0).p0;
    const bool ok = statuses_ok && evaluated > 0 && rel <= kRelationTol && std::abs(printed) <= kFocusTol &&
                    std::abs(geometric) <= kFocusTol && std::abs(p0 - 0.6) <= kP0Tol;
    report(4, "phi conic suite", ok,
           fmt("masked relations=%.3g f(atan 1/2) printed=%.3g geometric=%.3g", rel, printed, geometric) +
               fmt(" P0=%.17g", p0));
}

void death_window() {
    const Angle a(kPi / 9);
    const TraceTable t = make_trace(Family::phi, a, uniform_grid(kPi, 1025));
    const std::array<Pair, 4> four{Pair::AB, Pair::ab, Pair::Ab, Pair::aB};
    const std::optional<DeadWindow> w = collective_death_window(t, four);
    const double r = std::sqrt(std::tan(kPi / 9));
    const double expected = std::acos(r) - std::asin(r);
    const double detected = w ? w->length() : NAN;
    const double dev = std::abs(detected - expected);

    double dead_max = 0.0;
    double alive_min = INFINITY;
    bool checked = false;
    if (w) {
        const SpaceConfig cfg;
        for (int k = 1; k < 64; ++k) {
            const double gt = w->start + (w->end - w->start) * k / 64.0;
            const ConcurrenceSextet cf = phi_concurrences(a, gt);
            const ConcurrenceSextet num = sextet_from_state(phi_state(a, gt, gt, cfg), cfg);
            for (const ConcurrenceSextet* s : {&cf, &num}) {
                for (Pair p : four) dead_max = std::max(dead_max, (*s)[p]);
                alive_min = std::min({alive_min, (*s)[Pair::Aa], (*s)[Pair::Bb]});
            }
            checked = true;
        }
    }
    const bool ok = w && dev <= kWindowTol && checked && dead_max < kDeadTol && alive_min > 0.0;
    report(5, "sudden-death window at pi/9", ok,
           fmt("g*dtau detected=%.12f formula=%.12f dev=%.3g", detected, expected, dev) +
               fmt(" max dead C=%.3g min C_Aa,Bb=%.3g", dead_max, alive_min));
}

void death_birth_threshold() {
    const double found = locate_death_birth_threshold(kPi / 12, 0.7);
    const double dev = std::abs(found - std::atan(0.5));
    report(6, "death/birth threshold", dev <= kThresholdTol,
           fmt("alpha*=%.12f atan(1/2)=%.12f dev=%.3g", found, std::atan(0.5), dev));
}

void psi_shell() {
    double excursion = 0.0, upper_gap = 0.0, lower_gap = 0.0;
    const std::vector<double> gts = full_gt_grid();
    const std::size_t quarter = 32;  // gts[32] == pi/4
    for (const TraceTable& t : analytic_traces(Family::psi, full_alpha_grid(), gts)) {
        const ShellBounds sb = shell_bounds(t);
        excursion = std::max(excursion, sb.violation);
        upper_gap = std::max(upper_gap, std::abs(t.rows[quarter].sum_sq - sb.upper));
        lower_gap = std::max(lower_gap, std::abs(t.rows[0].sum_sq - sb.lower));
    }
    const bool ok = excursion <= kShellTol && upper_gap <= kShellTol && lower_gap <= kShellTol;
    report(7, "psi hypersphere shell", ok,
           fmt("max excursion=%.3g |sum(pi/4)-upper|=%.3g |sum(0)-lower|=%.3g", excursion, upper_gap, lower_gap));
}

void phi_shell() {
    double excess = -INFINITY;
    for (const TraceTable& t : analytic_traces(Family::phi, full_alpha_grid(), full_gt_grid())) {
        const ShellBounds sb = shell_bounds(t);
        excess = std::max(excess, sb.observed_max - sb.upper);
    }
    report(8, "phi hypersphere bound", excess <= kPhiShellTol,
           fmt("max(sum - (1 + C0^2/2 + sign P0))=%.3g tol=%.0e", excess, kPhiShellTol));
}

void surface_projection() {
    double worst = 0.0;
    std::size_t points = 0;
    bool ok = true;
    const std::vector<Angle> alphas = full_alpha_grid();
    const std::vector<double> gts = full_gt_grid();
    for (Family f : {Family::psi, Family::phi}) {
        for (Qubit q : kAllQubits) {
            for (const RelationCheck& rc : projection_residuals(surface_sample(f, q, alphas, gts), kProjectionTol)) {
                if (rc.failed()) ok = false;
                if (rc.evaluated > 0) worst = std::max(worst, rc.max_residual);
                points += rc.evaluated;
            }
        }
    }
    report(9, "surface/projection identity", ok && points > 0 && worst <= kProjectionTol,
           fmt("max residual=%.3g over %.0f projected points", worst, static_cast<double>(points)));
}

void invariance() {
    const std::vector<Angle> alphas{Angle(0.2), Angle::from_tan(1, 2), Angle::quarter_pi(), Angle(1.2)};
    const std::vector<double> gts = uniform_grid(2 * kPi, 33);

    // omega and n_max: numeric evolution through the spectral propagator, Wootters on each
    // state. The RK4 route is reported too; its integration error sits near 5e-11.
    double omega_dev = 0.0;
    double cutoff_dev = 0.0;
    double rk4_omega_dev = 0.0;
    for (Family f : {Family::psi, Family::phi}) {
        for (const Angle& a : alphas) {
            const SpaceConfig base;
            const OracleRow ref = oracle_row(f, a, gts, base, Propagator::spectral);
            const OracleRow ref_rk4 = oracle_row(f, a, gts, base);
            for (double omega : {0.0, 2.5}) {
                SpaceConfig cfg;
                cfg.omega = omega;
                const OracleRow row = oracle_row(f, a, gts, cfg, Propagator::spectral);
                const OracleRow rk4 = oracle_row(f, a, gts, cfg);
                for (std::size_t k = 0; k < gts.size(); ++k) {
                    omega_dev = std::max(omega_dev, max_sextet_gap(row.numeric[k], ref.numeric[k]));
                    rk4_omega_dev = std::max(rk4_omega_dev, max_sextet_gap(rk4.numeric[k], ref_rk4.numeric[k]));
                }
            }
            for (int n : {2, 3}) {
                SpaceConfig cfg;
                cfg.photon_cutoff = n;
                const OracleRow row = oracle_row(f, a, gts, cfg, Propagator::spectral);
                for (std::size_t k = 0; k < gts.size(); ++k) {
                    cutoff_dev = std::max(cutoff_dev, max_sextet_gap(row.numeric[k], ref.numeric[k]));
                }
            }
        }
    }

    std::mt19937_64 rng(20240611);
    double lu_dev = 0.0;
    const SpaceConfig cfg;
    for (Family f : {Family::psi, Family::phi}) {
        for (const Angle& a : alphas) {
            for (std::size_t k = 0; k < gts.size(); k += 4) {
                const Ket psi = f == Family::psi ? psi_state(a, gts[k], cfg) : phi_state(a, gts[k], gts[k], cfg);
                for (Pair p : kAllPairs) {
                    const DensityMatrix rho = reduce(psi, QubitPair(p), cfg);
                    const double c = wootters_concurrence(rho);
                    for (int r = 0; r < 10; ++r) {
                        const DensityMatrix rot = apply_local(rho, random_unitary(rng), random_unitary(rng));
                        lu_dev = std::max(lu_dev, std::abs(wootters_concurrence(rot) - c));
                    }
                }
            }
        }
    }
    const bool ok = omega_dev <= kOmegaTol && cutoff_dev <= kCutoffTol && lu_dev <= kLocalUnitaryTol;
    report(10, "invariance suite", ok,
           fmt("omega {0,1,2.5}=%.3g n_max {1,2,3}=%.3g local unitaries=%.3g", omega_dev, cutoff_dev, lu_dev) +
               fmt(" (rk4 omega=%.3g)", rk4_omega_dev));
}

}  // namespace

int main() {
    const std::vector<std::function<void()>> criteria{
        oracle_equivalence, psi_sum_rule, psi_conic_suite, phi_conic_suite, death_window,
        death_birth_threshold, psi_shell, phi_shell, surface_projection, invariance};
    for (const auto& c : criteria) {
        try {
            c();
        } catch (const std::exception& e) {
            std::printf("FAIL      exception: %s\n", e.what());
            ++failures;
        }
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
