#include "djcm/commands.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include <json.hpp>

#include "djcm/entanglement.hpp"
#include "djcm/error.hpp"
#include "djcm/io.hpp"
#include "djcm/sweep.hpp"
#include "djcm/trace.hpp"

namespace djcm {

using json = nlohmann::ordered_json;

void RunConfig::validate() const {
    space.validate();
    if (alpha_grid < 2) throw InvalidConfig("--alpha-grid must be at least 2");
    if (gt_steps < 1) throw InvalidConfig("--gt-steps must be at least 1");
    if (!(gt_max > 0.0) || !std::isfinite(gt_max)) throw InvalidConfig("--gt-max must be positive");
    if (!(tol > 0.0)) throw InvalidConfig("--tol must be positive");
    if (!format.empty() && format != "csv" && format != "json") {
        throw InvalidConfig("--format must be csv or json");
    }
    for (const Angle& a : alphas) {
        try {
            check_alpha(a);
        } catch (const std::domain_error& e) {
            throw InvalidConfig(e.what());
        }
    }
}

std::vector<double> RunConfig::gt_grid() const { return uniform_grid(gt_max, gt_steps); }

namespace {

std::string format_or(const RunConfig& cfg, const char* fallback) {
    return cfg.format.empty() ? fallback : cfg.format;
}

json config_json(const RunConfig& cfg) {
    json j;
    j["family"] = std::string(name(cfg.family));
    j["alpha_grid"] = cfg.alpha_grid;
    json extra = json::array();
    for (const Angle& a : cfg.alphas) extra.push_back(a.to_string());
    j["alpha"] = extra;
    j["gt_max"] = cfg.gt_max;
    j["gt_steps"] = cfg.gt_steps;
    j["g"] = cfg.space.g;
    j["omega"] = cfg.space.omega;
    j["nmax"] = cfg.space.photon_cutoff;
    j["tol"] = cfg.tol;
    j["seed"] = cfg.seed;
    return j;
}

Metadata config_meta(const RunConfig& cfg) {
    return {{"family", std::string(name(cfg.family))},
            {"g", format_double(cfg.space.g)},
            {"omega", format_double(cfg.space.omega)},
            {"gt_max", format_double(cfg.gt_max)},
            {"gt_steps", std::to_string(cfg.gt_steps)},
            {"time", "physical t = gt / g"}};
}

json angle_json(const Angle& a) {
    json j;
    j["label"] = a.to_string();
    j["radians"] = a.radians();
    return j;
}

json relation_json(const RelationCheck& rc) {
    json j;
    j["id"] = rc.id;
    j["equation"] = rc.equation;
    j["status"] = std::string(name(rc.status));
    j["max_residual"] = rc.max_residual;
    j["worst_gt"] = rc.worst_gt;
    j["evaluated"] = rc.evaluated;
    j["total"] = rc.total;
    j["tolerance"] = rc.tolerance;
    return j;
}

/// Folds per-alpha checks of the same relation into one summary.
struct RelationSummary {
    RelationCheck agg;
    double worst_alpha = 0.0;
    std::size_t failing_alphas = 0;
    std::size_t passing_alphas = 0;

    void add(const RelationCheck& rc, double alpha) {
        if (agg.id.empty()) {
            agg.id = rc.id;
            agg.equation = rc.equation;
            agg.tolerance = rc.tolerance;
        }
        agg.evaluated += rc.evaluated;
        agg.total += rc.total;
        if (rc.status == CheckStatus::fail) ++failing_alphas;
        if (rc.status == CheckStatus::pass) ++passing_alphas;
        if (rc.evaluated > 0 && (rc.max_residual > agg.max_residual || std::isnan(rc.max_residual))) {
            agg.max_residual = rc.max_residual;
            agg.worst_gt = rc.worst_gt;
            worst_alpha = alpha;
        }
    }

    json to_json() const {
        RelationCheck r = agg;
        r.status = failing_alphas > 0 ? CheckStatus::fail
                   : passing_alphas > 0 ? CheckStatus::pass
                   : agg.evaluated == 0 && agg.total > 0 ? CheckStatus::vacuous
                                                         : CheckStatus::skipped_degenerate;
        json j = relation_json(r);
        j["worst_alpha"] = worst_alpha;
        j["failing_alphas"] = failing_alphas;
        return j;
    }
};

json geometry_json(const ConicGeometry& g) {
    json j;
    j["kind"] = std::string(name(g.kind));
    j["eccentricity"] = g.eccentricity;
    if (g.center) j["center"] = {g.center->x, g.center->y};
    if (g.kind == ConicKind::ellipse || g.kind == ConicKind::circle) {
        j["semi_major"] = g.semi_major;
        j["semi_minor"] = g.semi_minor;
        j["focal_distance"] = g.focal_distance;
        j["major_axis_angle"] = g.major_axis_angle;
        j["foci"] = {{g.foci[0].x, g.foci[0].y}, {g.foci[1].x, g.foci[1].y}};
    }
    if (g.vertex) j["vertex"] = {g.vertex->x, g.vertex->y};
    if (g.focus) j["focus"] = {g.focus->x, g.focus->y};
    if (g.kind == ConicKind::parabola) j["focal_length"] = g.focal_length;
    if (g.slope) j["slope"] = *g.slope;
    return j;
}

json descriptor_json(const ConicDescriptor& d) {
    json j;
    j["id"] = d.id;
    j["x_axis"] = d.x_axis;
    j["y_axis"] = d.y_axis;
    j["claimed_kind"] = std::string(name(d.kind));
    j["coefficients"] = d.implicit.coefficients();
    j["geometry"] = geometry_json(d.geometry);
    json cmp = json::array();
    for (const ParameterComparison& c : d.comparisons) {
        json x;
        x["name"] = c.name;
        x["printed"] = c.printed;
        x["geometric"] = c.geometric;
        x["deviation"] = c.deviation;
        x["tolerance"] = c.tolerance;
        x["asserted"] = c.asserted;
        x["agrees"] = c.agrees();
        cmp.push_back(x);
    }
    j["comparisons"] = cmp;
    return j;
}

std::vector<ConicDescriptor> conic_parameters(Family f, const Angle& a) {
    return f == Family::psi ? psi_conic_parameters(a) : phi_conic_parameters(a);
}

bool interior(const Angle& a) { return a.sin_sq() > 1e-12 && a.cos_sq() > 1e-12; }

std::vector<Angle> verify_alphas(const RunConfig& cfg) {
    std::vector<Angle> extra = special_alphas();
    extra.insert(extra.end(), cfg.alphas.begin(), cfg.alphas.end());
    return merge_alphas(uniform_alpha_grid(cfg.alpha_grid), extra);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

// ---------------------------------------------------------------------------

CommandResult cmd_trace(const RunConfig& cfg) {
    cfg.validate();
    if (cfg.alphas.size() != 1) throw InvalidConfig("trace needs exactly one --alpha");
    const Angle& alpha = cfg.alphas.front();
    const std::vector<double> gts = cfg.gt_grid();
    const TraceTable trace = make_trace(cfg.family, alpha, gts);

    CommandResult res;
    if (format_or(cfg, "csv") == "csv") {
        Metadata meta = config_meta(cfg);
        meta.insert(meta.begin() + 1, {"alpha", alpha.to_string()});
        std::ostringstream os;
        write_trace_csv(os, trace, meta);
        res.content = os.str();
    } else {
        json j;
        j["config"] = config_json(cfg);
        j["alpha"] = angle_json(alpha);
        j["p0"] = trace.p0;
        json rows = json::array();
        for (const TraceRow& r : trace.rows) {
            json row;
            row["gt"] = r.gt;
            row["t"] = r.gt / cfg.space.g;
            for (Pair p : kAllPairs) row["c_" + std::string(name(p))] = r.c[p];
            row["sum_sq"] = r.sum_sq;
            rows.push_back(row);
        }
        j["rows"] = rows;
        res.content = dump(j);
    }
    return res;
}

CommandResult cmd_surface(const RunConfig& cfg) {
    cfg.validate();
    const std::vector<Angle> alphas = cfg.alphas.empty() ? uniform_alpha_grid(cfg.alpha_grid) : cfg.alphas;
    const std::vector<double> gts = cfg.gt_grid();
    const SurfaceMesh mesh = surface_sample(cfg.family, cfg.qubit, alphas, gts);

    CommandResult res;
    if (format_or(cfg, "csv") == "csv") {
        Metadata meta = config_meta(cfg);
        meta.insert(meta.begin() + 1, {"qubit", std::string(name(cfg.qubit))});
        meta.insert(meta.begin() + 2, {"alpha_points", std::to_string(alphas.size())});
        std::ostringstream os;
        write_surface_csv(os, mesh, meta);
        res.content = os.str();
    } else {
        json j;
        j["config"] = config_json(cfg);
        j["qubit"] = std::string(name(cfg.qubit));
        j["pairs"] = {std::string(name(mesh.pairs[0])), std::string(name(mesh.pairs[1])),
                      std::string(name(mesh.pairs[2]))};
        json pts = json::array();
        for (const SurfacePoint& p : mesh.points) pts.push_back({p.alpha, p.gt, p.c[0], p.c[1], p.c[2]});
        j["points"] = pts;
        res.content = dump(j);
    }
    return res;
}

CommandResult cmd_conics(const RunConfig& cfg) {
    cfg.validate();
    std::vector<Angle> alphas;
    if (cfg.alphas.empty()) {
        for (const Angle& a : verify_alphas(cfg)) {
            if (interior(a)) alphas.push_back(a);
        }
    } else {
        for (const Angle& a : cfg.alphas) {
            if (!interior(a)) throw InvalidConfig("conics needs 0 < alpha < pi/2, got " + a.to_string());
            alphas.push_back(a);
        }
    }

    CommandResult res;
    std::vector<std::string> warnings;
    json table = json::array();
    std::ostringstream csv;
    csv << "alpha,conic,parameter,printed,geometric,deviation,asserted,agrees\n";
    for (const Angle& a : alphas) {
        json entry;
        entry["alpha"] = angle_json(a);
        json ds = json::array();
        for (const ConicDescriptor& d : conic_parameters(cfg.family, a)) {
            ds.push_back(descriptor_json(d));
            for (const ParameterComparison& c : d.comparisons) {
                csv << format_double(a.radians()) << ',' << d.id << ',' << c.name << ','
                    << format_double(c.printed) << ',' << format_double(c.geometric) << ','
                    << format_double(c.deviation) << ',' << (c.asserted ? 1 : 0) << ','
                    << (c.agrees() ? 1 : 0) << '\n';
                if (c.agrees()) continue;
                const std::string tag = d.id + "." + c.name + "@" + a.to_string();
                if (c.asserted) {
                    res.failures.push_back("conic:" + tag);
                } else {
                    warnings.push_back(tag);
                }
            }
        }
        entry["conics"] = ds;
        table.push_back(entry);
    }

    if (format_or(cfg, "json") == "csv") {
        res.content = csv.str();
    } else {
        json j;
        j["config"] = config_json(cfg);
        j["alphas"] = table;
        j["warnings"] = warnings;
        j["failures"] = res.failures;
        res.content = dump(j);
    }
    res.exit_code = res.failures.empty() ? 0 : 1;
    return res;
}

// ---------------------------------------------------------------------------

CommandResult cmd_verify(const RunConfig& cfg) {
    cfg.validate();
    if (format_or(cfg, "json") != "json") throw InvalidConfig("verify writes a JSON report only");
    const std::vector<Angle> alphas = verify_alphas(cfg);
    const std::vector<double> gts = cfg.gt_grid();
    const Family family = cfg.family;

    CommandResult res;
    json report;
    report["config"] = config_json(cfg);
    report["alpha_points"] = alphas.size();
    report["gt_points"] = gts.size();

    // Relations.
    const std::vector<TraceTable> traces = analytic_traces(family, alphas, gts);
    std::map<std::string, RelationSummary> relations;
    for (const TraceTable& t : traces) {
        for (const RelationCheck& rc : relation_residuals(t, cfg.tol)) relations[rc.id].add(rc, t.alpha.radians());
    }
    json rel = json::array();
    for (const auto& [id, s] : relations) {
        rel.push_back(s.to_json());
        if (s.failing_alphas > 0) res.failures.push_back("relation:" + id);
    }
    report["relations"] = rel;

    // Shell bounds.
    {
        json shell = json::array();
        bool ok = true;
        for (const TraceTable& t : traces) {
            const ShellBounds sb = shell_bounds(t);
            json x;
            x["alpha"] = t.alpha.to_string();
            x["lower"] = sb.lower;
            x["upper"] = sb.upper;
            x["observed_min"] = sb.observed_min;
            x["argmin_gt"] = sb.argmin_gt;
            x["observed_max"] = sb.observed_max;
            x["argmax_gt"] = sb.argmax_gt;
            x["upper_gap"] = sb.upper - sb.observed_max;
            x["lower_gap"] = sb.observed_min - sb.lower;
            x["violation"] = sb.violation;
            x["contained"] = sb.contained();
            ok = ok && sb.contained();
            shell.push_back(x);
        }
        report["shell"] = shell;
        if (!ok) res.failures.push_back("shell:containment");
    }

    // Numeric oracle.
    {
        constexpr double kOracleTol = 1e-8;
        const OracleComparison cmp = compare_oracle(family, alphas, gts, cfg.space);
        json x;
        x["points"] = cmp.points;
        x["max_concurrence_deviation"] = cmp.max_concurrence_deviation;
        x["worst_alpha"] = cmp.worst_alpha;
        x["worst_gt"] = cmp.worst_gt;
        x["worst_pair"] = std::string(name(cmp.worst_pair));
        x["max_state_deviation"] = cmp.max_state_deviation;
        x["max_norm_drift"] = cmp.max_norm_drift;
        x["tolerance"] = kOracleTol;
        const bool ok = cmp.max_concurrence_deviation <= kOracleTol && cmp.max_state_deviation <= kOracleTol;
        x["pass"] = ok;
        report["oracle"] = x;
        if (!ok) res.failures.push_back("oracle:closed_form_vs_numeric");
    }

    // Local-unitary invariance of the Wootters routine.
    {
        constexpr double kLuTol = 1e-9;
        std::mt19937_64 rng(cfg.seed);
        double worst = 0.0;
        std::size_t samples = 0;
        const std::size_t stride = std::max<std::size_t>(1, gts.size() / 8);
        for (std::size_t ia = 0; ia < alphas.size(); ia += std::max<std::size_t>(1, alphas.size() / 8)) {
            for (std::size_t it = 0; it < gts.size(); it += stride) {
                const Ket psi = family == Family::psi
                                    ? psi_state(alphas[ia], gts[it], cfg.space)
                                    : phi_state(alphas[ia], gts[it], cfg.space.omega * gts[it] / cfg.space.g,
                                                cfg.space);
                for (Pair p : kAllPairs) {
                    const DensityMatrix rho = reduce(psi, QubitPair(p), cfg.space);
                    const DensityMatrix rot = apply_local(rho, random_unitary(rng), random_unitary(rng));
                    worst = std::max(worst, std::abs(wootters_concurrence(rho) - wootters_concurrence(rot)));
                    ++samples;
                }
            }
        }
        json x;
        x["samples"] = samples;
        x["max_deviation"] = worst;
        x["tolerance"] = kLuTol;
        x["pass"] = worst <= kLuTol;
        report["local_unitary_invariance"] = x;
        if (worst > kLuTol) res.failures.push_back("invariance:local_unitary");
    }

    // Sudden death (phi only).
    if (family == Family::phi) {
        constexpr double kWindowTol = 1e-6;
        const std::vector<double> dense = uniform_grid(kPi, 1025);
        const std::array<Pair, 4> four{Pair::AB, Pair::ab, Pair::Ab, Pair::aB};
        json death = json::array();
        bool ok = true;
        for (const Angle& a : alphas) {
            const TraceTable t = make_trace(Family::phi, a, dense);
            json x;
            x["alpha"] = a.to_string();
            json pairs;
            for (Pair p : kAllPairs) {
                const DeathReport rep = detect_death_birth(t, p);
                json w = json::array();
                for (const DeadWindow& d : rep.windows) w.push_back({d.start, d.end});
                json r;
                r["death_gt"] = rep.death_gt ? json(*rep.death_gt) : json(nullptr);
                r["birth_gt"] = rep.birth_gt ? json(*rep.birth_gt) : json(nullptr);
                r["windows"] = w;
                pairs[std::string(name(p))] = r;
            }
            x["pairs"] = pairs;
            const std::optional<DeadWindow> win = collective_death_window(t, four);
            const std::optional<double> predicted = predicted_collective_window(a);
            const double detected_len = win ? win->length() : 0.0;
            const double predicted_len = predicted.value_or(0.0);
            x["collective_window"] = win ? json{win->start, win->end} : json(nullptr);
            x["delta_gt_detected"] = detected_len;
            x["delta_gt_predicted"] = predicted ? json(*predicted) : json(nullptr);
            x["deviation"] = std::abs(detected_len - predicted_len);
            const bool good = std::abs(detected_len - predicted_len) <= kWindowTol;
            x["pass"] = good;
            ok = ok && good;
            death.push_back(x);
        }
        report["death_birth"] = death;
        if (!ok) res.failures.push_back("death:collective_window");

        constexpr double kThresholdTol = 1e-3;
        const double found = locate_death_birth_threshold(kPi / 12.0, 0.7);
        const double expected = std::atan(0.5);
        json th;
        th["located"] = found;
        th["expected"] = expected;
        th["deviation"] = std::abs(found - expected);
        th["tolerance"] = kThresholdTol;
        th["pass"] = std::abs(found - expected) <= kThresholdTol;
        report["death_birth_threshold"] = th;
        if (!th["pass"].get<bool>()) res.failures.push_back("death:threshold");
    }

    // Conic parameters, printed vs geometric.
    {
        json conics = json::array();
        std::vector<std::string> warnings;
        for (const Angle& a : alphas) {
            if (!interior(a)) continue;
            for (const ConicDescriptor& d : conic_parameters(family, a)) {
                for (const ParameterComparison& c : d.comparisons) {
                    if (c.agrees()) continue;
                    const std::string tag = d.id + "." + c.name + "@" + a.to_string();
                    json x;
                    x["conic"] = d.id;
                    x["parameter"] = c.name;
                    x["alpha"] = a.to_string();
                    x["printed"] = c.printed;
                    x["geometric"] = c.geometric;
                    x["deviation"] = c.deviation;
                    x["asserted"] = c.asserted;
                    conics.push_back(x);
                    if (c.asserted) {
                        res.failures.push_back("conic:" + tag);
                    } else {
                        warnings.push_back(tag);
                    }
                }
            }
        }
        report["conic_mismatches"] = conics;
        report["warnings"] = warnings;
    }

    // Surface projections.
    {
        json proj = json::array();
        for (Qubit q : kAllQubits) {
            const SurfaceMesh mesh = surface_sample(family, q, alphas, gts);
            for (const RelationCheck& rc : projection_residuals(mesh, cfg.tol)) {
                proj.push_back(relation_json(rc));
                if (rc.failed()) res.failures.push_back("projection:" + rc.id);
            }
        }
        report["projections"] = proj;
    }

    report["failures"] = res.failures;
    report["status"] = res.failures.empty() ? "pass" : "fail";
    res.exit_code = res.failures.empty() ? 0 : 1;
    res.content = dump(report);
    return res;
}

}  // namespace djcm
