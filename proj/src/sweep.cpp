#include "djcm/sweep.hpp"

#include <cmath>
#include <stdexcept>

#include "djcm/entanglement.hpp"

namespace djcm {

std::vector<TraceTable> analytic_traces(Family family, std::span<const Angle> alphas,
                                        std::span<const double> gt_grid, Execution exec) {
    std::vector<TraceTable> out(alphas.size());
    const auto n = static_cast<std::ptrdiff_t>(alphas.size());
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = make_trace(family, alphas[i], gt_grid);
    } else {
        for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = make_trace(family, alphas[i], gt_grid);
    }
    return out;
}

OracleRow oracle_row(Family family, const Angle& alpha, std::span<const double> gt_grid,
                     const SpaceConfig& cfg, Propagator prop) {
    cfg.validate();
    OracleRow row;
    row.alpha = alpha;
    const Operator h = build_hamiltonian(cfg);
    Ket psi = initial_state(family, alpha, cfg);
    double t_prev = 0.0;
    for (double gt : gt_grid) {
        const double t = gt / cfg.g;
        if (t != t_prev) {
            psi = prop == Propagator::rk4 ? evolve_numeric(h, psi, t - t_prev) : evolve_spectral(h, psi, t - t_prev);
        }
        t_prev = t;

        const Ket exact = family == Family::psi ? psi_state(alpha, gt, cfg)
                                                : phi_state(alpha, gt, cfg.omega * t, cfg);
        row.state_deviation.push_back(max_deviation_up_to_phase(psi, exact));
        row.norm_drift.push_back(std::abs(psi.norm() - 1.0));

        ConcurrenceSextet num = sextet_from_state(psi, cfg);
        num.alpha = alpha.radians();
        num.gt = gt;
        num.family = family;
        row.numeric.push_back(num);
        row.closed_form.push_back(evaluate(family, alpha, gt).clamped);
    }
    return row;
}

OracleComparison compare_oracle(Family family, std::span<const Angle> alphas,
                                std::span<const double> gt_grid, const SpaceConfig& cfg,
                                Execution exec) {
    std::vector<OracleRow> rows(alphas.size());
    const auto n = static_cast<std::ptrdiff_t>(alphas.size());
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < n; ++i) rows[i] = oracle_row(family, alphas[i], gt_grid, cfg);
    } else {
        for (std::ptrdiff_t i = 0; i < n; ++i) rows[i] = oracle_row(family, alphas[i], gt_grid, cfg);
    }

    OracleComparison cmp;
    cmp.family = family;
    for (const OracleRow& r : rows) {
        for (std::size_t k = 0; k < r.numeric.size(); ++k) {
            ++cmp.points;
            for (Pair p : kAllPairs) {
                const double d = std::abs(r.numeric[k][p] - r.closed_form[k][p]);
                if (d > cmp.max_concurrence_deviation) {
                    cmp.max_concurrence_deviation = d;
                    cmp.worst_alpha = r.alpha.radians();
                    cmp.worst_gt = r.numeric[k].gt;
                    cmp.worst_pair = p;
                }
            }
            cmp.max_state_deviation = std::max(cmp.max_state_deviation, r.state_deviation[k]);
            cmp.max_norm_drift = std::max(cmp.max_norm_drift, r.norm_drift[k]);
        }
    }
    return cmp;
}

}  // namespace djcm
