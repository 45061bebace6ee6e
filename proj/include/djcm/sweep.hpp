#pragma once

#include <span>
#include <vector>

#include "djcm/analytic.hpp"
#include "djcm/angle.hpp"
#include "djcm/execution.hpp"
#include "djcm/hilbert.hpp"
#include "djcm/trace.hpp"

namespace djcm {

/// One closed-form trace per alpha, in alpha order.
std::vector<TraceTable> analytic_traces(Family family, std::span<const Angle> alphas,
                                        std::span<const double> gt_grid,
                                        Execution exec = Execution::parallel);

enum class Propagator { rk4, spectral };

/// Numeric oracle along one alpha row: the initial state is evolved from each gt node to
/// the next (t = gt / g) and every node is reduced and passed through Wootters.
struct OracleRow {
    Angle alpha;
    std::vector<ConcurrenceSextet> numeric;
    std::vector<ConcurrenceSextet> closed_form;
    std::vector<double> state_deviation;  ///< max entry deviation up to a global phase
    std::vector<double> norm_drift;
};

OracleRow oracle_row(Family family, const Angle& alpha, std::span<const double> gt_grid,
                     const SpaceConfig& cfg, Propagator prop = Propagator::rk4);

struct OracleComparison {
    Family family = Family::psi;
    std::size_t points = 0;
    double max_concurrence_deviation = 0.0;
    double worst_alpha = 0.0;
    double worst_gt = 0.0;
    Pair worst_pair = Pair::AB;
    double max_state_deviation = 0.0;
    double max_norm_drift = 0.0;
};

/// Rows are evaluated independently (in parallel when asked) and reduced in alpha order,
/// so serial and parallel runs give identical results.
OracleComparison compare_oracle(Family family, std::span<const Angle> alphas,
                                std::span<const double> gt_grid, const SpaceConfig& cfg,
                                Execution exec = Execution::parallel);

}  // namespace djcm
