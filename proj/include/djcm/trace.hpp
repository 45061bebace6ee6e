#pragma once

#include <array>
#include <span>
#include <vector>

#include "djcm/analytic.hpp"

namespace djcm {

struct TraceRow {
    double gt = 0.0;
    ConcurrenceSextet c;
    std::array<double, 6> unclamped{};
    double sum_sq = 0.0;
};

/// Closed-form concurrences of one family at fixed alpha along a gt grid.
struct TraceTable {
    Family family = Family::psi;
    Angle alpha;
    double p0 = 0.0;
    std::vector<TraceRow> rows;
};

TraceTable make_trace(Family family, const Angle& alpha, std::span<const double> gt_grid);

}  // namespace djcm
