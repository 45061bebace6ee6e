#include "djcm/trace.hpp"

namespace djcm {

TraceTable make_trace(Family family, const Angle& alpha, std::span<const double> gt_grid) {
    TraceTable t;
    t.family = family;
    t.alpha = alpha;
    t.p0 = predictability(family, alpha).p0;
    t.rows.reserve(gt_grid.size());
    for (double gt : gt_grid) {
        const PhiConcurrences e = evaluate(family, alpha, gt);
        TraceRow r;
        r.gt = gt;
        r.c = e.clamped;
        r.unclamped = e.unclamped;
        r.sum_sq = e.clamped.sum_of_squares();
        t.rows.push_back(r);
    }
    return t;
}

}  // namespace djcm
