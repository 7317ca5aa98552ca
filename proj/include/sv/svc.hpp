#ifndef SV_SVC_HPP
#define SV_SVC_HPP

#include <cstdint>
#include <vector>

#include "sv/mcdm.hpp"

namespace sv {

/// Shared value creation as frontier displacement: the change in area under
/// the normalized trade-off curve.
struct SvcReport {
    double auc_before = 0.0;
    double auc_after = 0.0;
    double svc = 0.0;      // auc_after - auc_before
    bool created = false;  // svc > 1e-9
};

/// Objective reduction for target-based (goal programming) agents.
struct TargetSvcReport {
    double g_before = 0.0;
    double g_after = 0.0;
    double svc = 0.0;      // g_before - g_after
    bool created = false;  // svc > 1e-9
};

struct HypervolumeResult {
    double value = 0.0;
    double std_error = 0.0; // 0 for the exact path
    bool exact = true;
};

/// Area under the frontier over theta1 in [0,1]. Closed forms integrate
/// exactly to k/(k+1); sampled frontiers use the trapezoid rule on the
/// given points, with no resampling.
double auc(const Frontier& frontier);

SvcReport svc_without_targets(const Frontier& before, const Frontier& after);

/// Volume of the union of boxes [0, p] over all points p, inside the unit
/// hypercube. Exact by inclusion-exclusion up to 20 points, seeded Monte
/// Carlo (1e6 samples) beyond that. Dimension 2..6.
HypervolumeResult hypervolume(const std::vector<std::vector<double>>& points,
                              int dim, std::uint64_t seed = 42);

TargetSvcReport svc_with_targets(double g_before, double g_after);

} // namespace sv

#endif // SV_SVC_HPP
