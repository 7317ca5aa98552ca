#ifndef SV_MCDM_HPP
#define SV_MCDM_HPP

#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sv/simplex.hpp"

namespace sv {

/// h value selecting the Chebyshev (max) metric.
inline constexpr double kInfinityH = std::numeric_limits<double>::infinity();

/// One criterion: its attainable range and the bargaining weight attached
/// to the agent that owns it.
struct CriterionSpec {
    std::string name;
    double anchor = 1.0; // best attainable value
    double nadir = 0.0;  // worst attainable value
    double weight = 1.0;
};

struct ThetaPoint {
    double theta1 = 0.0;
    double theta2 = 0.0;
};

/// Monotone trade-off curve over the normalized unit square, either the
/// closed form theta2 = 1 - theta1^k or a piecewise-linear sample list.
/// Multi-point sample lists must span theta1 = 0..1 with theta1 strictly
/// increasing and theta2 non-increasing; a single sample is accepted as a
/// degenerate frontier.
class Frontier {
public:
    static Frontier power(double k);
    static Frontier sampled(std::vector<ThetaPoint> points);

    bool is_power() const { return is_power_; }
    double exponent() const;
    const std::vector<ThetaPoint>& points() const;
    bool single_point() const { return !is_power_ && points_.size() == 1; }

    /// theta2 at the given theta1; sampled frontiers interpolate linearly.
    double value_at(double theta1) const;

private:
    Frontier() = default;
    bool is_power_ = false;
    double exponent_ = 1.0;
    std::vector<ThetaPoint> points_;
};

/// Affine map of a raw criterion value onto [0,1]: nadir -> 0, anchor -> 1.
/// Results up to 1e-9 outside the interval are clamped; anything further is
/// a range error.
double normalize(double value, double nadir, double anchor);

/// Weighted distance-to-ideal L_h in normalized space (ideal = 1 for every
/// criterion). Finite h >= 1 or kInfinityH for the Chebyshev metric.
double cp_distance(std::span<const double> theta,
                   std::span<const CriterionSpec> specs, double h);

struct CompromiseResult {
    ThetaPoint point;
    double distance = 0.0;
};

/// Bounds of the compromise set: the L1 and the L-infinity solutions.
struct CompromiseSet {
    CompromiseResult manhattan;
    CompromiseResult chebyshev;
};

/// Frontier point minimizing L_h distance to the ideal. Exact ties are
/// resolved in favour of the balanced solution.
CompromiseResult compromise_solution(const Frontier& frontier,
                                     std::span<const CriterionSpec> specs,
                                     double h);

CompromiseSet compromise_set(const Frontier& frontier,
                             std::span<const CriterionSpec> specs);

/// Intersection of the frontier with the equal-weighted-shortfall line
/// w1 (1 - theta1) = w2 (1 - theta2), by bisection to 1e-10. Empty optional
/// when the line misses the frontier inside the unit square.
std::optional<ThetaPoint> balanced_solution(const Frontier& frontier,
                                            double w1, double w2);

/// One satisficing goal: aspiration target (nonzero) and weight.
struct GoalSpec {
    std::string name;
    double target = 1.0;
    double weight = 1.0;
};

struct GpSolution {
    std::vector<double> u;              // achieved value per goal
    std::vector<double> deviation_up;   // delta+ >= 0
    std::vector<double> deviation_down; // delta- >= 0
    double objective = 0.0;
};

/// Weighted goal program: minimize sum_j w_j (delta+_j + delta-_j) / |b_j|
/// subject to u_j = b_j + delta+_j - delta-_j and the given linear region
/// over u. Deviations are complementary at the optimum.
GpSolution gp_solve(std::span<const GoalSpec> goals,
                    std::span<const LinearConstraint> region);

} // namespace sv

#endif // SV_MCDM_HPP
