#include "sv/mcdm.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sv {

namespace {

constexpr double kThetaSlack = 1e-9;
constexpr double kSearchTol = 1e-10;
constexpr int kMaxBisection = 200;

double clamp_theta(double t, const char* what) {
    if (t < -kThetaSlack || t > 1.0 + kThetaSlack) {
        throw range_error(std::string(what) + " = " + std::to_string(t) +
                          " outside [0,1]");
    }
    return std::clamp(t, 0.0, 1.0);
}

// Golden-section minimization; f must be continuous on [lo, hi].
double golden_min(double lo, double hi, const auto& f) {
    static const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    for (int i = 0; i < kMaxBisection && (b - a) > kSearchTol; ++i) {
        if (fc < fd) {
            b = d; d = c; fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c; c = d; fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    return (a + b) / 2.0;
}

} // namespace

// ---------------------------------------------------------------------------
// Frontier

Frontier Frontier::power(double k) {
    if (!(k > 0.0) || !std::isfinite(k)) {
        throw parameter_error("frontier exponent must be positive");
    }
    Frontier f;
    f.is_power_ = true;
    f.exponent_ = k;
    return f;
}

Frontier Frontier::sampled(std::vector<ThetaPoint> points) {
    if (points.empty()) throw parameter_error("empty frontier sample list");
    for (const ThetaPoint& p : points) {
        clamp_theta(p.theta1, "frontier theta1");
        clamp_theta(p.theta2, "frontier theta2");
    }
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].theta1 <= points[i - 1].theta1) {
            throw range_error("frontier theta1 samples must strictly increase");
        }
        if (points[i].theta2 > points[i - 1].theta2 + kThetaSlack) {
            throw range_error("frontier theta2 samples must not increase");
        }
    }
    if (points.size() >= 2) {
        if (std::abs(points.front().theta1) > kThetaSlack ||
            std::abs(points.back().theta1 - 1.0) > kThetaSlack) {
            throw range_error("frontier samples must span theta1 = 0..1");
        }
    }
    Frontier f;
    f.points_ = std::move(points);
    return f;
}

double Frontier::exponent() const {
    if (!is_power_) throw parameter_error("not a closed-form frontier");
    return exponent_;
}

const std::vector<ThetaPoint>& Frontier::points() const {
    if (is_power_) throw parameter_error("closed-form frontier has no samples");
    return points_;
}

double Frontier::value_at(double theta1) const {
    const double t = clamp_theta(theta1, "theta1");
    if (is_power_) return 1.0 - std::pow(t, exponent_);
    if (points_.size() == 1) {
        if (std::abs(t - points_[0].theta1) > kThetaSlack) {
            throw range_error("degenerate frontier defined at a single theta1");
        }
        return points_[0].theta2;
    }
    auto hi = std::lower_bound(points_.begin(), points_.end(), t,
                               [](const ThetaPoint& p, double x) {
                                   return p.theta1 < x;
                               });
    if (hi == points_.begin()) return hi->theta2;
    if (hi == points_.end()) return points_.back().theta2;
    const ThetaPoint& b = *hi;
    const ThetaPoint& a = *(hi - 1);
    const double span = b.theta1 - a.theta1;
    const double frac = (t - a.theta1) / span;
    return a.theta2 + frac * (b.theta2 - a.theta2);
}

// ---------------------------------------------------------------------------
// Normalization and distance

double normalize(double value, double nadir, double anchor) {
    if (anchor == nadir) {
        throw range_error("degenerate normalization range (anchor == nadir)");
    }
    const double t = (value - nadir) / (anchor - nadir);
    if (t < -kThetaSlack || t > 1.0 + kThetaSlack) {
        throw range_error("value " + std::to_string(value) +
                          " outside its nadir..anchor range");
    }
    return std::clamp(t, 0.0, 1.0);
}

double cp_distance(std::span<const double> theta,
                   std::span<const CriterionSpec> specs, double h) {
    if (theta.size() != specs.size()) {
        throw dimension_error("theta and criterion counts disagree");
    }
    if (theta.empty()) throw dimension_error("no criteria");
    if (std::isnan(h) || h < 1.0) {
        throw parameter_error("distance parameter h must be >= 1");
    }
    for (const CriterionSpec& spec : specs) {
        if (!(spec.weight > 0.0) || !std::isfinite(spec.weight)) {
            throw parameter_error("criterion weights must be positive");
        }
    }
    std::vector<double> losses(theta.size());
    double worst = 0.0;
    for (std::size_t j = 0; j < theta.size(); ++j) {
        const double t = clamp_theta(theta[j], "theta");
        losses[j] = specs[j].weight * (1.0 - t);
        worst = std::max(worst, losses[j]);
    }
    if (h == kInfinityH || worst == 0.0) return worst;
    // Factor out the largest term so big exponents cannot underflow the sum.
    double sum = 0.0;
    for (double loss : losses) sum += std::pow(loss / worst, h);
    return worst * std::pow(sum, 1.0 / h);
}

// ---------------------------------------------------------------------------
// Compromise and balanced solutions

namespace {

void require_bicriteria(std::span<const CriterionSpec> specs) {
    if (specs.size() != 2) {
        throw dimension_error("frontier search needs exactly two criteria");
    }
}

} // namespace

CompromiseResult compromise_solution(const Frontier& frontier,
                                     std::span<const CriterionSpec> specs,
                                     double h) {
    require_bicriteria(specs);
    auto distance_at = [&](double t) {
        const double theta[2] = {t, frontier.value_at(t)};
        return cp_distance(theta, specs, h);
    };

    if (frontier.single_point()) {
        const ThetaPoint p = frontier.points()[0];
        return CompromiseResult{p, distance_at(p.theta1)};
    }

    // Scan a bracket grid, refine every cell around the incumbent by
    // golden-section search. The distance is convex along each linear
    // segment, so per-cell refinement finds the global minimizer.
    std::vector<double> knots;
    if (frontier.is_power()) {
        const int cells = 1024;
        knots.reserve(cells + 1);
        for (int i = 0; i <= cells; ++i) knots.push_back(double(i) / cells);
    } else {
        knots.reserve(frontier.points().size());
        for (const ThetaPoint& p : frontier.points()) knots.push_back(p.theta1);
    }

    double best_t = knots.front();
    double best_d = distance_at(best_t);
    for (std::size_t i = 1; i < knots.size(); ++i) {
        const double t = golden_min(knots[i - 1], knots[i], distance_at);
        for (double cand : {t, knots[i]}) {
            const double d = distance_at(cand);
            if (d < best_d) {
                best_d = d;
                best_t = cand;
            }
        }
    }
    if (best_t < kSearchTol) best_t = 0.0;
    if (best_t > 1.0 - kSearchTol) best_t = 1.0;
    best_d = distance_at(best_t);

    // Exact ties go to the balanced point (the natural representative when
    // the distance is flat along the frontier, and the exact optimum for
    // the Chebyshev metric).
    if (auto bal = balanced_solution(frontier, specs[0].weight,
                                     specs[1].weight)) {
        const double d = distance_at(bal->theta1);
        if (d <= best_d + 1e-12) {
            return CompromiseResult{*bal, d};
        }
    }
    return CompromiseResult{{best_t, frontier.value_at(best_t)}, best_d};
}

CompromiseSet compromise_set(const Frontier& frontier,
                             std::span<const CriterionSpec> specs) {
    return CompromiseSet{compromise_solution(frontier, specs, 1.0),
                         compromise_solution(frontier, specs, kInfinityH)};
}

std::optional<ThetaPoint> balanced_solution(const Frontier& frontier,
                                            double w1, double w2) {
    if (!(w1 > 0.0) || !(w2 > 0.0)) {
        throw parameter_error("bargaining weights must be positive");
    }
    auto residual = [&](double t) {
        return w1 * (1.0 - t) - w2 * (1.0 - frontier.value_at(t));
    };

    if (frontier.single_point()) {
        const ThetaPoint p = frontier.points()[0];
        if (std::abs(w1 * (1.0 - p.theta1) - w2 * (1.0 - p.theta2)) <= 1e-9) {
            return p;
        }
        return std::nullopt;
    }

    // The residual decreases strictly in theta1 on any valid frontier, so a
    // sign change brackets the unique intersection.
    double lo = 0.0, hi = 1.0;
    double rlo = residual(lo), rhi = residual(hi);
    if (std::abs(rlo) <= 1e-12) return ThetaPoint{lo, frontier.value_at(lo)};
    if (std::abs(rhi) <= 1e-12) return ThetaPoint{hi, frontier.value_at(hi)};
    if (rlo < 0.0 || rhi > 0.0) return std::nullopt;

    for (int i = 0; i < kMaxBisection && (hi - lo) > kSearchTol; ++i) {
        const double mid = (lo + hi) / 2.0;
        const double r = residual(mid);
        if (r > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const double t = (lo + hi) / 2.0;
    return ThetaPoint{t, frontier.value_at(t)};
}

// ---------------------------------------------------------------------------
// Goal programming

GpSolution gp_solve(std::span<const GoalSpec> goals,
                    std::span<const LinearConstraint> region) {
    const int g = static_cast<int>(goals.size());
    if (g == 0) throw dimension_error("no goals");
    for (const GoalSpec& goal : goals) {
        if (goal.target == 0.0 || !std::isfinite(goal.target)) {
            throw parameter_error("goal target must be finite and nonzero");
        }
        if (goal.weight < 0.0 || !std::isfinite(goal.weight)) {
            throw parameter_error("goal weight must be nonnegative");
        }
    }

    // Variables: u_1..u_g free, then delta+ and delta- blocks, both >= 0.
    LinearProgram lp;
    lp.objective.assign(3 * g, 0.0);
    lp.lower_bounds.assign(3 * g, std::nullopt);
    for (int j = 0; j < g; ++j) {
        const double unit = goals[j].weight / std::abs(goals[j].target);
        lp.objective[g + j] = unit;
        lp.objective[2 * g + j] = unit;
        lp.lower_bounds[g + j] = 0.0;
        lp.lower_bounds[2 * g + j] = 0.0;
    }
    for (int j = 0; j < g; ++j) {
        std::vector<double> row(3 * g, 0.0);
        row[j] = 1.0;
        row[g + j] = -1.0;
        row[2 * g + j] = 1.0;
        lp.add_row(std::move(row), Relation::Equal, goals[j].target);
    }
    for (const LinearConstraint& c : region) {
        if (static_cast<int>(c.coeffs.size()) != g) {
            throw dimension_error("region constraint width does not match goals");
        }
        std::vector<double> row(3 * g, 0.0);
        std::copy(c.coeffs.begin(), c.coeffs.end(), row.begin());
        lp.add_row(std::move(row), c.relation, c.rhs);
    }

    const LpResult res = solve_lp(lp);
    if (res.status == LpStatus::Infeasible) {
        throw infeasible_error("goal program region is infeasible");
    }
    if (res.status != LpStatus::Optimal) {
        throw solver_error("goal program ended in unexpected state");
    }

    // Report deviations in canonical complementary form.
    GpSolution out;
    out.u.assign(res.x.begin(), res.x.begin() + g);
    out.deviation_up.resize(g);
    out.deviation_down.resize(g);
    for (int j = 0; j < g; ++j) {
        const double gap = out.u[j] - goals[j].target;
        out.deviation_up[j] = std::max(gap, 0.0);
        out.deviation_down[j] = std::max(-gap, 0.0);
        out.objective += goals[j].weight *
                         (out.deviation_up[j] + out.deviation_down[j]) /
                         std::abs(goals[j].target);
    }
    return out;
}

} // namespace sv
