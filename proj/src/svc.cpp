#include "sv/svc.hpp"

#include <bit>
#include <cmath>
#include <random>
#include <string>

namespace sv {

namespace {

constexpr double kCreationTol = 1e-9;
constexpr int kExactPointLimit = 20;
constexpr long kMonteCarloSamples = 1000000;

} // namespace

double auc(const Frontier& frontier) {
    if (frontier.is_power()) {
        const double k = frontier.exponent();
        return k / (k + 1.0);
    }
    const auto& pts = frontier.points();
    if (pts.size() < 2) {
        throw range_error("area needs a frontier spanning theta1 = 0..1");
    }
    double area = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        area += (pts[i].theta1 - pts[i - 1].theta1) *
                (pts[i].theta2 + pts[i - 1].theta2) / 2.0;
    }
    return area;
}

SvcReport svc_without_targets(const Frontier& before, const Frontier& after) {
    SvcReport report;
    report.auc_before = auc(before);
    report.auc_after = auc(after);
    report.svc = report.auc_after - report.auc_before;
    report.created = report.svc > kCreationTol;
    return report;
}

HypervolumeResult hypervolume(const std::vector<std::vector<double>>& points,
                              int dim, std::uint64_t seed) {
    if (dim < 2 || dim > 6) {
        throw dimension_error("hypervolume dimension must be in 2..6");
    }
    for (const auto& p : points) {
        if (static_cast<int>(p.size()) != dim) {
            throw dimension_error("point dimension mismatch");
        }
        for (double x : p) {
            if (!(x >= 0.0 && x <= 1.0)) {
                throw range_error("point coordinate " + std::to_string(x) +
                                  " outside [0,1]");
            }
        }
    }

    HypervolumeResult out;
    const int npts = static_cast<int>(points.size());
    if (npts == 0) return out;

    if (npts <= kExactPointLimit) {
        // Inclusion-exclusion over point subsets; the box intersection of a
        // subset is the componentwise minimum.
        for (std::uint32_t subset = 1; subset < (1u << npts); ++subset) {
            double vol = 1.0;
            for (int d = 0; d < dim; ++d) {
                double lo = 1.0;
                for (std::uint32_t rest = subset; rest != 0; rest &= rest - 1) {
                    const int i = std::countr_zero(rest);
                    lo = std::min(lo, points[i][d]);
                }
                vol *= lo;
            }
            out.value += (std::popcount(subset) % 2 == 1) ? vol : -vol;
        }
        return out;
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> x(dim);
    long hits = 0;
    for (long s = 0; s < kMonteCarloSamples; ++s) {
        for (int d = 0; d < dim; ++d) x[d] = unit(rng);
        for (const auto& p : points) {
            bool inside = true;
            for (int d = 0; d < dim; ++d) {
                if (x[d] > p[d]) {
                    inside = false;
                    break;
                }
            }
            if (inside) {
                ++hits;
                break;
            }
        }
    }
    const double fraction = double(hits) / double(kMonteCarloSamples);
    out.value = fraction;
    out.std_error =
        std::sqrt(fraction * (1.0 - fraction) / double(kMonteCarloSamples));
    out.exact = false;
    return out;
}

TargetSvcReport svc_with_targets(double g_before, double g_after) {
    if (!std::isfinite(g_before) || !std::isfinite(g_after)) {
        throw parameter_error("objective values must be finite");
    }
    TargetSvcReport report;
    report.g_before = g_before;
    report.g_after = g_after;
    report.svc = g_before - g_after;
    report.created = report.svc > kCreationTol;
    return report;
}

} // namespace sv
