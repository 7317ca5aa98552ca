#include "sv/economy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace sv {

namespace {

constexpr double kIdentityTol = 1e-9;

void check_finite(double x, const char* what) {
    if (!std::isfinite(x)) {
        throw parameter_error(std::string(what) + " must be finite");
    }
}

} // namespace

// ---------------------------------------------------------------------------
// Resource allocations

ResourceAllocation::ResourceAllocation(std::vector<double> quantities)
    : y(std::move(quantities)) {
    if (y.empty()) throw dimension_error("allocation needs at least one entry");
    for (std::size_t i = 0; i + 1 < y.size(); ++i) {
        check_finite(y[i], "allocation entry");
        if (y[i] > 0.0) {
            throw parameter_error("consumed resources must be recorded as "
                                  "nonpositive quantities");
        }
    }
    check_finite(y.back(), "allocation output");
    if (y.back() < 0.0) {
        throw parameter_error("produced output must be nonnegative");
    }
}

PriceVector::PriceVector(std::vector<double> prices) : p(std::move(prices)) {
    for (double x : p) {
        check_finite(x, "price");
        if (x < 0.0) throw parameter_error("prices must be nonnegative");
    }
}

double allocation_value(const PriceVector& p, const ResourceAllocation& y) {
    if (p.p.size() != y.y.size()) {
        throw dimension_error("price and allocation lengths disagree");
    }
    double value = 0.0;
    for (std::size_t i = 0; i < p.p.size(); ++i) value += p.p[i] * y.y[i];
    return value;
}

double coalition_value_from_allocations(
    std::span<const std::pair<PriceVector, ResourceAllocation>> pairs) {
    if (pairs.size() < 2) {
        throw parameter_error("a coalition needs at least two agents; "
                              "singletons carry no shared value");
    }
    double total = 0.0;
    for (const auto& [p, y] : pairs) total += allocation_value(p, y);
    return total;
}

// ---------------------------------------------------------------------------
// Equality-benefits economy

EqualityBenefitModel::EqualityBenefitModel(double sales, double men_cost,
                                           double k)
    : sales_(sales), men_cost_(men_cost), exponent_(k) {
    check_finite(sales, "sales");
    check_finite(men_cost, "men's wage cost");
    check_finite(k, "productivity exponent");
    if (sales < 0.0) throw parameter_error("sales must be nonnegative");
    if (men_cost == 0.0) {
        throw range_error("men's wage cost of zero makes the benefit "
                          "normalization degenerate (anchor == nadir)");
    }
    if (men_cost < 0.0) {
        throw parameter_error("men's wage cost must be positive");
    }
    if (k < 1.0) throw parameter_error("productivity exponent must be >= 1");
}

double EqualityBenefitModel::benefit_at(double equality) const {
    if (equality < -1e-9 || equality > 1.0 + 1e-9) {
        throw range_error("equality index outside [0,1]");
    }
    const double e = std::clamp(equality, 0.0, 1.0);
    return sales_ - men_cost_ * (1.0 + std::pow(e, exponent_));
}

Frontier equality_frontier(const EqualityBenefitModel& model) {
    // theta1 = E; theta2 = (B - B_*) / (B^* - B_*) collapses to 1 - E^k.
    return Frontier::power(model.exponent());
}

ParadoxResult equality_paradox_check(const EqualityBenefitModel& model,
                                     double w1, double w2) {
    const auto point = balanced_solution(equality_frontier(model), w1, w2);
    if (!point) {
        throw solver_error("balanced solution missing on a power frontier");
    }
    return ParadoxResult{*point, point->theta1 > 1.0 - 1e-9};
}

// ---------------------------------------------------------------------------
// Carpooling marketplace

CarpoolModel::CarpoolModel(std::vector<std::string> rider_names,
                           std::vector<Trip> trips,
                           std::vector<std::vector<double>> valuations,
                           std::vector<std::string> segment_names,
                           std::vector<double> tolls,
                           std::vector<double> prices)
    : rider_names_(std::move(rider_names)), trips_(std::move(trips)),
      valuations_(std::move(valuations)),
      segment_names_(std::move(segment_names)), tolls_(std::move(tolls)),
      prices_(std::move(prices)) {
    const int m = num_riders();
    if (m < 1) throw parameter_error("carpool model needs riders");
    if (m > kMaxAgents) {
        throw capacity_error("rider count beyond coalition capacity");
    }
    if (static_cast<int>(prices_.size()) != m) {
        throw dimension_error("one price per rider required");
    }
    if (static_cast<int>(valuations_.size()) != m) {
        throw dimension_error("one valuation row per rider required");
    }
    if (tolls_.size() != segment_names_.size()) {
        throw dimension_error("one toll per segment required");
    }
    for (double p : prices_) check_finite(p, "trip price");
    for (double r : tolls_) {
        if (!std::isnan(r)) {
            check_finite(r, "toll fee");
            if (r < 0.0) throw parameter_error("tolls must be nonnegative");
        }
    }
    const std::uint32_t all_riders = Coalition::full(m).mask();
    for (const Trip& t : trips_) {
        if (t.riders.empty()) throw parameter_error("trip without riders");
        if ((t.riders.mask() & ~all_riders) != 0) {
            throw index_error("trip rider index out of range");
        }
        check_finite(t.cost, "trip cost");
        if (t.cost < 0.0) throw parameter_error("trip cost must be nonnegative");
        for (int s : t.segments) {
            if (s < 0 || s >= num_segments()) {
                throw index_error("trip segment index out of range");
            }
        }
    }
    for (const auto& row : valuations_) {
        if (static_cast<int>(row.size()) != num_trips()) {
            throw dimension_error("valuation row width must match trip count");
        }
        for (double v : row) {
            check_finite(v, "trip valuation");
            if (v < 0.0) throw parameter_error("valuations must be nonnegative");
        }
    }
}

double CarpoolModel::valuation(int rider, int trip) const {
    if (rider < 0 || rider >= num_riders()) throw index_error("rider index");
    if (trip < 0 || trip >= num_trips()) throw index_error("trip index");
    return valuations_[rider][trip];
}

double CarpoolModel::toll(int segment) const {
    if (segment < 0 || segment >= num_segments()) {
        throw index_error("segment index");
    }
    const double fee = tolls_[segment];
    if (std::isnan(fee)) {
        throw parameter_error("no toll entry for segment '" +
                              segment_names_[segment] + "'");
    }
    return fee;
}

namespace {

// Trip index per rider; raises partition_error unless every rider is on
// exactly one chosen trip.
std::vector<int> rider_trips(const CarpoolModel& model, const Assignment& a) {
    std::vector<int> assigned(model.num_riders(), -1);
    for (int t : a.trip_indices) {
        if (t < 0 || t >= model.num_trips()) {
            throw index_error("assignment trip index out of range");
        }
        for (int m : model.trip(t).riders.members()) {
            if (assigned[m] >= 0) {
                throw partition_error("rider '" + model.rider_name(m) +
                                      "' is on more than one trip");
            }
            assigned[m] = t;
        }
    }
    for (int m = 0; m < model.num_riders(); ++m) {
        if (assigned[m] < 0) {
            throw partition_error("rider '" + model.rider_name(m) +
                                  "' has no trip");
        }
    }
    return assigned;
}

} // namespace

double carpool_utility(const CarpoolModel& model, const Assignment& a) {
    const std::vector<int> assigned = rider_trips(model, a);
    double utility = 0.0;
    for (int m = 0; m < model.num_riders(); ++m) {
        utility += model.valuation(m, assigned[m]) - model.price(m);
    }
    return utility;
}

double carpool_surplus(const CarpoolModel& model, const Assignment& a) {
    const std::vector<int> assigned = rider_trips(model, a);
    double surplus = 0.0;
    for (int m = 0; m < model.num_riders(); ++m) {
        surplus += model.valuation(m, assigned[m]);
    }
    for (int t : a.trip_indices) surplus -= model.trip(t).cost;
    return surplus;
}

double carpool_revenues(const CarpoolModel& model, const Assignment& a) {
    const std::vector<int> assigned = rider_trips(model, a);
    double revenues = 0.0;
    double valuation_sum = 0.0;
    for (int m = 0; m < model.num_riders(); ++m) {
        revenues += model.price(m);
        valuation_sum += model.valuation(m, assigned[m]);
    }
    const double utility = carpool_utility(model, a);
    if (std::abs(revenues - (valuation_sum - utility)) > kIdentityTol) {
        throw solver_error("revenue identity R = sum v_m - U violated");
    }
    return revenues;
}

bool budget_balanced(const CarpoolModel& model, const Assignment& a) {
    rider_trips(model, a);
    double outlays = 0.0;
    for (int t : a.trip_indices) {
        outlays += model.trip(t).cost;
        for (int s : model.trip(t).segments) outlays += model.toll(s);
    }
    double payments = 0.0;
    for (int m = 0; m < model.num_riders(); ++m) payments += model.price(m);
    return payments >= outlays - kIdentityTol;
}

namespace {

struct AssignmentSearch {
    const CarpoolModel& model;
    std::vector<int> current;
    std::vector<int> best;
    double best_surplus = 0.0;
    bool found = false;

    void run(std::uint32_t remaining) {
        if (remaining == 0) {
            double surplus = 0.0;
            for (int t : current) {
                for (int m : model.trip(t).riders.members()) {
                    surplus += model.valuation(m, t);
                }
                surplus -= model.trip(t).cost;
            }
            std::vector<int> sorted = current;
            std::sort(sorted.begin(), sorted.end());
            if (!found || surplus > best_surplus ||
                (surplus == best_surplus && sorted < best)) {
                found = true;
                best_surplus = surplus;
                best = std::move(sorted);
            }
            return;
        }
        const int low = std::countr_zero(remaining);
        for (int t = 0; t < model.num_trips(); ++t) {
            const std::uint32_t mask = model.trip(t).riders.mask();
            if (!model.trip(t).riders.contains(low)) continue;
            if ((mask & ~remaining) != 0) continue;
            current.push_back(t);
            run(remaining & ~mask);
            current.pop_back();
        }
    }
};

} // namespace

Assignment best_assignment(const CarpoolModel& model) {
    if (model.num_riders() > 10) {
        throw capacity_error("exhaustive assignment search supported up to "
                             "10 riders");
    }
    AssignmentSearch search{model, {}, {}};
    search.run(Coalition::full(model.num_riders()).mask());
    if (!search.found) {
        throw partition_error("no assignment covers every rider");
    }
    return Assignment{search.best};
}

// ---------------------------------------------------------------------------
// Game builders

CharacteristicFunction build_fund_game(int n_investors,
                                       double investor_utility,
                                       double manager_utility) {
    if (n_investors < 1) throw parameter_error("need at least one investor");
    if (n_investors + 1 > kMaxTableAgents) {
        throw capacity_error("fund game supported up to " +
                             std::to_string(kMaxTableAgents - 1) + " investors");
    }
    check_finite(investor_utility, "investor utility");
    check_finite(manager_utility, "manager utility");
    if (investor_utility < 0.0 || manager_utility < 0.0) {
        throw parameter_error("utilities must be nonnegative");
    }
    // Agents 0..n-1 are investors, agent n the manager. Any block short of
    // the full investor set earns nothing, so the game is a nonnegative sum
    // of unanimity games and therefore convex.
    CharacteristicFunction v =
        CharacteristicFunction::zeros(n_investors + 1, true);
    const Coalition investors((1u << n_investors) - 1u);
    v.set(investors, investor_utility);
    v.set(v.grand(), investor_utility + manager_utility);
    return v;
}

CharacteristicFunction build_carpool_game(const CarpoolModel& model) {
    const Assignment opt = best_assignment(model);
    const double utility = carpool_utility(model, opt);
    const double surplus = carpool_surplus(model, opt);

    // Outside option for the riders block: everyone takes their best solo
    // trip (nothing, if a rider has none). Without the regulator's roads the
    // riders cannot do better than U, so the value is capped there.
    double solo_utility = 0.0;
    for (int m = 0; m < model.num_riders(); ++m) {
        double best_solo = 0.0;
        bool has_solo = false;
        for (int t = 0; t < model.num_trips(); ++t) {
            if (model.trip(t).riders != Coalition::single(m)) continue;
            const double gain = model.valuation(m, t) - model.price(m);
            if (!has_solo || gain > best_solo) {
                best_solo = gain;
                has_solo = true;
            }
        }
        if (has_solo) solo_utility += best_solo;
    }

    CharacteristicFunction v = CharacteristicFunction::zeros(2, true);
    v.set(Coalition::single(0), std::min(solo_utility, utility)); // riders
    v.set(v.grand(), utility + surplus);
    return v;
}

} // namespace sv
