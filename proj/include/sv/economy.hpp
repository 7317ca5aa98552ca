#ifndef SV_ECONOMY_HPP
#define SV_ECONOMY_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sv/coalition.hpp"
#include "sv/mcdm.hpp"

namespace sv {

/// Single-output resource allocation: consumed quantities are recorded
/// negated in entries 0..q-2, the produced output in entry q-1.
struct ResourceAllocation {
    explicit ResourceAllocation(std::vector<double> quantities);
    std::vector<double> y;
};

struct PriceVector {
    explicit PriceVector(std::vector<double> prices);
    std::vector<double> p;
};

/// Value of one allocation at given prices: the dot product p . y.
double allocation_value(const PriceVector& p, const ResourceAllocation& y);

/// Coalition value as the sum of member allocation values; a coalition
/// needs at least two members.
double coalition_value_from_allocations(
    std::span<const std::pair<PriceVector, ResourceAllocation>> pairs);

/// Wage-equality vs. benefits economy: sales Q, cost of the men's wage bill
/// C_m, and a productivity exponent k (k = 1 without cooperation, k = 2 with
/// the cost reduction from the coalition's training program).
class EqualityBenefitModel {
public:
    EqualityBenefitModel(double sales, double men_cost, double k);

    double sales() const { return sales_; }
    double men_cost() const { return men_cost_; }
    double exponent() const { return exponent_; }

    /// Raw benefits B(E) = Q - C_m (1 + E^k) for an equality index in [0,1].
    double benefit_at(double equality) const;
    double benefit_anchor() const { return sales_ - men_cost_; }       // E = 0
    double benefit_nadir() const { return sales_ - 2.0 * men_cost_; }  // E = 1
    /// False when equal pay would push benefits negative.
    bool nadir_nonnegative() const { return benefit_nadir() >= 0.0; }

private:
    double sales_ = 0.0;
    double men_cost_ = 0.0;
    double exponent_ = 1.0;
};

/// The model's trade-off normalized to the unit square: theta2 = 1 - theta1^k.
Frontier equality_frontier(const EqualityBenefitModel& model);

struct ParadoxResult {
    ThetaPoint point;
    bool attains_max_equality = false;
};

/// Balanced solution under bargaining weights, plus whether it reaches the
/// maximum equality index (it never does on these frontiers).
ParadoxResult equality_paradox_check(const EqualityBenefitModel& model,
                                     double w1, double w2);

/// One candidate trip: the riders it carries (as a mask over rider indices),
/// the road segments it uses, and its physical cost.
struct Trip {
    Coalition riders;
    std::vector<int> segments;
    double cost = 0.0;
};

/// Carpooling marketplace: riders with per-trip valuations and fixed prices,
/// candidate trips over tolled road segments.
class CarpoolModel {
public:
    CarpoolModel(std::vector<std::string> rider_names, std::vector<Trip> trips,
                 std::vector<std::vector<double>> valuations,
                 std::vector<std::string> segment_names,
                 std::vector<double> tolls, std::vector<double> prices);

    int num_riders() const { return static_cast<int>(rider_names_.size()); }
    int num_trips() const { return static_cast<int>(trips_.size()); }
    int num_segments() const { return static_cast<int>(segment_names_.size()); }
    const std::string& rider_name(int m) const { return rider_names_[m]; }
    const std::string& segment_name(int s) const { return segment_names_[s]; }
    const Trip& trip(int t) const { return trips_[t]; }
    double valuation(int rider, int trip) const;
    double toll(int segment) const;
    double price(int rider) const { return prices_[rider]; }

private:
    std::vector<std::string> rider_names_;
    std::vector<Trip> trips_;
    std::vector<std::vector<double>> valuations_;
    std::vector<std::string> segment_names_;
    std::vector<double> tolls_;
    std::vector<double> prices_;
};

/// Chosen trips; a valid assignment covers every rider exactly once.
struct Assignment {
    std::vector<int> trip_indices;
};

/// Global rider utility U = sum_m (v_m(t_m) - p_m).
double carpool_utility(const CarpoolModel& model, const Assignment& a);

/// Social surplus P = sum_m v_m(t_m) - sum_{t in a} c(t).
double carpool_surplus(const CarpoolModel& model, const Assignment& a);

/// Licensee revenues R = sum_m p_m; checks the identity R = sum_m v_m - U.
double carpool_revenues(const CarpoolModel& model, const Assignment& a);

/// Prices cover physical costs plus tolls on every segment of every chosen
/// trip (counted once per trip-segment incidence), tolerance -1e-9.
bool budget_balanced(const CarpoolModel& model, const Assignment& a);

/// Surplus-maximizing assignment by exhaustive search (<= 10 riders); ties
/// go to the lexicographically smallest sorted trip index list.
Assignment best_assignment(const CarpoolModel& model);

/// Mutual-fund coalition: n investors plus one manager. The grand coalition
/// earns both utilities, the investors-only block its own, the manager
/// nothing alone. Supermodular by construction, sustainable tag set.
CharacteristicFunction build_fund_game(int n_investors,
                                       double investor_utility,
                                       double manager_utility);

/// Two-block carpooling game (riders collective, regulator): the grand
/// coalition earns U + P at the surplus-optimal assignment, the riders alone
/// their best solo-trip utility capped at U, the regulator nothing alone.
CharacteristicFunction build_carpool_game(const CarpoolModel& model);

} // namespace sv

#endif // SV_ECONOMY_HPP
