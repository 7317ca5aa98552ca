#include <doctest.h>

#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include "generators.hpp"
#include "sv/economy.hpp"
#include "sv/solution.hpp"
#include "sv/svc.hpp"

using namespace sv;

namespace {

// Two riders with solo options and one shared trip over tolled segments;
// built so that U = 7, P = 13 and R = 11 at the shared assignment.
CarpoolModel two_rider_model(double toll_a = 2.0, double toll_b = 1.0) {
    std::vector<Trip> trips;
    trips.push_back({Coalition::single(0), {0}, 4.0});
    trips.push_back({Coalition::single(1), {1}, 4.0});
    trips.push_back({Coalition::of({0, 1}), {0, 1}, 5.0});
    std::vector<std::vector<double>> valuations{{10.0, 0.0, 10.0},
                                                {0.0, 8.0, 8.0}};
    return CarpoolModel({"r1", "r2"}, std::move(trips), std::move(valuations),
                        {"s1", "s2"}, {toll_a, toll_b}, {6.0, 5.0});
}

} // namespace

TEST_CASE("allocation values") {
    const ResourceAllocation industrial({-7.0, -12.0, -6.0, 10.0});
    const PriceVector prices({1.0, 2.0, 3.0, 6.0});
    CHECK(allocation_value(prices, industrial) == doctest::Approx(11.0));

    // One hour of work in, one hour of service out: value cancels at any wage.
    for (double wage : {1.0, 15.0, 80.0}) {
        const ResourceAllocation employee({0.0, 0.0, -1.0, 1.0});
        const PriceVector p({1.0, 1.0, wage, wage});
        CHECK(allocation_value(p, employee) == doctest::Approx(0.0));
    }

    const ResourceAllocation idle({-0.0, 0.0});
    CHECK(allocation_value(PriceVector({3.0, 4.0}), idle) ==
          doctest::Approx(0.0));

    CHECK_THROWS_AS(allocation_value(PriceVector({1.0}), industrial),
                    dimension_error);
    CHECK_THROWS_AS(ResourceAllocation({1.0, 1.0}), parameter_error);
    CHECK_THROWS_AS(ResourceAllocation({-1.0, -2.0}), parameter_error);
    CHECK_THROWS_AS(PriceVector({-1.0}), parameter_error);
}

TEST_CASE("allocation value is linear") {
    std::mt19937 rng(101);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        const ResourceAllocation y({-unit(rng), -unit(rng), unit(rng) * 5.0});
        const PriceVector p({unit(rng), unit(rng), unit(rng)});
        const double lambda = 1.0 + unit(rng) * 3.0;
        PriceVector scaled = p;
        for (double& x : scaled.p) x *= lambda;
        CHECK(allocation_value(scaled, y) ==
              doctest::Approx(lambda * allocation_value(p, y)));

        const ResourceAllocation y2({-unit(rng), -unit(rng), unit(rng) * 5.0});
        ResourceAllocation sum = y;
        for (std::size_t i = 0; i < sum.y.size(); ++i) sum.y[i] += y2.y[i];
        CHECK(allocation_value(p, sum) ==
              doctest::Approx(allocation_value(p, y) + allocation_value(p, y2)));
    }
}

TEST_CASE("coalition value from allocations") {
    const std::vector<std::pair<PriceVector, ResourceAllocation>> law_firm{
        {PriceVector({1.0}), ResourceAllocation({4.0})},
        {PriceVector({1.0}), ResourceAllocation({3.0})}};
    CHECK(coalition_value_from_allocations(law_firm) == doctest::Approx(7.0));

    const std::vector<std::pair<PriceVector, ResourceAllocation>> zeros{
        {PriceVector({1.0, 1.0}), ResourceAllocation({0.0, 0.0})},
        {PriceVector({1.0, 1.0}), ResourceAllocation({0.0, 0.0})}};
    CHECK(coalition_value_from_allocations(zeros) == doctest::Approx(0.0));

    const std::vector<std::pair<PriceVector, ResourceAllocation>> three{
        {PriceVector({1.0}), ResourceAllocation({1.0})},
        {PriceVector({1.0}), ResourceAllocation({2.0})},
        {PriceVector({1.0}), ResourceAllocation({3.0})}};
    CHECK(coalition_value_from_allocations(three) == doctest::Approx(6.0));

    const std::vector<std::pair<PriceVector, ResourceAllocation>> single{
        {PriceVector({1.0}), ResourceAllocation({4.0})}};
    CHECK_THROWS_AS(coalition_value_from_allocations(single), parameter_error);
}

TEST_CASE("equality-benefits model") {
    SUBCASE("baseline frontier is the line") {
        const EqualityBenefitModel model(100.0, 30.0, 1.0);
        const Frontier f = equality_frontier(model);
        CHECK(f.is_power());
        CHECK(f.exponent() == 1.0);
        CHECK(model.benefit_anchor() == doctest::Approx(70.0));
        CHECK(model.benefit_nadir() == doctest::Approx(40.0));
    }
    SUBCASE("coalition frontier is the parabola") {
        const EqualityBenefitModel model(100.0, 30.0, 2.0);
        CHECK(equality_frontier(model).exponent() == 2.0);
    }
    SUBCASE("hand-checked interior point") {
        const EqualityBenefitModel model(100.0, 30.0, 1.0);
        const double benefit = model.benefit_at(0.5);
        CHECK(benefit == doctest::Approx(55.0));
        CHECK(normalize(benefit, model.benefit_nadir(),
                        model.benefit_anchor()) == doctest::Approx(0.5));
    }
    SUBCASE("normalized endpoints are exact") {
        for (double k : {1.0, 2.0, 3.0}) {
            const Frontier f =
                equality_frontier(EqualityBenefitModel(100.0, 30.0, k));
            CHECK(f.value_at(0.0) == 1.0);
            CHECK(f.value_at(1.0) == 0.0);
        }
    }
    SUBCASE("higher exponent creates shared value") {
        for (double k : {1.0, 2.0}) {
            const Frontier before =
                equality_frontier(EqualityBenefitModel(100.0, 30.0, k));
            const Frontier after =
                equality_frontier(EqualityBenefitModel(100.0, 30.0, k + 1.0));
            CHECK(svc_without_targets(before, after).svc > 0.0);
        }
    }
    SUBCASE("validation") {
        CHECK_THROWS_AS(EqualityBenefitModel(100.0, 0.0, 1.0), range_error);
        CHECK_THROWS_AS(EqualityBenefitModel(100.0, -5.0, 1.0), parameter_error);
        CHECK_THROWS_AS(EqualityBenefitModel(-1.0, 30.0, 1.0), parameter_error);
        CHECK_THROWS_AS(EqualityBenefitModel(100.0, 30.0, 0.5), parameter_error);
        CHECK_FALSE(EqualityBenefitModel(50.0, 30.0, 1.0).nadir_nonnegative());
    }
}

TEST_CASE("paradox of equality under bargaining weights") {
    SUBCASE("employees four times stronger") {
        const EqualityBenefitModel model(100.0, 30.0, 1.0);
        const ParadoxResult r = equality_paradox_check(model, 0.8, 0.2);
        CHECK(r.point.theta1 == doctest::Approx(0.8).epsilon(1e-9));
        CHECK(r.point.theta2 == doctest::Approx(0.2).epsilon(1e-9));
        CHECK_FALSE(r.attains_max_equality);
    }
    SUBCASE("symmetric power") {
        const EqualityBenefitModel model(100.0, 30.0, 1.0);
        const ParadoxResult r = equality_paradox_check(model, 0.5, 0.5);
        CHECK(r.point.theta1 == doctest::Approx(0.5).epsilon(1e-9));
        CHECK_FALSE(r.attains_max_equality);
    }
    SUBCASE("extreme imbalance on the parabola") {
        const EqualityBenefitModel model(100.0, 30.0, 2.0);
        const ParadoxResult r = equality_paradox_check(model, 0.99, 0.01);
        // Oracle: bisect 0.99 (1 - t) = 0.01 t^2 by hand.
        double lo = 0.0, hi = 1.0;
        for (int i = 0; i < 200; ++i) {
            const double mid = (lo + hi) / 2.0;
            if (0.99 * (1.0 - mid) - 0.01 * mid * mid > 0.0) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        CHECK(r.point.theta1 == doctest::Approx((lo + hi) / 2.0).epsilon(1e-8));
        CHECK(r.point.theta1 < 1.0);
        CHECK_FALSE(r.attains_max_equality);
    }
}

TEST_CASE("carpooling metrics on the two-rider marketplace") {
    const CarpoolModel model = two_rider_model();
    const Assignment shared{{2}};
    const Assignment solos{{0, 1}};

    CHECK(carpool_utility(model, shared) == doctest::Approx(7.0));
    CHECK(carpool_surplus(model, shared) == doctest::Approx(13.0));
    CHECK(carpool_revenues(model, shared) == doctest::Approx(11.0));
    CHECK(budget_balanced(model, shared)); // 11 >= 5 + 3

    CHECK(carpool_surplus(model, solos) == doctest::Approx(10.0));
    CHECK(carpool_utility(model, solos) == doctest::Approx(7.0));

    const Assignment best = best_assignment(model);
    CHECK(best.trip_indices == std::vector<int>{2});

    SUBCASE("prices equal to valuations leave no rider utility") {
        std::vector<Trip> trips{{Coalition::of({0, 1}), {0}, 5.0}};
        const CarpoolModel flat({"r1", "r2"}, std::move(trips),
                                {{10.0}, {8.0}}, {"s1"}, {0.0}, {10.0, 8.0});
        CHECK(carpool_utility(flat, Assignment{{0}}) == doctest::Approx(0.0));
    }
    SUBCASE("cheap shared prices") {
        std::vector<Trip> trips{{Coalition::of({0, 1}), {0}, 5.0}};
        const CarpoolModel cheap({"r1", "r2"}, std::move(trips),
                                 {{10.0}, {8.0}}, {"s1"}, {0.0}, {4.0, 4.0});
        CHECK(carpool_utility(cheap, Assignment{{0}}) == doctest::Approx(10.0));
    }
    SUBCASE("boundary budget balance") {
        const CarpoolModel boundary = two_rider_model(4.0, 2.0);
        CHECK(budget_balanced(boundary, shared)); // 11 >= 5 + 6 exactly
    }
    SUBCASE("zero prices cannot cover positive costs") {
        std::vector<Trip> trips{{Coalition::of({0, 1}), {0}, 5.0}};
        const CarpoolModel free({"r1", "r2"}, std::move(trips), {{10.0}, {8.0}},
                                {"s1"}, {0.0}, {0.0, 0.0});
        CHECK_FALSE(budget_balanced(free, Assignment{{0}}));
    }
    SUBCASE("assignment validation") {
        CHECK_THROWS_AS(carpool_utility(model, Assignment{{0}}),
                        partition_error);
        CHECK_THROWS_AS(carpool_utility(model, Assignment{{0, 2}}),
                        partition_error);
        CHECK_THROWS_AS(carpool_utility(model, Assignment{{7}}), index_error);
    }
}

TEST_CASE("revenue identity holds on random marketplaces") {
    std::mt19937 rng(20240815);
    for (int trial = 0; trial < 50; ++trial) {
        const CarpoolModel model = svtest::random_carpool(rng, 2 + int(rng() % 4));
        const Assignment best = best_assignment(model);
        double valuation_sum = 0.0, payments = 0.0, outlays = 0.0;
        for (int t : best.trip_indices) {
            outlays += model.trip(t).cost;
            for (int s : model.trip(t).segments) outlays += model.toll(s);
            for (int m : model.trip(t).riders.members()) {
                valuation_sum += model.valuation(m, t);
            }
        }
        for (int m = 0; m < model.num_riders(); ++m) {
            payments += model.price(m);
        }
        const double utility = carpool_utility(model, best);
        const double revenues = carpool_revenues(model, best);
        CHECK(std::abs(revenues - (valuation_sum - utility)) < 1e-9);
        CHECK(budget_balanced(model, best) == (payments >= outlays - 1e-9));
    }
}

TEST_CASE("fund coalition game") {
    SUBCASE("two investors and a manager") {
        const CharacteristicFunction v = build_fund_game(2, 5.0, 3.0);
        CHECK(v.value(v.grand()) == doctest::Approx(8.0));
        CHECK(v.value(Coalition::of({0, 1})) == doctest::Approx(5.0));
        CHECK(v.value(Coalition::single(2)) == doctest::Approx(0.0));
        CHECK(v.sustainable());
        const GameClassification c = classify(v);
        CHECK(c.core_nonempty);
        REQUIRE(c.core_witness.has_value());
        CHECK(is_in_core(*c.core_witness, v));
        CHECK(c.shared_value);
    }
    SUBCASE("degenerate zero utilities") {
        const CharacteristicFunction v = build_fund_game(1, 0.0, 0.0);
        for (std::uint32_t mask = 0; mask < 4; ++mask) {
            CHECK(v.value(Coalition(mask)) == 0.0);
        }
        CHECK(classify(v).core_nonempty);
    }
    SUBCASE("supermodular by construction") {
        CHECK(is_convex(build_fund_game(3, 6.0, 2.0)));
    }
    SUBCASE("validation") {
        CHECK_THROWS_AS(build_fund_game(0, 1.0, 1.0), parameter_error);
        CHECK_THROWS_AS(build_fund_game(2, -1.0, 1.0), parameter_error);
        CHECK_THROWS_AS(build_fund_game(14, 1.0, 1.0), capacity_error);
    }
}

TEST_CASE("carpooling coalition game") {
    SUBCASE("two-rider marketplace is a shared value game") {
        const CharacteristicFunction v = build_carpool_game(two_rider_model());
        CHECK(v.value(v.grand()) == doctest::Approx(20.0)); // U + P = 7 + 13
        CHECK(v.value(Coalition::single(1)) == doctest::Approx(0.0));
        const GameClassification c = classify(v);
        CHECK(c.core_nonempty);
        CHECK(c.shared_value);
    }
    SUBCASE("no shared trips degenerates to the solo economy") {
        // Costs equal valuations, so the planner surplus is exactly zero.
        std::vector<Trip> trips{{Coalition::single(0), {0}, 10.0},
                                {Coalition::single(1), {0}, 8.0}};
        const CarpoolModel solos({"r1", "r2"}, std::move(trips),
                                 {{10.0, 0.0}, {0.0, 8.0}}, {"s1"}, {1.0},
                                 {2.0, 2.0});
        const CharacteristicFunction v = build_carpool_game(solos);
        CHECK(v.value(v.grand()) ==
              doctest::Approx(v.value(Coalition::single(0))));
        CHECK(classify(v).core_nonempty);
    }
    SUBCASE("a cheap shared trip makes the grand coalition dominate") {
        std::vector<Trip> trips;
        trips.push_back({Coalition::single(0), {0}, 4.0});
        trips.push_back({Coalition::single(1), {0}, 4.0});
        trips.push_back({Coalition::single(2), {0}, 4.0});
        trips.push_back({Coalition::of({0, 1, 2}), {0}, 3.0});
        std::vector<std::vector<double>> valuations{
            {9.0, 0.0, 0.0, 9.0},
            {0.0, 9.0, 0.0, 9.0},
            {0.0, 0.0, 9.0, 9.0}};
        const CarpoolModel model({"r1", "r2", "r3"}, std::move(trips),
                                 std::move(valuations), {"s1"}, {1.0},
                                 {5.0, 5.0, 5.0});
        const Assignment best = best_assignment(model);
        CHECK(best.trip_indices == std::vector<int>{3});
        const CharacteristicFunction v = build_carpool_game(model);
        CHECK(v.value(v.grand()) > v.value(Coalition::single(0)));
        const GameClassification c = classify(v);
        CHECK(c.core_nonempty);
        REQUIRE(c.core_witness.has_value());
    }
    SUBCASE("rider capacity") {
        std::vector<std::string> names;
        std::vector<Trip> trips;
        std::vector<std::vector<double>> valuations;
        for (int m = 0; m < 11; ++m) {
            names.push_back("r" + std::to_string(m));
            trips.push_back({Coalition::single(m), {0}, 1.0});
        }
        for (int m = 0; m < 11; ++m) {
            valuations.push_back(std::vector<double>(11, 2.0));
        }
        const CarpoolModel model(std::move(names), std::move(trips),
                                 std::move(valuations), {"s1"}, {0.5},
                                 std::vector<double>(11, 1.0));
        CHECK_THROWS_AS(build_carpool_game(model), capacity_error);
    }
}

TEST_CASE("builder games always have non-empty cores") {
    std::mt19937 rng(20240816);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 25; ++trial) {
        const CharacteristicFunction fund = build_fund_game(
            1 + int(rng() % 5), unit(rng) * 10.0, unit(rng) * 10.0);
        CHECK(classify(fund).core_nonempty);

        const CarpoolModel model = svtest::random_carpool(rng, 2 + int(rng() % 3));
        CHECK(classify(build_carpool_game(model)).core_nonempty);
    }
}
