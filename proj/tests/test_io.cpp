#include <doctest.h>

#include <cmath>
#include <string>

#include "sv/io.hpp"
#include "sv/solution.hpp"
#include "sv/svc.hpp"

using namespace sv;

namespace {

const char* kLawFirmJson = R"({
  "agents": ["employees", "firm"],
  "edges": [["employees", "firm"]],
  "values": [
    {"coalition": ["employees", "firm"], "value": 7.0},
    {"coalition": ["employees"], "value": 0.0},
    {"coalition": ["firm"], "value": 0.0}
  ],
  "sustainable": true
})";

} // namespace

TEST_CASE("game specification round trip") {
    const io::GameSpec spec = io::parse_game_text(kLawFirmJson);
    CHECK(spec.agents.size() == 2);
    CHECK(spec.agents.index_of("firm") == 1);
    CHECK(spec.v.sustainable());
    CHECK(spec.v.value(Coalition::of({0, 1})) == doctest::Approx(7.0));
    CHECK(spec.grand_feasible);
    CHECK(spec.warnings.empty());

    const GameClassification c = classify(spec.v);
    CHECK(c.shared_value);
}

TEST_CASE("missing coalition values default to zero with a warning") {
    const io::GameSpec spec = io::parse_game_text(R"({
      "agents": ["a", "b", "c"],
      "values": [{"coalition": ["a", "b", "c"], "value": 9.0}]
    })");
    // Complete graph by default; the three pairs have no entries.
    REQUIRE(spec.warnings.size() == 1);
    CHECK(spec.warnings[0].find("3 feasible coalition") != std::string::npos);
    CHECK(spec.v.value(Coalition::of({0, 1})) == 0.0);
    CHECK(spec.v.complete());
    CHECK_FALSE(spec.v.sustainable());
}

TEST_CASE("empty edge list leaves the grand coalition infeasible") {
    const io::GameSpec spec = io::parse_game_text(R"({
      "agents": ["a", "b"],
      "edges": [],
      "values": [{"coalition": ["a", "b"], "value": 4.0}]
    })");
    CHECK_FALSE(spec.grand_feasible);
    REQUIRE(!spec.warnings.empty());
    CHECK(spec.warnings.back().find("grand coalition") != std::string::npos);
}

TEST_CASE("game specification rejects malformed input") {
    CHECK_THROWS_AS(io::parse_game_text("{"), input_error);
    CHECK_THROWS_AS(io::parse_game_text(R"({"values": []})"), input_error);
    CHECK_THROWS_AS(io::parse_game_text(R"({
      "agents": ["a", "b"],
      "values": [{"coalition": ["a", "zz"], "value": 1.0}]
    })"),
                    input_error);
    CHECK_THROWS_AS(io::parse_game_text(R"({
      "agents": ["a", "b"],
      "values": [{"coalition": ["a", "a"], "value": 1.0}]
    })"),
                    input_error);
    CHECK_THROWS_AS(io::parse_game_text(R"({
      "agents": ["a", "b"],
      "values": [
        {"coalition": ["a", "b"], "value": 1.0},
        {"coalition": ["b", "a"], "value": 2.0}
      ]
    })"),
                    input_error);
    CHECK_THROWS_AS(io::parse_game_text(R"({
      "agents": ["a", "b"],
      "edges": [["a"]],
      "values": []
    })"),
                    input_error);
}

TEST_CASE("frontier specifications") {
    const Frontier power = io::parse_frontier_text(R"({"form":"power","k":2})");
    CHECK(power.is_power());
    CHECK(power.exponent() == 2.0);

    const Frontier sampled = io::parse_frontier_text(
        R"({"points":[[0.0,1.0],[0.5,0.7],[1.0,0.0]]})");
    CHECK(sampled.value_at(0.5) == doctest::Approx(0.7));

    CHECK_THROWS_AS(io::parse_frontier_text(R"({"form":"circle"})"),
                    input_error);
    CHECK_THROWS_AS(io::parse_frontier_text(R"({"k": 2})"), input_error);
    CHECK_THROWS_AS(io::parse_frontier_text(R"({"points":[[0.0],[1.0]]})"),
                    input_error);
}

TEST_CASE("point sets for hypervolume comparisons") {
    const auto pts = io::parse_points_text(
        R"({"points":[[0.5,0.5,0.5],[1.0,0.2,0.3]]})");
    REQUIRE(pts.size() == 2);
    CHECK(pts[0].size() == 3);
    CHECK(hypervolume(pts, 3).value > 0.0);

    CHECK_THROWS_AS(io::parse_points_text(R"({"points":[]})"), input_error);
    CHECK_THROWS_AS(
        io::parse_points_text(R"({"points":[[0.5,0.5],[0.5,0.5,0.5]]})"),
        input_error);
}

TEST_CASE("compromise programming input") {
    const io::CpInput cp = io::parse_cp_text(R"({
      "frontier": {"form": "power", "k": 1},
      "weights": [0.8, 0.2],
      "h": "inf"
    })");
    CHECK(cp.criteria[0].weight == 0.8);
    REQUIRE(cp.h.has_value());
    CHECK(std::isinf(*cp.h));
    CHECK(cp.warnings.empty());

    const io::CpInput skew = io::parse_cp_text(R"({
      "frontier": {"form": "power", "k": 1},
      "weights": [0.8, 0.8]
    })");
    REQUIRE(skew.warnings.size() == 1);
    CHECK_FALSE(skew.h.has_value());

    CHECK_THROWS_AS(io::parse_cp_text(R"({
      "frontier": {"form": "power", "k": 1},
      "weights": [0.8, 0.2],
      "h": "two"
    })"),
                    input_error);
}

TEST_CASE("goal programming input") {
    const io::GpInput gp = io::parse_gp_text(R"({
      "goals": [
        {"name": "u1", "target": 4.0, "weight": 0.5},
        {"target": 3.0, "weight": 0.5}
      ],
      "constraints": [
        {"coeffs": [1.0, 1.0], "relation": "<=", "rhs": 7.0},
        {"coeffs": [1.0, 0.0], "relation": ">=", "rhs": 0.0}
      ]
    })");
    REQUIRE(gp.goals.size() == 2);
    CHECK(gp.goals[1].name == "g2");
    REQUIRE(gp.constraints.size() == 2);
    CHECK(gp.constraints[0].relation == Relation::LessEq);
    CHECK(gp.constraints[1].relation == Relation::GreaterEq);
    const GpSolution sol = gp_solve(gp.goals, gp.constraints);
    CHECK(sol.objective == doctest::Approx(0.0));

    CHECK_THROWS_AS(io::parse_gp_text(R"({
      "goals": [{"target": 1.0}],
      "constraints": [{"coeffs": [1.0], "relation": "<>", "rhs": 0.0}]
    })"),
                    input_error);
}

TEST_CASE("carpool model input") {
    const char* text = R"({
      "riders": ["r1", "r2"],
      "trips": [
        {"riders": ["r1"], "segments": ["s1"], "cost": 4.0},
        {"riders": ["r2"], "segments": ["s2"], "cost": 4.0},
        {"riders": ["r1", "r2"], "segments": ["s1", "s2"], "cost": 5.0}
      ],
      "valuations": [[10.0, 0.0, 10.0], [0.0, 8.0, 8.0]],
      "tolls": {"s1": 2.0, "s2": 1.0},
      "prices": {"r1": 6.0, "r2": 5.0}
    })";
    const io::CarpoolInput in = io::parse_carpool_text(text);
    CHECK(in.warnings.empty());
    const Assignment best = best_assignment(in.model);
    CHECK(carpool_utility(in.model, best) == doctest::Approx(7.0));
    CHECK(carpool_surplus(in.model, best) == doctest::Approx(13.0));
    CHECK(budget_balanced(in.model, best));
}

TEST_CASE("missing toll entries surface late") {
    const io::CarpoolInput in = io::parse_carpool_text(R"({
      "riders": ["r1"],
      "trips": [{"riders": ["r1"], "segments": ["s1"], "cost": 1.0}],
      "valuations": [[5.0]],
      "prices": {"r1": 2.0}
    })");
    REQUIRE(in.warnings.size() == 1);
    CHECK(in.warnings[0].find("s1") != std::string::npos);
    const Assignment solo{{0}};
    CHECK(carpool_utility(in.model, solo) == doctest::Approx(3.0));
    CHECK_THROWS_AS(budget_balanced(in.model, solo), parameter_error);
}

TEST_CASE("carpool input validation") {
    CHECK_THROWS_AS(io::parse_carpool_text(R"({
      "riders": ["r1"],
      "trips": [{"riders": ["r9"], "segments": [], "cost": 1.0}],
      "valuations": [[5.0]],
      "prices": {"r1": 2.0}
    })"),
                    input_error);
    CHECK_THROWS_AS(io::parse_carpool_text(R"({
      "riders": ["r1"],
      "trips": [{"riders": ["r1"], "segments": [], "cost": 1.0}],
      "valuations": [[5.0]],
      "prices": {}
    })"),
                    input_error);
}

TEST_CASE("truncated input is always an input error") {
    const std::string full = kLawFirmJson;
    for (std::size_t len = 0; len < full.size(); ++len) {
        CHECK_THROWS_AS(io::parse_game_text(full.substr(0, len)), input_error);
    }
}

TEST_CASE("equality model input") {
    const EqualityBenefitModel model =
        io::parse_equality_text(R"({"Q": 100.0, "C_m": 30.0, "k": 2})");
    CHECK(model.exponent() == 2.0);
    CHECK(model.benefit_anchor() == doctest::Approx(70.0));

    const EqualityBenefitModel base =
        io::parse_equality_text(R"({"Q": 100.0, "C_m": 30.0})");
    CHECK(base.exponent() == 1.0);

    CHECK_THROWS_AS(io::parse_equality_text(R"({"Q": 100.0})"), input_error);
    CHECK_THROWS_AS(io::parse_equality_text(R"({"Q": 100.0, "C_m": 0.0})"),
                    range_error);
}
