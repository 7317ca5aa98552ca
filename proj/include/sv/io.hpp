#ifndef SV_IO_HPP
#define SV_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "sv/coalition.hpp"
#include "sv/economy.hpp"
#include "sv/mcdm.hpp"

namespace sv::io {

/// A coalitional game read from file: agents, relationship graph,
/// characteristic function, plus any soft diagnostics collected while
/// completing the table.
struct GameSpec {
    AgentSet agents;
    AgentGraph graph;
    CharacteristicFunction v;
    bool grand_feasible = true;
    std::vector<std::string> warnings;
};

struct CpInput {
    Frontier frontier;
    std::vector<CriterionSpec> criteria;
    std::optional<double> h; // empty: report the compromise-set endpoints only
    std::vector<std::string> warnings;
};

struct GpInput {
    std::vector<GoalSpec> goals;
    std::vector<LinearConstraint> constraints;
};

struct CarpoolInput {
    CarpoolModel model;
    std::vector<std::string> warnings;
};

GameSpec parse_game_text(const std::string& json_text);
GameSpec load_game(const std::string& path);

/// Frontier spec: {"form":"power","k":2} or {"points":[[t1,t2],...]}.
Frontier parse_frontier_text(const std::string& json_text);
Frontier load_frontier(const std::string& path);

/// Point-set spec for hypervolume comparisons: {"points":[[...],...]} with
/// 2..6 coordinates per point.
std::vector<std::vector<double>> parse_points_text(const std::string& json_text);
std::vector<std::vector<double>> load_points(const std::string& path);

/// True when the file holds an n-dimensional point set rather than a
/// bicriteria frontier.
bool is_point_set_file(const std::string& path);

CpInput parse_cp_text(const std::string& json_text);
CpInput load_cp(const std::string& path);

GpInput parse_gp_text(const std::string& json_text);
GpInput load_gp(const std::string& path);

CarpoolInput parse_carpool_text(const std::string& json_text);
CarpoolInput load_carpool(const std::string& path);

EqualityBenefitModel parse_equality_text(const std::string& json_text);
EqualityBenefitModel load_equality(const std::string& path);

} // namespace sv::io

#endif // SV_IO_HPP
