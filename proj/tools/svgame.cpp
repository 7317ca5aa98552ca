// Command-line surface over the shared-value game toolkit: classification,
// compromise/goal programming, frontier displacement and the bundled
// economy models. Prints JSON records; curve data goes to CSV files.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sv/coalition.hpp"
#include "sv/economy.hpp"
#include "sv/io.hpp"
#include "sv/mcdm.hpp"
#include "sv/solution.hpp"
#include "sv/svc.hpp"

namespace {

using nlohmann::ordered_json;

// All numeric output is rounded to 12 significant digits so tolerance
// checks against the printed values are unambiguous.
double r12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

std::string fmt12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void print_warnings(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<double> parse_number_list(const std::string& text,
                                      const char* what) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string item =
            text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw sv::input_error(std::string("cannot parse ") + what +
                                  " value '" + item + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::ofstream open_output(const std::string& out_dir, const std::string& name) {
    std::filesystem::create_directories(out_dir);
    const auto path = std::filesystem::path(out_dir) / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw sv::error("cannot write '" + path.string() + "'");
    return out;
}

ordered_json theta_json(const sv::ThetaPoint& p) {
    return ordered_json{{"theta1", r12(p.theta1)}, {"theta2", r12(p.theta2)}};
}

ordered_json witness_json(const sv::AgentSet& agents,
                          const sv::PayoffVector& u) {
    ordered_json out = ordered_json::object();
    for (int i = 0; i < agents.size(); ++i) {
        out[agents.label(i)] = r12(u[i]);
    }
    return out;
}

ordered_json classification_json(const sv::AgentSet& agents,
                                 const sv::GameClassification& c) {
    ordered_json out;
    out["sustainable"] = c.sustainable;
    out["convex"] = c.convex;
    out["core_nonempty"] = c.core_nonempty;
    if (c.core_witness) {
        out["core_witness"] = witness_json(agents, *c.core_witness);
    } else {
        out["core_witness"] = nullptr;
    }
    out["shared_value"] = c.shared_value;
    return out;
}

// ---------------------------------------------------------------------------
// Subcommands

void run_classify(const std::string& input) {
    sv::io::GameSpec spec = sv::io::load_game(input);
    print_warnings(spec.warnings);
    ordered_json out = classification_json(spec.agents, sv::classify(spec.v));
    out["grand_coalition_feasible"] = spec.grand_feasible;
    emit(out);
}

void run_core_check(const std::string& input, const std::string& payoff_arg) {
    sv::io::GameSpec spec = sv::io::load_game(input);
    print_warnings(spec.warnings);
    ordered_json out;
    if (!payoff_arg.empty()) {
        const std::vector<double> u = parse_number_list(payoff_arg, "payoff");
        out["payoff"] = witness_json(spec.agents, u);
        out["in_core"] = sv::is_in_core(u, spec.v);
    } else {
        const sv::CoreResult core = sv::core_nonempty(spec.v);
        out["core_nonempty"] = core.nonempty;
        if (core.witness) {
            out["core_witness"] = witness_json(spec.agents, *core.witness);
        } else {
            out["core_witness"] = nullptr;
        }
    }
    emit(out);
}

void run_convexity(const std::string& input) {
    sv::io::GameSpec spec = sv::io::load_game(input);
    print_warnings(spec.warnings);
    emit(ordered_json{{"convex", sv::is_convex(spec.v)}});
}

void run_coalitions(const std::string& input, int min_size) {
    sv::io::GameSpec spec = sv::io::load_game(input);
    print_warnings(spec.warnings);
    const auto feasible = sv::enumerate_feasible_coalitions(spec.graph,
                                                            min_size);
    ordered_json list = ordered_json::array();
    for (const sv::Coalition& c : feasible) {
        ordered_json members = ordered_json::array();
        for (int m : c.members()) members.push_back(spec.agents.label(m));
        list.push_back(std::move(members));
    }
    emit(ordered_json{{"min_size", min_size},
                      {"count", feasible.size()},
                      {"coalitions", std::move(list)}});
}

void write_frontier_csv(std::ofstream out, const sv::Frontier& frontier) {
    out << "theta1,theta2\n";
    for (int i = 0; i <= 1000; ++i) {
        const double t = double(i) / 1000.0;
        out << fmt12(t) << "," << fmt12(frontier.value_at(t)) << "\n";
    }
}

void run_cp(const std::string& input, const std::string& out_dir) {
    sv::io::CpInput cp = sv::io::load_cp(input);
    print_warnings(cp.warnings);

    const sv::CompromiseSet set = sv::compromise_set(cp.frontier, cp.criteria);
    ordered_json out;
    out["weights"] = {r12(cp.criteria[0].weight), r12(cp.criteria[1].weight)};
    auto result_json = [&](const sv::CompromiseResult& r) {
        ordered_json j = theta_json(r.point);
        j["distance"] = r12(r.distance);
        return j;
    };
    out["manhattan"] = result_json(set.manhattan);
    out["chebyshev"] = result_json(set.chebyshev);
    if (cp.h) {
        const sv::CompromiseResult r =
            sv::compromise_solution(cp.frontier, cp.criteria, *cp.h);
        ordered_json j = result_json(r);
        j["h"] = std::isinf(*cp.h) ? ordered_json("inf") : ordered_json(r12(*cp.h));
        out["requested"] = std::move(j);
    }
    emit(out);

    if (!out_dir.empty() && !cp.frontier.single_point()) {
        write_frontier_csv(open_output(out_dir, "cp_frontier.csv"),
                           cp.frontier);
    }
}

void run_gp(const std::string& input) {
    const sv::io::GpInput gp = sv::io::load_gp(input);
    const sv::GpSolution sol = sv::gp_solve(gp.goals, gp.constraints);
    ordered_json goals = ordered_json::array();
    for (std::size_t j = 0; j < gp.goals.size(); ++j) {
        goals.push_back(ordered_json{{"name", gp.goals[j].name},
                                     {"target", r12(gp.goals[j].target)},
                                     {"weight", r12(gp.goals[j].weight)},
                                     {"u", r12(sol.u[j])},
                                     {"deviation_up", r12(sol.deviation_up[j])},
                                     {"deviation_down",
                                      r12(sol.deviation_down[j])}});
    }
    emit(ordered_json{{"objective", r12(sol.objective)},
                      {"goals", std::move(goals)}});
}

void run_svc(const std::string& before_path, const std::string& after_path,
             const std::string& out_dir, std::uint64_t seed, double tol) {
    // Point-set files switch the comparison to hypervolumes; bicriteria
    // frontier files reproduce the area-under-curve definition.
    if (sv::io::is_point_set_file(before_path) ||
        sv::io::is_point_set_file(after_path)) {
        const auto before = sv::io::load_points(before_path);
        const auto after = sv::io::load_points(after_path);
        if (before.front().size() != after.front().size()) {
            throw sv::input_error("point sets must share one dimension");
        }
        const int dim = static_cast<int>(before.front().size());
        const sv::HypervolumeResult hb = sv::hypervolume(before, dim, seed);
        const sv::HypervolumeResult ha = sv::hypervolume(after, dim, seed);
        const double svc = ha.value - hb.value;
        ordered_json out;
        out["mode"] = "hypervolume";
        out["dim"] = dim;
        out["hv_before"] = r12(hb.value);
        out["hv_after"] = r12(ha.value);
        out["svc"] = r12(svc);
        out["created"] = svc > tol;
        out["exact"] = hb.exact && ha.exact;
        if (!hb.exact || !ha.exact) {
            out["std_error_before"] = r12(hb.std_error);
            out["std_error_after"] = r12(ha.std_error);
        }
        emit(out);
        return;
    }

    const sv::Frontier before = sv::io::load_frontier(before_path);
    const sv::Frontier after = sv::io::load_frontier(after_path);
    const sv::SvcReport report = sv::svc_without_targets(before, after);
    ordered_json out;
    out["mode"] = "auc";
    out["auc_before"] = r12(report.auc_before);
    out["auc_after"] = r12(report.auc_after);
    out["svc"] = r12(report.svc);
    out["created"] = report.svc > tol;
    emit(out);

    std::ofstream csv = open_output(out_dir, "svc_curves.csv");
    csv << "theta1,before,after\n";
    for (int i = 0; i <= 1000; ++i) {
        const double t = double(i) / 1000.0;
        csv << fmt12(t) << "," << fmt12(before.value_at(t)) << ","
            << fmt12(after.value_at(t)) << "\n";
    }
}

void run_carpool(const std::string& input) {
    sv::io::CarpoolInput in = sv::io::load_carpool(input);
    print_warnings(in.warnings);
    const sv::CarpoolModel& model = in.model;

    const sv::Assignment assignment = sv::best_assignment(model);
    ordered_json trips = ordered_json::array();
    for (int t : assignment.trip_indices) {
        ordered_json riders = ordered_json::array();
        for (int m : model.trip(t).riders.members()) {
            riders.push_back(model.rider_name(m));
        }
        trips.push_back(std::move(riders));
    }

    ordered_json out;
    out["assignment"] = std::move(trips);
    out["utility"] = r12(sv::carpool_utility(model, assignment));
    out["surplus"] = r12(sv::carpool_surplus(model, assignment));
    out["revenues"] = r12(sv::carpool_revenues(model, assignment));
    out["budget_balanced"] = sv::budget_balanced(model, assignment);

    const sv::CharacteristicFunction game = sv::build_carpool_game(model);
    const sv::GameClassification cls = sv::classify(game);
    ordered_json game_json;
    game_json["v_riders"] = r12(game.value(sv::Coalition::single(0)));
    game_json["v_regulator"] = r12(game.value(sv::Coalition::single(1)));
    game_json["v_grand"] = r12(game.value(game.grand()));
    game_json["classification"] =
        classification_json(sv::AgentSet({"riders", "regulator"}), cls);
    out["game"] = std::move(game_json);
    emit(out);
}

void run_equality(const std::string& input, const std::string& weights_arg) {
    const sv::EqualityBenefitModel model = sv::io::load_equality(input);
    if (!model.nadir_nonnegative()) {
        std::cerr << "warning: benefits at full equality are negative "
                     "(Q < 2 C_m)\n";
    }
    const sv::Frontier frontier = sv::equality_frontier(model);
    ordered_json out;
    out["Q"] = r12(model.sales());
    out["C_m"] = r12(model.men_cost());
    out["k"] = r12(model.exponent());
    out["benefit_anchor"] = r12(model.benefit_anchor());
    out["benefit_nadir"] = r12(model.benefit_nadir());
    out["auc"] = r12(sv::auc(frontier));

    if (!weights_arg.empty()) {
        const std::vector<double> w = parse_number_list(weights_arg, "weight");
        if (w.size() != 2) {
            throw sv::input_error("--weights takes exactly two numbers");
        }
        const sv::ParadoxResult balanced =
            sv::equality_paradox_check(model, w[0], w[1]);
        ordered_json b = theta_json(balanced.point);
        b["benefit"] = r12(model.benefit_at(balanced.point.theta1));
        out["balanced"] = std::move(b);
        out["attains_max_equality"] = balanced.attains_max_equality;
    }
    emit(out);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Shared-value coalition games: classification, compromise "
                 "and goal programming, frontier displacement metrics"};
    app.require_subcommand(1);

    std::string input, out_dir, before_path, after_path;
    std::string payoff_arg, weights_arg;
    std::uint64_t seed = 42;
    double tol = 1e-9;
    int min_size = 2;

    app.add_option("--seed", seed, "Seed for Monte Carlo estimates");
    app.add_option("--tol", tol, "Creation threshold for SVC reports")
        ->check(CLI::PositiveNumber);

    auto* classify_cmd =
        app.add_subcommand("classify", "Classify a game from a JSON spec");
    classify_cmd->add_option("--input", input, "Game spec file")->required();

    auto* core_cmd =
        app.add_subcommand("core-check", "Core non-emptiness and witness");
    core_cmd->add_option("--input", input, "Game spec file")->required();
    core_cmd->add_option("--payoff", payoff_arg,
                         "Comma-separated payoff vector to test instead");

    auto* convex_cmd =
        app.add_subcommand("convexity", "Supermodularity check");
    convex_cmd->add_option("--input", input, "Game spec file")->required();

    auto* coalitions_cmd = app.add_subcommand(
        "coalitions", "Enumerate graph-feasible coalitions");
    coalitions_cmd->add_option("--input", input, "Game spec file")->required();
    coalitions_cmd->add_option("--min-size", min_size, "Minimum coalition size")
        ->check(CLI::NonNegativeNumber);

    auto* cp_cmd =
        app.add_subcommand("cp", "Compromise programming over a frontier");
    cp_cmd->add_option("--input", input, "CP spec file")->required();
    cp_cmd->add_option("--out-dir", out_dir,
                       "Directory for the frontier sample CSV");

    auto* gp_cmd = app.add_subcommand("gp", "Weighted goal programming");
    gp_cmd->add_option("--input", input, "GP spec file")->required();

    auto* svc_cmd = app.add_subcommand(
        "svc", "Shared value creation between two frontiers");
    svc_cmd->add_option("--before", before_path, "Frontier spec before")
        ->required();
    svc_cmd->add_option("--after", after_path, "Frontier spec after")
        ->required();
    svc_cmd->add_option("--out-dir", out_dir, "Directory for the curve CSV")
        ->default_val(".");

    auto* carpool_cmd =
        app.add_subcommand("carpool", "Carpooling marketplace metrics");
    carpool_cmd->add_option("--input", input, "Carpool model file")->required();

    auto* equality_cmd =
        app.add_subcommand("equality", "Equality-benefits trade-off model");
    equality_cmd->add_option("--input", input, "Equality model file")
        ->required();
    equality_cmd->add_option("--weights", weights_arg,
                             "Bargaining weights w1,w2 for the balanced "
                             "solution and the equality-paradox check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*classify_cmd) {
            run_classify(input);
        } else if (*core_cmd) {
            run_core_check(input, payoff_arg);
        } else if (*convex_cmd) {
            run_convexity(input);
        } else if (*coalitions_cmd) {
            run_coalitions(input, min_size);
        } else if (*cp_cmd) {
            run_cp(input, out_dir);
        } else if (*gp_cmd) {
            run_gp(input);
        } else if (*svc_cmd) {
            run_svc(before_path, after_path, out_dir, seed, tol);
        } else if (*carpool_cmd) {
            run_carpool(input);
        } else if (*equality_cmd) {
            run_equality(input, weights_arg);
        }
    } catch (const sv::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
