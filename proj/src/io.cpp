#include "sv/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

namespace sv::io {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("invalid JSON: ") + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw input_error(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

double number_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number()) {
        throw input_error(std::string("field '") + key + "' must be a number");
    }
    return v.get<double>();
}

std::string string_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_string()) {
        throw input_error(std::string("field '") + key + "' must be a string");
    }
    return v.get<std::string>();
}

const json& array_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_array()) {
        throw input_error(std::string("field '") + key + "' must be an array");
    }
    return v;
}

std::vector<std::string> string_list(const json& arr, const char* what) {
    std::vector<std::string> out;
    for (const json& e : arr) {
        if (!e.is_string()) {
            throw input_error(std::string(what) + " must be strings");
        }
        out.push_back(e.get<std::string>());
    }
    return out;
}

int agent_index(const AgentSet& agents, const std::string& label,
                const char* context) {
    if (auto idx = agents.index_of(label)) return *idx;
    throw input_error(std::string("unknown agent label '") + label + "' in " +
                      context);
}

} // namespace

// ---------------------------------------------------------------------------
// Game specification

GameSpec parse_game_text(const std::string& text) {
    const json j = parse_json(text);
    AgentSet agents(string_list(array_field(j, "agents"), "agent labels"));
    const int n = agents.size();

    AgentGraph graph = j.contains("edges") ? AgentGraph(n)
                                           : AgentGraph::complete(n);
    if (j.contains("edges")) {
        const json& edges = j.at("edges");
        if (!edges.is_array()) throw input_error("field 'edges' must be an array");
        for (const json& e : edges) {
            if (!e.is_array() || e.size() != 2) {
                throw input_error("each edge must be a pair of agent labels");
            }
            const auto pair = string_list(e, "edge endpoints");
            graph.add_edge(agent_index(agents, pair[0], "edges"),
                           agent_index(agents, pair[1], "edges"));
        }
    }

    bool sustainable = false;
    if (j.contains("sustainable")) {
        if (!j.at("sustainable").is_boolean()) {
            throw input_error("field 'sustainable' must be a boolean");
        }
        sustainable = j.at("sustainable").get<bool>();
    }

    CharacteristicFunction v(n, sustainable);
    for (const json& entry : array_field(j, "values")) {
        Coalition c;
        for (const auto& label :
             string_list(array_field(entry, "coalition"), "coalition members")) {
            const int idx = agent_index(agents, label, "values");
            if (c.contains(idx)) {
                throw input_error("agent '" + label + "' listed twice in one "
                                  "coalition");
            }
            c = c | Coalition::single(idx);
        }
        if (v.has(c) && !c.empty()) {
            throw input_error("duplicate value entry for a coalition");
        }
        v.set(c, number_field(entry, "value"));
    }

    std::vector<std::string> warnings;
    if (n <= kMaxTableAgents) {
        // Complete the table; feasible multi-agent coalitions that were left
        // out are worth flagging, everything else defaults silently.
        long missing_feasible = 0;
        const std::uint32_t full = Coalition::full(n).mask();
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            Coalition c(mask);
            if (v.has(c)) continue;
            if (c.size() >= 2 && is_feasible(c, graph)) ++missing_feasible;
            v.set(c, 0.0);
        }
        if (missing_feasible > 0) {
            warnings.push_back(std::to_string(missing_feasible) +
                               " feasible coalition(s) had no value entry; "
                               "defaulted to 0");
        }
    } else {
        warnings.push_back("table left sparse beyond " +
                           std::to_string(kMaxTableAgents) + " agents");
    }

    const bool grand_ok = is_feasible(Coalition::full(n), graph);
    if (!grand_ok) {
        warnings.push_back("the grand coalition is not feasible under the "
                           "agent graph");
    }
    return GameSpec{std::move(agents), std::move(graph), std::move(v),
                    grand_ok, std::move(warnings)};
}

GameSpec load_game(const std::string& path) {
    return parse_game_text(read_file(path));
}

// ---------------------------------------------------------------------------
// Frontiers and point sets

namespace {

Frontier frontier_from_json(const json& j) {
    if (j.contains("form")) {
        if (string_field(j, "form") != "power") {
            throw input_error("unknown frontier form; expected \"power\"");
        }
        return Frontier::power(number_field(j, "k"));
    }
    if (!j.contains("points")) {
        throw input_error("frontier needs either \"form\" or \"points\"");
    }
    std::vector<ThetaPoint> pts;
    for (const json& p : j.at("points")) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number() ||
            !p[1].is_number()) {
            throw input_error("frontier points must be [theta1, theta2] pairs");
        }
        pts.push_back(ThetaPoint{p[0].get<double>(), p[1].get<double>()});
    }
    return Frontier::sampled(std::move(pts));
}

} // namespace

Frontier parse_frontier_text(const std::string& text) {
    return frontier_from_json(parse_json(text));
}

Frontier load_frontier(const std::string& path) {
    return parse_frontier_text(read_file(path));
}

std::vector<std::vector<double>> parse_points_text(const std::string& text) {
    const json j = parse_json(text);
    std::vector<std::vector<double>> out;
    for (const json& p : array_field(j, "points")) {
        if (!p.is_array() || p.size() < 2 || p.size() > 6) {
            throw input_error("each point needs 2..6 coordinates");
        }
        std::vector<double> coords;
        for (const json& x : p) {
            if (!x.is_number()) throw input_error("coordinates must be numbers");
            coords.push_back(x.get<double>());
        }
        if (!out.empty() && coords.size() != out.front().size()) {
            throw input_error("points must share one dimension");
        }
        out.push_back(std::move(coords));
    }
    if (out.empty()) throw input_error("empty point set");
    return out;
}

std::vector<std::vector<double>> load_points(const std::string& path) {
    return parse_points_text(read_file(path));
}

bool is_point_set_file(const std::string& path) {
    const json j = parse_json(read_file(path));
    if (j.contains("form")) return false;
    if (!j.contains("points") || !j.at("points").is_array() ||
        j.at("points").empty()) {
        return false;
    }
    const json& first = j.at("points").front();
    return first.is_array() && first.size() > 2;
}

// ---------------------------------------------------------------------------
// Compromise and goal programming inputs

CpInput parse_cp_text(const std::string& text) {
    const json j = parse_json(text);
    Frontier frontier = frontier_from_json(field(j, "frontier"));

    const json& weights = array_field(j, "weights");
    if (weights.size() != 2) {
        throw input_error("field 'weights' must hold exactly two numbers");
    }
    std::vector<CriterionSpec> criteria;
    double weight_sum = 0.0;
    for (std::size_t i = 0; i < 2; ++i) {
        if (!weights[i].is_number()) {
            throw input_error("weights must be numbers");
        }
        CriterionSpec spec;
        spec.name = i == 0 ? "theta1" : "theta2";
        spec.weight = weights[i].get<double>();
        weight_sum += spec.weight;
        criteria.push_back(std::move(spec));
    }
    if (j.contains("names")) {
        const json& names = array_field(j, "names");
        if (names.size() != 2) {
            throw input_error("field 'names' must hold two strings");
        }
        criteria[0].name = names[0].get<std::string>();
        criteria[1].name = names[1].get<std::string>();
    }

    CpInput out{std::move(frontier), std::move(criteria), std::nullopt, {}};
    if (j.contains("h")) {
        const json& h = j.at("h");
        if (h.is_string()) {
            if (h.get<std::string>() != "inf") {
                throw input_error("field 'h' must be a number >= 1 or \"inf\"");
            }
            out.h = kInfinityH;
        } else if (h.is_number()) {
            out.h = h.get<double>();
        } else {
            throw input_error("field 'h' must be a number >= 1 or \"inf\"");
        }
    }
    if (std::abs(weight_sum - 1.0) > 1e-9) {
        out.warnings.push_back("criterion weights sum to " +
                               std::to_string(weight_sum) + ", not 1");
    }
    return out;
}

CpInput load_cp(const std::string& path) {
    return parse_cp_text(read_file(path));
}

GpInput parse_gp_text(const std::string& text) {
    const json j = parse_json(text);
    GpInput out;
    for (const json& g : array_field(j, "goals")) {
        GoalSpec goal;
        goal.name = g.contains("name") ? string_field(g, "name")
                                       : "g" + std::to_string(out.goals.size() + 1);
        goal.target = number_field(g, "target");
        goal.weight = g.contains("weight") ? number_field(g, "weight") : 1.0;
        out.goals.push_back(std::move(goal));
    }
    if (j.contains("constraints")) {
        for (const json& c : array_field(j, "constraints")) {
            LinearConstraint row;
            for (const json& a : array_field(c, "coeffs")) {
                if (!a.is_number()) {
                    throw input_error("constraint coefficients must be numbers");
                }
                row.coeffs.push_back(a.get<double>());
            }
            const std::string rel = string_field(c, "relation");
            if (rel == "<=") {
                row.relation = Relation::LessEq;
            } else if (rel == "=" || rel == "==") {
                row.relation = Relation::Equal;
            } else if (rel == ">=") {
                row.relation = Relation::GreaterEq;
            } else {
                throw input_error("relation must be one of <=, =, >=");
            }
            row.rhs = number_field(c, "rhs");
            out.constraints.push_back(std::move(row));
        }
    }
    return out;
}

GpInput load_gp(const std::string& path) {
    return parse_gp_text(read_file(path));
}

// ---------------------------------------------------------------------------
// Carpool and equality models

CarpoolInput parse_carpool_text(const std::string& text) {
    const json j = parse_json(text);
    const std::vector<std::string> riders =
        string_list(array_field(j, "riders"), "rider names");

    auto rider_idx = [&](const std::string& name) {
        const auto it = std::find(riders.begin(), riders.end(), name);
        if (it == riders.end()) {
            throw input_error("unknown rider '" + name + "'");
        }
        return static_cast<int>(it - riders.begin());
    };

    // Segment universe: every name referenced by a trip or priced in
    // "tolls", in sorted order so indexes are reproducible.
    std::set<std::string> segment_names;
    const json& trips_json = array_field(j, "trips");
    for (const json& t : trips_json) {
        for (const auto& s :
             string_list(array_field(t, "segments"), "segment names")) {
            segment_names.insert(s);
        }
    }
    const json* tolls_json = nullptr;
    if (j.contains("tolls")) {
        tolls_json = &j.at("tolls");
        if (!tolls_json->is_object()) {
            throw input_error("field 'tolls' must map segment names to fees");
        }
        for (const auto& [name, fee] : tolls_json->items()) {
            if (!fee.is_number()) throw input_error("toll fees must be numbers");
            segment_names.insert(name);
        }
    }
    std::vector<std::string> segments(segment_names.begin(),
                                      segment_names.end());
    auto segment_idx = [&](const std::string& name) {
        return static_cast<int>(std::lower_bound(segments.begin(),
                                                 segments.end(), name) -
                                segments.begin());
    };

    std::vector<std::string> warnings;
    std::vector<double> tolls(segments.size(),
                              std::numeric_limits<double>::quiet_NaN());
    if (tolls_json != nullptr) {
        for (const auto& [name, fee] : tolls_json->items()) {
            tolls[segment_idx(name)] = fee.get<double>();
        }
    }
    for (std::size_t s = 0; s < segments.size(); ++s) {
        if (std::isnan(tolls[s])) {
            warnings.push_back("segment '" + segments[s] +
                               "' has no toll entry");
        }
    }

    std::vector<Trip> trips;
    for (const json& t : trips_json) {
        Trip trip;
        for (const auto& name :
             string_list(array_field(t, "riders"), "trip riders")) {
            trip.riders = trip.riders | Coalition::single(rider_idx(name));
        }
        for (const auto& name :
             string_list(array_field(t, "segments"), "segment names")) {
            trip.segments.push_back(segment_idx(name));
        }
        trip.cost = number_field(t, "cost");
        trips.push_back(std::move(trip));
    }

    std::vector<std::vector<double>> valuations;
    for (const json& row : array_field(j, "valuations")) {
        if (!row.is_array()) {
            throw input_error("field 'valuations' must be a rider x trip matrix");
        }
        std::vector<double> values;
        for (const json& v : row) {
            if (!v.is_number()) throw input_error("valuations must be numbers");
            values.push_back(v.get<double>());
        }
        valuations.push_back(std::move(values));
    }

    const json& prices_json = field(j, "prices");
    if (!prices_json.is_object()) {
        throw input_error("field 'prices' must map rider names to prices");
    }
    std::vector<double> prices(riders.size(), 0.0);
    std::vector<bool> priced(riders.size(), false);
    for (const auto& [name, price] : prices_json.items()) {
        if (!price.is_number()) throw input_error("prices must be numbers");
        const int idx = rider_idx(name);
        prices[idx] = price.get<double>();
        priced[idx] = true;
    }
    for (std::size_t m = 0; m < riders.size(); ++m) {
        if (!priced[m]) {
            throw input_error("no price entry for rider '" + riders[m] + "'");
        }
    }

    CarpoolModel model(riders, std::move(trips), std::move(valuations),
                       std::move(segments), std::move(tolls),
                       std::move(prices));
    return CarpoolInput{std::move(model), std::move(warnings)};
}

CarpoolInput load_carpool(const std::string& path) {
    return parse_carpool_text(read_file(path));
}

EqualityBenefitModel parse_equality_text(const std::string& text) {
    const json j = parse_json(text);
    const double k = j.contains("k") ? number_field(j, "k") : 1.0;
    return EqualityBenefitModel(number_field(j, "Q"), number_field(j, "C_m"),
                                k);
}

EqualityBenefitModel load_equality(const std::string& path) {
    return parse_equality_text(read_file(path));
}

} // namespace sv::io
