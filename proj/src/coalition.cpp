#include "sv/coalition.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace sv {

namespace {

void check_agent_count(int n) {
    if (n < 1 || n > kMaxAgents) {
        throw capacity_error("agent count " + std::to_string(n) +
                             " outside supported range 1.." +
                             std::to_string(kMaxAgents));
    }
}

void check_agent_index(int agent, int n) {
    if (agent < 0 || agent >= n) {
        throw index_error("agent index " + std::to_string(agent) +
                          " outside 0.." + std::to_string(n - 1));
    }
}

} // namespace

// ---------------------------------------------------------------------------
// Coalition

Coalition Coalition::of(std::initializer_list<int> members) {
    std::uint32_t mask = 0;
    for (int agent : members) {
        check_agent_index(agent, kMaxAgents);
        mask |= 1u << agent;
    }
    return Coalition(mask);
}

Coalition Coalition::full(int n) {
    check_agent_count(n);
    return Coalition((1u << n) - 1u);
}

Coalition Coalition::single(int agent) {
    check_agent_index(agent, kMaxAgents);
    return Coalition(1u << agent);
}

int Coalition::size() const { return std::popcount(mask_); }

int Coalition::lowest_member() const {
    return mask_ == 0 ? -1 : std::countr_zero(mask_);
}

std::vector<int> Coalition::members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint32_t rest = mask_; rest != 0; rest &= rest - 1) {
        out.push_back(std::countr_zero(rest));
    }
    return out;
}

// ---------------------------------------------------------------------------
// AgentSet

AgentSet::AgentSet(int n) : n_(n) {
    check_agent_count(n);
    labels_.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        labels_.push_back("a" + std::to_string(i + 1));
    }
}

AgentSet::AgentSet(std::vector<std::string> labels)
    : n_(static_cast<int>(labels.size())), labels_(std::move(labels)) {
    check_agent_count(n_);
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        for (std::size_t j = i + 1; j < labels_.size(); ++j) {
            if (labels_[i] == labels_[j]) {
                throw parameter_error("duplicate agent label '" + labels_[i] +
                                      "'");
            }
        }
    }
}

const std::string& AgentSet::label(int agent) const {
    check_agent_index(agent, n_);
    return labels_[static_cast<std::size_t>(agent)];
}

std::optional<int> AgentSet::index_of(std::string_view label) const {
    for (int i = 0; i < n_; ++i) {
        if (labels_[static_cast<std::size_t>(i)] == label) return i;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// AgentGraph

AgentGraph::AgentGraph(int n) : n_(n), adjacency_(static_cast<std::size_t>(n), 0u) {
    check_agent_count(n);
}

AgentGraph AgentGraph::complete(int n) {
    AgentGraph g(n);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) g.add_edge(a, b);
    }
    return g;
}

void AgentGraph::add_edge(int a, int b) {
    check_agent_index(a, n_);
    check_agent_index(b, n_);
    if (a == b) throw parameter_error("self-loops are not allowed");
    adjacency_[static_cast<std::size_t>(a)] |= 1u << b;
    adjacency_[static_cast<std::size_t>(b)] |= 1u << a;
}

void AgentGraph::remove_edge(int a, int b) {
    check_agent_index(a, n_);
    check_agent_index(b, n_);
    adjacency_[static_cast<std::size_t>(a)] &= ~(1u << b);
    adjacency_[static_cast<std::size_t>(b)] &= ~(1u << a);
}

bool AgentGraph::has_edge(int a, int b) const {
    check_agent_index(a, n_);
    check_agent_index(b, n_);
    return (adjacency_[static_cast<std::size_t>(a)] >> b) & 1u;
}

std::uint32_t AgentGraph::neighbors(int agent) const {
    check_agent_index(agent, n_);
    return adjacency_[static_cast<std::size_t>(agent)];
}

std::vector<std::pair<int, int>> AgentGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n_; ++a) {
        std::uint32_t higher = adjacency_[static_cast<std::size_t>(a)] >>
                               (a + 1);
        for (int b = a + 1; higher != 0; higher >>= 1, ++b) {
            if (higher & 1u) out.emplace_back(a, b);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// CharacteristicFunction

CharacteristicFunction::CharacteristicFunction(int n, bool sustainable)
    : n_(n), sustainable_(sustainable) {
    check_agent_count(n);
}

CharacteristicFunction CharacteristicFunction::zeros(int n, bool sustainable) {
    if (n > kMaxTableAgents) {
        throw capacity_error("complete tables supported up to " +
                             std::to_string(kMaxTableAgents) + " agents");
    }
    CharacteristicFunction v(n, sustainable);
    const std::uint32_t all = Coalition::full(n).mask();
    v.values_.reserve(all);
    for (std::uint32_t mask = 1; mask <= all; ++mask) {
        v.values_.emplace(mask, 0.0);
    }
    return v;
}

void CharacteristicFunction::set(Coalition s, double value) {
    if (s.mask() >= (1u << n_)) {
        throw index_error("coalition member index >= agent count");
    }
    if (!std::isfinite(value)) {
        throw parameter_error("coalition values must be finite");
    }
    if (s.empty()) {
        if (value != 0.0) {
            throw parameter_error("the empty coalition is fixed at value 0");
        }
        return;
    }
    values_[s.mask()] = value;
}

bool CharacteristicFunction::has(Coalition s) const {
    return s.empty() || values_.count(s.mask()) > 0;
}

double CharacteristicFunction::value(Coalition s) const {
    if (s.mask() >= (1u << n_)) {
        throw index_error("coalition member index >= agent count");
    }
    if (s.empty()) return 0.0;
    auto it = values_.find(s.mask());
    if (it == values_.end()) {
        throw incomplete_function_error(
            "no value entry for coalition mask " + std::to_string(s.mask()));
    }
    return it->second;
}

bool CharacteristicFunction::complete() const {
    return values_.size() + 1 == (std::uint64_t{1} << n_);
}

std::vector<double> CharacteristicFunction::dense() const {
    if (n_ > kMaxTableAgents) {
        throw capacity_error("dense table supported up to " +
                             std::to_string(kMaxTableAgents) + " agents");
    }
    const std::uint32_t size = 1u << n_;
    std::vector<double> out(size);
    for (std::uint32_t mask = 1; mask < size; ++mask) {
        out[mask] = value(Coalition(mask));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Operations

std::int64_t count_non_singleton_coalitions(int n) {
    check_agent_count(n);
    return (std::int64_t{1} << n) - n - 1;
}

bool is_feasible(Coalition coalition, const AgentGraph& graph) {
    const std::uint32_t members = coalition.mask();
    if (members >= (1u << graph.num_agents())) {
        throw index_error("coalition member index >= graph agent count");
    }
    if (coalition.size() <= 1) return true;

    // Breadth-first reachability restricted to the member set.
    std::uint32_t reached = 1u << coalition.lowest_member();
    std::uint32_t frontier = reached;
    while (frontier != 0) {
        std::uint32_t next = 0;
        for (std::uint32_t rest = frontier; rest != 0; rest &= rest - 1) {
            next |= graph.neighbors(std::countr_zero(rest));
        }
        next &= members & ~reached;
        reached |= next;
        frontier = next;
    }
    return reached == members;
}

std::vector<Coalition> enumerate_feasible_coalitions(const AgentGraph& graph,
                                                     int min_size) {
    if (min_size < 0) throw parameter_error("min_size must be >= 0");
    const int n = graph.num_agents();
    std::vector<Coalition> out;
    const std::uint32_t limit = Coalition::full(n).mask();
    for (std::uint32_t mask = 0; ; ++mask) {
        Coalition c(mask);
        if (c.size() >= min_size && is_feasible(c, graph)) out.push_back(c);
        if (mask == limit) break;
    }
    return out;
}

double cs_value(const CoalitionStructure& cs, const CharacteristicFunction& v) {
    std::uint32_t seen = 0;
    double total = 0.0;
    for (Coalition part : cs.parts) {
        if ((seen & part.mask()) != 0) {
            throw partition_error("coalition structure parts overlap");
        }
        seen |= part.mask();
        total += v.value(part);
    }
    return total;
}

namespace {

// Sorted part list with one extra mask merged in.
std::vector<std::uint32_t> merge_part(std::uint32_t part,
                                      const std::vector<std::uint32_t>& rest) {
    std::vector<std::uint32_t> out;
    out.reserve(rest.size() + 1);
    std::size_t i = 0;
    while (i < rest.size() && rest[i] < part) out.push_back(rest[i++]);
    out.push_back(part);
    while (i < rest.size()) out.push_back(rest[i++]);
    return out;
}

} // namespace

BestStructure best_coalition_structure(const CharacteristicFunction& v,
                                       const AgentGraph& graph) {
    const int n = graph.num_agents();
    if (n != v.num_agents()) {
        throw dimension_error("graph and characteristic function disagree on n");
    }
    if (n > kMaxPartitionAgents) {
        throw capacity_error("exhaustive structure search supported up to " +
                             std::to_string(kMaxPartitionAgents) + " agents");
    }

    const std::uint32_t full = Coalition::full(n).mask();
    std::vector<char> feasible(full + 1, 0);
    std::vector<double> val(full + 1, 0.0);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if (is_feasible(Coalition(mask), graph)) {
            feasible[mask] = 1;
            val[mask] = v.value(Coalition(mask));
        }
    }

    // best[mask]: optimal value of partitioning the agent subset `mask` into
    // feasible parts, with the lexicographically smallest sorted part list
    // kept for exact-value ties. Each partition is generated once by peeling
    // off the part that contains the lowest set bit.
    std::vector<double> best(full + 1, 0.0);
    std::vector<std::vector<std::uint32_t>> parts(full + 1);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const std::uint32_t low = mask & (~mask + 1);
        const std::uint32_t rest = mask ^ low;
        bool found = false;
        for (std::uint32_t sub = rest; ; sub = (sub - 1) & rest) {
            const std::uint32_t part = sub | low;
            if (feasible[part]) {
                const double cand = val[part] + best[mask ^ part];
                if (!found || cand > best[mask]) {
                    best[mask] = cand;
                    parts[mask] = merge_part(part, parts[mask ^ part]);
                    found = true;
                } else if (cand == best[mask]) {
                    auto list = merge_part(part, parts[mask ^ part]);
                    if (list < parts[mask]) parts[mask] = std::move(list);
                }
            }
            if (sub == 0) break;
        }
        // Singletons are always feasible, so every subset is partitionable.
    }

    BestStructure out;
    out.value = best[full];
    out.structure.parts.reserve(parts[full].size());
    for (std::uint32_t mask : parts[full]) {
        out.structure.parts.emplace_back(mask);
    }
    return out;
}

} // namespace sv
