#ifndef SV_COALITION_HPP
#define SV_COALITION_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sv/errors.hpp"

namespace sv {

// Bitmask capacity of Coalition and the table types built on it.
inline constexpr int kMaxAgents = 24;
// Exhaustive partition search bound for best_coalition_structure.
inline constexpr int kMaxPartitionAgents = 14;
// Classification bound: complete tables, convexity and core checks.
inline constexpr int kMaxTableAgents = 14;

/// A coalition: a subset of agent indices encoded as a bit mask.
class Coalition {
public:
    constexpr Coalition() = default;
    constexpr explicit Coalition(std::uint32_t mask) : mask_(mask) {}

    static Coalition of(std::initializer_list<int> members);
    static Coalition full(int n);
    static Coalition single(int agent);

    constexpr std::uint32_t mask() const { return mask_; }
    int size() const;
    constexpr bool empty() const { return mask_ == 0; }
    constexpr bool contains(int agent) const { return (mask_ >> agent) & 1u; }
    constexpr bool subset_of(Coalition other) const {
        return (mask_ & ~other.mask_) == 0;
    }
    /// Lowest member index; -1 for the empty coalition.
    int lowest_member() const;
    std::vector<int> members() const;

    friend constexpr Coalition operator|(Coalition a, Coalition b) {
        return Coalition(a.mask_ | b.mask_);
    }
    friend constexpr Coalition operator&(Coalition a, Coalition b) {
        return Coalition(a.mask_ & b.mask_);
    }
    auto operator<=>(const Coalition&) const = default;

private:
    std::uint32_t mask_ = 0;
};

/// The agent universe: a count plus display labels, unique per index.
class AgentSet {
public:
    explicit AgentSet(int n);
    explicit AgentSet(std::vector<std::string> labels);

    int size() const { return n_; }
    const std::string& label(int agent) const;
    std::optional<int> index_of(std::string_view label) const;

private:
    int n_ = 0;
    std::vector<std::string> labels_;
};

/// Undirected relationship graph restricting which coalitions may form.
class AgentGraph {
public:
    explicit AgentGraph(int n);
    static AgentGraph complete(int n);

    void add_edge(int a, int b);
    void remove_edge(int a, int b);
    int num_agents() const { return n_; }
    bool has_edge(int a, int b) const;
    /// Adjacency of one agent as a bit mask over agent indices.
    std::uint32_t neighbors(int agent) const;
    std::vector<std::pair<int, int>> edges() const;

private:
    int n_ = 0;
    std::vector<std::uint32_t> adjacency_;
};

/// Explicit table v : coalitions -> value. The empty coalition is always 0.
/// The sustainable flag records construction provenance: whether the values
/// were built from at least one economic and one social utility function.
class CharacteristicFunction {
public:
    explicit CharacteristicFunction(int n, bool sustainable = false);

    /// A complete all-zero table over the 2^n subsets (n <= kMaxTableAgents).
    static CharacteristicFunction zeros(int n, bool sustainable = false);

    int num_agents() const { return n_; }
    Coalition grand() const { return Coalition::full(n_); }

    bool sustainable() const { return sustainable_; }
    void set_sustainable(bool flag) { sustainable_ = flag; }

    void set(Coalition s, double value);
    bool has(Coalition s) const;
    double value(Coalition s) const;

    /// True when every one of the 2^n subsets has an entry.
    bool complete() const;
    /// Number of explicit entries, the empty coalition included.
    std::size_t table_size() const { return values_.size() + 1; }
    /// Explicit table entries keyed by coalition mask (empty set excluded).
    const std::unordered_map<std::uint32_t, double>& entries() const {
        return values_;
    }

    /// Values for all 2^n masks; throws incomplete_function_error on gaps.
    std::vector<double> dense() const;

private:
    int n_ = 0;
    bool sustainable_ = false;
    std::unordered_map<std::uint32_t, double> values_;
};

/// A list of pairwise disjoint coalitions; a full structure covers all agents.
struct CoalitionStructure {
    std::vector<Coalition> parts;
};

struct BestStructure {
    CoalitionStructure structure;
    double value = 0.0;
};

/// Number of coalitions over n agents once singletons and the empty set are
/// excluded: 2^n - n - 1.
std::int64_t count_non_singleton_coalitions(int n);

/// True iff the subgraph induced by the coalition members is connected.
/// Empty and singleton coalitions are feasible by convention.
bool is_feasible(Coalition coalition, const AgentGraph& graph);

/// All feasible coalitions of size >= min_size, in ascending bitmask order.
std::vector<Coalition> enumerate_feasible_coalitions(const AgentGraph& graph,
                                                     int min_size);

/// Sum of part values. Parts must be pairwise disjoint and present in the
/// table; the structure need not cover every agent.
double cs_value(const CoalitionStructure& cs, const CharacteristicFunction& v);

/// Exhaustively optimal partition into graph-feasible parts. Ties are broken
/// by the lexicographically smallest sorted list of part bitmasks.
BestStructure best_coalition_structure(const CharacteristicFunction& v,
                                       const AgentGraph& graph);

} // namespace sv

#endif // SV_COALITION_HPP
