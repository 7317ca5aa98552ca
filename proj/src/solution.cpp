#include "sv/solution.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <set>
#include <string>

namespace sv {

namespace {

constexpr double kCoreTol = 1e-9;
// Row-generation threshold, tighter than kCoreTol so an accepted witness
// always clears the is_in_core slack.
constexpr double kCutTol = 1e-10;

void require_table_capacity(const CharacteristicFunction& v, const char* op) {
    if (v.num_agents() > kMaxTableAgents) {
        throw capacity_error(std::string(op) + " supported up to " +
                             std::to_string(kMaxTableAgents) + " agents");
    }
}

} // namespace

bool is_in_core(const PayoffVector& u, const CharacteristicFunction& v) {
    const int n = v.num_agents();
    if (static_cast<int>(u.size()) != n) {
        throw dimension_error("payoff vector length does not match agents");
    }
    const double grand = v.value(v.grand());
    double total = 0.0;
    for (double x : u) total += x;
    if (std::abs(total - grand) > kCoreTol * std::max(1.0, std::abs(grand))) {
        return false;
    }

    for (const auto& [mask, value] : v.entries()) {
        double sum = 0.0;
        for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
            sum += u[std::countr_zero(rest)];
        }
        if (sum < value - kCoreTol) return false;
    }
    return true;
}

CoreResult core_nonempty(const CharacteristicFunction& v) {
    require_table_capacity(v, "core check");
    const int n = v.num_agents();
    const std::uint32_t full = v.grand().mask();
    const std::vector<double> table = v.dense(); // throws on incomplete table

    // Feasibility master: free payoff variables, efficiency equality, and
    // singleton constraints up front; violated subset constraints are added
    // one at a time until the scan over all 2^n subsets comes back clean.
    LinearProgram master;
    master.objective.assign(n, 0.0);
    {
        std::vector<double> ones(n, 1.0);
        master.add_row(ones, Relation::Equal, table[full]);
    }
    std::set<std::uint32_t> added;
    auto add_subset_row = [&](std::uint32_t mask) {
        std::vector<double> row(n, 0.0);
        for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
            row[std::countr_zero(rest)] = 1.0;
        }
        master.add_row(std::move(row), Relation::GreaterEq, table[mask]);
        added.insert(mask);
    };
    for (int j = 0; j < n; ++j) add_subset_row(1u << j);

    std::vector<double> sums(full + 1, 0.0);
    const long round_limit = static_cast<long>(full) + 8;
    for (long round = 0; round <= round_limit; ++round) {
        const LpResult lp = solve_lp(master);
        if (lp.status == LpStatus::Infeasible) return CoreResult{false, {}};
        if (lp.status != LpStatus::Optimal) {
            throw solver_error("core feasibility LP ended in unexpected state");
        }

        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            sums[mask] = sums[mask & (mask - 1)] + lp.x[std::countr_zero(mask)];
        }
        std::uint32_t worst = 0;
        double worst_violation = kCutTol;
        for (std::uint32_t mask = 1; mask < full; ++mask) {
            if (added.count(mask)) continue;
            const double violation = table[mask] - sums[mask];
            if (violation > worst_violation) {
                worst_violation = violation;
                worst = mask;
            }
        }
        if (worst == 0) return CoreResult{true, lp.x};
        add_subset_row(worst);
    }
    throw solver_error("core constraint generation failed to converge");
}

bool is_convex(const CharacteristicFunction& v) {
    require_table_capacity(v, "convexity check");
    const std::vector<double> table = v.dense();
    const std::uint32_t full = v.grand().mask();
    for (std::uint32_t s = 0; s <= full; ++s) {
        for (std::uint32_t t = s; t <= full; ++t) {
            if (table[s | t] < table[s] + table[t] - table[s & t] - kCoreTol) {
                return false;
            }
        }
    }
    return true;
}

GameClassification classify(const CharacteristicFunction& v) {
    GameClassification out;
    out.convex = is_convex(v);
    CoreResult core = core_nonempty(v);
    out.core_nonempty = core.nonempty;
    out.core_witness = std::move(core.witness);
    out.sustainable = v.sustainable();
    out.shared_value = out.sustainable && out.core_nonempty;
    if (out.convex && !out.core_nonempty) {
        // Every convex game has a non-empty core; reaching this line means
        // one of the two checks is numerically broken.
        throw solver_error("convex game classified with an empty core");
    }
    return out;
}

} // namespace sv
