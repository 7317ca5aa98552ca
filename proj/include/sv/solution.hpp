#ifndef SV_SOLUTION_HPP
#define SV_SOLUTION_HPP

#include <optional>
#include <vector>

#include "sv/coalition.hpp"
#include "sv/simplex.hpp"

namespace sv {

using PayoffVector = std::vector<double>;

struct CoreResult {
    bool nonempty = false;
    std::optional<PayoffVector> witness;
};

struct GameClassification {
    bool convex = false;
    bool core_nonempty = false;
    std::optional<PayoffVector> core_witness;
    bool sustainable = false;
    bool shared_value = false; // sustainable AND core_nonempty
};

/// Core membership: u distributes v(grand) exactly (tolerance relative to
/// |v(grand)|) and no coalition in the table is paid less than its value
/// (tolerance 1e-9).
bool is_in_core(const PayoffVector& u, const CharacteristicFunction& v);

/// Core non-emptiness as LP feasibility over all 2^n subset constraints,
/// with a witness payoff vector on success. Constraints are generated on
/// demand, so the table must be complete.
CoreResult core_nonempty(const CharacteristicFunction& v);

/// Supermodularity: v(S u T) >= v(S) + v(T) - v(S n T) for all pairs,
/// tolerance -1e-9. Requires a complete table and n <= kMaxTableAgents.
bool is_convex(const CharacteristicFunction& v);

/// Full classification per the shared-value-game definition. Raises
/// solver_error if the convexity and core results contradict each other.
GameClassification classify(const CharacteristicFunction& v);

} // namespace sv

#endif // SV_SOLUTION_HPP
