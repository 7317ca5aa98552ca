#ifndef SV_SIMPLEX_HPP
#define SV_SIMPLEX_HPP

#include <optional>
#include <vector>

#include "sv/errors.hpp"

namespace sv {

enum class Relation { LessEq, Equal, GreaterEq };

struct LinearConstraint {
    std::vector<double> coeffs;
    Relation relation = Relation::LessEq;
    double rhs = 0.0;
};

/// Dense linear program, minimization sense. Variables are unbounded below
/// unless a lower bound is given.
struct LinearProgram {
    std::vector<double> objective;
    std::vector<std::vector<double>> rows;
    std::vector<Relation> relations;
    std::vector<double> rhs;
    /// Per-variable lower bound; std::nullopt = free. Empty = all free.
    std::vector<std::optional<double>> lower_bounds;

    int num_vars() const { return static_cast<int>(objective.size()); }
    int num_rows() const { return static_cast<int>(rows.size()); }
    void add_row(std::vector<double> coeffs, Relation rel, double b);
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    std::vector<double> x; // valid when status == Optimal
    double objective = 0.0;
};

/// Two-phase dense simplex with Bland's anti-cycling rule. Feasibility
/// tolerance 1e-9; numerical breakdown raises solver_error rather than
/// returning a silent wrong answer.
LpResult solve_lp(const LinearProgram& lp);

} // namespace sv

#endif // SV_SIMPLEX_HPP
