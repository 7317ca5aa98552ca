#include "sv/simplex.hpp"

#include <cmath>
#include <string>

namespace sv {

namespace {

constexpr double kFeasTol = 1e-9;
constexpr double kPivotEps = 1e-11;

struct Tableau {
    int m = 0;     // constraint rows
    int ncols = 0; // structural + slack + artificial columns
    std::vector<std::vector<double>> t; // (m+1) x (ncols+1); last row is the
                                        // objective, last column the rhs
    std::vector<int> basis;             // basic column per row

    void pivot(int row, int col) {
        const double inv = 1.0 / t[row][col];
        for (int j = 0; j <= ncols; ++j) t[row][j] *= inv;
        t[row][col] = 1.0;
        for (int i = 0; i <= m; ++i) {
            if (i == row) continue;
            const double factor = t[i][col];
            if (factor == 0.0) continue;
            for (int j = 0; j <= ncols; ++j) t[i][j] -= factor * t[row][j];
            t[i][col] = 0.0;
        }
        basis[row] = col;
    }

    // Bland's rule: entering column = smallest index with negative reduced
    // cost, leaving row = min ratio with smallest basic index on ties.
    // Returns false on an unbounded phase-2 direction.
    bool iterate(int col_limit, bool phase_two, long max_iter) {
        long iter = 0;
        for (;;) {
            int enter = -1;
            for (int j = 0; j < col_limit; ++j) {
                if (t[m][j] < -kFeasTol) { enter = j; break; }
            }
            if (enter < 0) return true;

            int leave = -1;
            double best_ratio = 0.0;
            for (int i = 0; i < m; ++i) {
                const double a = t[i][enter];
                if (a <= kPivotEps) continue;
                const double ratio = t[i][ncols] / a;
                if (leave < 0 || ratio < best_ratio - kPivotEps ||
                    (std::abs(ratio - best_ratio) <= kPivotEps &&
                     basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) {
                if (phase_two) return false;
                throw solver_error("phase-1 subproblem unbounded");
            }
            pivot(leave, enter);
            if (++iter > max_iter) {
                throw solver_error("simplex iteration limit exceeded");
            }
        }
    }
};

void validate(const LinearProgram& lp) {
    const size_t n = lp.objective.size();
    if (lp.rows.size() != lp.relations.size() ||
        lp.rows.size() != lp.rhs.size()) {
        throw dimension_error("row/relation/rhs counts disagree");
    }
    if (!lp.lower_bounds.empty() && lp.lower_bounds.size() != n) {
        throw dimension_error("lower bound count does not match variables");
    }
    for (double c : lp.objective) {
        if (!std::isfinite(c)) throw parameter_error("non-finite objective");
    }
    for (size_t i = 0; i < lp.rows.size(); ++i) {
        if (lp.rows[i].size() != n) {
            throw dimension_error("constraint row " + std::to_string(i) +
                                  " has wrong width");
        }
        if (!std::isfinite(lp.rhs[i])) {
            throw parameter_error("non-finite right-hand side");
        }
        for (double a : lp.rows[i]) {
            if (!std::isfinite(a)) {
                throw parameter_error("non-finite constraint coefficient");
            }
        }
    }
}

} // namespace

void LinearProgram::add_row(std::vector<double> coeffs, Relation rel,
                            double b) {
    rows.push_back(std::move(coeffs));
    relations.push_back(rel);
    rhs.push_back(b);
}

LpResult solve_lp(const LinearProgram& lp) {
    validate(lp);
    const int nvars = lp.num_vars();
    const int m = lp.num_rows();

    // Column layout: one nonnegative column per variable with a lower bound
    // (shifted to zero), a +/- pair per free variable, then slacks, then
    // artificials.
    std::vector<int> pos_col(nvars), neg_col(nvars, -1);
    std::vector<double> shift(nvars, 0.0);
    int ncols = 0;
    for (int j = 0; j < nvars; ++j) {
        pos_col[j] = ncols++;
        if (lp.lower_bounds.empty() || !lp.lower_bounds[j]) {
            neg_col[j] = ncols++;
        } else {
            shift[j] = *lp.lower_bounds[j];
        }
    }
    const int first_slack = ncols;
    for (int i = 0; i < m; ++i) {
        if (lp.relations[i] != Relation::Equal) ++ncols;
    }
    const int first_artificial = ncols;

    // Assemble equality rows with rhs >= 0, tracking natural slack bases.
    std::vector<std::vector<double>> rows(m,
                                          std::vector<double>(first_artificial,
                                                              0.0));
    std::vector<double> rhs(m, 0.0);
    std::vector<int> natural_basis(m, -1);
    int next_slack = first_slack;
    for (int i = 0; i < m; ++i) {
        auto& row = rows[i];
        double b = lp.rhs[i];
        for (int j = 0; j < nvars; ++j) {
            const double a = lp.rows[i][j];
            if (a == 0.0) continue;
            b -= a * shift[j];
            row[pos_col[j]] = a;
            if (neg_col[j] >= 0) row[neg_col[j]] = -a;
        }
        int slack_col = -1;
        if (lp.relations[i] == Relation::LessEq) {
            slack_col = next_slack++;
            row[slack_col] = 1.0;
        } else if (lp.relations[i] == Relation::GreaterEq) {
            slack_col = next_slack++;
            row[slack_col] = -1.0;
        }
        if (b < 0.0) {
            for (double& a : row) a = -a;
            b = -b;
        }
        rhs[i] = b;
        if (slack_col >= 0 && row[slack_col] > 0.0) {
            natural_basis[i] = slack_col;
        }
    }

    int nart = 0;
    for (int i = 0; i < m; ++i) {
        if (natural_basis[i] < 0) ++nart;
    }

    Tableau tab;
    tab.m = m;
    tab.ncols = first_artificial + nart;
    tab.t.assign(m + 1, std::vector<double>(tab.ncols + 1, 0.0));
    tab.basis.assign(m, -1);
    int art = first_artificial;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < first_artificial; ++j) tab.t[i][j] = rows[i][j];
        tab.t[i][tab.ncols] = rhs[i];
        int b = natural_basis[i];
        if (b < 0) {
            b = art++;
            tab.t[i][b] = 1.0;
        }
        tab.basis[i] = b;
    }

    const long max_iter = 20000 + 100L * (m + tab.ncols);

    // Phase 1: minimize the artificial sum. The objective row carries
    // reduced costs; its rhs cell holds minus the current objective value.
    if (nart > 0) {
        for (int i = 0; i < m; ++i) {
            if (tab.basis[i] < first_artificial) continue;
            for (int j = 0; j <= tab.ncols; ++j) tab.t[m][j] -= tab.t[i][j];
            tab.t[m][tab.basis[i]] = 0.0;
        }
        tab.iterate(tab.ncols, false, max_iter);
        if (-tab.t[m][tab.ncols] > kFeasTol) {
            return LpResult{LpStatus::Infeasible, {}, 0.0};
        }
        // Drive leftover artificials out of the basis; an all-zero row is
        // redundant and its artificial stays basic at level zero.
        for (int i = 0; i < m; ++i) {
            if (tab.basis[i] < first_artificial) continue;
            for (int j = 0; j < first_artificial; ++j) {
                if (std::abs(tab.t[i][j]) > kPivotEps) {
                    tab.pivot(i, j);
                    break;
                }
            }
        }
    }

    // Phase 2 over the true objective, artificial columns barred.
    for (int j = 0; j <= tab.ncols; ++j) tab.t[m][j] = 0.0;
    for (int j = 0; j < nvars; ++j) {
        const double c = lp.objective[j];
        tab.t[m][pos_col[j]] = c;
        if (neg_col[j] >= 0) tab.t[m][neg_col[j]] = -c;
    }
    for (int i = 0; i < m; ++i) {
        const double c = tab.t[m][tab.basis[i]];
        if (c == 0.0) continue;
        for (int j = 0; j <= tab.ncols; ++j) {
            tab.t[m][j] -= c * tab.t[i][j];
        }
        tab.t[m][tab.basis[i]] = 0.0;
    }
    if (!tab.iterate(first_artificial, true, max_iter)) {
        return LpResult{LpStatus::Unbounded, {}, 0.0};
    }

    std::vector<double> y(tab.ncols, 0.0);
    for (int i = 0; i < m; ++i) y[tab.basis[i]] = tab.t[i][tab.ncols];

    LpResult result;
    result.status = LpStatus::Optimal;
    result.x.resize(nvars);
    for (int j = 0; j < nvars; ++j) {
        double v = y[pos_col[j]] + shift[j];
        if (neg_col[j] >= 0) v -= y[neg_col[j]];
        result.x[j] = v;
        result.objective += lp.objective[j] * v;
    }
    return result;
}

} // namespace sv
