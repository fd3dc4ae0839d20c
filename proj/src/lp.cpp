#include "boxdim/lp.hpp"

#include <algorithm>

namespace boxdim {

namespace {

// Dense tableau in canonical form: basis columns are unit vectors and the
// objective row holds reduced costs. Column layout: 2n split structural
// variables (x_j = z_{2j} - z_{2j+1}), then slacks, then artificials.
class Tableau {
public:
    Tableau(const LpProblem& problem) : n_(problem.variable_count) {
        for (const LinearConstraint& c : problem.constraints) {
            if (static_cast<int>(c.coefficients.size()) != n_) {
                throw invalid_input("constraint arity does not match variable count");
            }
        }
        const int rows = static_cast<int>(problem.constraints.size());
        int slacks = 0;
        for (const LinearConstraint& c : problem.constraints) {
            if (c.relation != Relation::Equal) ++slacks;
        }
        structural_ = 2 * n_;
        slack_begin_ = structural_;
        artificial_begin_ = slack_begin_ + slacks;
        cols_ = artificial_begin_;  // artificials appended on demand

        rows_.assign(rows, {});
        basis_.assign(rows, -1);
        rhs_.assign(rows, 0);

        int slack = 0;
        for (int r = 0; r < rows; ++r) {
            const LinearConstraint& c = problem.constraints[r];
            Rational sign = 1;
            Relation rel = c.relation;
            if (c.rhs < 0) {  // normalize rhs >= 0
                sign = -1;
                if (rel == Relation::LessEq) rel = Relation::GreaterEq;
                else if (rel == Relation::GreaterEq) rel = Relation::LessEq;
            }
            rows_[r].assign(cols_, 0);
            for (int j = 0; j < n_; ++j) {
                Rational a = sign * c.coefficients[j];
                rows_[r][2 * j] = a;
                rows_[r][2 * j + 1] = -a;
            }
            rhs_[r] = sign * c.rhs;
            if (rel == Relation::LessEq) {
                rows_[r][slack_begin_ + slack] = 1;
                basis_[r] = slack_begin_ + slack;  // slack is a ready-made basis
                ++slack;
            } else if (rel == Relation::GreaterEq) {
                rows_[r][slack_begin_ + slack] = -1;
                ++slack;
            }
        }
        // Rows still without a basic variable get an artificial.
        for (int r = 0; r < rows; ++r) {
            if (basis_[r] >= 0) continue;
            for (auto& row : rows_) row.push_back(0);
            rows_[r][cols_] = 1;
            basis_[r] = cols_;
            ++cols_;
        }
    }

    int row_count() const { return static_cast<int>(rows_.size()); }

    bool has_artificials() const { return cols_ > artificial_begin_; }

    // Minimizes the phase-1 objective (sum of artificials). Returns its
    // optimal value.
    Rational run_phase1() {
        std::vector<Rational> cost(cols_, 0);
        for (int j = artificial_begin_; j < cols_; ++j) cost[j] = 1;
        load_objective(cost);
        run(/*ban_artificials=*/false);
        Rational value = -obj_rhs_;
        if (value == 0) pivot_out_artificials();
        return value;
    }

    // Minimizes cost over structural columns. Returns false when unbounded.
    bool run_phase2(const std::vector<Rational>& structural_cost) {
        std::vector<Rational> cost(cols_, 0);
        for (int j = 0; j < structural_ && j < static_cast<int>(structural_cost.size()); ++j) {
            cost[j] = structural_cost[j];
        }
        load_objective(cost);
        return run(/*ban_artificials=*/true);
    }

    Rational objective_value() const { return -obj_rhs_; }

    std::vector<Rational> extract_solution() const {
        std::vector<Rational> value(cols_, 0);
        for (int r = 0; r < row_count(); ++r) value[basis_[r]] = rhs_[r];
        std::vector<Rational> x(n_);
        for (int j = 0; j < n_; ++j) x[j] = value[2 * j] - value[2 * j + 1];
        return x;
    }

private:
    void load_objective(const std::vector<Rational>& cost) {
        obj_ = cost;
        obj_.resize(cols_, 0);
        obj_rhs_ = 0;
        for (int r = 0; r < row_count(); ++r) {
            const Rational& cb = obj_[basis_[r]];
            if (cb == 0) continue;
            Rational factor = cb;
            for (int j = 0; j < cols_; ++j) {
                if (rows_[r][j] != 0) obj_[j] -= factor * rows_[r][j];
            }
            obj_rhs_ -= factor * rhs_[r];
        }
    }

    void pivot(int row, int col) {
        Rational inv = rows_[row][col];
        if (inv != 1) {
            for (int j = 0; j < cols_; ++j) {
                if (rows_[row][j] != 0) rows_[row][j] /= inv;
            }
            rhs_[row] /= inv;
        }
        for (int r = 0; r < row_count(); ++r) {
            if (r == row || rows_[r][col] == 0) continue;
            Rational factor = rows_[r][col];
            for (int j = 0; j < cols_; ++j) {
                if (rows_[row][j] != 0) rows_[r][j] -= factor * rows_[row][j];
            }
            rhs_[r] -= factor * rhs_[row];
        }
        if (obj_[col] != 0) {
            Rational factor = obj_[col];
            for (int j = 0; j < cols_; ++j) {
                if (rows_[row][j] != 0) obj_[j] -= factor * rows_[row][j];
            }
            obj_rhs_ -= factor * rhs_[row];
        }
        basis_[row] = col;
    }

    // Bland's rule: lowest-index entering column with a negative reduced
    // cost; leaving row by minimum ratio, ties broken by lowest basis index.
    bool run(bool ban_artificials) {
        const int limit = ban_artificials ? artificial_begin_ : cols_;
        for (;;) {
            int entering = -1;
            for (int j = 0; j < limit; ++j) {
                if (obj_[j] < 0) { entering = j; break; }
            }
            if (entering < 0) return true;  // optimal

            int leaving = -1;
            Rational best_ratio;
            for (int r = 0; r < row_count(); ++r) {
                if (rows_[r][entering] <= 0) continue;
                Rational ratio = rhs_[r] / rows_[r][entering];
                if (leaving < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[r] < basis_[leaving])) {
                    leaving = r;
                    best_ratio = ratio;
                }
            }
            if (leaving < 0) return false;  // unbounded direction
            pivot(leaving, entering);
        }
    }

    // After a zero-value phase 1, basic artificials sit at value 0; swap them
    // for any available non-artificial column so phase 2 can ignore them.
    void pivot_out_artificials() {
        for (int r = 0; r < row_count(); ++r) {
            if (basis_[r] < artificial_begin_) continue;
            for (int j = 0; j < artificial_begin_; ++j) {
                if (rows_[r][j] != 0) {
                    pivot(r, j);
                    break;
                }
            }
            // An all-zero row is a redundant constraint; its artificial stays
            // basic at value 0 and never interferes.
        }
    }

    int n_;
    int structural_;
    int slack_begin_;
    int artificial_begin_;
    int cols_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<Rational> rhs_;
    std::vector<int> basis_;
    std::vector<Rational> obj_;
    Rational obj_rhs_;
};

}  // namespace

LpOutcome solve(const LpProblem& problem) {
    if (problem.variable_count < 0) {
        throw invalid_input("negative variable count");
    }
    if (problem.objective &&
        static_cast<int>(problem.objective->size()) != problem.variable_count) {
        throw invalid_input("objective arity does not match variable count");
    }

    Tableau tableau(problem);
    if (tableau.has_artificials()) {
        Rational phase1 = tableau.run_phase1();
        if (phase1 > 0) {
            return LpOutcome{LpStatus::Infeasible, std::nullopt, phase1};
        }
    }

    if (!problem.objective) {
        return LpOutcome{LpStatus::Feasible, tableau.extract_solution(), std::nullopt};
    }

    // Maximize c.x == minimize (-c).(u - v) over the split columns.
    std::vector<Rational> cost(2 * problem.variable_count);
    for (int j = 0; j < problem.variable_count; ++j) {
        cost[2 * j] = -(*problem.objective)[j];
        cost[2 * j + 1] = (*problem.objective)[j];
    }
    if (!tableau.run_phase2(cost)) {
        return LpOutcome{LpStatus::Unbounded, std::nullopt, std::nullopt};
    }
    return LpOutcome{LpStatus::Feasible, tableau.extract_solution(), -tableau.objective_value()};
}

bool satisfies(const LinearConstraint& constraint, const std::vector<Rational>& point) {
    if (constraint.coefficients.size() != point.size()) {
        throw invalid_input("point arity does not match constraint");
    }
    Rational lhs = 0;
    for (size_t j = 0; j < point.size(); ++j) {
        if (constraint.coefficients[j] != 0) lhs += constraint.coefficients[j] * point[j];
    }
    switch (constraint.relation) {
        case Relation::LessEq: return lhs <= constraint.rhs;
        case Relation::Equal: return lhs == constraint.rhs;
        case Relation::GreaterEq: return lhs >= constraint.rhs;
    }
    return false;
}

bool satisfies_all(const LpProblem& problem, const std::vector<Rational>& point) {
    for (const LinearConstraint& c : problem.constraints) {
        if (!satisfies(c, point)) return false;
    }
    return true;
}

LpProblem redundancy_lp(const State& candidate, const std::vector<State>& others) {
    if (others.empty()) {
        throw invalid_input("redundancy check needs at least one other state");
    }
    for (const State& s : others) {
        if (s.shape != candidate.shape) {
            throw invalid_input("redundancy check needs matching shapes");
        }
    }
    const int n = static_cast<int>(others.size());
    const int len = candidate.shape.table_length();

    LpProblem lp;
    lp.variable_count = n;
    for (int k = 0; k < n; ++k) {
        std::vector<Rational> row(n, 0);
        row[k] = 1;
        lp.constraints.push_back({std::move(row), Relation::GreaterEq, 0});
    }
    lp.constraints.push_back({std::vector<Rational>(n, 1), Relation::Equal, 1});
    for (int c = 0; c < len; ++c) {
        std::vector<Rational> row(n);
        for (int k = 0; k < n; ++k) row[k] = others[k].table[c];
        lp.constraints.push_back({std::move(row), Relation::Equal, candidate.table[c]});
    }
    return lp;
}

bool is_redundant_vertex(const State& candidate, const std::vector<State>& others) {
    return solve(redundancy_lp(candidate, others)).status == LpStatus::Feasible;
}

std::vector<int> redundant_vertices(const GptSystem& sys) {
    std::vector<int> redundant;
    for (size_t i = 0; i < sys.vertices.size(); ++i) {
        if (sys.vertices.size() < 2) break;
        std::vector<State> others;
        others.reserve(sys.vertices.size() - 1);
        for (size_t j = 0; j < sys.vertices.size(); ++j) {
            if (j != i) others.push_back(sys.vertices[j]);
        }
        if (is_redundant_vertex(sys.vertices[i], others)) {
            redundant.push_back(static_cast<int>(i));
        }
    }
    return redundant;
}

void require_extremal_vertices(const GptSystem& sys) {
    if (all_vertices_deterministic(sys)) return;
    if (!redundant_vertices(sys).empty()) {
        throw invalid_input("system '" + sys.name + "' has a non-extremal vertex");
    }
}

}  // namespace boxdim
