#pragma once

#include "boxdim/rational.hpp"
#include "boxdim/system.hpp"

#include <optional>
#include <vector>

namespace boxdim {

enum class Relation { LessEq, Equal, GreaterEq };

struct LinearConstraint {
    std::vector<Rational> coefficients;
    Relation relation;
    Rational rhs;
};

// Variables are unbounded unless constrained. Objective, when present,
// is maximized.
struct LpProblem {
    int variable_count = 0;
    std::vector<LinearConstraint> constraints;
    std::optional<std::vector<Rational>> objective;
};

enum class LpStatus { Feasible, Infeasible, Unbounded };

// Infeasible outcomes store the (strictly positive) phase-1 optimum.
struct LpOutcome {
    LpStatus status;
    std::optional<std::vector<Rational>> witness;
    std::optional<Rational> optimum;
};

// Exact two-phase simplex with Bland's anti-cycling pivot rule. Free
// variables are split into nonnegative differences. Deterministic: identical
// problems yield identical outcomes and witnesses.
LpOutcome solve(const LpProblem& problem);

bool satisfies(const LinearConstraint& constraint, const std::vector<Rational>& point);
bool satisfies_all(const LpProblem& problem, const std::vector<Rational>& point);

// Weight-variable feasibility program deciding hull membership.
LpProblem redundancy_lp(const State& candidate, const std::vector<State>& others);

// True iff candidate is a convex combination of the given states.
bool is_redundant_vertex(const State& candidate, const std::vector<State>& others);

// Indices of vertices lying in the convex hull of the remaining ones.
std::vector<int> redundant_vertices(const GptSystem& sys);

// Distinct deterministic tables are never convex combinations of each other,
// so the LP sweep only runs when some vertex has a fractional entry.
void require_extremal_vertices(const GptSystem& sys);

}  // namespace boxdim
