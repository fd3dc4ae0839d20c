#pragma once

#include "boxdim/lp.hpp"
#include "boxdim/system.hpp"

#include <optional>
#include <vector>

namespace boxdim {

// Edge (i, j) present iff some valid effect takes value 1 on vertex i and 0
// on vertex j; the witness effect is stored per edge.
struct DistinguishabilityGraph {
    int vertex_count = 0;
    std::vector<std::vector<bool>> adjacency;
    std::vector<std::vector<std::optional<Effect>>> witnesses;

    bool adjacent(int i, int j) const { return i != j && adjacency[i][j]; }
    const std::optional<Effect>& witness(int i, int j) const;
};

// The feasibility program behind pairwise distinguishability, over reduced
// effect coordinates (per-setting non-final outcome coefficients plus an
// offset): e(w_i) = 1, e(w_j) = 0, 0 <= e(v) <= 1 at every vertex.
LpProblem pairwise_lp(const GptSystem& sys, int i, int j);

// Expands a feasible point of pairwise_lp back to a full-table effect.
Effect expand_reduced_effect(const SystemShape& shape, const std::vector<Rational>& params);

// Searches for an effect with e(w_i) = 1, e(w_j) = 0, valid on all vertices.
// Atomic effects and their complements are tried first (they certify exactly
// and cover deterministic vertex pairs); `allow_shortcut = false` forces the
// LP route. Absence is always decided by LP infeasibility.
std::optional<Effect> pairwise_distinguishable(const GptSystem& sys, int i, int j,
                                               bool allow_shortcut = true);

DistinguishabilityGraph build_graph(const GptSystem& sys, int jobs = 1);

// Exact maximum clique by branch and bound with a greedy-coloring bound.
// Returns the clique size and one witness clique (ascending vertex indices);
// ties are broken by lexicographic vertex order.
std::pair<int, std::vector<int>> information_dimension(const DistinguishabilityGraph& graph);

// One measurement discriminating exactly the given states, if it exists:
// effects e_1..e_m with e_i(w_j) = delta_ij on the set, summing to the unit
// effect and valid everywhere. Decided by exact LP feasibility.
std::optional<Measurement> discriminating_measurement(const GptSystem& sys,
                                                      const std::vector<int>& states);

struct MeasurementDimensionResult {
    int value = 0;
    bool exact = false;
    std::vector<int> states;
    Measurement measurement;
};

// Largest m such that some m-clique S admits effects e_1..e_m with
// e_i(w_j) = delta_ij on S, sum_i e_i(v) = 1 and e_i(v) >= 0 at every vertex.
//
// Feasibility is downward closed (merging two effects of a discriminating
// measurement discriminates any subset), so the search ascends: level m+1
// candidates are one-vertex extensions of feasible m-cliques, and a level
// with no feasible candidate certifies d_m = m. `certify_limit` caps the
// exhausted level; hitting it with candidates left returns a lower bound
// (exact = false).
MeasurementDimensionResult measurement_dimension(const GptSystem& sys,
                                                 const DistinguishabilityGraph& graph,
                                                 int certify_limit, int jobs = 1);

struct DimensionReport {
    int d_m = 0;
    int d_i = 0;
    bool d_m_exact = false;
    std::vector<int> d_m_states;
    Measurement d_m_measurement;
    std::vector<int> d_i_clique;
};

struct DimensionOptions {
    // Unset: certify exhaustively for systems with at most 16 vertices.
    std::optional<bool> certify;
    int jobs = 1;
};

// Full pipeline: graph, d_i, d_m. Re-verifies every witness by direct
// evaluation and asserts d_m <= d_i before returning.
DimensionReport compute_dimensions(const GptSystem& sys, const DimensionOptions& options = {});

}  // namespace boxdim
