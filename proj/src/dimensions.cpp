#include "boxdim/dimensions.hpp"

#include "boxdim/linalg.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <set>

namespace boxdim {

namespace {

// Reduced effect coordinates. Per-setting normalization of state tables
// makes the last outcome coordinate of each setting redundant on the affine
// hull, so effects are searched as (one coefficient per non-final outcome,
// plus an offset) and expanded back to full tables afterwards.
struct EffectCoords {
    explicit EffectCoords(const SystemShape& shape) : shape_(shape) {
        for (int x = 0; x < shape.settings(); ++x) {
            for (int a = 0; a + 1 < shape.arity(x); ++a) {
                table_index_.push_back(shape.index(x, a));
            }
        }
        dim_ = static_cast<int>(table_index_.size()) + 1;  // + offset
    }

    int dim() const { return dim_; }

    // Row r with e(state) = r . params.
    RationalVector row(const State& state) const {
        RationalVector r(dim_);
        for (size_t p = 0; p < table_index_.size(); ++p) {
            r[p] = state.table[table_index_[p]];
        }
        r[dim_ - 1] = 1;
        return r;
    }

    Effect expand(const RationalVector& params) const {
        Effect e{shape_, std::vector<Rational>(shape_.table_length(), 0), params[dim_ - 1]};
        for (size_t p = 0; p < table_index_.size(); ++p) {
            e.coefficients[table_index_[p]] = params[p];
        }
        return e;
    }

private:
    SystemShape shape_;
    std::vector<int> table_index_;
    int dim_;
};

std::optional<Effect> shortcut_witness(const GptSystem& sys, int i, int j) {
    const State& a = sys.vertices[i];
    const State& b = sys.vertices[j];
    for (int x = 0; x < sys.shape.settings(); ++x) {
        for (int o = 0; o < sys.shape.arity(x); ++o) {
            if (a.prob(x, o) == 1 && b.prob(x, o) == 0) {
                return atomic_effect(sys.shape, x, o);
            }
            if (a.prob(x, o) == 0 && b.prob(x, o) == 1) {
                return complement_effect(atomic_effect(sys.shape, x, o));
            }
        }
    }
    return std::nullopt;
}

}  // namespace

const std::optional<Effect>& DistinguishabilityGraph::witness(int i, int j) const {
    return witnesses[i][j];
}

LpProblem pairwise_lp(const GptSystem& sys, int i, int j) {
    const int n = static_cast<int>(sys.vertices.size());
    if (i < 0 || j < 0 || i >= n || j >= n) {
        throw invalid_input("vertex index out of range");
    }
    if (i == j) {
        throw invalid_input("cannot distinguish a vertex from itself");
    }
    EffectCoords coords(sys.shape);
    LpProblem lp;
    lp.variable_count = coords.dim();
    lp.constraints.push_back({coords.row(sys.vertices[i]), Relation::Equal, 1});
    lp.constraints.push_back({coords.row(sys.vertices[j]), Relation::Equal, 0});
    for (const State& v : sys.vertices) {
        RationalVector row = coords.row(v);
        lp.constraints.push_back({row, Relation::GreaterEq, 0});
        lp.constraints.push_back({std::move(row), Relation::LessEq, 1});
    }
    return lp;
}

Effect expand_reduced_effect(const SystemShape& shape, const std::vector<Rational>& params) {
    EffectCoords coords(shape);
    if (static_cast<int>(params.size()) != coords.dim()) {
        throw invalid_input("reduced effect parameter count does not match shape");
    }
    return coords.expand(params);
}

std::optional<Effect> pairwise_distinguishable(const GptSystem& sys, int i, int j,
                                               bool allow_shortcut) {
    const int n = static_cast<int>(sys.vertices.size());
    if (i < 0 || j < 0 || i >= n || j >= n) {
        throw invalid_input("vertex index out of range");
    }
    if (i == j) {
        throw invalid_input("cannot distinguish a vertex from itself");
    }
    if (allow_shortcut) {
        if (auto quick = shortcut_witness(sys, i, j)) {
            return quick;
        }
    }

    EffectCoords coords(sys.shape);
    LpOutcome outcome = solve(pairwise_lp(sys, i, j));
    if (outcome.status != LpStatus::Feasible) {
        return std::nullopt;
    }
    Effect witness = coords.expand(*outcome.witness);
    if (witness.evaluate(sys.vertices[i]) != 1 || witness.evaluate(sys.vertices[j]) != 0 ||
        !is_valid_effect(witness, sys)) {
        throw std::logic_error("LP witness failed exact re-verification");
    }
    return witness;
}

DistinguishabilityGraph build_graph(const GptSystem& sys, int jobs) {
    const int n = static_cast<int>(sys.vertices.size());
    DistinguishabilityGraph graph;
    graph.vertex_count = n;
    graph.adjacency.assign(n, std::vector<bool>(n, false));
    graph.witnesses.assign(n, std::vector<std::optional<Effect>>(n));

    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    std::vector<std::optional<Effect>> found(pairs.size());
    detail::parallel_for(static_cast<int>(pairs.size()), jobs, [&](int p) {
        found[p] = pairwise_distinguishable(sys, pairs[p].first, pairs[p].second);
    });
    for (size_t p = 0; p < pairs.size(); ++p) {
        if (!found[p]) continue;
        auto [i, j] = pairs[p];
        graph.adjacency[i][j] = graph.adjacency[j][i] = true;
        graph.witnesses[i][j] = found[p];
        graph.witnesses[j][i] = complement_effect(*found[p]);
    }
    return graph;
}

namespace {

class MaxCliqueSolver {
public:
    explicit MaxCliqueSolver(const std::vector<std::vector<bool>>& adjacency)
        : adj_(adjacency), n_(static_cast<int>(adjacency.size())) {}

    std::vector<int> solve() {
        std::vector<int> order(n_);
        for (int i = 0; i < n_; ++i) order[i] = i;
        std::vector<int> degree(n_, 0);
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < n_; ++j) {
                if (adj_[i][j]) ++degree[i];
            }
        }
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return degree[a] > degree[b]; });
        std::vector<int> current;
        expand(current, order);
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    void expand(std::vector<int>& current, const std::vector<int>& candidates) {
        if (candidates.empty()) {
            if (current.size() > best_.size()) best_ = current;
            return;
        }
        // Greedy coloring in candidate order; the color of a vertex bounds
        // the largest clique inside it and the earlier candidates.
        std::vector<std::vector<int>> classes;
        std::vector<int> ordered;
        std::vector<int> bound;
        for (int v : candidates) {
            size_t c = 0;
            while (c < classes.size()) {
                bool conflict = false;
                for (int u : classes[c]) {
                    if (adj_[u][v]) { conflict = true; break; }
                }
                if (!conflict) break;
                ++c;
            }
            if (c == classes.size()) classes.emplace_back();
            classes[c].push_back(v);
        }
        for (size_t c = 0; c < classes.size(); ++c) {
            for (int v : classes[c]) {
                ordered.push_back(v);
                bound.push_back(static_cast<int>(c) + 1);
            }
        }
        std::vector<int> remaining = ordered;
        for (int idx = static_cast<int>(ordered.size()) - 1; idx >= 0; --idx) {
            int v = ordered[idx];
            if (current.size() + bound[idx] <= best_.size()) return;
            current.push_back(v);
            std::vector<int> next;
            for (int k = 0; k < idx; ++k) {
                if (adj_[remaining[k]][v]) next.push_back(remaining[k]);
            }
            if (next.empty()) {
                if (current.size() > best_.size()) best_ = current;
            } else {
                expand(current, next);
            }
            current.pop_back();
        }
    }

    const std::vector<std::vector<bool>>& adj_;
    int n_;
    std::vector<int> best_;
};

}  // namespace

std::pair<int, std::vector<int>> information_dimension(const DistinguishabilityGraph& graph) {
    if (graph.vertex_count < 1) {
        throw invalid_input("graph has no vertices");
    }
    MaxCliqueSolver solver(graph.adjacency);
    std::vector<int> clique = solver.solve();
    if (clique.empty()) clique = {0};  // a single state is always a 1-clique
    return {static_cast<int>(clique.size()), clique};
}

namespace {

// Feasibility of the discriminating-measurement LP for one clique. Equality
// constraints (delta values on the clique, unit decomposition at every
// vertex) are eliminated by exact Gauss-Jordan first; the residual
// nonnegativity system goes to the simplex. Returns the measurement, with
// effects expanded to full tables, after exact re-verification.
std::optional<Measurement> clique_measurement(const GptSystem& sys,
                                              const std::vector<int>& clique) {
    const int m = static_cast<int>(clique.size());
    const int vertex_count = static_cast<int>(sys.vertices.size());
    EffectCoords coords(sys.shape);
    const int r = coords.dim();
    const int total = m * r;

    std::vector<RationalVector> state_rows;
    state_rows.reserve(vertex_count);
    for (const State& v : sys.vertices) state_rows.push_back(coords.row(v));

    RationalMatrix eq;
    RationalVector eq_rhs;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            RationalVector row(total, 0);
            const RationalVector& sr = state_rows[clique[j]];
            for (int p = 0; p < r; ++p) row[i * r + p] = sr[p];
            eq.push_back(std::move(row));
            eq_rhs.push_back(i == j ? 1 : 0);
        }
    }
    for (int v = 0; v < vertex_count; ++v) {
        RationalVector row(total, 0);
        for (int i = 0; i < m; ++i) {
            for (int p = 0; p < r; ++p) row[i * r + p] = state_rows[v][p];
        }
        eq.push_back(std::move(row));
        eq_rhs.push_back(1);
    }

    auto space = solve_affine(eq, eq_rhs);
    if (!space) return std::nullopt;

    std::vector<bool> in_clique(vertex_count, false);
    for (int s : clique) in_clique[s] = true;

    // e_i(v) >= 0 away from the clique; on the clique the deltas pin the
    // values, and e_i(v) <= 1 follows from the unit sum and nonnegativity.
    std::vector<std::pair<int, int>> nonneg;
    for (int i = 0; i < m; ++i) {
        for (int v = 0; v < vertex_count; ++v) {
            if (!in_clique[v]) nonneg.emplace_back(i, v);
        }
    }

    RationalVector solution;
    if (space->basis.empty()) {
        for (auto [i, v] : nonneg) {
            Rational value = 0;
            for (int p = 0; p < r; ++p) {
                value += state_rows[v][p] * space->origin[i * r + p];
            }
            if (value < 0) return std::nullopt;
        }
        solution = space->origin;
    } else {
        LpProblem lp;
        lp.variable_count = static_cast<int>(space->basis.size());
        for (auto [i, v] : nonneg) {
            RationalVector full(total, 0);
            for (int p = 0; p < r; ++p) full[i * r + p] = state_rows[v][p];
            RationalVector reduced(space->basis.size());
            for (size_t k = 0; k < space->basis.size(); ++k) {
                reduced[k] = dot(full, space->basis[k]);
            }
            Rational at_origin = dot(full, space->origin);
            lp.constraints.push_back({std::move(reduced), Relation::GreaterEq, -at_origin});
        }
        LpOutcome outcome = solve(lp);
        if (outcome.status != LpStatus::Feasible) return std::nullopt;
        solution = space->point(*outcome.witness);
    }

    Measurement measurement;
    for (int i = 0; i < m; ++i) {
        RationalVector params(solution.begin() + i * r, solution.begin() + (i + 1) * r);
        measurement.effects.push_back(coords.expand(params));
    }
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            Rational expect = i == j ? 1 : 0;
            if (measurement.effects[i].evaluate(sys.vertices[clique[j]]) != expect) {
                throw std::logic_error("measurement witness failed delta re-verification");
            }
        }
    }
    if (!is_valid_measurement(measurement, sys)) {
        throw std::logic_error("measurement witness failed validity re-verification");
    }
    return measurement;
}

}  // namespace

std::optional<Measurement> discriminating_measurement(const GptSystem& sys,
                                                      const std::vector<int>& states) {
    const int n = static_cast<int>(sys.vertices.size());
    if (states.empty()) {
        throw invalid_input("need at least one state to discriminate");
    }
    std::set<int> distinct;
    for (int s : states) {
        if (s < 0 || s >= n) {
            throw invalid_input("vertex index out of range");
        }
        if (!distinct.insert(s).second) {
            throw invalid_input("duplicate state index");
        }
    }
    return clique_measurement(sys, states);
}

namespace {

std::set<std::vector<int>> extension_candidates(const DistinguishabilityGraph& graph,
                                                const std::vector<std::vector<int>>& cliques,
                                                bool first_only) {
    std::set<std::vector<int>> candidates;
    for (const std::vector<int>& clique : cliques) {
        for (int v = 0; v < graph.vertex_count; ++v) {
            bool joined = true;
            for (int u : clique) {
                if (u == v || !graph.adjacency[u][v]) { joined = false; break; }
            }
            if (!joined) continue;
            std::vector<int> bigger = clique;
            bigger.insert(std::lower_bound(bigger.begin(), bigger.end(), v), v);
            candidates.insert(std::move(bigger));
            if (first_only) return candidates;
        }
    }
    return candidates;
}

}  // namespace

MeasurementDimensionResult measurement_dimension(const GptSystem& sys,
                                                 const DistinguishabilityGraph& graph,
                                                 int certify_limit, int jobs) {
    if (certify_limit < 2) {
        throw invalid_input("certify limit must be at least 2");
    }
    const int n = graph.vertex_count;

    MeasurementDimensionResult result;
    result.value = 1;
    result.exact = true;
    result.states = {0};
    result.measurement = Measurement{{unit_effect(sys.shape)}};

    std::vector<std::vector<int>> feasible;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (graph.adjacency[i][j]) feasible.push_back({i, j});
        }
    }
    if (feasible.empty()) {
        return result;  // no 2-clique exists at all
    }
    {
        const std::vector<int>& edge = feasible.front();
        const Effect& e = *graph.witnesses[edge[0]][edge[1]];
        result.value = 2;
        result.states = edge;
        result.measurement = Measurement{{e, complement_effect(e)}};
    }

    for (;;) {
        if (result.value >= certify_limit) {
            result.exact = extension_candidates(graph, feasible, /*first_only=*/true).empty();
            return result;
        }
        auto candidate_set = extension_candidates(graph, feasible, /*first_only=*/false);
        if (candidate_set.empty()) {
            result.exact = true;
            return result;
        }
        std::vector<std::vector<int>> candidates(candidate_set.begin(), candidate_set.end());
        std::vector<std::optional<Measurement>> outcomes(candidates.size());
        detail::parallel_for(static_cast<int>(candidates.size()), jobs, [&](int c) {
            outcomes[c] = clique_measurement(sys, candidates[c]);
        });

        std::vector<std::vector<int>> next;
        int first = -1;
        for (size_t c = 0; c < candidates.size(); ++c) {
            if (outcomes[c]) {
                if (first < 0) first = static_cast<int>(c);
                next.push_back(candidates[c]);
            }
        }
        if (next.empty()) {
            result.exact = true;  // every larger clique is certified infeasible
            return result;
        }
        result.value += 1;
        result.states = candidates[first];
        result.measurement = *outcomes[first];
        feasible = std::move(next);
    }
}

DimensionReport compute_dimensions(const GptSystem& sys, const DimensionOptions& options) {
    require_valid_system(sys);
    const int n = static_cast<int>(sys.vertices.size());

    DistinguishabilityGraph graph = build_graph(sys, options.jobs);
    auto [d_i, clique] = information_dimension(graph);

    bool certify = options.certify.value_or(n <= 16);
    int limit = certify ? std::max(2, d_i) : 2;
    MeasurementDimensionResult md = measurement_dimension(sys, graph, limit, options.jobs);

    DimensionReport report;
    report.d_m = md.value;
    report.d_m_exact = md.exact;
    report.d_m_states = md.states;
    report.d_m_measurement = md.measurement;
    report.d_i = d_i;
    report.d_i_clique = clique;

    // Witnesses must survive direct evaluation.
    for (size_t a = 0; a < report.d_i_clique.size(); ++a) {
        for (size_t b = a + 1; b < report.d_i_clique.size(); ++b) {
            int i = report.d_i_clique[a];
            int j = report.d_i_clique[b];
            const auto& w = graph.witnesses[i][j];
            if (!w || w->evaluate(sys.vertices[i]) != 1 || w->evaluate(sys.vertices[j]) != 0) {
                throw std::logic_error("clique edge witness failed re-verification");
            }
        }
    }
    for (size_t a = 0; a < report.d_m_states.size(); ++a) {
        for (size_t b = 0; b < report.d_m_states.size(); ++b) {
            Rational expect = a == b ? 1 : 0;
            if (report.d_m_measurement.effects[a].evaluate(sys.vertices[report.d_m_states[b]]) !=
                expect) {
                throw std::logic_error("measurement witness failed re-verification");
            }
        }
    }
    if (!is_valid_measurement(report.d_m_measurement, sys)) {
        throw std::logic_error("measurement witness is not a valid measurement");
    }
    if (report.d_m > report.d_i) {
        throw std::logic_error("dimension ordering violated: d_m > d_i");
    }
    return report;
}

}  // namespace boxdim
