#include "boxdim/lp.hpp"

#include "boxdim/dimensions.hpp"
#include "boxdim/linalg.hpp"

#include <doctest.h>

#include <random>

using namespace boxdim;

namespace {

// Independent feasibility oracle: every subset of `variable_count`
// constraints, read as equalities, is solved exactly; solutions satisfying
// all constraints are the candidate basic points. Complete whenever the
// feasible region is bounded (then it is a polytope with vertices), which
// the callers below arrange via explicit box constraints or simplex rows.
struct OracleResult {
    bool feasible = false;
    std::vector<std::vector<Rational>> points;

    std::optional<Rational> maximum(const std::vector<Rational>& objective) const {
        std::optional<Rational> best;
        for (const auto& p : points) {
            Rational value = dot(objective, p);
            if (!best || value > *best) best = value;
        }
        return best;
    }
};

OracleResult enumerate_feasible_vertices(const LpProblem& lp) {
    OracleResult result;
    const int n = lp.variable_count;
    const int m = static_cast<int>(lp.constraints.size());
    std::vector<int> pick(n);
    for (int i = 0; i < n; ++i) pick[i] = i;
    if (m < n) return result;
    for (;;) {
        RationalMatrix a(n);
        RationalVector b(n);
        for (int i = 0; i < n; ++i) {
            a[i] = lp.constraints[pick[i]].coefficients;
            b[i] = lp.constraints[pick[i]].rhs;
        }
        if (auto point = solve_unique(a, b)) {
            if (satisfies_all(lp, *point)) {
                result.feasible = true;
                result.points.push_back(*point);
            }
        }
        int i = n - 1;
        while (i >= 0 && pick[i] == m - n + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < n; ++j) pick[j] = pick[i] + j - i;
    }
    return result;
}

void add_box(LpProblem& lp, int bound) {
    for (int j = 0; j < lp.variable_count; ++j) {
        std::vector<Rational> row(lp.variable_count, 0);
        row[j] = 1;
        lp.constraints.push_back({row, Relation::LessEq, bound});
        lp.constraints.push_back({row, Relation::GreaterEq, -bound});
    }
}

}  // namespace

TEST_CASE("forced point") {
    LpProblem lp;
    lp.variable_count = 1;
    lp.constraints.push_back({{Rational(1)}, Relation::GreaterEq, 0});
    lp.constraints.push_back({{Rational(1)}, Relation::LessEq, 1});
    lp.constraints.push_back({{Rational(1)}, Relation::Equal, Rational(1, 2)});
    LpOutcome out = solve(lp);
    REQUIRE(out.status == LpStatus::Feasible);
    CHECK((*out.witness)[0] == Rational(1, 2));
    CHECK(satisfies_all(lp, *out.witness));
}

TEST_CASE("empty interval is infeasible with positive phase-1 optimum") {
    LpProblem lp;
    lp.variable_count = 1;
    lp.constraints.push_back({{Rational(1)}, Relation::GreaterEq, 1});
    lp.constraints.push_back({{Rational(1)}, Relation::LessEq, 0});
    LpOutcome out = solve(lp);
    REQUIRE(out.status == LpStatus::Infeasible);
    REQUIRE(out.optimum.has_value());
    CHECK(*out.optimum > 0);
}

TEST_CASE("tight upper bound is reached") {
    LpProblem lp;
    lp.variable_count = 1;
    lp.constraints.push_back({{Rational(1)}, Relation::LessEq, Rational(3, 7)});
    lp.constraints.push_back({{Rational(1)}, Relation::GreaterEq, 0});
    lp.objective = std::vector<Rational>{Rational(1)};
    LpOutcome out = solve(lp);
    REQUIRE(out.status == LpStatus::Feasible);
    CHECK(*out.optimum == Rational(3, 7));
    CHECK((*out.witness)[0] == Rational(3, 7));
}

TEST_CASE("unbounded objective is reported") {
    LpProblem lp;
    lp.variable_count = 1;
    lp.constraints.push_back({{Rational(1)}, Relation::GreaterEq, 0});
    lp.objective = std::vector<Rational>{Rational(1)};
    CHECK(solve(lp).status == LpStatus::Unbounded);
}

TEST_CASE("dimension mismatches are rejected") {
    LpProblem lp;
    lp.variable_count = 2;
    lp.constraints.push_back({{Rational(1)}, Relation::LessEq, 1});
    CHECK_THROWS_AS(solve(lp), invalid_input);

    LpProblem lp2;
    lp2.variable_count = 2;
    lp2.objective = std::vector<Rational>{Rational(1)};
    CHECK_THROWS_AS(solve(lp2), invalid_input);
}

TEST_CASE("identical problems produce identical outcomes") {
    GptSystem gbit = make_gbit();
    LpProblem lp = pairwise_lp(gbit, 0, 2);
    LpOutcome a = solve(lp);
    LpOutcome b = solve(lp);
    REQUIRE(a.status == LpStatus::Feasible);
    CHECK(a.status == b.status);
    CHECK(*a.witness == *b.witness);
}

TEST_CASE("redundancy: mixed state lies in the hull of the gbit vertices") {
    GptSystem gbit = make_gbit();
    State mixed = mix(gbit.vertices, std::vector<Rational>(4, Rational(1, 4)));
    CHECK(is_redundant_vertex(mixed, gbit.vertices));
}

TEST_CASE("redundancy: a gbit vertex is not a mixture of the others") {
    GptSystem gbit = make_gbit();
    std::vector<State> others(gbit.vertices.begin() + 1, gbit.vertices.end());
    CHECK_FALSE(is_redundant_vertex(gbit.vertices[0], others));

    // Exhaustive rational weight-grid cross-check at denominator 12.
    const int q = 12;
    bool grid_hit = false;
    for (int i = 0; i <= q && !grid_hit; ++i) {
        for (int j = 0; i + j <= q && !grid_hit; ++j) {
            int k = q - i - j;
            State candidate = mix(others, {Rational(i, q), Rational(j, q), Rational(k, q)});
            if (candidate.table == gbit.vertices[0].table) grid_hit = true;
        }
    }
    CHECK_FALSE(grid_hit);
}

TEST_CASE("redundancy: any state against a list containing itself") {
    GptSystem gbit = make_gbit();
    CHECK(is_redundant_vertex(gbit.vertices[2], gbit.vertices));
    CHECK_THROWS_AS(is_redundant_vertex(gbit.vertices[0], {}), invalid_input);
}

TEST_CASE("gbit pairwise family agrees with the vertex-enumeration oracle") {
    GptSystem gbit = make_gbit();
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (i == j) continue;
            LpProblem lp = pairwise_lp(gbit, i, j);
            CHECK(lp.variable_count <= 4);
            LpOutcome out = solve(lp);
            OracleResult oracle = enumerate_feasible_vertices(lp);
            REQUIRE(out.status == LpStatus::Feasible);
            CHECK(oracle.feasible);
            CHECK(satisfies_all(lp, *out.witness));
        }
    }
}

TEST_CASE("gbit redundancy family agrees with the vertex-enumeration oracle") {
    GptSystem gbit = make_gbit();
    State mixed = mix(gbit.vertices, std::vector<Rational>(4, Rational(1, 4)));
    std::vector<State> others(gbit.vertices.begin() + 1, gbit.vertices.end());

    LpProblem member = redundancy_lp(mixed, gbit.vertices);
    LpOutcome out = solve(member);
    OracleResult oracle = enumerate_feasible_vertices(member);
    CHECK(out.status == LpStatus::Feasible);
    CHECK(oracle.feasible);
    CHECK(satisfies_all(member, *out.witness));

    LpProblem non_member = redundancy_lp(gbit.vertices[0], others);
    CHECK(solve(non_member).status == LpStatus::Infeasible);
    CHECK_FALSE(enumerate_feasible_vertices(non_member).feasible);
}

TEST_CASE("randomized boxed LPs agree with the oracle") {
    std::mt19937_64 rng(987654321);
    auto small = [&](int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
    };
    int feasible_count = 0;
    for (int trial = 0; trial < 300; ++trial) {
        LpProblem lp;
        lp.variable_count = small(2, trial % 5 == 0 ? 4 : 3);
        int rows = small(1, 5);
        for (int r = 0; r < rows; ++r) {
            std::vector<Rational> row(lp.variable_count);
            for (auto& c : row) c = small(-3, 3);
            Relation rel = static_cast<Relation>(small(0, 2));
            lp.constraints.push_back({std::move(row), rel, Rational(small(-4, 4))});
        }
        add_box(lp, 16);  // bounded region: the oracle enumeration is complete
        bool with_objective = trial % 2 == 0;
        if (with_objective) {
            std::vector<Rational> obj(lp.variable_count);
            for (auto& c : obj) c = small(-2, 2);
            lp.objective = obj;
        }

        LpOutcome out = solve(lp);
        OracleResult oracle = enumerate_feasible_vertices(lp);
        if (out.status == LpStatus::Infeasible) {
            CHECK_FALSE(oracle.feasible);
        } else {
            REQUIRE(out.status == LpStatus::Feasible);  // boxed: never unbounded
            ++feasible_count;
            CHECK(oracle.feasible);
            CHECK(satisfies_all(lp, *out.witness));
            if (with_objective) {
                REQUIRE(oracle.maximum(*lp.objective).has_value());
                CHECK(*out.optimum == *oracle.maximum(*lp.objective));
            }
        }
    }
    CHECK(feasible_count > 20);  // the family is not degenerate
}
