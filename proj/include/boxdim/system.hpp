#pragma once

#include "boxdim/rational.hpp"

#include <string>
#include <vector>

namespace boxdim {

// Measurement arities of a single system: entry x is the number of outcomes
// of setting x. State tables are laid out setting-major, outcome-minor.
class SystemShape {
public:
    explicit SystemShape(std::vector<int> arities);

    int settings() const { return static_cast<int>(arities_.size()); }
    int arity(int setting) const { return arities_.at(setting); }
    int table_length() const { return offsets_.back(); }
    int index(int setting, int outcome) const;
    const std::vector<int>& arities() const { return arities_; }

    bool operator==(const SystemShape& other) const { return arities_ == other.arities_; }
    bool operator!=(const SystemShape& other) const { return !(*this == other); }

private:
    std::vector<int> arities_;
    std::vector<int> offsets_;  // prefix sums, offsets_[settings()] = table_length
};

// A state is the full conditional-probability table P(a|x). Entry (x, a)
// lives at shape.index(x, a). Normalization per setting is an invariant,
// not an encoding trick: tables keep all redundant coordinates.
struct State {
    SystemShape shape;
    std::vector<Rational> table;

    const Rational& prob(int setting, int outcome) const {
        return table[shape.index(setting, outcome)];
    }
};

bool is_valid_state(const State& state);
void require_valid_state(const State& state);

// Deterministic pure-state label: one outcome per setting.
struct PureStateLabel {
    std::vector<int> outcomes;
};

State deterministic_state(const SystemShape& shape, const std::vector<int>& outcomes);

// g-bit label (alpha, beta): outcome a = alpha*x XOR beta at setting x.
PureStateLabel gbit_label(int alpha, int beta);

// A single-system state space given by its extreme points.
struct GptSystem {
    SystemShape shape;
    std::vector<State> vertices;
    std::string name;
};

// Checks vertex validity and pairwise distinctness. Extremality (no vertex in
// the hull of the others) needs the LP solver; see lp.hpp.
void require_valid_system(const GptSystem& sys);
bool all_vertices_deterministic(const GptSystem& sys);

// Affine functional e(w) = offset + coefficients . table(w).
struct Effect {
    SystemShape shape;
    std::vector<Rational> coefficients;
    Rational offset;

    Rational evaluate(const State& state) const;
};

Effect atomic_effect(const SystemShape& shape, int setting, int outcome);
Effect unit_effect(const SystemShape& shape);
Effect zero_effect(const SystemShape& shape);
Effect complement_effect(const Effect& effect);  // u - e

// Valid iff 0 <= e(v) <= 1 at every vertex; convexity bounds the whole space.
bool is_valid_effect(const Effect& effect, const GptSystem& sys);

// A measurement is a decomposition of the unit effect on the state space.
struct Measurement {
    std::vector<Effect> effects;
};

bool is_valid_measurement(const Measurement& m, const GptSystem& sys);

// Entrywise convex combination. Weights must be nonnegative and sum to 1.
State mix(const std::vector<State>& states, const std::vector<Rational>& weights);

// Canonical boxworld / classical builders.
//
// make_gbit orders vertices by the square walk w1=(0,0), w2=(1,0), w3=(1,1),
// w4=(0,1) where the pair lists (outcome at x=0, outcome at x=1).
// make_hypercube lists all 2^D deterministic labels in lexicographic order.
GptSystem make_gbit();
GptSystem make_hypercube(int dimension);
GptSystem make_classical(int outcomes);

}  // namespace boxdim
