#include "boxdim/system.hpp"

#include <algorithm>

namespace boxdim {

SystemShape::SystemShape(std::vector<int> arities) : arities_(std::move(arities)) {
    if (arities_.empty()) {
        throw invalid_input("system needs at least one measurement setting");
    }
    offsets_.reserve(arities_.size() + 1);
    offsets_.push_back(0);
    for (int a : arities_) {
        if (a < 2) {
            throw invalid_input("every measurement needs at least two outcomes");
        }
        offsets_.push_back(offsets_.back() + a);
    }
}

int SystemShape::index(int setting, int outcome) const {
    if (setting < 0 || setting >= settings()) {
        throw invalid_input("setting index out of range");
    }
    if (outcome < 0 || outcome >= arities_[setting]) {
        throw invalid_input("outcome index out of range");
    }
    return offsets_[setting] + outcome;
}

bool is_valid_state(const State& state) {
    if (static_cast<int>(state.table.size()) != state.shape.table_length()) return false;
    for (const Rational& p : state.table) {
        if (p < 0 || p > 1) return false;
    }
    for (int x = 0; x < state.shape.settings(); ++x) {
        Rational sum = 0;
        for (int a = 0; a < state.shape.arity(x); ++a) {
            sum += state.prob(x, a);
        }
        if (sum != 1) return false;
    }
    return true;
}

void require_valid_state(const State& state) {
    if (!is_valid_state(state)) {
        throw invalid_input("state table violates normalization or range invariants");
    }
}

State deterministic_state(const SystemShape& shape, const std::vector<int>& outcomes) {
    if (static_cast<int>(outcomes.size()) != shape.settings()) {
        throw invalid_input("need exactly one outcome per setting");
    }
    State state{shape, std::vector<Rational>(shape.table_length(), 0)};
    for (int x = 0; x < shape.settings(); ++x) {
        state.table[shape.index(x, outcomes[x])] = 1;
    }
    return state;
}

PureStateLabel gbit_label(int alpha, int beta) {
    if ((alpha & ~1) || (beta & ~1)) {
        throw invalid_input("gbit label bits must be 0 or 1");
    }
    return PureStateLabel{{beta, alpha ^ beta}};  // a = alpha*x xor beta at x = 0, 1
}

void require_valid_system(const GptSystem& sys) {
    if (sys.vertices.empty()) {
        throw invalid_input("system needs at least one vertex");
    }
    for (const State& v : sys.vertices) {
        if (v.shape != sys.shape) {
            throw invalid_input("vertex shape does not match system shape");
        }
        require_valid_state(v);
    }
    std::vector<const std::vector<Rational>*> tables;
    tables.reserve(sys.vertices.size());
    for (const State& v : sys.vertices) tables.push_back(&v.table);
    std::sort(tables.begin(), tables.end(),
              [](const auto* a, const auto* b) { return *a < *b; });
    for (size_t i = 1; i < tables.size(); ++i) {
        if (*tables[i - 1] == *tables[i]) {
            throw invalid_input("duplicate vertex in system '" + sys.name + "'");
        }
    }
}

bool all_vertices_deterministic(const GptSystem& sys) {
    for (const State& v : sys.vertices) {
        for (const Rational& p : v.table) {
            if (p != 0 && p != 1) return false;
        }
    }
    return true;
}

Rational Effect::evaluate(const State& state) const {
    if (state.shape != shape) {
        throw invalid_input("effect and state shapes differ");
    }
    Rational value = offset;
    for (size_t i = 0; i < coefficients.size(); ++i) {
        if (coefficients[i] != 0) {
            value += coefficients[i] * state.table[i];
        }
    }
    return value;
}

Effect atomic_effect(const SystemShape& shape, int setting, int outcome) {
    Effect e{shape, std::vector<Rational>(shape.table_length(), 0), 0};
    e.coefficients[shape.index(setting, outcome)] = 1;
    return e;
}

Effect unit_effect(const SystemShape& shape) {
    return Effect{shape, std::vector<Rational>(shape.table_length(), 0), 1};
}

Effect zero_effect(const SystemShape& shape) {
    return Effect{shape, std::vector<Rational>(shape.table_length(), 0), 0};
}

Effect complement_effect(const Effect& effect) {
    Effect out{effect.shape, effect.coefficients, 1 - effect.offset};
    for (Rational& c : out.coefficients) {
        c = -c;
    }
    return out;
}

bool is_valid_effect(const Effect& effect, const GptSystem& sys) {
    if (effect.shape != sys.shape) {
        throw invalid_input("effect shape does not match system shape");
    }
    for (const State& v : sys.vertices) {
        Rational value = effect.evaluate(v);
        if (value < 0 || value > 1) return false;
    }
    return true;
}

bool is_valid_measurement(const Measurement& m, const GptSystem& sys) {
    if (m.effects.empty()) return false;
    for (const Effect& e : m.effects) {
        if (!is_valid_effect(e, sys)) return false;
    }
    for (const State& v : sys.vertices) {
        Rational sum = 0;
        for (const Effect& e : m.effects) {
            sum += e.evaluate(v);
        }
        if (sum != 1) return false;
    }
    return true;
}

State mix(const std::vector<State>& states, const std::vector<Rational>& weights) {
    if (states.empty() || states.size() != weights.size()) {
        throw invalid_input("mix needs one weight per state");
    }
    Rational total = 0;
    for (const Rational& w : weights) {
        if (w < 0) {
            throw invalid_input("mixing weights must be nonnegative");
        }
        total += w;
    }
    if (total != 1) {
        throw invalid_input("mixing weights must sum to exactly 1");
    }
    const SystemShape& shape = states.front().shape;
    State out{shape, std::vector<Rational>(shape.table_length(), 0)};
    for (size_t i = 0; i < states.size(); ++i) {
        if (states[i].shape != shape) {
            throw invalid_input("mixed states must share one shape");
        }
        if (weights[i] == 0) continue;
        for (int c = 0; c < shape.table_length(); ++c) {
            out.table[c] += weights[i] * states[i].table[c];
        }
    }
    return out;
}

GptSystem make_gbit() {
    SystemShape shape({2, 2});
    GptSystem sys{shape, {}, "gbit"};
    // (outcome at x=0, outcome at x=1) per vertex, in w1..w4 order.
    for (auto outcomes : {std::vector<int>{0, 0}, {1, 0}, {1, 1}, {0, 1}}) {
        sys.vertices.push_back(deterministic_state(shape, outcomes));
    }
    require_valid_system(sys);
    return sys;
}

GptSystem make_hypercube(int dimension) {
    if (dimension < 1) {
        throw invalid_input("hypercube dimension must be at least 1");
    }
    if (dimension > 16) {
        throw cap_exceeded("hypercube dimension above the 2^16 vertex cap");
    }
    SystemShape shape(std::vector<int>(dimension, 2));
    GptSystem sys{shape, {}, "hypercube-" + std::to_string(dimension)};
    const std::int64_t count = std::int64_t{1} << dimension;
    sys.vertices.reserve(count);
    std::vector<int> label(dimension, 0);
    for (std::int64_t code = 0; code < count; ++code) {
        for (int x = 0; x < dimension; ++x) {
            label[x] = static_cast<int>((code >> (dimension - 1 - x)) & 1);
        }
        sys.vertices.push_back(deterministic_state(shape, label));
    }
    return sys;
}

GptSystem make_classical(int outcomes) {
    if (outcomes < 2) {
        throw invalid_input("classical system needs at least two outcomes");
    }
    SystemShape shape({outcomes});
    GptSystem sys{shape, {}, "classical-" + std::to_string(outcomes)};
    for (int a = 0; a < outcomes; ++a) {
        sys.vertices.push_back(deterministic_state(shape, {a}));
    }
    return sys;
}

}  // namespace boxdim
