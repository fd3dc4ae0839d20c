#include "boxdim/thermo.hpp"

#include <cmath>

namespace boxdim {

const char* thermo_op_name(ThermoOp op) {
    switch (op) {
        case ThermoOp::Flip: return "flip";
        case ThermoOp::Rotate: return "rotate";
        case ThermoOp::Measure: return "measure";
        case ThermoOp::EraseRegister: return "erase-register";
        case ThermoOp::Reset: return "reset";
    }
    return "?";
}

void EnergyLedger::append(int step, ThermoOp operation, Rational cost_bits) {
    if (cost_bits < 0) {
        throw invalid_input("ledger costs are nonnegative");
    }
    entries_.push_back({step, operation, std::move(cost_bits)});
}

Rational EnergyLedger::total_cost() const {
    Rational total = 0;
    for (const LedgerEntry& e : entries_) total += e.cost_bits;
    return total;
}

MemoryState make_memory(int dimension) {
    if (dimension < 1) {
        throw invalid_input("memory needs at least one coordinate");
    }
    MemoryState memory;
    memory.dimension = dimension;
    memory.zeta.assign(dimension, 0);
    return memory;
}

PostMeasurement post_measurement_state(const BitString& zeta, int setting) {
    if (setting < 0 || setting >= static_cast<int>(zeta.size())) {
        throw invalid_input("measurement setting out of range");
    }
    PostMeasurement result;
    result.outcome = zeta[setting];
    result.zeta.assign(zeta.size(), 0);
    result.zeta[setting] = result.outcome;
    return result;
}

int measure(MemoryState& memory, int setting) {
    PostMeasurement post = post_measurement_state(memory.zeta, setting);
    memory.zeta = post.zeta;
    memory.classical_register.push_back(post.outcome);
    memory.clock += 1;
    memory.ledger.append(memory.clock, ThermoOp::Measure, 0);
    return post.outcome;
}

BitString apply_reversible(const BitString& zeta, const ReversibleTransform& transform) {
    const int d = static_cast<int>(zeta.size());
    if (static_cast<int>(transform.permutation.size()) != d ||
        static_cast<int>(transform.flip_mask.size()) != d) {
        throw invalid_input("transform size does not match the state");
    }
    std::vector<bool> seen(d, false);
    for (int p : transform.permutation) {
        if (p < 0 || p >= d || seen[p]) {
            throw invalid_input("malformed setting permutation");
        }
        seen[p] = true;
    }
    BitString out(d);
    for (int i = 0; i < d; ++i) {
        out[i] = zeta[transform.permutation[i]] ^ (transform.flip_mask[i] & 1);
    }
    return out;
}

void apply_transform(MemoryState& memory, const ReversibleTransform& transform, ThermoOp op) {
    memory.zeta = apply_reversible(memory.zeta, transform);
    memory.clock += 1;
    memory.ledger.append(memory.clock, op, 0);
}

Rational run_erasure_cycle(MemoryState& memory) {
    Rational before = memory.ledger.total_cost();

    measure(memory, 0);

    // Erase the classical record of the outcome: one bit-unit per bit.
    Rational erased(static_cast<int>(memory.classical_register.size()));
    memory.classical_register.clear();
    memory.clock += 1;
    memory.ledger.append(memory.clock, ThermoOp::EraseRegister, erased);

    // Rotate back to the fixed initial vertex; pure states share one energy,
    // so this is free.
    ReversibleTransform reset;
    reset.permutation.resize(memory.dimension);
    for (int i = 0; i < memory.dimension; ++i) reset.permutation[i] = i;
    reset.flip_mask = memory.zeta;  // self-XOR lands on all zeros
    apply_transform(memory, reset, ThermoOp::Reset);

    return memory.ledger.total_cost() - before;
}

DemonReport demon_protocol(const BitString& decisions, std::optional<double> temperature,
                           int cap) {
    const int d = static_cast<int>(decisions.size());
    if (d < 1) {
        throw invalid_input("demon protocol needs at least one decision");
    }
    if (d > cap) {
        throw cap_exceeded("demon protocol dimension exceeds the cap");
    }
    MemoryState memory = make_memory(d);
    for (int k = 0; k < d; ++k) {
        // Bit k of the run is stored in zeta_k: flip the coordinate when the
        // decision is 1, leave the state alone otherwise.
        ReversibleTransform step;
        step.permutation.resize(d);
        for (int i = 0; i < d; ++i) step.permutation[i] = i;
        step.flip_mask.assign(d, 0);
        step.flip_mask[k] = decisions[k];
        apply_transform(memory, step, ThermoOp::Flip);
    }
    if (memory.zeta != decisions) {
        throw std::logic_error("demon memory does not hold the decision string");
    }

    run_erasure_cycle(memory);
    if (memory.zeta != BitString(d, 0)) {
        throw std::logic_error("erasure cycle did not reset the memory");
    }

    DemonReport report;
    report.dimension = d;
    report.stored_bits = d;
    report.total_cost_bits = memory.ledger.total_cost();
    report.landauer_bound_bits = d;
    report.deficit_bits = report.landauer_bound_bits - report.total_cost_bits;
    report.ledger = memory.ledger.entries();
    if (temperature) {
        report.temperature = temperature;
        report.energy_joules =
            to_double(report.total_cost_bits) * k_boltzmann * *temperature * std::log(2.0);
    }
    return report;
}

}  // namespace boxdim
