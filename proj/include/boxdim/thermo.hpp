#pragma once

#include "boxdim/protocols.hpp"
#include "boxdim/rational.hpp"

#include <optional>
#include <vector>

namespace boxdim {

enum class ThermoOp { Flip, Rotate, Measure, EraseRegister, Reset };

const char* thermo_op_name(ThermoOp op);

// Costs are in bit-units of k_B T log 2. Only register erasure ever costs
// anything; state updates are free because all pure states share one energy.
struct LedgerEntry {
    int step = 0;
    ThermoOp operation = ThermoOp::Flip;
    Rational cost_bits;
};

class EnergyLedger {
public:
    void append(int step, ThermoOp operation, Rational cost_bits);
    const std::vector<LedgerEntry>& entries() const { return entries_; }
    Rational total_cost() const;

private:
    std::vector<LedgerEntry> entries_;
};

// Hypercube-bit memory plus the demon's classical side information.
struct MemoryState {
    int dimension = 0;
    BitString zeta;                // current pure state, always a vertex
    BitString classical_register;  // measurement outcomes held outside
    int clock = 0;
    EnergyLedger ledger;
};

MemoryState make_memory(int dimension);

// Measuring setting x returns zeta_x; the measured coordinate keeps the
// outcome and every other coordinate resets to 0, which erases the
// unmeasured information and makes the measurement repeatable.
struct PostMeasurement {
    int outcome = 0;
    BitString zeta;
};

PostMeasurement post_measurement_state(const BitString& zeta, int setting);

// Applies the rule above to the memory, logging a zero-cost Measure entry
// and appending the outcome to the classical register.
int measure(MemoryState& memory, int setting);

// Vertex-to-vertex reversible update: zeta'_i = zeta_{perm(i)} xor mask_i.
struct ReversibleTransform {
    std::vector<int> permutation;
    BitString flip_mask;
};

BitString apply_reversible(const BitString& zeta, const ReversibleTransform& transform);
void apply_transform(MemoryState& memory, const ReversibleTransform& transform,
                     ThermoOp op = ThermoOp::Rotate);

// Measure(x=0), erase the one-bit register (cost 1), reset to the all-zero
// vertex (cost 0). Total cost is one bit-unit regardless of dimension.
Rational run_erasure_cycle(MemoryState& memory);

struct DemonReport {
    int dimension = 0;
    int stored_bits = 0;
    Rational total_cost_bits;
    Rational landauer_bound_bits;
    Rational deficit_bits;
    std::optional<double> temperature;    // kelvin
    std::optional<double> energy_joules;  // cost_bits * k_B T ln 2
    std::vector<LedgerEntry> ledger;
};

inline constexpr double k_boltzmann = 1.380649e-23;  // J/K

// Stores one decision bit per coordinate by conditional flips (free), then
// erases through the cycle above. Landauer's reference for D stored bits is
// D bit-units; the report's deficit is D - 1.
DemonReport demon_protocol(const BitString& decisions,
                           std::optional<double> temperature = std::nullopt, int cap = 64);

}  // namespace boxdim
