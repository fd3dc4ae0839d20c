#pragma once

#include "boxdim/rational.hpp"

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace boxdim {

using BitString = std::vector<int>;

BitString parse_bits(const std::string& text);
std::string format_bits(const BitString& bits);

// Boolean function f : X x Y -> {0,1} on bit strings, stored row-major with
// Alice's input as the row.
struct TruthTable {
    int alice_bits = 0;
    int bob_bits = 0;
    std::vector<int> values;

    int rows() const { return 1 << alice_bits; }
    int cols() const { return 1 << bob_bits; }
    int value(int b, int c) const { return values[b * cols() + c]; }
};

// Text format: first line "n_alice n_bob", then 2^n_alice lines of
// 2^n_bob characters in {0,1}.
TruthTable parse_truth_table(std::istream& in);
TruthTable load_truth_table(const std::string& path);

struct TranscriptStep {
    std::string action;
    std::string detail;
};

// Replayable record of one protocol run. Indices in transcripts are 1-based
// to match the reporting convention; all internal APIs are 0-based.
struct ProtocolTranscript {
    BitString prepared_label;
    int measurement = 0;  // 1-based
    int outcome = 0;
    BitString message_bits;
    std::vector<TranscriptStep> steps;
};

int replay(const ProtocolTranscript& transcript);

struct IndexResult {
    int output = 0;
    ProtocolTranscript transcript;
};

// Alice encodes b into a hypercube-bit vertex, Bob measures setting k
// (1-based). The output equals b_k with probability one.
IndexResult index_protocol(const BitString& b, int k);

struct IcReport {
    int n = 0;
    std::vector<double> per_index_bits;  // I(b_j : guess | k = j)
    double total_bits = 0;
    double capacity_bits = 0;  // H(d_m) of the transmitted system
    bool violated = false;
};

// Exact joint statistics of the index protocol under uniform inputs. The
// per-index conditional mutual informations come from exact rational joint
// distributions; floating point enters only inside the logarithm.
IcReport ic_quantity(int n, int cap = 16);

struct CcReport {
    int alice_bits = 0;
    int bob_bits = 0;
    int dimension = 0;  // hypercube dimension |Y|
    long pairs_total = 0;
    long pairs_correct = 0;
    Rational correct_fraction;
    double message_bits = 0;  // log2(d_m)
};

struct CcCaps {
    int max_alice_bits = 12;
    int max_bob_bits = 6;
};

// One-shot communication protocol for an arbitrary boolean function: Alice
// tabulates f(b, .) into a hypercube vertex, Bob measures his input.
CcReport cc_protocol(const TruthTable& table, const CcCaps& caps = {});

struct PrBoxSimReport {
    int dimension = 0;
    int k = 0;  // 1-based
    std::array<Rational, 2> output_distribution;
    int classical_bits_sent = 0;
};

// Simulates the hypercube-bit index protocol with D PR boxes plus one
// classical bit, enumerating all 2^D internal box outcomes exactly.
PrBoxSimReport simulate_hypercube_with_prboxes(const BitString& zeta, int k, int cap = 20);

// Converse translator: one classical bit assisted by PR boxes replaced by a
// single hypercube bit. Returns f(b, c).
int simulate_prboxes_with_hypercube(const TruthTable& f, const BitString& b, const BitString& c);

// H(d) = log2 d, the information retrievable through one measurement.
double entropy_capacity(int d_m);

// Mutual information in bits of an exact joint distribution (must sum to 1);
// the 0 log 0 = 0 convention applies.
double mutual_information(const std::vector<std::vector<Rational>>& joint);

}  // namespace boxdim
