#pragma once

#include "boxdim/system.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace boxdim {

// Multipartite conditional distribution P(a_1..a_k | x_1..x_k). The table is
// joint-setting-major, joint-outcome-minor, with party 0 as the most
// significant digit in both mixed-radix indices.
struct NsBox {
    int parties = 0;
    std::vector<int> settings_per_party;
    std::vector<int> outcomes_per_party;
    std::vector<Rational> table;

    int joint_settings() const;
    int joint_outcomes() const;
    int setting_index(const std::vector<int>& settings) const;
    int outcome_index(const std::vector<int>& outcomes) const;
    const Rational& prob(const std::vector<int>& settings, const std::vector<int>& outcomes) const;

    // The box viewed as a single system over its joint settings.
    State to_state() const;
};

// Normalization per joint setting plus exact no-signaling: the marginal of
// every strict subset of parties is independent of the remaining settings.
void require_valid_box(const NsBox& box);
bool is_no_signaling(const NsBox& box);

// XOR-correlation labels. The bipartite label encodes
// a1 xor a2 = alpha x1 x2 xor beta x1 xor gamma x2 xor delta.
struct BoxCorrelationLabel {
    int alpha = 0, beta = 0, gamma = 0, delta = 0;

    int correlation(int x1, int x2) const {
        return (alpha & x1 & x2) ^ (beta & x1) ^ (gamma & x2) ^ delta;
    }
};

// Box with uniform outcomes constrained to parity f: xor of outputs equals
// f(inputs). f is a truth table indexed by the joint setting.
NsBox correlation_box(int parties, const std::vector<int>& f);
NsBox correlation_box(const BoxCorrelationLabel& label);

// All vertices of the two-g-bit no-signaling polytope, enumerated by exact
// tight-constraint search over the affine hull: every 8-subset of the 16
// nonnegativity facets that pins a unique point is solved and kept when all
// facets hold. Output is deduplicated and sorted lexicographically by table.
// Yields 24 boxes: 16 with deterministic locals, 8 of PR type.
std::vector<NsBox> maximal_tensor_gbits();

bool has_deterministic_locals(const NsBox& box);
bool has_uniform_marginals(const NsBox& box);

// Recovers the XOR-correlation label when every joint setting supports
// exactly one output parity.
std::optional<BoxCorrelationLabel> extract_label(const NsBox& box);

// Marginal of one party's outcome, which no-signaling makes independent of
// the other parties' settings.
Rational party_marginal(const NsBox& box, int party, int setting, int outcome);

// True iff conditioning on any single party's outcome steers the remaining
// party into the given state space (membership decided by LP). Bipartite
// boxes only.
bool steering_check(const NsBox& box, const GptSystem& sys);

// (a_1..a_k) -> xor a_i, re-indexing joint settings as one system with
// 2^k binary settings.
State parity_project(const NsBox& box);

// Distinct parity projections of a box family, as a system.
GptSystem project_boxes(const std::vector<NsBox>& boxes, const std::string& name);

// Projected composite of k g-bits built directly: one deterministic vertex
// per boolean function on k bits, over D = 2^k settings.
GptSystem amplify(int k, std::int64_t vertex_cap = 1 << 16);

// Setting permutation plus per-setting outcome relabelings mapping one
// vertex set onto the other exactly.
bool isomorphic(const GptSystem& a, const GptSystem& b);

}  // namespace boxdim
