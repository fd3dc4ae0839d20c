#include "boxdim/composition.hpp"

#include "boxdim/linalg.hpp"
#include "boxdim/lp.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace boxdim {

namespace {

int product(const std::vector<int>& values) {
    int out = 1;
    for (int v : values) out *= v;
    return out;
}

int mixed_radix_index(const std::vector<int>& digits, const std::vector<int>& radices) {
    if (digits.size() != radices.size()) {
        throw invalid_input("tuple length does not match party count");
    }
    int index = 0;
    for (size_t p = 0; p < digits.size(); ++p) {
        if (digits[p] < 0 || digits[p] >= radices[p]) {
            throw invalid_input("tuple entry out of range");
        }
        index = index * radices[p] + digits[p];
    }
    return index;
}

std::vector<int> mixed_radix_digits(int index, const std::vector<int>& radices) {
    std::vector<int> digits(radices.size());
    for (int p = static_cast<int>(radices.size()) - 1; p >= 0; --p) {
        digits[p] = index % radices[p];
        index /= radices[p];
    }
    return digits;
}

}  // namespace

int NsBox::joint_settings() const { return product(settings_per_party); }
int NsBox::joint_outcomes() const { return product(outcomes_per_party); }

int NsBox::setting_index(const std::vector<int>& settings) const {
    return mixed_radix_index(settings, settings_per_party);
}

int NsBox::outcome_index(const std::vector<int>& outcomes) const {
    return mixed_radix_index(outcomes, outcomes_per_party);
}

const Rational& NsBox::prob(const std::vector<int>& settings,
                            const std::vector<int>& outcomes) const {
    return table[setting_index(settings) * joint_outcomes() + outcome_index(outcomes)];
}

State NsBox::to_state() const {
    SystemShape shape(std::vector<int>(joint_settings(), joint_outcomes()));
    return State{shape, table};
}

bool is_no_signaling(const NsBox& box) {
    const int k = box.parties;
    const int jo = box.joint_outcomes();
    // Marginals of every strict nonempty party subset must not depend on the
    // remaining parties' settings.
    for (int subset = 1; subset < (1 << k) - 1; ++subset) {
        std::vector<int> inside, outside;
        for (int p = 0; p < k; ++p) {
            ((subset >> p) & 1 ? inside : outside).push_back(p);
        }
        std::vector<int> in_settings(inside.size(), 0);
        for (;;) {  // iterate settings of the subset
            std::map<std::vector<int>, Rational> reference;
            std::vector<int> out_settings(outside.size(), 0);
            bool first_completion = true;
            for (;;) {  // iterate settings of the complement
                std::vector<int> x(k);
                for (size_t i = 0; i < inside.size(); ++i) x[inside[i]] = in_settings[i];
                for (size_t i = 0; i < outside.size(); ++i) x[outside[i]] = out_settings[i];
                std::map<std::vector<int>, Rational> marginal;
                for (int a_index = 0; a_index < jo; ++a_index) {
                    std::vector<int> a = mixed_radix_digits(a_index, box.outcomes_per_party);
                    std::vector<int> a_in(inside.size());
                    for (size_t i = 0; i < inside.size(); ++i) a_in[i] = a[inside[i]];
                    marginal[a_in] += box.table[box.setting_index(x) * jo + a_index];
                }
                if (first_completion) {
                    reference = std::move(marginal);
                    first_completion = false;
                } else if (marginal != reference) {
                    return false;
                }
                size_t p = 0;
                while (p < outside.size() &&
                       ++out_settings[p] == box.settings_per_party[outside[p]]) {
                    out_settings[p++] = 0;
                }
                if (p == outside.size()) break;
            }
            size_t p = 0;
            while (p < inside.size() && ++in_settings[p] == box.settings_per_party[inside[p]]) {
                in_settings[p++] = 0;
            }
            if (p == inside.size()) break;
        }
    }
    return true;
}

void require_valid_box(const NsBox& box) {
    if (box.parties < 1 ||
        static_cast<int>(box.settings_per_party.size()) != box.parties ||
        static_cast<int>(box.outcomes_per_party.size()) != box.parties) {
        throw invalid_input("malformed box header");
    }
    const int js = box.joint_settings();
    const int jo = box.joint_outcomes();
    if (static_cast<int>(box.table.size()) != js * jo) {
        throw invalid_input("box table length does not match shape");
    }
    for (const Rational& p : box.table) {
        if (p < 0 || p > 1) throw invalid_input("box probability out of range");
    }
    for (int x = 0; x < js; ++x) {
        Rational sum = 0;
        for (int a = 0; a < jo; ++a) sum += box.table[x * jo + a];
        if (sum != 1) throw invalid_input("box table not normalized");
    }
    if (!is_no_signaling(box)) {
        throw invalid_input("box table is signaling");
    }
}

NsBox correlation_box(int parties, const std::vector<int>& f) {
    if (parties < 1) {
        throw invalid_input("correlation box needs at least one party");
    }
    if (parties > 10) {
        throw cap_exceeded("correlation box table would exceed the party cap");
    }
    NsBox box{parties, std::vector<int>(parties, 2), std::vector<int>(parties, 2), {}};
    const int js = box.joint_settings();
    const int jo = box.joint_outcomes();
    if (static_cast<int>(f.size()) != js) {
        throw invalid_input("correlation function length must be 2^parties");
    }
    box.table.assign(js * jo, 0);
    Rational weight(1, Integer(1) << (parties - 1));
    for (int x = 0; x < js; ++x) {
        for (int a = 0; a < jo; ++a) {
            int parity = __builtin_popcount(static_cast<unsigned>(a)) & 1;
            if (parity == (f[x] & 1)) box.table[x * jo + a] = weight;
        }
    }
    require_valid_box(box);
    return box;
}

NsBox correlation_box(const BoxCorrelationLabel& label) {
    std::vector<int> f(4);
    for (int x1 = 0; x1 < 2; ++x1) {
        for (int x2 = 0; x2 < 2; ++x2) {
            f[2 * x1 + x2] = label.correlation(x1, x2);
        }
    }
    return correlation_box(2, f);
}

std::vector<NsBox> maximal_tensor_gbits() {
    // Table entries P(a1 a2 | x1 x2), 16 coordinates. Equalities:
    // normalization per joint setting and both no-signaling families.
    const int dim = 16;
    auto entry = [](int x1, int x2, int a1, int a2) {
        return (2 * x1 + x2) * 4 + (2 * a1 + a2);
    };

    RationalMatrix eq;
    RationalVector rhs;
    for (int x1 = 0; x1 < 2; ++x1) {
        for (int x2 = 0; x2 < 2; ++x2) {
            RationalVector row(dim, 0);
            for (int a1 = 0; a1 < 2; ++a1) {
                for (int a2 = 0; a2 < 2; ++a2) row[entry(x1, x2, a1, a2)] = 1;
            }
            eq.push_back(std::move(row));
            rhs.push_back(1);
        }
    }
    for (int x1 = 0; x1 < 2; ++x1) {
        for (int a1 = 0; a1 < 2; ++a1) {
            RationalVector row(dim, 0);
            for (int a2 = 0; a2 < 2; ++a2) {
                row[entry(x1, 0, a1, a2)] += 1;
                row[entry(x1, 1, a1, a2)] -= 1;
            }
            eq.push_back(std::move(row));
            rhs.push_back(0);
        }
    }
    for (int x2 = 0; x2 < 2; ++x2) {
        for (int a2 = 0; a2 < 2; ++a2) {
            RationalVector row(dim, 0);
            for (int a1 = 0; a1 < 2; ++a1) {
                row[entry(0, x2, a1, a2)] += 1;
                row[entry(1, x2, a1, a2)] -= 1;
            }
            eq.push_back(std::move(row));
            rhs.push_back(0);
        }
    }

    auto hull = solve_affine(eq, rhs);
    if (!hull) {
        throw std::logic_error("no-signaling equalities are inconsistent");
    }
    const int free_dim = static_cast<int>(hull->basis.size());  // 8 here

    // Facet c in reduced coordinates: origin[c] + row_c . t >= 0.
    std::vector<RationalVector> facet(dim);
    for (int c = 0; c < dim; ++c) {
        facet[c].resize(free_dim);
        for (int k = 0; k < free_dim; ++k) facet[c][k] = hull->basis[k][c];
    }

    std::set<std::vector<Rational>> tables;
    std::vector<int> pick(free_dim);
    for (int i = 0; i < free_dim; ++i) pick[i] = i;
    for (;;) {
        RationalMatrix a(free_dim);
        RationalVector b(free_dim);
        for (int i = 0; i < free_dim; ++i) {
            a[i] = facet[pick[i]];
            b[i] = -hull->origin[pick[i]];
        }
        if (auto t = solve_unique(a, b)) {
            std::vector<Rational> point = hull->point(*t);
            bool inside = true;
            for (const Rational& p : point) {
                if (p < 0) { inside = false; break; }
            }
            if (inside) tables.insert(std::move(point));
        }
        // next lexicographic combination of free_dim facets out of dim
        int i = free_dim - 1;
        while (i >= 0 && pick[i] == dim - free_dim + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < free_dim; ++j) pick[j] = pick[i] + j - i;
    }

    std::vector<NsBox> vertices;
    vertices.reserve(tables.size());
    for (const auto& table : tables) {
        NsBox box{2, {2, 2}, {2, 2}, table};
        require_valid_box(box);
        vertices.push_back(std::move(box));
    }
    return vertices;
}

bool has_deterministic_locals(const NsBox& box) {
    for (const Rational& p : box.table) {
        if (p != 0 && p != 1) return false;
    }
    return true;
}

Rational party_marginal(const NsBox& box, int party, int setting, int outcome) {
    const int jo = box.joint_outcomes();
    std::vector<int> x(box.parties, 0);
    x[party] = setting;
    Rational sum = 0;
    int base = box.setting_index(x) * jo;
    for (int a_index = 0; a_index < jo; ++a_index) {
        std::vector<int> a = mixed_radix_digits(a_index, box.outcomes_per_party);
        if (a[party] == outcome) sum += box.table[base + a_index];
    }
    return sum;
}

bool has_uniform_marginals(const NsBox& box) {
    Rational half(1, 2);
    for (int p = 0; p < box.parties; ++p) {
        for (int x = 0; x < box.settings_per_party[p]; ++x) {
            for (int a = 0; a < box.outcomes_per_party[p]; ++a) {
                if (party_marginal(box, p, x, a) != half) return false;
            }
        }
    }
    return true;
}

std::optional<BoxCorrelationLabel> extract_label(const NsBox& box) {
    if (box.parties != 2 || box.joint_outcomes() != 4 || box.joint_settings() != 4) {
        return std::nullopt;
    }
    int pi[4];
    for (int x = 0; x < 4; ++x) {
        int parity = -1;
        for (int a = 0; a < 4; ++a) {
            if (box.table[x * 4 + a] == 0) continue;
            int this_parity = __builtin_popcount(static_cast<unsigned>(a)) & 1;
            if (parity < 0) parity = this_parity;
            else if (parity != this_parity) return std::nullopt;
        }
        pi[x] = parity;
    }
    BoxCorrelationLabel label;
    label.delta = pi[0];                     // x = (0,0)
    label.beta = pi[2] ^ label.delta;        // x = (1,0)
    label.gamma = pi[1] ^ label.delta;       // x = (0,1)
    label.alpha = pi[3] ^ label.beta ^ label.gamma ^ label.delta;
    return label;
}

bool steering_check(const NsBox& box, const GptSystem& sys) {
    require_valid_box(box);
    if (box.parties != 2) {
        throw invalid_input("steering check supports bipartite boxes only");
    }
    for (int party = 0; party < 2; ++party) {
        int other = 1 - party;
        if (sys.shape.settings() != box.settings_per_party[other]) {
            throw invalid_input("box party shape does not match system shape");
        }
        for (int x = 0; x < box.settings_per_party[other]; ++x) {
            if (sys.shape.arity(x) != box.outcomes_per_party[other]) {
                throw invalid_input("box party shape does not match system shape");
            }
        }
    }
    for (int party = 0; party < 2; ++party) {
        const int other = 1 - party;
        for (int x = 0; x < box.settings_per_party[party]; ++x) {
            for (int a = 0; a < box.outcomes_per_party[party]; ++a) {
                Rational marginal = party_marginal(box, party, x, a);
                if (marginal == 0) continue;
                SystemShape shape(std::vector<int>(box.settings_per_party[other],
                                                   box.outcomes_per_party[other]));
                State conditional{shape, std::vector<Rational>(shape.table_length(), 0)};
                for (int xo = 0; xo < box.settings_per_party[other]; ++xo) {
                    for (int ao = 0; ao < box.outcomes_per_party[other]; ++ao) {
                        std::vector<int> xs(2), as(2);
                        xs[party] = x;
                        xs[other] = xo;
                        as[party] = a;
                        as[other] = ao;
                        conditional.table[shape.index(xo, ao)] = box.prob(xs, as) / marginal;
                    }
                }
                require_valid_state(conditional);
                if (!is_redundant_vertex(conditional, sys.vertices)) return false;
            }
        }
    }
    return true;
}

State parity_project(const NsBox& box) {
    for (int o : box.outcomes_per_party) {
        if (o != 2) throw invalid_input("parity projection needs binary outcomes");
    }
    const int js = box.joint_settings();
    const int jo = box.joint_outcomes();
    SystemShape shape(std::vector<int>(js, 2));
    State out{shape, std::vector<Rational>(shape.table_length(), 0)};
    for (int x = 0; x < js; ++x) {
        for (int a = 0; a < jo; ++a) {
            int parity = __builtin_popcount(static_cast<unsigned>(a)) & 1;
            out.table[shape.index(x, parity)] += box.table[x * jo + a];
        }
    }
    require_valid_state(out);
    return out;
}

GptSystem project_boxes(const std::vector<NsBox>& boxes, const std::string& name) {
    if (boxes.empty()) {
        throw invalid_input("no boxes to project");
    }
    std::set<std::vector<Rational>> tables;
    for (const NsBox& box : boxes) {
        tables.insert(parity_project(box).table);
    }
    State sample = parity_project(boxes.front());
    GptSystem sys{sample.shape, {}, name};
    for (const auto& table : tables) {
        sys.vertices.push_back(State{sample.shape, table});
    }
    require_valid_system(sys);
    return sys;
}

GptSystem amplify(int k, std::int64_t vertex_cap) {
    if (k < 1) {
        throw invalid_input("amplification needs at least one g-bit");
    }
    if (k > 5 || (std::int64_t{1} << (std::int64_t{1} << k)) > vertex_cap) {
        throw cap_exceeded("amplify(" + std::to_string(k) + ") exceeds the vertex cap of " +
                           std::to_string(vertex_cap) + " tables");
    }
    const int settings = 1 << k;  // joint inputs of the k g-bits
    const std::int64_t count = std::int64_t{1} << settings;
    SystemShape shape(std::vector<int>(settings, 2));
    GptSystem sys{shape, {}, "amplified-" + std::to_string(k) + "-gbits"};
    sys.vertices.reserve(count);
    std::vector<int> outcomes(settings);
    for (std::int64_t f = 0; f < count; ++f) {
        // Vertex per boolean function: the projected output at joint input X
        // is f(X). Bit order matches make_hypercube's label order.
        for (int x = 0; x < settings; ++x) {
            outcomes[x] = static_cast<int>((f >> (settings - 1 - x)) & 1);
        }
        sys.vertices.push_back(deterministic_state(shape, outcomes));
    }
    return sys;
}

namespace {

// Multiset fingerprint of all vertices restricted to the first `depth`
// settings of A, relabeled through the partial map, against the image
// settings of B.
bool partial_match(const GptSystem& a, const GptSystem& b, const std::vector<int>& perm,
                   const std::vector<std::vector<int>>& relabel, int depth) {
    std::vector<std::vector<Rational>> keys_a, keys_b;
    keys_a.reserve(a.vertices.size());
    keys_b.reserve(b.vertices.size());
    for (const State& v : a.vertices) {
        std::vector<Rational> key;
        for (int s = 0; s < depth; ++s) {
            // entry for A-outcome o lands at B-outcome relabel[s][o]
            size_t base = key.size();
            key.resize(base + a.shape.arity(s));
            for (int o = 0; o < a.shape.arity(s); ++o) {
                key[base + relabel[s][o]] = v.prob(s, o);
            }
        }
        keys_a.push_back(std::move(key));
    }
    for (const State& w : b.vertices) {
        std::vector<Rational> key;
        for (int s = 0; s < depth; ++s) {
            for (int o = 0; o < b.shape.arity(perm[s]); ++o) {
                key.push_back(w.prob(perm[s], o));
            }
        }
        keys_b.push_back(std::move(key));
    }
    std::sort(keys_a.begin(), keys_a.end());
    std::sort(keys_b.begin(), keys_b.end());
    return keys_a == keys_b;
}

bool iso_search(const GptSystem& a, const GptSystem& b, std::vector<int>& perm,
                std::vector<std::vector<int>>& relabel, std::vector<bool>& used, int depth) {
    const int settings = a.shape.settings();
    if (depth == settings) return true;  // full-depth multiset match == set equality
    for (int target = 0; target < settings; ++target) {
        if (used[target] || b.shape.arity(target) != a.shape.arity(depth)) continue;
        std::vector<int> sigma(a.shape.arity(depth));
        for (size_t o = 0; o < sigma.size(); ++o) sigma[o] = static_cast<int>(o);
        std::sort(sigma.begin(), sigma.end());
        do {
            perm[depth] = target;
            relabel[depth] = sigma;
            if (partial_match(a, b, perm, relabel, depth + 1)) {
                used[target] = true;
                if (iso_search(a, b, perm, relabel, used, depth + 1)) return true;
                used[target] = false;
            }
        } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
    return false;
}

}  // namespace

bool isomorphic(const GptSystem& a, const GptSystem& b) {
    if (a.vertices.size() != b.vertices.size()) return false;
    if (a.shape.settings() != b.shape.settings()) return false;
    std::vector<int> arities_a = a.shape.arities();
    std::vector<int> arities_b = b.shape.arities();
    std::sort(arities_a.begin(), arities_a.end());
    std::sort(arities_b.begin(), arities_b.end());
    if (arities_a != arities_b) return false;

    std::vector<int> perm(a.shape.settings());
    std::vector<std::vector<int>> relabel(a.shape.settings());
    std::vector<bool> used(a.shape.settings(), false);
    return iso_search(a, b, perm, relabel, used, 0);
}

}  // namespace boxdim
