// Acceptance suite: runs every shipped claim end to end and prints one
// pass/fail line per criterion. Takes the CLI binary path as argv[1].

#include "boxdim/composition.hpp"
#include "boxdim/dimensions.hpp"
#include "boxdim/io.hpp"
#include "boxdim/linalg.hpp"
#include "boxdim/lp.hpp"
#include "boxdim/protocols.hpp"
#include "boxdim/thermo.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace boxdim;

namespace {

std::string g_cli_path = "tools/boxdim";

struct Checker {
    bool ok = true;
    std::vector<std::string> notes;

    void require(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            notes.push_back(what);
        }
    }
};

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    CliResult result;
    std::string command = g_cli_path + " " + args;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return result;
    char buffer[4096];
    size_t got;
    while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
        result.output.append(buffer, got);
    }
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

Json cli_json(const std::string& args, Checker& check) {
    CliResult run = run_cli(args);
    check.require(run.exit_code == 0, "CLI '" + args + "' exited with " +
                                          std::to_string(run.exit_code));
    try {
        return Json::parse(run.output);
    } catch (const std::exception&) {
        check.require(false, "CLI '" + args + "' did not emit JSON");
        return Json::object();
    }
}

Effect effect_from_json(const Json& j, const SystemShape& shape) {
    Effect e{shape, {}, parse_rational(j["offset"].get<std::string>())};
    for (const auto& c : j["coefficients"]) {
        e.coefficients.push_back(parse_rational(c.get<std::string>()));
    }
    return e;
}

BitString bits_of(int code, int width) {
    BitString out(width);
    for (int i = 0; i < width; ++i) out[i] = (code >> (width - 1 - i)) & 1;
    return out;
}

GptSystem random_deterministic_system(std::mt19937_64& rng) {
    auto pick = [&](int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
    };
    int settings = pick(1, 3);
    std::vector<int> arities(settings);
    for (int& a : arities) a = pick(2, 3);
    SystemShape shape(arities);
    int max_vertices = 1;
    for (int a : arities) max_vertices *= a;
    int want = pick(2, std::min(7, max_vertices));
    GptSystem sys{shape, {}, "random"};
    std::set<std::vector<int>> labels;
    while (static_cast<int>(labels.size()) < want) {
        std::vector<int> label(settings);
        for (int x = 0; x < settings; ++x) label[x] = pick(0, arities[x] - 1);
        if (labels.insert(label).second) {
            sys.vertices.push_back(deterministic_state(shape, label));
        }
    }
    return sys;
}

// --- criteria ---------------------------------------------------------

void criterion_gbit_dimensions(Checker& check) {
    Json report = cli_json("dims --gbit", check);
    if (!check.ok) return;
    const Json& result = report["result"];
    check.require(result["d_m"] == 2, "d_m != 2");
    check.require(result["d_m_exact"] == true, "d_m not exact");
    check.require(result["d_i"] == 4, "d_i != 4");
    check.require(result["d_i_clique"].size() == 4, "clique is not the full vertex set");

    // Re-verify the reported witness measurement by direct evaluation.
    GptSystem gbit = make_gbit();
    std::vector<int> states = result["d_m_states"].get<std::vector<int>>();
    check.require(states.size() == 2, "witness state count != d_m");
    const Json& effects = result["d_m_measurement"];
    check.require(effects.size() == 2, "witness effect count != d_m");
    Measurement measurement;
    for (const auto& ej : effects) measurement.effects.push_back(effect_from_json(ej, gbit.shape));
    check.require(is_valid_measurement(measurement, gbit), "witness is not a valid measurement");
    for (size_t i = 0; i < states.size() && check.ok; ++i) {
        for (size_t j = 0; j < states.size(); ++j) {
            Rational expect = i == j ? 1 : 0;
            check.require(
                measurement.effects[i].evaluate(gbit.vertices[states[j]]) == expect,
                "witness effect values are not delta_ij");
        }
    }
    for (int i : result["d_i_clique"].get<std::vector<int>>()) {
        for (int j : result["d_i_clique"].get<std::vector<int>>()) {
            if (i < j) {
                check.require(pairwise_distinguishable(gbit, i, j).has_value(),
                              "clique pair lacks a witness");
            }
        }
    }
}

void criterion_hypercube_scaling(Checker& check) {
    for (int d = 2; d <= 6; ++d) {
        DimensionOptions options;
        options.certify = d <= 4;
        options.jobs = 2;
        DimensionReport report = compute_dimensions(make_hypercube(d), options);
        check.require(report.d_i == (1 << d),
                      "D=" + std::to_string(d) + ": d_i != 2^D");
        if (d <= 4) {
            check.require(report.d_m == 2 && report.d_m_exact,
                          "D=" + std::to_string(d) + ": certified d_m != 2");
        }
    }
}

void criterion_classical_coincidence(Checker& check) {
    for (int d = 2; d <= 6; ++d) {
        DimensionReport report = compute_dimensions(make_classical(d));
        check.require(report.d_m == d && report.d_i == d && report.d_m_exact,
                      "d=" + std::to_string(d) + ": dimensions do not coincide");
    }
}

void criterion_ordering(Checker& check) {
    std::vector<GptSystem> systems;
    systems.push_back(make_gbit());
    for (int d = 2; d <= 6; ++d) systems.push_back(make_hypercube(d));
    for (int d = 2; d <= 6; ++d) systems.push_back(make_classical(d));
    systems.push_back(amplify(2));
    systems.push_back(project_boxes(maximal_tensor_gbits(), "projected"));
    std::mt19937_64 rng(271828);
    for (int i = 0; i < 50; ++i) systems.push_back(random_deterministic_system(rng));

    for (const GptSystem& sys : systems) {
        DimensionOptions options;
        options.certify = sys.vertices.size() <= 16;
        options.jobs = 2;
        DimensionReport report = compute_dimensions(sys, options);
        check.require(report.d_m <= report.d_i, "ordering violated on " + sys.name);
    }
}

void criterion_composition(Checker& check) {
    Json report = cli_json("compose --gbits 2", check);
    if (!check.ok) return;
    const Json& result = report["result"];
    check.require(result["vertex_count"] == 24, "vertex count != 24");
    check.require(result["deterministic_local_count"] == 16, "deterministic locals != 16");
    check.require(result["uniform_marginal_count"] == 8, "uniform-marginal vertices != 8");
    check.require(result["pr_labels"].size() == 8, "PR labels != 8");
    for (const auto& label : result["pr_labels"]) {
        check.require(label["alpha"] == 1, "PR vertex without the x1x2 term");
    }
    check.require(result["all_no_signaling"] == true, "no-signaling failed");
    check.require(result["all_steerable"] == true, "steering failed");
    check.require(result["all_extremal"] == true, "extremality failed");

    // Independent spot check of the box list itself.
    std::vector<NsBox> boxes = boxes_from_json(result["boxes"]);
    check.require(boxes.size() == 24, "box file does not reload to 24 vertices");
    GptSystem gbit = make_gbit();
    for (const NsBox& box : boxes) {
        check.require(is_no_signaling(box), "reloaded box signals");
        check.require(steering_check(box, gbit), "reloaded box fails steering");
    }
}

void criterion_amplification(Checker& check) {
    GptSystem projected = project_boxes(maximal_tensor_gbits(), "projected");
    check.require(projected.vertices.size() == 16, "projection does not give 16 states");
    check.require(all_vertices_deterministic(projected), "projected states not deterministic");
    check.require(isomorphic(projected, make_hypercube(4)),
                  "projection is not isomorphic to the D=4 hypercube");
    check.require(isomorphic(amplify(2), make_hypercube(4)),
                  "amplify(2) is not isomorphic to the D=4 hypercube");

    std::set<std::vector<Rational>> direct, composed;
    for (const State& v : amplify(2).vertices) direct.insert(v.table);
    for (const State& v : projected.vertices) composed.insert(v.table);
    check.require(direct == composed, "amplify(2) differs from compose-then-project");

    GptSystem three = amplify(3);
    check.require(three.vertices.size() == 256, "amplify(3) vertex count != 256");
    check.require(three.shape.settings() == 8, "amplify(3) setting count != 8");
    DimensionOptions options;
    options.certify = false;
    options.jobs = 2;
    DimensionReport report = compute_dimensions(three, options);
    check.require(report.d_i == 256, "amplify(3) d_i != 256");
}

void criterion_index_ic(Checker& check) {
    for (int n = 1; n <= 8; ++n) {
        for (int code = 0; code < (1 << n); ++code) {
            BitString b = bits_of(code, n);
            for (int k = 1; k <= n; ++k) {
                if (index_protocol(b, k).output != b[k - 1]) {
                    check.require(false, "index protocol wrong at n=" + std::to_string(n));
                    return;
                }
            }
        }
        IcReport ic = ic_quantity(n);
        check.require(ic.total_bits == static_cast<double>(n),
                      "IC total != n at n=" + std::to_string(n));
        check.require(ic.capacity_bits == 1.0, "capacity != 1");
        check.require(ic.violated == (n >= 2), "violation flag wrong");
    }
}

void criterion_cc_collapse(Checker& check) {
    auto table_of = [](int na, int nb, const std::function<int(int, int)>& f) {
        TruthTable t;
        t.alice_bits = na;
        t.bob_bits = nb;
        for (int b = 0; b < (1 << na); ++b) {
            for (int c = 0; c < (1 << nb); ++c) t.values.push_back(f(b, c));
        }
        return t;
    };
    TruthTable ip3 = table_of(3, 3, [](int b, int c) {
        return __builtin_popcount(static_cast<unsigned>(b & c)) & 1;
    });
    CcReport ip = cc_protocol(ip3);
    check.require(ip.pairs_total == 64 && ip.pairs_correct == 64,
                  "inner product not 64/64");
    check.require(ip.message_bits == 1.0, "inner product C != 1");

    CcReport eq = cc_protocol(table_of(2, 2, [](int b, int c) { return b == c ? 1 : 0; }));
    check.require(eq.correct_fraction == 1, "equality not exact");

    std::mt19937_64 rng(1618);
    for (int trial = 0; trial < 20; ++trial) {
        int na = 1 + static_cast<int>(rng() % 4);
        int nb = 1 + static_cast<int>(rng() % 4);
        TruthTable t =
            table_of(na, nb, [&](int, int) { return static_cast<int>(rng() & 1); });
        CcReport report = cc_protocol(t);
        check.require(report.correct_fraction == 1 && report.message_bits == 1.0,
                      "random table not exact at trial " + std::to_string(trial));
    }

    // The same task through the CLI surface.
    std::string path = "/tmp/boxdim-acceptance-ip3.txt";
    std::ostringstream file;
    file << "3 3\n";
    for (int b = 0; b < 8; ++b) {
        for (int c = 0; c < 8; ++c) {
            file << (__builtin_popcount(static_cast<unsigned>(b & c)) & 1);
        }
        file << "\n";
    }
    write_text_file(path, file.str());
    Json report = cli_json("protocol cc --table " + path, check);
    if (check.ok) {
        check.require(report["result"]["pairs_correct"] == 64, "CLI cc not 64/64");
        check.require(report["result"]["correct_fraction"] == "1", "CLI cc fraction != 1");
    }
}

void criterion_translator_equivalence(Checker& check) {
    for (int d = 1; d <= 6; ++d) {
        for (int code = 0; code < (1 << d); ++code) {
            BitString zeta = bits_of(code, d);
            for (int k = 1; k <= d; ++k) {
                PrBoxSimReport sim = simulate_hypercube_with_prboxes(zeta, k);
                int direct = index_protocol(zeta, k).output;
                bool point_mass = sim.output_distribution[direct] == 1 &&
                                  sim.output_distribution[1 - direct] == 0;
                if (!point_mass || sim.classical_bits_sent != 1) {
                    check.require(false, "translator mismatch at D=" + std::to_string(d));
                    return;
                }
            }
        }
    }
}

void criterion_thermodynamics(Checker& check) {
    for (int d = 1; d <= 8; ++d) {
        for (int code = 0; code < (1 << d); ++code) {
            MemoryState memory = make_memory(d);
            memory.zeta = bits_of(code, d);
            if (run_erasure_cycle(memory) != 1) {
                check.require(false, "erasure cost != 1 at D=" + std::to_string(d));
                return;
            }
        }
    }
    DemonReport demon = demon_protocol(parse_bits("10110010"));
    check.require(demon.stored_bits == 8, "demon stored bits != 8");
    check.require(demon.total_cost_bits == 1, "demon cost != 1");
    check.require(demon.landauer_bound_bits == 8, "Landauer reference != 8");
    check.require(demon.deficit_bits == 7, "deficit != 7");

    for (int d = 1; d <= 6; ++d) {
        for (int code = 0; code < (1 << d); ++code) {
            for (int x = 0; x < d; ++x) {
                PostMeasurement first = post_measurement_state(bits_of(code, d), x);
                PostMeasurement second = post_measurement_state(first.zeta, x);
                if (second.outcome != first.outcome || second.zeta != first.zeta) {
                    check.require(false, "repeatability broken at D=" + std::to_string(d));
                    return;
                }
            }
        }
    }

    Json report = cli_json("demon --D 8", check);
    if (check.ok) {
        check.require(report["result"]["deficit_bits"] == "7", "CLI demon deficit != 7");
    }
}

void criterion_lp_oracle(Checker& check) {
    // Vertex-enumeration oracle over the gbit families (all regions bounded).
    auto oracle_feasible = [](const LpProblem& lp, Checker& chk) {
        const int n = lp.variable_count;
        const int m = static_cast<int>(lp.constraints.size());
        chk.require(n <= 4, "family LP has more than 4 variables");
        std::vector<int> pick(n);
        for (int i = 0; i < n; ++i) pick[i] = i;
        bool feasible = false;
        for (;;) {
            RationalMatrix a(n);
            RationalVector b(n);
            for (int i = 0; i < n; ++i) {
                a[i] = lp.constraints[pick[i]].coefficients;
                b[i] = lp.constraints[pick[i]].rhs;
            }
            if (auto point = solve_unique(a, b)) {
                if (satisfies_all(lp, *point)) feasible = true;
            }
            int i = n - 1;
            while (i >= 0 && pick[i] == m - n + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < n; ++j) pick[j] = pick[i] + j - i;
        }
        return feasible;
    };

    GptSystem gbit = make_gbit();
    GptSystem padded = gbit;
    padded.vertices.push_back(mix(gbit.vertices, std::vector<Rational>(4, Rational(1, 4))));

    std::vector<LpProblem> family;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (i != j) family.push_back(pairwise_lp(gbit, i, j));
        }
    }
    family.push_back(pairwise_lp(padded, 0, 4));  // infeasible member
    std::vector<State> others(gbit.vertices.begin() + 1, gbit.vertices.end());
    family.push_back(redundancy_lp(padded.vertices[4], gbit.vertices));
    family.push_back(redundancy_lp(gbit.vertices[0], others));

    for (size_t i = 0; i < family.size(); ++i) {
        LpOutcome out = solve(family[i]);
        bool oracle = oracle_feasible(family[i], check);
        check.require((out.status == LpStatus::Feasible) == oracle,
                      "simplex and oracle disagree on LP " + std::to_string(i));
        if (out.status == LpStatus::Feasible) {
            check.require(satisfies_all(family[i], *out.witness),
                          "witness fails substitution on LP " + std::to_string(i));
        }
    }
}

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<void(Checker&)> body;
};

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli_path = argv[1];

    std::vector<Criterion> criteria = {
        {1, "g-bit dimensions (d_m=2, d_i=4, verified witnesses)", 1.0,
         criterion_gbit_dimensions},
        {2, "hypercube scaling (d_i=2^D for D<=6; certified d_m=2 for D<=4)", 120.0,
         criterion_hypercube_scaling},
        {3, "classical coincidence (d_m=d_i=d for d<=6)", 10.0,
         criterion_classical_coincidence},
        {4, "ordering d_m<=d_i on all suite systems + 50 random", 600.0, criterion_ordering},
        {5, "composition: 24 vertices, 16+8 split, NS/steering/extremality", 60.0,
         criterion_composition},
        {6, "amplification: 16 projected states, isomorphisms, amplify(3)", 300.0,
         criterion_amplification},
        {7, "index protocol exhaustive n<=8; IC totals n vs capacity 1", 30.0,
         criterion_index_ic},
        {8, "communication complexity collapse at C=1", 60.0, criterion_cc_collapse},
        {9, "translator equivalence for D<=6", 60.0, criterion_translator_equivalence},
        {10, "thermodynamics: erasure cost 1, demon deficit D-1, repeatability", 10.0,
         criterion_thermodynamics},
        {11, "LP vs vertex-enumeration oracle on the g-bit family", 60.0, criterion_lp_oracle},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        Checker check;
        auto start = std::chrono::steady_clock::now();
        try {
            criterion.body(check);
        } catch (const std::exception& err) {
            check.require(false, std::string("exception: ") + err.what());
        }
        auto stop = std::chrono::steady_clock::now();
        double seconds = std::chrono::duration<double>(stop - start).count();
        check.require(seconds < criterion.limit_seconds,
                      "runtime " + std::to_string(seconds) + "s exceeds " +
                          std::to_string(criterion.limit_seconds) + "s");

        std::printf("[%s] %2d. %s (%.2fs)\n", check.ok ? "PASS" : "FAIL", criterion.id,
                    criterion.name.c_str(), seconds);
        if (!check.ok) {
            for (const std::string& note : check.notes) {
                std::printf("       - %s\n", note.c_str());
            }
            ++failures;
        }
    }
    if (failures == 0) {
        std::printf("all %zu acceptance criteria passed\n", criteria.size());
    } else {
        std::printf("%d acceptance criteria FAILED\n", failures);
    }
    return failures;
}
