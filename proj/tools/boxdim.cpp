// boxdim: dimensions of finite GPT systems over exact rational arithmetic,
// boxworld composition, communication protocols, and erasure accounting.

#include "boxdim/composition.hpp"
#include "boxdim/dimensions.hpp"
#include "boxdim/io.hpp"
#include "boxdim/lp.hpp"
#include "boxdim/protocols.hpp"
#include "boxdim/thermo.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <random>

namespace {

using boxdim::Json;

struct GlobalFlags {
    int jobs = 1;
    bool text = false;
};

void emit(const Json& report, const GlobalFlags& flags,
          const std::vector<std::string>& text_lines) {
    if (flags.text) {
        for (const auto& line : text_lines) std::cout << line << "\n";
    } else {
        std::cout << boxdim::render_json(report);
    }
}

// System specs: gbit | hypercube:D | classical:d | amplify:k | FILE
boxdim::GptSystem system_from_spec(const std::string& spec, Json& inputs) {
    auto param = [&](const std::string& prefix) -> std::optional<int> {
        if (spec.rfind(prefix + ":", 0) != 0) return std::nullopt;
        return std::stoi(spec.substr(prefix.size() + 1));
    };
    if (spec == "gbit") {
        inputs["builder"] = spec;
        return boxdim::make_gbit();
    }
    if (auto d = param("hypercube")) {
        inputs["builder"] = spec;
        return boxdim::make_hypercube(*d);
    }
    if (auto d = param("classical")) {
        inputs["builder"] = spec;
        return boxdim::make_classical(*d);
    }
    if (auto k = param("amplify")) {
        inputs["builder"] = spec;
        return boxdim::amplify(*k);
    }
    inputs["file"] = spec;
    inputs["digest"] = boxdim::fnv1a64_hex(boxdim::read_text_file(spec));
    return boxdim::load_system_file(spec);
}

Json system_summary(const boxdim::GptSystem& sys) {
    Json j;
    j["name"] = sys.name;
    j["settings"] = sys.shape.arities();
    j["vertex_count"] = sys.vertices.size();
    return j;
}

int run_dims(const std::string& spec, std::optional<bool> certify, const GlobalFlags& flags) {
    Json report;
    report["command"] = "dims";
    Json inputs;
    boxdim::GptSystem sys = system_from_spec(spec, inputs);
    report["inputs"] = inputs;
    if (certify) report["arguments"] = Json{{"certify", *certify}};

    boxdim::DimensionOptions options;
    options.certify = certify;
    options.jobs = flags.jobs;
    boxdim::DimensionReport dims = boxdim::compute_dimensions(sys, options);

    Json result;
    result["system"] = system_summary(sys);
    result["d_m"] = dims.d_m;
    result["d_m_exact"] = dims.d_m_exact;
    result["d_m_states"] = dims.d_m_states;
    result["d_m_measurement"] = boxdim::measurement_to_json(dims.d_m_measurement);
    result["d_i"] = dims.d_i;
    result["d_i_clique"] = dims.d_i_clique;
    result["ordering_ok"] = dims.d_m <= dims.d_i;
    report["result"] = result;

    emit(report, flags,
         {"system: " + sys.name,
          "d_m = " + std::to_string(dims.d_m) + (dims.d_m_exact ? " (exact)" : " (lower bound)"),
          "d_i = " + std::to_string(dims.d_i)});
    return 0;
}

int run_compose(int gbits, const std::string& output, const GlobalFlags& flags) {
    if (gbits != 2) {
        throw boxdim::cap_exceeded("only the two-g-bit maximal tensor product is enumerated");
    }
    std::vector<boxdim::NsBox> boxes = boxdim::maximal_tensor_gbits();
    boxdim::GptSystem gbit = boxdim::make_gbit();

    int deterministic = 0;
    int uniform = 0;
    Json labels = Json::array();
    bool all_ns = true;
    bool all_steer = true;
    for (const boxdim::NsBox& box : boxes) {
        if (boxdim::has_deterministic_locals(box)) ++deterministic;
        if (boxdim::has_uniform_marginals(box)) {
            ++uniform;
            if (auto label = boxdim::extract_label(box)) {
                labels.push_back({{"alpha", label->alpha},
                                  {"beta", label->beta},
                                  {"gamma", label->gamma},
                                  {"delta", label->delta}});
            }
        }
        all_ns = all_ns && boxdim::is_no_signaling(box);
        all_steer = all_steer && boxdim::steering_check(box, gbit);
    }
    // Extremality: no box is a mixture of the others.
    bool all_extremal = true;
    for (size_t i = 0; i < boxes.size(); ++i) {
        std::vector<boxdim::State> others;
        for (size_t j = 0; j < boxes.size(); ++j) {
            if (j != i) others.push_back(boxes[j].to_state());
        }
        if (boxdim::is_redundant_vertex(boxes[i].to_state(), others)) {
            all_extremal = false;
        }
    }

    Json box_file = boxdim::boxes_to_json(boxes, "maximal-tensor-2-gbits");
    if (!output.empty()) {
        boxdim::write_text_file(output, boxdim::render_json(box_file));
    }

    Json report;
    report["command"] = "compose";
    report["arguments"] = Json{{"gbits", gbits}};
    Json result;
    result["vertex_count"] = boxes.size();
    result["deterministic_local_count"] = deterministic;
    result["uniform_marginal_count"] = uniform;
    result["pr_labels"] = labels;
    result["all_no_signaling"] = all_ns;
    result["all_steerable"] = all_steer;
    result["all_extremal"] = all_extremal;
    result["boxes"] = box_file;
    report["result"] = result;

    emit(report, flags,
         {"vertices: " + std::to_string(boxes.size()),
          "deterministic locals: " + std::to_string(deterministic),
          "uniform marginals: " + std::to_string(uniform)});
    return 0;
}

int run_project(const std::string& input, const std::string& output, const GlobalFlags& flags) {
    Json report;
    report["command"] = "project";
    Json inputs;
    std::vector<boxdim::NsBox> boxes;
    if (input.empty()) {
        inputs["builder"] = "compose:2";
        boxes = boxdim::maximal_tensor_gbits();
    } else {
        inputs["file"] = input;
        inputs["digest"] = boxdim::fnv1a64_hex(boxdim::read_text_file(input));
        boxes = boxdim::load_box_file(input);
    }
    report["inputs"] = inputs;

    boxdim::GptSystem projected = boxdim::project_boxes(boxes, "parity-projected");
    bool all_deterministic = boxdim::all_vertices_deterministic(projected);

    Json system_json = boxdim::system_to_json(projected);
    if (!output.empty()) {
        boxdim::write_text_file(output, boxdim::render_json(system_json));
    }

    Json result;
    result["input_boxes"] = boxes.size();
    result["distinct_projected_states"] = projected.vertices.size();
    result["all_deterministic"] = all_deterministic;
    result["system"] = system_json;
    report["result"] = result;

    emit(report, flags,
         {"boxes in: " + std::to_string(boxes.size()),
          "distinct projected states: " + std::to_string(projected.vertices.size())});
    return 0;
}

int run_iso(const std::string& spec_a, const std::string& spec_b, const GlobalFlags& flags) {
    Json report;
    report["command"] = "iso";
    Json inputs_a, inputs_b;
    boxdim::GptSystem a = system_from_spec(spec_a, inputs_a);
    boxdim::GptSystem b = system_from_spec(spec_b, inputs_b);
    report["inputs"] = Json{{"a", inputs_a}, {"b", inputs_b}};

    bool iso = boxdim::isomorphic(a, b);
    Json result;
    result["a"] = system_summary(a);
    result["b"] = system_summary(b);
    result["isomorphic"] = iso;
    report["result"] = result;

    emit(report, flags, {std::string("isomorphic: ") + (iso ? "true" : "false")});
    return 0;
}

int run_protocol_index(const std::string& bits, int k, int samples, std::uint64_t seed,
                       const GlobalFlags& flags) {
    boxdim::BitString b = boxdim::parse_bits(bits);
    boxdim::IndexResult run = boxdim::index_protocol(b, k);

    Json report;
    report["command"] = "protocol index";
    report["arguments"] = Json{{"bits", bits}, {"k", k}};
    Json result;
    result["output"] = run.output;
    result["expected"] = b[k - 1];
    result["replay_consistent"] = boxdim::replay(run.transcript) == run.output;
    Json steps = Json::array();
    for (const auto& step : run.transcript.steps) {
        steps.push_back({{"action", step.action}, {"detail", step.detail}});
    }
    result["transcript"] = steps;

    if (samples > 0) {
        // Demonstration only: protocol statistics are computed by exhaustive
        // enumeration everywhere else.
        std::mt19937_64 rng(seed);
        long correct = 0;
        for (int s = 0; s < samples; ++s) {
            boxdim::BitString random_b(b.size());
            for (auto& bit : random_b) bit = static_cast<int>(rng() & 1);
            int random_k = static_cast<int>(rng() % random_b.size()) + 1;
            if (boxdim::index_protocol(random_b, random_k).output ==
                random_b[random_k - 1]) {
                ++correct;
            }
        }
        result["sampling"] = Json{{"samples", samples},
                                  {"seed", seed},
                                  {"correct", correct}};
    }
    report["result"] = result;
    emit(report, flags, {"output: " + std::to_string(run.output)});
    return 0;
}

int run_protocol_ic(int n, const GlobalFlags& flags) {
    boxdim::IcReport ic = boxdim::ic_quantity(n);
    Json report;
    report["command"] = "protocol ic";
    report["arguments"] = Json{{"n", n}};
    Json result;
    result["per_index_bits"] = ic.per_index_bits;
    result["total_bits"] = ic.total_bits;
    result["capacity_bits"] = ic.capacity_bits;
    result["violated"] = ic.violated;
    report["result"] = result;
    emit(report, flags,
         {"total = " + std::to_string(ic.total_bits) +
              " bits, capacity = " + std::to_string(ic.capacity_bits),
          ic.violated ? "bound violated" : "bound respected"});
    return 0;
}

int run_protocol_cc(const std::string& path, const GlobalFlags& flags) {
    boxdim::TruthTable table = boxdim::load_truth_table(path);
    boxdim::CcReport cc = boxdim::cc_protocol(table);
    Json report;
    report["command"] = "protocol cc";
    report["inputs"] = Json{{"file", path},
                            {"digest", boxdim::fnv1a64_hex(boxdim::read_text_file(path))}};
    Json result;
    result["alice_bits"] = cc.alice_bits;
    result["bob_bits"] = cc.bob_bits;
    result["dimension"] = cc.dimension;
    result["pairs_total"] = cc.pairs_total;
    result["pairs_correct"] = cc.pairs_correct;
    result["correct_fraction"] = boxdim::format_rational(cc.correct_fraction);
    result["message_bits"] = cc.message_bits;
    report["result"] = result;
    emit(report, flags,
         {std::to_string(cc.pairs_correct) + "/" + std::to_string(cc.pairs_total) +
          " correct at C = " + std::to_string(cc.message_bits) + " bit"});
    return 0;
}

int run_protocol_prbox(const std::string& zeta_text, int k, const GlobalFlags& flags) {
    boxdim::BitString zeta = boxdim::parse_bits(zeta_text);
    boxdim::PrBoxSimReport sim = boxdim::simulate_hypercube_with_prboxes(zeta, k);
    int direct = boxdim::index_protocol(zeta, k).output;

    Json report;
    report["command"] = "protocol prbox-sim";
    report["arguments"] = Json{{"zeta", zeta_text}, {"k", k}};
    Json result;
    result["dimension"] = sim.dimension;
    result["output_distribution"] =
        Json{{"0", boxdim::format_rational(sim.output_distribution[0])},
             {"1", boxdim::format_rational(sim.output_distribution[1])}};
    result["classical_bits_sent"] = sim.classical_bits_sent;
    result["direct_measurement"] = direct;
    result["matches_direct_measurement"] =
        sim.output_distribution[direct] == 1 && sim.output_distribution[1 - direct] == 0;
    report["result"] = result;
    emit(report, flags,
         {"P(0) = " + boxdim::format_rational(sim.output_distribution[0]) +
          ", P(1) = " + boxdim::format_rational(sim.output_distribution[1])});
    return 0;
}

int run_demon(int dimension, std::string decisions_text, std::optional<double> temperature,
              const GlobalFlags& flags) {
    if (decisions_text.empty()) {
        decisions_text.reserve(dimension);
        for (int i = 0; i < dimension; ++i) decisions_text.push_back(i % 2 == 0 ? '1' : '0');
    }
    boxdim::BitString decisions = boxdim::parse_bits(decisions_text);
    if (static_cast<int>(decisions.size()) != dimension) {
        throw boxdim::invalid_input("decision string length must equal D");
    }
    boxdim::DemonReport demon = boxdim::demon_protocol(decisions, temperature);

    Json report;
    report["command"] = "demon";
    report["arguments"] = Json{{"D", dimension}, {"decisions", decisions_text}};
    Json result;
    result["stored_bits"] = demon.stored_bits;
    result["total_cost_bits"] = boxdim::format_rational(demon.total_cost_bits);
    result["landauer_bound_bits"] = boxdim::format_rational(demon.landauer_bound_bits);
    result["deficit_bits"] = boxdim::format_rational(demon.deficit_bits);
    Json ledger = Json::array();
    for (const auto& entry : demon.ledger) {
        ledger.push_back({{"step", entry.step},
                          {"operation", boxdim::thermo_op_name(entry.operation)},
                          {"cost_bits", boxdim::format_rational(entry.cost_bits)}});
    }
    result["ledger"] = ledger;
    if (demon.temperature) {
        result["temperature_kelvin"] = *demon.temperature;
        result["energy_joules"] = *demon.energy_joules;
    }
    report["result"] = result;
    emit(report, flags,
         {"stored " + std::to_string(demon.stored_bits) + " bits at cost " +
              boxdim::format_rational(demon.total_cost_bits) + " bit-units",
          "Landauer reference " + boxdim::format_rational(demon.landauer_bound_bits) +
              ", deficit " + boxdim::format_rational(demon.deficit_bits)});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Model-independent dimensions of finite GPT systems"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalFlags flags;
    app.add_option("--jobs", flags.jobs, "worker threads for LP batches")
        ->check(CLI::Range(1, 64));
    app.add_flag("--text", flags.text, "human-readable output instead of JSON");

    // dims
    auto* dims = app.add_subcommand("dims", "measurement and information dimension");
    bool dims_gbit = false;
    int dims_hypercube = 0, dims_classical = 0, dims_amplify = 0;
    std::string dims_file;
    bool certify = false, no_certify = false;
    dims->add_flag("--gbit", dims_gbit, "analyze the g-bit");
    dims->add_option("--hypercube", dims_hypercube, "hypercube bit of dimension D");
    dims->add_option("--classical", dims_classical, "classical system with d outcomes");
    dims->add_option("--amplify", dims_amplify, "projected composite of k g-bits");
    dims->add_option("--file", dims_file, "system file (JSON)");
    dims->add_flag("--certify", certify, "exhaust clique sizes for an exact d_m");
    dims->add_flag("--no-certify", no_certify, "report d_m as a lower bound only");

    // compose / project / iso
    auto* compose = app.add_subcommand("compose", "maximal tensor product vertices");
    int compose_gbits = 2;
    std::string compose_output;
    compose->add_option("--gbits", compose_gbits, "number of g-bits (2 supported)");
    compose->add_option("-o,--output", compose_output, "write the box file here");

    auto* project = app.add_subcommand("project", "parity projection of a box file");
    std::string project_input, project_output;
    project->add_option("--input", project_input, "box file (default: compose --gbits 2)");
    project->add_option("-o,--output", project_output, "write the projected system here");

    auto* iso = app.add_subcommand("iso", "state-space isomorphism check");
    std::string iso_a, iso_b;
    iso->add_option("a", iso_a, "gbit | hypercube:D | classical:d | amplify:k | FILE")
        ->required();
    iso->add_option("b", iso_b, "second system spec")->required();

    // protocol
    auto* protocol = app.add_subcommand("protocol", "communication tasks");
    protocol->require_subcommand(1);

    auto* index = protocol->add_subcommand("index", "index function through one hypercube bit");
    std::string index_bits;
    int index_k = 1, index_samples = 0;
    std::uint64_t index_seed = 1;
    index->add_option("--bits", index_bits, "Alice's bit string")->required();
    index->add_option("--k", index_k, "Bob's index (1-based)")->required();
    index->add_option("--sample", index_samples, "extra seeded sampling demonstration");
    index->add_option("--seed", index_seed, "sampling seed");

    auto* ic = protocol->add_subcommand("ic", "information-causality quantity");
    int ic_n = 1;
    ic->add_option("--n", ic_n, "string length")->required();

    auto* cc = protocol->add_subcommand("cc", "communication complexity for a truth table");
    std::string cc_table;
    cc->add_option("--table", cc_table, "truth table file")->required();

    auto* prbox = protocol->add_subcommand("prbox-sim",
                                           "hypercube bit simulated by PR boxes + 1 bit");
    std::string prbox_zeta;
    int prbox_k = 1;
    prbox->add_option("--zeta", prbox_zeta, "prepared state label")->required();
    prbox->add_option("--k", prbox_k, "Bob's index (1-based)")->required();

    // demon
    auto* demon = app.add_subcommand("demon", "hypercube-bit memory and erasure ledger");
    for (auto* sub : {dims, compose, project, iso, protocol, index, ic, cc, prbox, demon}) {
        sub->fallthrough();
    }
    int demon_d = 0;
    std::string demon_decisions;
    double demon_temperature = 0;
    demon->add_option("--D", demon_d, "memory dimension")->required();
    demon->add_option("--decisions", demon_decisions, "decision bits (default alternating)");
    auto* temp_opt = demon->add_option("--temperature", demon_temperature,
                                       "bath temperature in kelvin for energy conversion");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*dims) {
            int builders = (dims_gbit ? 1 : 0) + (dims_hypercube > 0 ? 1 : 0) +
                           (dims_classical > 0 ? 1 : 0) + (dims_amplify > 0 ? 1 : 0) +
                           (dims_file.empty() ? 0 : 1);
            if (builders != 1) {
                throw boxdim::invalid_input(
                    "dims needs exactly one of --gbit/--hypercube/--classical/--amplify/--file");
            }
            std::string spec = dims_gbit          ? "gbit"
                               : dims_hypercube   ? "hypercube:" + std::to_string(dims_hypercube)
                               : dims_classical   ? "classical:" + std::to_string(dims_classical)
                               : dims_amplify     ? "amplify:" + std::to_string(dims_amplify)
                                                  : dims_file;
            std::optional<bool> certify_opt;
            if (certify) certify_opt = true;
            if (no_certify) certify_opt = false;
            return run_dims(spec, certify_opt, flags);
        }
        if (*compose) return run_compose(compose_gbits, compose_output, flags);
        if (*project) return run_project(project_input, project_output, flags);
        if (*iso) return run_iso(iso_a, iso_b, flags);
        if (*index) return run_protocol_index(index_bits, index_k, index_samples, index_seed,
                                              flags);
        if (*ic) return run_protocol_ic(ic_n, flags);
        if (*cc) return run_protocol_cc(cc_table, flags);
        if (*prbox) return run_protocol_prbox(prbox_zeta, prbox_k, flags);
        if (*demon) {
            std::optional<double> temperature;
            if (temp_opt->count() > 0) temperature = demon_temperature;
            return run_demon(demon_d, demon_decisions, temperature, flags);
        }
    } catch (const boxdim::cap_exceeded& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 3;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 0;
}
