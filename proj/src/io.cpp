#include "boxdim/io.hpp"

#include <fstream>
#include <sstream>

namespace boxdim {

namespace {

std::vector<std::string> table_strings(const std::vector<Rational>& table) {
    std::vector<std::string> out;
    out.reserve(table.size());
    for (const Rational& p : table) out.push_back(format_rational(p));
    return out;
}

std::vector<Rational> parse_table(const Json& j, size_t expected, const char* what) {
    if (!j.is_array() || j.size() != expected) {
        throw invalid_input(std::string(what) + ": expected an array of " +
                            std::to_string(expected) + " rationals");
    }
    std::vector<Rational> table;
    table.reserve(expected);
    for (const auto& cell : j) {
        if (!cell.is_string()) {
            throw invalid_input(std::string(what) + ": rationals are written as strings");
        }
        table.push_back(parse_rational(cell.get<std::string>()));
    }
    return table;
}

}  // namespace

Json system_to_json(const GptSystem& sys) {
    Json j;
    j["name"] = sys.name;
    j["measurements"] = Json::array();
    for (int x = 0; x < sys.shape.settings(); ++x) {
        j["measurements"].push_back({{"outcomes", sys.shape.arity(x)}});
    }
    j["vertices"] = Json::array();
    for (const State& v : sys.vertices) {
        j["vertices"].push_back(table_strings(v.table));
    }
    return j;
}

GptSystem system_from_json(const Json& j, bool check_extremality) {
    if (!j.is_object()) {
        throw invalid_input("system file: top level must be an object");
    }
    if (!j.contains("measurements") || !j["measurements"].is_array() ||
        j["measurements"].empty()) {
        throw invalid_input("system file: 'measurements' must be a nonempty array");
    }
    std::vector<int> arities;
    for (const auto& m : j["measurements"]) {
        if (!m.is_object() || !m.contains("outcomes") || !m["outcomes"].is_number_integer()) {
            throw invalid_input("system file: each measurement needs integer 'outcomes'");
        }
        arities.push_back(m["outcomes"].get<int>());
    }
    SystemShape shape(arities);

    GptSystem sys{shape, {}, j.value("name", std::string("unnamed"))};
    if (!j.contains("vertices") || !j["vertices"].is_array() || j["vertices"].empty()) {
        throw invalid_input("system file: 'vertices' must be a nonempty array");
    }
    int index = 0;
    for (const auto& row : j["vertices"]) {
        std::string what = "system file: vertex " + std::to_string(index++);
        sys.vertices.push_back(
            State{shape, parse_table(row, shape.table_length(), what.c_str())});
    }
    require_valid_system(sys);
    if (check_extremality) {
        require_extremal_vertices(sys);
    }
    return sys;
}

Json boxes_to_json(const std::vector<NsBox>& boxes, const std::string& name) {
    if (boxes.empty()) {
        throw invalid_input("no boxes to serialize");
    }
    const NsBox& first = boxes.front();
    Json j;
    j["name"] = name;
    j["parties"] = first.parties;
    j["settings_per_party"] = first.settings_per_party;
    j["outcomes_per_party"] = first.outcomes_per_party;
    j["measurements"] = Json::array();
    for (int x = 0; x < first.joint_settings(); ++x) {
        j["measurements"].push_back({{"outcomes", first.joint_outcomes()}});
    }
    j["vertices"] = Json::array();
    for (const NsBox& box : boxes) {
        if (box.settings_per_party != first.settings_per_party ||
            box.outcomes_per_party != first.outcomes_per_party) {
            throw invalid_input("box list mixes shapes");
        }
        j["vertices"].push_back(table_strings(box.table));
    }
    return j;
}

std::vector<NsBox> boxes_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("parties")) {
        throw invalid_input("box file: missing 'parties'");
    }
    NsBox prototype;
    prototype.parties = j["parties"].get<int>();
    if (!j.contains("settings_per_party") || !j.contains("outcomes_per_party")) {
        throw invalid_input("box file: missing per-party shape arrays");
    }
    prototype.settings_per_party = j["settings_per_party"].get<std::vector<int>>();
    prototype.outcomes_per_party = j["outcomes_per_party"].get<std::vector<int>>();
    if (!j.contains("vertices") || !j["vertices"].is_array() || j["vertices"].empty()) {
        throw invalid_input("box file: 'vertices' must be a nonempty array");
    }
    const size_t expected = static_cast<size_t>(prototype.joint_settings()) *
                            static_cast<size_t>(prototype.joint_outcomes());
    std::vector<NsBox> boxes;
    int index = 0;
    for (const auto& row : j["vertices"]) {
        std::string what = "box file: box " + std::to_string(index++);
        NsBox box = prototype;
        box.table = parse_table(row, expected, what.c_str());
        require_valid_box(box);
        boxes.push_back(std::move(box));
    }
    return boxes;
}

Json effect_to_json(const Effect& effect) {
    Json j;
    j["coefficients"] = table_strings(effect.coefficients);
    j["offset"] = format_rational(effect.offset);
    return j;
}

Json measurement_to_json(const Measurement& measurement) {
    Json j = Json::array();
    for (const Effect& e : measurement.effects) j.push_back(effect_to_json(e));
    return j;
}

GptSystem load_system_file(const std::string& path, bool check_extremality) {
    std::string text = read_text_file(path);
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw invalid_input("cannot parse '" + path + "': " + err.what());
    }
    return system_from_json(j, check_extremality);
}

std::vector<NsBox> load_box_file(const std::string& path) {
    std::string text = read_text_file(path);
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw invalid_input("cannot parse '" + path + "': " + err.what());
    }
    return boxes_from_json(j);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw invalid_input("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw invalid_input("cannot write '" + path + "'");
    }
    out << content;
}

std::string render_json(const Json& j) {
    return j.dump(2) + "\n";
}

std::string fnv1a64_hex(std::string_view bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ull;
    }
    char buffer[17];
    std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(hash));
    return std::string(buffer);
}

}  // namespace boxdim
