#pragma once

#include "boxdim/composition.hpp"
#include "boxdim/dimensions.hpp"
#include "boxdim/system.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace boxdim {

using Json = nlohmann::ordered_json;

// System files: name, measurements ({"outcomes": n} per setting), vertices as
// flat tables of rational strings (setting-major, outcome-minor). Box files
// reuse the same layout over joint settings and add party metadata.
Json system_to_json(const GptSystem& sys);
GptSystem system_from_json(const Json& j, bool check_extremality = true);

Json boxes_to_json(const std::vector<NsBox>& boxes, const std::string& name);
std::vector<NsBox> boxes_from_json(const Json& j);

Json effect_to_json(const Effect& effect);
Json measurement_to_json(const Measurement& measurement);

GptSystem load_system_file(const std::string& path, bool check_extremality = true);
std::vector<NsBox> load_box_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

// Canonical report bytes: two-space indent plus trailing newline.
std::string render_json(const Json& j);

std::string fnv1a64_hex(std::string_view bytes);

}  // namespace boxdim
