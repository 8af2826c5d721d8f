#pragma once

#include <string>

#include <json.hpp>

#include "lrc/construct.hpp"

namespace lrc::io {

using nlohmann::json;

inline constexpr const char* kToolVersion = "0.1.0";

json to_json(const gf::Field& f);
gf::Field field_from_json(const json& j);

json to_json(const linalg::Matrix& m);
linalg::Matrix matrix_from_json(const json& j);

json to_json(const covers::Structure& s);
covers::Structure structure_from_json(const json& j);

json to_json(const construct::LrcCode& code);
construct::LrcCode code_from_json(const json& j);

/// Writes pretty JSON with a "created" timestamp; FormatError on I/O failure.
void write_code(const construct::LrcCode& code, const std::string& path);
construct::LrcCode read_code(const std::string& path);

}  // namespace lrc::io
