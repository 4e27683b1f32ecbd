#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

namespace pitchside {

/// Throws InvalidInput when the file cannot be read, ParseError on bad JSON.
std::string read_text_file(const std::filesystem::path& path);
nlohmann::json read_json_file(const std::filesystem::path& path);

void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace pitchside
