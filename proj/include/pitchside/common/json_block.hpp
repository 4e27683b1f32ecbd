#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>

#include "json.hpp"

namespace pitchside {

struct JsonBlock {
  std::size_t pos = 0;  // byte offset of the opening bracket
  nlohmann::json value;
};

/// First balanced {...} or [...] group in free text that parses as JSON and
/// satisfies `accept`. Model replies often wrap such a block in prose or code
/// fences.
std::optional<JsonBlock> find_json_block(std::string_view text,
                                         const std::function<bool(const nlohmann::json&)>& accept);

}  // namespace pitchside
