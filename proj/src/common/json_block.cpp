#include "pitchside/common/json_block.hpp"

namespace pitchside {

namespace {

// End (exclusive) of the bracket group opening at `open`; string contents and
// escapes are skipped.
std::optional<std::size_t> group_end(std::string_view s, std::size_t open) {
  int depth = 0;
  bool in_str = false;
  for (std::size_t i = open; i < s.size(); ++i) {
    const char c = s[i];
    if (in_str) {
      if (c == '\\') ++i;
      else if (c == '"') in_str = false;
      continue;
    }
    if (c == '"') in_str = true;
    else if (c == '{' || c == '[') ++depth;
    else if ((c == '}' || c == ']') && --depth == 0) return i + 1;
  }
  return std::nullopt;
}

}  // namespace

std::optional<JsonBlock> find_json_block(std::string_view text,
                                         const std::function<bool(const nlohmann::json&)>& accept) {
  for (std::size_t i = text.find_first_of("{["); i != std::string_view::npos;
       i = text.find_first_of("{[", i + 1)) {
    const auto end = group_end(text, i);
    if (!end) continue;
    auto j = nlohmann::json::parse(text.substr(i, *end - i), nullptr, false);
    if (j.is_discarded() || !accept(j)) continue;
    return JsonBlock{i, std::move(j)};
  }
  return std::nullopt;
}

}  // namespace pitchside
