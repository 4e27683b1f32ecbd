#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace pitchside {

/// NFC normalization followed by Unicode case folding. Used wherever entity
/// names are compared for equality.
std::string fold_name(std::string_view utf8);

std::string ascii_lower(std::string_view s);
std::string_view trim(std::string_view s);

/// Splits on runs of characters for which `is_sep` holds; drops empty pieces.
template <typename Pred>
std::vector<std::string> split_if(std::string_view s, Pred is_sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (is_sep(c)) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

/// Counts non-overlapping occurrences of `needle` in `haystack`.
std::size_t count_occurrences(std::string_view haystack, std::string_view needle);

/// Replaces every occurrence of `from` with `to`.
std::string replace_all(std::string_view text, std::string_view from, std::string_view to);

}  // namespace pitchside
