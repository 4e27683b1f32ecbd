#include "pitchside/common/assets.hpp"

#include <cctype>

#include "pitchside/common/error.hpp"

namespace pitchside {

std::string_view prompt_asset(std::string_view name) {
  for (std::size_t i = 0; i < detail::kPromptAssetCount; ++i)
    if (name == detail::kPromptAssets[i].name) return detail::kPromptAssets[i].text;
  fail(ErrorKind::InvalidInput, "no prompt asset named '" + std::string(name) + "'");
}

std::vector<std::string_view> prompt_asset_names() {
  std::vector<std::string_view> out;
  for (std::size_t i = 0; i < detail::kPromptAssetCount; ++i)
    out.emplace_back(detail::kPromptAssets[i].name);
  return out;
}

namespace {

bool placeholder_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ' ';
}

}  // namespace

std::string render_template(std::string_view tmpl,
                            const std::map<std::string, std::string>& values) {
  std::string out;
  out.reserve(tmpl.size() * 2);
  std::size_t i = 0;
  while (i < tmpl.size()) {
    if (tmpl[i] == '{') {
      std::size_t j = i + 1;
      while (j < tmpl.size() && placeholder_char(tmpl[j])) ++j;
      // a name must start with a letter; "{ }" and "{}" stay literal
      if (j < tmpl.size() && tmpl[j] == '}' && j > i + 1 &&
          std::isalpha(static_cast<unsigned char>(tmpl[i + 1]))) {
        const std::string key(tmpl.substr(i + 1, j - i - 1));
        const auto it = values.find(key);
        if (it == values.end())
          fail(ErrorKind::UnresolvedPlaceholder, "no value for placeholder {" + key + "}", i);
        out += it->second;
        i = j + 1;
        continue;
      }
    }
    out.push_back(tmpl[i++]);
  }
  return out;
}

}  // namespace pitchside
