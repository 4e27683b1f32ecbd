#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace pitchside {

/// Prompt text embedded from assets/prompts at build time, without the
/// trailing newline. Throws InvalidInput for an unknown name.
std::string_view prompt_asset(std::string_view name);

std::vector<std::string_view> prompt_asset_names();

/// Substitutes every `{Name}` placeholder from `values`. Throws
/// UnresolvedPlaceholder when the template names a key that `values` lacks.
/// Braces that do not enclose a placeholder name (letters, digits, '_', ' ')
/// are copied verbatim, so JSON examples survive inside values.
std::string render_template(std::string_view tmpl, const std::map<std::string, std::string>& values);

namespace detail {
struct PromptAsset {
  const char* name;
  const char* text;
};
extern const PromptAsset kPromptAssets[];
extern const std::size_t kPromptAssetCount;
}  // namespace detail

}  // namespace pitchside
