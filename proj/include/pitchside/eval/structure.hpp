#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace pitchside::eval {

/// Sentence roles in a commentary.
enum class Facet { description, explanation, comment };

std::string_view to_string(Facet f) noexcept;

/// A sentence's label set. A sentence may carry several facets.
using FacetSet = std::vector<Facet>;

/// Accepts "Description", "Explanation", "Comment" or "Commentary", any case,
/// and combinations joined by "and", "+", "/", "&" or ",", including the
/// initials D, E and C ("D+E"). Duplicates collapse; order is canonical.
/// Throws ParseError on anything else.
FacetSet parse_facet_label(std::string_view label);

/// Splits a numbered list such as "1.Description 2.Commentary 3.D+E" into
/// per-sentence label sets. Numbers must run 1, 2, 3, ... (ParseError).
std::vector<FacetSet> parse_label_list(std::string_view text);

/// Percentages of sentence weight per facet. A sentence weighs 1 and its
/// weight is split evenly among its facets, so the three shares sum to 100.
struct StructureTally {
  std::size_t sentences = 0;
  double description = 0.0;
  double explanation = 0.0;
  double comment = 0.0;
  /// description < 50: the text is not primarily descriptive.
  bool low_description = false;
};

/// Throws EmptyInput for no sentences and UnlabeledSentence (index = sentence)
/// for a sentence with an empty label set.
StructureTally structure_tally(std::span<const FacetSet> labels);

nlohmann::json to_json(const StructureTally& t);

}  // namespace pitchside::eval
