#include "pitchside/eval/structure.hpp"

#include <algorithm>
#include <cctype>

#include "pitchside/common/error.hpp"
#include "pitchside/common/text.hpp"

namespace pitchside::eval {

std::string_view to_string(Facet f) noexcept {
  switch (f) {
    case Facet::description: return "description";
    case Facet::explanation: return "explanation";
    case Facet::comment: return "comment";
  }
  return "?";
}

namespace {

Facet facet_word(std::string_view w, std::string_view whole) {
  if (w == "description" || w == "descriptive" || w == "d") return Facet::description;
  if (w == "explanation" || w == "explanatory" || w == "e") return Facet::explanation;
  if (w == "comment" || w == "commentary" || w == "c") return Facet::comment;
  fail(ErrorKind::ParseError, "unknown sentence label '" + std::string(whole) + "'");
}

}  // namespace

FacetSet parse_facet_label(std::string_view label) {
  std::string s = ascii_lower(trim(label));
  std::vector<std::string> words;
  for (auto& w : split_if(s, [](char c) { return c == ' ' || c == '+' || c == '/' || c == '&' ||
                                                c == ',' || c == '.' || c == ';'; }))
    if (!w.empty() && w != "and") words.push_back(std::move(w));
  if (words.empty()) fail(ErrorKind::ParseError, "empty sentence label");
  FacetSet out;
  for (const auto& w : words) out.push_back(facet_word(w, label));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<FacetSet> parse_label_list(std::string_view text) {
  // Locate "<n>." or "<n>)" markers numbered 1, 2, 3, ...
  std::vector<std::pair<std::size_t, std::size_t>> marks;  // marker start, label start
  int expected = 1;
  for (std::size_t i = 0; i < text.size();) {
    const bool at_word_start = i == 0 || !std::isalnum(static_cast<unsigned char>(text[i - 1]));
    if (at_word_start && std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j < text.size() && (text[j] == '.' || text[j] == ')')) {
        const int n = std::stoi(std::string(text.substr(i, j - i)));
        if (n != expected)
          fail(ErrorKind::ParseError, "label " + std::to_string(n) + " where " +
                                          std::to_string(expected) + " was expected");
        ++expected;
        marks.emplace_back(i, j + 1);
        i = j + 1;
        continue;
      }
    }
    ++i;
  }
  if (marks.empty()) fail(ErrorKind::ParseError, "no numbered labels found");
  if (!trim(text.substr(0, marks.front().first)).empty())
    fail(ErrorKind::ParseError, "text before the first numbered label");
  std::vector<FacetSet> out;
  for (std::size_t k = 0; k < marks.size(); ++k) {
    const auto end = k + 1 < marks.size() ? marks[k + 1].first : text.size();
    out.push_back(parse_facet_label(text.substr(marks[k].second, end - marks[k].second)));
  }
  return out;
}

StructureTally structure_tally(std::span<const FacetSet> labels) {
  if (labels.empty()) fail(ErrorKind::EmptyInput, "no labeled sentences");
  double d = 0, e = 0, c = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].empty())
      fail(ErrorKind::UnlabeledSentence, "sentence " + std::to_string(i) + " has no label", i);
    FacetSet set = labels[i];
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    const double w = 1.0 / static_cast<double>(set.size());
    for (Facet f : set) {
      switch (f) {
        case Facet::description: d += w; break;
        case Facet::explanation: e += w; break;
        case Facet::comment: c += w; break;
      }
    }
  }
  const double n = static_cast<double>(labels.size());
  StructureTally t;
  t.sentences = labels.size();
  t.description = 100.0 * d / n;
  t.explanation = 100.0 * e / n;
  t.comment = 100.0 * c / n;
  t.low_description = t.description < 50.0;
  return t;
}

nlohmann::json to_json(const StructureTally& t) {
  return {{"sentences", t.sentences},
          {"description", t.description},
          {"explanation", t.explanation},
          {"comment", t.comment},
          {"low_description", t.low_description}};
}

}  // namespace pitchside::eval
