// Python bindings. Structured values cross the boundary as JSON text; the
// pitchside package wraps each call with json.loads / json.dumps.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "json.hpp"
#include "pitchside/common/clock.hpp"
#include "pitchside/common/error.hpp"
#include "pitchside/eval/claims.hpp"
#include "pitchside/eval/metrics.hpp"
#include "pitchside/eval/structure.hpp"
#include "pitchside/event/io.hpp"
#include "pitchside/grounding/attention.hpp"
#include "pitchside/scene/shots.hpp"
#include "pitchside/stats/execute.hpp"
#include "pitchside/stats/query.hpp"
#include "pitchside/stats/store.hpp"

namespace py = pybind11;
using nlohmann::json;
using namespace pitchside;

namespace {

event::MatchLog parse_log(const std::string& text, bool lenient) {
  return event::match_log_from_json(json::parse(text),
                                    lenient ? event::IngestMode::lenient : event::IngestMode::strict);
}

json parse_doc(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::ParseError, e.what());
  }
}

std::string replay(const std::string& log_text, const std::string& at, std::size_t history_k,
                   bool inclusive, bool lenient) {
  const auto log = parse_log(log_text, lenient);
  return event::to_json(event::replay(log, parse_game_time(at), {history_k, inclusive}), log.meta).dump();
}

std::string reconcile(const std::string& log_text, const std::string& goals_text, int window_s,
                      bool lenient) {
  const auto log = parse_log(log_text, lenient);
  const auto merged =
      event::reconcile_goal_timelines(log, event::secondary_timeline_from_json(parse_doc(goals_text)), {window_s});
  return json{{"log", event::to_json(merged.log)}, {"report", event::to_json(merged.report)}}.dump();
}

std::string ground(const std::string& bundle_text, double fps, std::size_t top_k) {
  const auto rel = grounding::aggregate(grounding::attention_from_json(parse_doc(bundle_text)), top_k);
  return grounding::to_json(rel, fps).dump();
}

std::string segment(const std::string& features_csv, double threshold) {
  json shots = json::array();
  for (const auto& s : scene::detect_shots(scene::parse_feature_csv(features_csv), threshold)) {
    const auto k = scene::keyframes(s);
    shots.push_back({{"start_frame", s.start}, {"end_frame", s.end}, {"keyframes", {k[0], k[1], k[2]}}});
  }
  return json{{"threshold", threshold}, {"shots", shots}}.dump();
}

std::string verify_text(const std::string& body, const std::string& log_text, const std::string& at,
                        std::optional<std::string> team, std::optional<std::string> actor,
                        const stats::StatStore* store, bool strict_scoreline) {
  const auto log = parse_log(log_text, false);
  const auto clock = parse_game_time(at);
  std::optional<event::Side> side;
  if (team) side = event::parse_side(*team);
  const auto claims = eval::extract_claims(body, {&log, clock, side, std::move(actor)});
  const auto verdicts = eval::verify_claims(claims, log, clock, store, {strict_scoreline});
  json out = json::array();
  for (std::size_t i = 0; i < claims.size(); ++i) {
    auto v = eval::to_json(verdicts[i]);
    v["claim"] = eval::to_json(claims[i]);
    out.push_back(std::move(v));
  }
  return json{{"verdicts", out}, {"summary", eval::to_json(eval::summarize(claims, verdicts))}}.dump();
}

std::string alignment_accuracy(const std::string& records_text) {
  std::vector<eval::PredictionRecord> records;
  for (const auto& r : parse_doc(records_text)) records.push_back(eval::prediction_from_json(r));
  return eval::to_json(eval::alignment_accuracy(records)).dump();
}

std::string structure_tally(const std::string& labels) {
  return eval::to_json(eval::structure_tally(eval::parse_label_list(labels))).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "pitchside native core";

  static py::exception<Error> error_type(m, "PitchsideError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::reinterpret_borrow<py::object>(error_type)(e.what());
      inst.attr("kind") = std::string(error_kind_name(e.kind()));
      inst.attr("index") = e.index() ? py::cast(*e.index()) : py::none();
      py::set_error(error_type, inst);
    }
  });

  m.def("replay", &replay, py::arg("log"), py::arg("at"), py::arg("history_k") = event::kDefaultHistoryK,
        py::arg("inclusive") = false, py::arg("lenient") = false);
  m.def("reconcile", &reconcile, py::arg("log"), py::arg("goals"), py::arg("window_s") = 60,
        py::arg("lenient") = false);
  m.def("ground", &ground, py::arg("bundle"), py::arg("fps") = 1.0,
        py::arg("top_k") = grounding::kDefaultTopFrames);
  m.def("segment", &segment, py::arg("features_csv"), py::arg("threshold") = scene::kDefaultShotThreshold);
  m.def("normalize_query", [](const std::string& dsl) { return stats::print_query(stats::parse_query(dsl)); },
        py::arg("dsl"));
  m.def("alignment_accuracy", &alignment_accuracy, py::arg("records"));
  m.def("structure_tally", &structure_tally, py::arg("labels"));

  py::class_<stats::StatStore>(m, "StatStore")
      .def_static("load", [](const std::string& dir) { return stats::StatStore::load(dir); }, py::arg("directory"))
      .def("query",
           [](const stats::StatStore& s, const std::string& dsl) {
             auto doc = stats::to_json(stats::execute(s, stats::parse_query(dsl)));
             doc["query"] = stats::print_query(stats::parse_query(dsl));
             return doc.dump();
           },
           py::arg("dsl"));

  m.def("verify_text",
        [](const std::string& body, const std::string& log, const std::string& at,
           std::optional<std::string> team, std::optional<std::string> actor,
           const stats::StatStore* store, bool strict) {
          return verify_text(body, log, at, std::move(team), std::move(actor), store, strict);
        },
        py::arg("body"), py::arg("log"), py::arg("at"), py::arg("team") = py::none(),
        py::arg("actor") = py::none(), py::arg("store") = py::none(), py::arg("strict_scoreline") = false);
}
