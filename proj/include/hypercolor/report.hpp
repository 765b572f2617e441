#ifndef HYPERCOLOR_REPORT_HPP
#define HYPERCOLOR_REPORT_HPP

// JSON and text renderings of traces and search reports. Every JSON document
// carries a top-level "schema" string naming its layout and version.

#include <cstdio>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hypercolor/hypergraph.hpp"
#include "hypercolor/search.hpp"

namespace hypercolor::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kTraceSchema = "hypercolor.trace/1";
inline constexpr const char* kSearchSchema = "hypercolor.search/1";
inline constexpr const char* kAnalyzeSchema = "hypercolor.analyze/1";
inline constexpr const char* kOracleSchema = "hypercolor.oracle/1";
inline constexpr const char* kColorSchema = "hypercolor.color/1";

inline Json to_json(const RecoloringTrace& trace) {
  Json rounds = Json::array();
  for (const auto& round : trace.rounds) {
    Json steps = Json::array();
    for (const auto& s : round.steps) {
      steps.push_back({{"t", s.t},
                       {"edge", s.edge},
                       {"vertex", s.vertex},
                       {"new_color", s.new_color},
                       {"newly_monochromatic", s.newly_monochromatic},
                       {"queue_after", s.queue_after}});
    }
    rounds.push_back({{"inserted", round.inserted}, {"initial_queue", round.initial_queue}, {"steps", steps}});
  }
  return Json{{"schema", kTraceSchema}, {"rounds", rounds}};
}

inline Json edges_to_json(const Hypergraph& h) {
  Json edges = Json::array();
  for (const auto& e : h.edges()) edges.push_back(e);
  return edges;
}

inline Json to_json(const SearchConfig& cfg) {
  return Json{{"mode", to_string(cfg.mode)},
              {"n_range", {cfg.n_range.lo, cfg.n_range.hi}},
              {"m_range", {cfg.m_range.lo, cfg.m_range.hi}},
              {"size_range", {cfg.size_range.lo, cfg.size_range.hi}},
              {"trials", cfg.trials},
              {"base_seed", cfg.base_seed},
              {"parity", to_string(cfg.parity)},
              {"min_edge_size_filter", cfg.min_edge_size_filter}};
}

inline Json to_json(const TrialInstance& t) {
  return Json{{"trial", t.trial},           {"trial_seed", t.trial_seed}, {"n", t.n},
              {"m", t.m},                   {"min_size", t.min_size},     {"max_size", t.max_size},
              {"instance_seed", t.instance_seed}};
}

inline Json to_json(const SearchReport& r) {
  Json histogram = Json::array();
  for (const auto& [key, count] : r.histogram) {
    histogram.push_back({{"ig_chromatic", key.first}, {"chromatic", key.second}, {"count", count}});
  }
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"instance", to_json(v.instance)},
                          {"ig_chromatic", v.ig_chromatic},
                          {"chromatic", v.chromatic},
                          {"kind", v.kind},
                          {"detail", v.detail},
                          {"edges", edges_to_json(v.hypergraph)}});
  }
  return Json{{"schema", kSearchSchema},
              {"config", to_json(r.config)},
              {"limits", {{"cap_n", r.limits.max_hypergraph_vertices}, {"cap_ig", r.limits.max_graph_vertices}}},
              {"trials_run", r.trials_run},
              {"trials_skipped_cap", r.trials_skipped_cap},
              {"trials_skipped_unsatisfiable", r.trials_skipped_unsatisfiable},
              {"trials_eligible", r.trials_eligible},
              {"unconfirmed_candidates", r.unconfirmed_candidates},
              {"histogram", histogram},
              {"violations", violations}};
}

inline std::string to_text(const SearchReport& r) {
  std::ostringstream out;
  char line[160];
  out << "mode " << to_string(r.config.mode) << ", parity " << to_string(r.config.parity) << ", base seed "
      << r.config.base_seed << '\n';
  std::snprintf(line, sizeof line, "%-30s %10zu\n", "trials run", r.trials_run);
  out << line;
  std::snprintf(line, sizeof line, "%-30s %10zu\n", "skipped (oracle cap)", r.trials_skipped_cap);
  out << line;
  std::snprintf(line, sizeof line, "%-30s %10zu\n", "skipped (unsatisfiable)", r.trials_skipped_unsatisfiable);
  out << line;
  std::snprintf(line, sizeof line, "%-30s %10zu\n", "eligible", r.trials_eligible);
  out << line;
  std::snprintf(line, sizeof line, "%-30s %10zu\n", "violations", r.violations.size());
  out << line;
  out << '\n';
  std::snprintf(line, sizeof line, "%12s %10s %10s\n", "chi(H^[1])", "chi(H)", "count");
  out << line;
  for (const auto& [key, count] : r.histogram) {
    std::snprintf(line, sizeof line, "%12zu %10zu %10zu\n", key.first, key.second, count);
    out << line;
  }
  for (const auto& v : r.violations) {
    out << "\nviolation at trial " << v.instance.trial << " (instance seed " << v.instance.instance_seed
        << ", n=" << v.instance.n << ", m=" << v.instance.m << ", sizes " << v.instance.min_size << ".."
        << v.instance.max_size << "): " << v.kind << ": " << v.detail << '\n';
  }
  return out.str();
}

}  // namespace hypercolor::report

#endif  // HYPERCOLOR_REPORT_HPP
