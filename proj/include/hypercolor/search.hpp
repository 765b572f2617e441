#ifndef HYPERCOLOR_SEARCH_HPP
#define HYPERCOLOR_SEARCH_HPP

// Randomized audit harness. Each trial draws a hypergraph from its own seed,
// computes both chromatic numbers exactly and checks the relation selected by
// the mode. Trials are independent, so they can run on any number of workers;
// the report is merged in trial order and does not depend on the worker count.
//
// Trial seeding (part of the replay contract):
//   x = base_seed ^ (0xD1B54A32D192ED03 * (trial + 1)); trial_seed = splitmix64(x)
//   rng = Xoshiro256(trial_seed)
//   n = rng.between(n_lo, n_hi); m = rng.between(m_lo, m_hi)
//   sizes = [size_lo, min(size_hi, n)]   ([3, 3] in the 3-uniform audit)
//   instance_seed = rng.next()
//   hypergraph = random_hypergraph(n, m, sizes..., instance_seed)

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "hypercolor/color.hpp"
#include "hypercolor/exact.hpp"
#include "hypercolor/gen.hpp"
#include "hypercolor/hypergraph.hpp"

namespace hypercolor {

struct IntRange {
  std::size_t lo = 0;
  std::size_t hi = 0;
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

enum class Parity { even, odd, any };

enum class SearchMode { conjecture_audit, theorem_audit_3uniform, two_color_stress, four_color_stress };

inline const char* to_string(Parity p) {
  switch (p) {
    case Parity::even: return "even";
    case Parity::odd: return "odd";
    case Parity::any: return "any";
  }
  return "any";
}

inline const char* to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::conjecture_audit: return "conjecture_audit";
    case SearchMode::theorem_audit_3uniform: return "theorem_audit_3uniform";
    case SearchMode::two_color_stress: return "two_color_stress";
    case SearchMode::four_color_stress: return "four_color_stress";
  }
  return "conjecture_audit";
}

struct SearchConfig {
  IntRange n_range{4, 12};
  IntRange m_range{2, 12};
  IntRange size_range{2, 4};
  std::size_t trials = 1000;
  std::uint64_t base_seed = 1;
  Parity parity = Parity::any;
  std::size_t min_edge_size_filter = 2;
  SearchMode mode = SearchMode::conjecture_audit;

  void validate() const {
    auto require = [](bool ok, const char* what) {
      if (!ok) throw Error(ErrorKind::InvalidArgument, what);
    };
    require(n_range.lo <= n_range.hi, "n range is empty");
    require(m_range.lo <= m_range.hi, "m range is empty");
    require(size_range.lo <= size_range.hi, "edge size range is empty");
    require(n_range.lo >= 2, "n range must start at 2 or more");
    require(m_range.lo >= 1, "m range must start at 1 or more");
    require(size_range.lo >= 2, "edge sizes must be at least 2");
    require(trials >= 1, "trials must be at least 1");
  }
};

/// Everything needed to regenerate a trial's hypergraph.
struct TrialInstance {
  std::size_t trial = 0;
  std::uint64_t trial_seed = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t min_size = 0;
  std::size_t max_size = 0;
  std::uint64_t instance_seed = 0;

  Hypergraph generate() const { return random_hypergraph(n, m, min_size, max_size, instance_seed); }
  friend bool operator==(const TrialInstance&, const TrialInstance&) = default;
};

inline std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t trial) {
  std::uint64_t x = base_seed ^ (0xD1B54A32D192ED03ULL * (static_cast<std::uint64_t>(trial) + 1));
  return splitmix64(x);
}

/// Draws the trial's parameters, or nullopt when the size range cannot fit n.
inline std::optional<TrialInstance> derive_trial(const SearchConfig& cfg, std::size_t trial) {
  TrialInstance t;
  t.trial = trial;
  t.trial_seed = trial_seed(cfg.base_seed, trial);
  Xoshiro256 rng(t.trial_seed);
  t.n = rng.between(cfg.n_range.lo, cfg.n_range.hi);
  t.m = rng.between(cfg.m_range.lo, cfg.m_range.hi);
  if (cfg.mode == SearchMode::theorem_audit_3uniform) {
    t.min_size = t.max_size = 3;
  } else {
    t.min_size = cfg.size_range.lo;
    t.max_size = std::min(cfg.size_range.hi, t.n);
  }
  t.instance_seed = rng.next();
  if (t.min_size > t.max_size || t.max_size > t.n) return std::nullopt;
  return t;
}

struct Violation {
  TrialInstance instance;
  Hypergraph hypergraph;
  std::size_t ig_chromatic = 0;
  std::size_t chromatic = 0;
  std::string kind;  // "chromatic_gap" or "invariant_violation"
  std::string detail;
};

struct SearchReport {
  SearchConfig config;
  ExactLimits limits;
  std::size_t trials_run = 0;
  std::size_t trials_skipped_cap = 0;
  std::size_t trials_skipped_unsatisfiable = 0;
  std::size_t trials_eligible = 0;
  /// (chi of 1-intersection graph, chi of hypergraph) -> count, over all solved trials.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> histogram;
  std::vector<Violation> violations;
  /// Candidates that did not reproduce on replay; expected to stay 0.
  std::size_t unconfirmed_candidates = 0;
};

namespace detail {

enum class TrialStatus { solved, skipped_cap, skipped_unsatisfiable };

struct TrialOutcome {
  TrialStatus status = TrialStatus::skipped_unsatisfiable;
  std::size_t ig_chromatic = 0;
  std::size_t chromatic = 0;
  bool eligible = false;
  std::optional<Violation> candidate;
};

inline bool passes_filters(const SearchConfig& cfg, const Hypergraph& h, std::size_t ig_chromatic) {
  if (h.min_edge_size() < cfg.min_edge_size_filter) return false;
  switch (cfg.mode) {
    case SearchMode::conjecture_audit:
      if (ig_chromatic < 2) return false;
      if (cfg.parity == Parity::even) return ig_chromatic % 2 == 0;
      if (cfg.parity == Parity::odd) return ig_chromatic % 2 == 1;
      return true;
    case SearchMode::theorem_audit_3uniform:
      return ig_chromatic >= 2;
    case SearchMode::two_color_stress:
      return ig_chromatic <= 2;
    case SearchMode::four_color_stress:
      return ig_chromatic <= 4;
  }
  return false;
}

// Runs the mode's check on a solved instance; returns a description of the
// failure, if any.
inline std::optional<std::pair<std::string, std::string>> check_instance(const SearchConfig& cfg, const Hypergraph& h,
                                                                         std::size_t ig_chromatic,
                                                                         std::size_t chromatic,
                                                                         const ExactLimits& limits) {
  auto stress = [&](auto&& colorer, std::size_t max_colors) -> std::optional<std::pair<std::string, std::string>> {
    try {
      const VertexColoring c = colorer();
      if (!is_proper(h, c).proper) return std::pair{std::string("invariant_violation"), std::string("improper coloring")};
      if (c.k > max_colors) return std::pair{std::string("invariant_violation"), std::string("too many colors")};
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::InternalInvariantViolation) {
        return std::pair{std::string("invariant_violation"), std::string(e.what())};
      }
      throw;
    }
    return std::nullopt;
  };

  switch (cfg.mode) {
    case SearchMode::conjecture_audit:
    case SearchMode::theorem_audit_3uniform:
      if (chromatic > ig_chromatic) {
        return std::pair{std::string("chromatic_gap"), "chi(H) = " + std::to_string(chromatic) +
                                                          " exceeds chi(H^[1]) = " + std::to_string(ig_chromatic)};
      }
      return std::nullopt;
    case SearchMode::two_color_stress:
      return stress([&] { return two_color(h).coloring; }, 2);
    case SearchMode::four_color_stress:
      return stress([&] { return four_color(h, limits).coloring; }, 4);
  }
  return std::nullopt;
}

inline TrialOutcome run_trial(const SearchConfig& cfg, const ExactLimits& limits, std::size_t trial) {
  TrialOutcome out;
  const auto instance = derive_trial(cfg, trial);
  if (!instance) return out;

  Hypergraph h;
  try {
    h = instance->generate();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Unsatisfiable) return out;
    throw;
  }
  if (h.vertex_count() > limits.max_hypergraph_vertices || h.edge_count() > limits.max_graph_vertices) {
    out.status = TrialStatus::skipped_cap;
    return out;
  }

  out.status = TrialStatus::solved;
  out.ig_chromatic = graph_chromatic_number(one_intersection_graph(h), limits);
  out.chromatic = hypergraph_chromatic_number(h, limits).chromatic_number;
  out.eligible = passes_filters(cfg, h, out.ig_chromatic);
  if (!out.eligible) return out;

  if (auto failure = check_instance(cfg, h, out.ig_chromatic, out.chromatic, limits)) {
    out.candidate = Violation{*instance, std::move(h), out.ig_chromatic, out.chromatic, failure->first,
                              failure->second};
  }
  return out;
}

// Regenerates the instance from its seeds and repeats every computation from
// scratch.
inline bool reverify(const SearchConfig& cfg, const ExactLimits& limits, const Violation& v) {
  const auto replayed = derive_trial(cfg, v.instance.trial);
  if (!replayed || !(*replayed == v.instance)) return false;
  const Hypergraph h = replayed->generate();
  if (!(h == v.hypergraph)) return false;
  const auto ig = graph_chromatic_number(one_intersection_graph(h), limits);
  const auto chi = hypergraph_chromatic_number(h, limits).chromatic_number;
  if (ig != v.ig_chromatic || chi != v.chromatic) return false;
  if (!passes_filters(cfg, h, ig)) return false;
  const auto again = check_instance(cfg, h, ig, chi, limits);
  return again && again->first == v.kind;
}

}  // namespace detail

/// Runs cfg.trials trials on up to `jobs` threads (0 or 1 = current thread).
inline SearchReport run_search(const SearchConfig& cfg, const ExactLimits& limits = {}, std::size_t jobs = 1) {
  cfg.validate();
  std::vector<detail::TrialOutcome> outcomes(cfg.trials);

  if (jobs <= 1) {
    for (std::size_t i = 0; i < cfg.trials; ++i) outcomes[i] = detail::run_trial(cfg, limits, i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(jobs);
    {
      std::vector<std::jthread> workers;
      for (std::size_t w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
          try {
            for (std::size_t i = next++; i < cfg.trials; i = next++) outcomes[i] = detail::run_trial(cfg, limits, i);
          } catch (...) {
            errors[w] = std::current_exception();
            next = cfg.trials;
          }
        });
      }
    }
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  SearchReport report;
  report.config = cfg;
  report.limits = limits;
  report.trials_run = cfg.trials;
  for (auto& out : outcomes) {
    switch (out.status) {
      case detail::TrialStatus::skipped_cap: ++report.trials_skipped_cap; continue;
      case detail::TrialStatus::skipped_unsatisfiable: ++report.trials_skipped_unsatisfiable; continue;
      case detail::TrialStatus::solved: break;
    }
    ++report.histogram[{out.ig_chromatic, out.chromatic}];
    if (out.eligible) ++report.trials_eligible;
    if (out.candidate) {
      if (detail::reverify(cfg, limits, *out.candidate)) {
        report.violations.push_back(std::move(*out.candidate));
      } else {
        ++report.unconfirmed_candidates;
      }
    }
  }
  return report;
}

}  // namespace hypercolor

#endif  // HYPERCOLOR_SEARCH_HPP
