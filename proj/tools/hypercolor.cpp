// hypercolor: command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 infeasible precondition (not bipartite / not 4-colorable),
// 4 exact-solver cap exceeded, 5 internal invariant violation.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hypercolor/color.hpp"
#include "hypercolor/exact.hpp"
#include "hypercolor/gen.hpp"
#include "hypercolor/hypergraph.hpp"
#include "hypercolor/io.hpp"
#include "hypercolor/report.hpp"
#include "hypercolor/search.hpp"

namespace {

using namespace hypercolor;
using report::Json;

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kInputError = 2,
  kInfeasible = 3,
  kLimit = 4,
  kInternal = 5,
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotBipartite1IG:
    case ErrorKind::Not4Colorable1IG:
      return kInfeasible;
    case ErrorKind::LimitExceeded:
      return kLimit;
    case ErrorKind::InternalInvariantViolation:
    case ErrorKind::NoFreeColor:
      return kInternal;
    default:
      return kInputError;
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
  out << text;
}

Hypergraph load(const std::string& path) {
  auto h = io::read_hypergraph_file(path);
  if (h.duplicates_removed() > 0) {
    std::cerr << "warning: " << h.duplicates_removed() << " duplicate edge(s) removed from " << path << '\n';
  }
  return h;
}

std::string join(const std::vector<std::uint32_t>& xs) {
  std::string s;
  for (auto x : xs) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

struct Caps {
  std::size_t cap_n = ExactLimits{}.max_hypergraph_vertices;
  std::size_t cap_ig = ExactLimits{}.max_graph_vertices;
  ExactLimits limits() const { return {cap_ig, cap_n}; }
};

void add_caps(CLI::App* cmd, Caps& caps) {
  cmd->add_option("--cap-n", caps.cap_n, "Vertex cap for the exact hypergraph oracle")->capture_default_str();
  cmd->add_option("--cap-ig", caps.cap_ig, "Vertex cap for the exact graph solver")->capture_default_str();
}

int cmd_analyze(const std::string& file, const std::string& format, const Caps& caps) {
  const auto h = load(file);
  const auto ig = one_intersection_graph(h);
  std::map<std::size_t, std::size_t> sizes;
  for (const auto& e : h.edges()) ++sizes[e.size()];

  const auto sides = bipartition(ig);
  const auto* odd = std::get_if<OddCycle>(&sides);
  std::optional<std::size_t> chi_ig;
  std::string chi_ig_note;
  try {
    chi_ig = graph_chromatic_number(ig, caps.limits());
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::LimitExceeded) throw;
    chi_ig_note = e.what();
  }

  if (format == "json") {
    Json histogram = Json::object();
    for (auto [size, count] : sizes) histogram[std::to_string(size)] = count;
    Json doc{{"schema", report::kAnalyzeSchema},
             {"n", h.vertex_count()},
             {"m", h.edge_count()},
             {"edge_size_histogram", histogram},
             {"ig_edges", ig.edge_count()},
             {"bipartite", odd == nullptr}};
    if (odd) doc["odd_cycle"] = odd->cycle;
    if (chi_ig) {
      doc["ig_chromatic"] = *chi_ig;
    } else {
      doc["ig_chromatic"] = nullptr;
      doc["ig_chromatic_error"] = chi_ig_note;
    }
    std::cout << doc.dump(2) << '\n';
    return kOk;
  }

  std::cout << "n " << h.vertex_count() << '\n' << "m " << h.edge_count() << '\n';
  for (auto [size, count] : sizes) std::cout << "edges of size " << size << ' ' << count << '\n';
  std::cout << "ig_edges " << ig.edge_count() << '\n';
  std::cout << "bipartite " << (odd ? "false" : "true") << '\n';
  if (odd) std::cout << "odd_cycle " << join(odd->cycle) << '\n';
  if (chi_ig) {
    std::cout << "ig_chromatic " << *chi_ig << '\n';
  } else {
    std::cout << "ig_chromatic unavailable (" << chi_ig_note << ")\n";
  }
  return kOk;
}

int cmd_color(const std::string& file, const std::string& method, const std::string& out_path,
              const std::string& trace_path, const Caps& caps) {
  const auto h = load(file);
  VertexColoring coloring;
  try {
    if (method == "two") {
      auto result = two_color(h);
      coloring = std::move(result.coloring);
      if (!trace_path.empty()) write_output(trace_path, report::to_json(result.trace).dump(2) + "\n");
    } else if (method == "four") {
      coloring = four_color(h, caps.limits()).coloring;
    } else {
      const auto classes = graph_optimal_coloring(one_intersection_graph(h), caps.limits());
      coloring = greedy_color(h, classes);
    }
  } catch (const NotBipartiteError& e) {
    std::cerr << "error: " << e.what() << "\nodd cycle (edge indices): " << join(e.odd_cycle()) << '\n';
    return kInfeasible;
  }
  if (method != "two" && !trace_path.empty()) {
    std::cerr << "warning: --trace is only produced by --method two\n";
  }
  write_output(out_path, io::to_text(coloring));
  std::cerr << "colors used: " << coloring.distinct_colors() << '\n';
  return kOk;
}

int cmd_verify(const std::string& hypergraph_file, const std::string& coloring_file) {
  const auto h = load(hypergraph_file);
  const auto c = io::read_coloring_file(coloring_file);
  if (c.colors.size() != h.vertex_count()) {
    std::cerr << "error: coloring has " << c.colors.size() << " vertices, hypergraph has " << h.vertex_count()
              << '\n';
    return kInputError;
  }
  const auto check = is_proper(h, c);
  if (check.proper) {
    std::cout << "proper\n";
    return kOk;
  }
  std::cout << "improper: " << check.monochromatic.size() << " monochromatic edge(s)\n";
  for (auto i : check.monochromatic) {
    std::cout << "edge " << i << ':';
    for (auto v : h.edge(i)) std::cout << ' ' << v;
    std::cout << '\n';
  }
  return kVerifyFailed;
}

int cmd_oracle(const std::string& file, const std::string& out_path, const std::string& format, const Caps& caps) {
  const auto h = load(file);
  const auto chi_ig = graph_chromatic_number(one_intersection_graph(h), caps.limits());
  const auto chi = hypergraph_chromatic_number(h, caps.limits());
  if (!out_path.empty()) write_output(out_path, io::to_text(chi.witness));
  if (format == "json") {
    std::cout << Json{{"schema", report::kOracleSchema},
                      {"ig_chromatic", chi_ig},
                      {"chromatic", chi.chromatic_number},
                      {"witness", chi.witness.colors}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "ig_chromatic " << chi_ig << '\n' << "chromatic " << chi.chromatic_number << '\n';
  }
  return kOk;
}

struct SearchArgs {
  SearchConfig cfg;
  std::string mode = "conjecture_audit";
  std::string parity = "any";
  std::optional<std::uint64_t> seed;
  std::size_t jobs = 1;
  std::string report_path;
  std::string violations_dir;
  std::string format = "text";
  Caps caps;
};

int cmd_search(SearchArgs& args) {
  static const std::map<std::string, SearchMode> modes{
      {"conjecture_audit", SearchMode::conjecture_audit},
      {"theorem_audit_3uniform", SearchMode::theorem_audit_3uniform},
      {"two_color_stress", SearchMode::two_color_stress},
      {"four_color_stress", SearchMode::four_color_stress}};
  static const std::map<std::string, Parity> parities{
      {"even", Parity::even}, {"odd", Parity::odd}, {"any", Parity::any}};
  args.cfg.mode = modes.at(args.mode);
  args.cfg.parity = parities.at(args.parity);
  args.cfg.base_seed = *args.seed;

  const auto result = run_search(args.cfg, args.caps.limits(), args.jobs);
  const auto json_text = report::to_json(result).dump(2) + "\n";
  if (!args.report_path.empty()) write_output(args.report_path, json_text);
  if (!args.violations_dir.empty()) {
    std::filesystem::create_directories(args.violations_dir);
    for (const auto& v : result.violations) {
      const auto path = std::filesystem::path(args.violations_dir) /
                        ("violation-seed-" + std::to_string(v.instance.instance_seed) + ".hg");
      std::ostringstream text;
      text << "# trial " << v.instance.trial << " trial_seed " << v.instance.trial_seed << " instance_seed "
           << v.instance.instance_seed << '\n'
           << "# chi(H^[1]) " << v.ig_chromatic << " chi(H) " << v.chromatic << " kind " << v.kind << '\n';
      io::write_hypergraph(text, v.hypergraph);
      write_output(path.string(), text.str());
    }
  }
  std::cout << (args.format == "json" ? json_text : report::to_text(result));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proper coloring of hypergraphs through their 1-intersection graph"};
  app.require_subcommand(1);

  std::string format = "text";
  Caps caps;
  std::string file;
  std::string out_path;

  auto* analyze = app.add_subcommand("analyze", "Summarize a hypergraph and its 1-intersection graph");
  analyze->add_option("file", file, "Hypergraph file")->required();
  analyze->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  add_caps(analyze, caps);

  std::string method = "two";
  std::string trace_path;
  auto* color = app.add_subcommand("color", "Color a hypergraph with a constructive method");
  color->add_option("file", file, "Hypergraph file")->required();
  color->add_option("--method", method, "two | four | greedy")->check(CLI::IsMember({"two", "four", "greedy"}));
  color->add_option("--out", out_path, "Coloring output file (default stdout)");
  color->add_option("--trace", trace_path, "Write the recoloring trace as JSON (method two)");
  add_caps(color, caps);

  std::string coloring_file;
  auto* verify = app.add_subcommand("verify", "Check that a coloring is proper");
  verify->add_option("hypergraph", file)->required();
  verify->add_option("coloring", coloring_file)->required();

  auto* oracle = app.add_subcommand("oracle", "Exact chromatic numbers of H and its 1-intersection graph");
  oracle->add_option("file", file, "Hypergraph file")->required();
  oracle->add_option("--out", out_path, "Witness coloring output file");
  oracle->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  add_caps(oracle, caps);

  std::vector<std::size_t> gen_params;
  std::string family;
  std::size_t rn = 0, rm = 0, rmin = 2, rmax = 2;
  std::optional<std::uint64_t> gen_seed;
  auto* gen = app.add_subcommand("gen", "Generate a hypergraph family");
  gen->add_option("family", family, "complete N | complete-plus-triple N | universal M SIZE | fano | random")
      ->required()
      ->check(CLI::IsMember({"complete", "complete-plus-triple", "universal", "fano", "random"}));
  gen->add_option("params", gen_params, "Family parameters");
  gen->add_option("--n", rn, "random: vertex count");
  gen->add_option("--m", rm, "random: edge count");
  gen->add_option("--min-size", rmin, "random: minimum edge size");
  gen->add_option("--max-size", rmax, "random: maximum edge size");
  gen->add_option("--seed", gen_seed, "random: seed (required)");
  gen->add_option("--out", out_path, "Output file (default stdout)");

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Randomized audit of chi(H) against chi(H^[1])");
  search->add_option("--mode", sa.mode)
      ->check(CLI::IsMember({"conjecture_audit", "theorem_audit_3uniform", "two_color_stress", "four_color_stress"}))
      ->capture_default_str();
  search->add_option("--parity", sa.parity)->check(CLI::IsMember({"even", "odd", "any"}))->capture_default_str();
  search->add_option("--trials", sa.cfg.trials)->capture_default_str();
  search->add_option("--seed", sa.seed, "Base seed")->required();
  search->add_option("--n-min", sa.cfg.n_range.lo)->capture_default_str();
  search->add_option("--n-max", sa.cfg.n_range.hi)->capture_default_str();
  search->add_option("--m-min", sa.cfg.m_range.lo)->capture_default_str();
  search->add_option("--m-max", sa.cfg.m_range.hi)->capture_default_str();
  search->add_option("--size-min", sa.cfg.size_range.lo)->capture_default_str();
  search->add_option("--size-max", sa.cfg.size_range.hi)->capture_default_str();
  search->add_option("--min-edge-size", sa.cfg.min_edge_size_filter, "Only audit instances with this minimum edge size")
      ->capture_default_str();
  search->add_option("--jobs", sa.jobs, "Worker threads")->capture_default_str();
  search->add_option("--report", sa.report_path, "Write the JSON report here");
  search->add_option("--violations-dir", sa.violations_dir, "Write each violation as a hypergraph file here");
  search->add_option("--format", sa.format)->check(CLI::IsMember({"text", "json"}));
  add_caps(search, sa.caps);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*analyze) return cmd_analyze(file, format, caps);
    if (*color) return cmd_color(file, method, out_path, trace_path, caps);
    if (*verify) return cmd_verify(file, coloring_file);
    if (*oracle) return cmd_oracle(file, out_path, format, caps);
    if (*search) return cmd_search(sa);
    if (*gen) {
      auto need = [&](std::size_t count) {
        if (gen_params.size() != count) {
          throw Error(ErrorKind::InvalidArgument,
                      "family '" + family + "' takes " + std::to_string(count) + " parameter(s)");
        }
      };
      Hypergraph h;
      if (family == "complete") {
        need(1);
        h = complete_graph(gen_params[0]);
      } else if (family == "complete-plus-triple") {
        need(1);
        h = complete_plus_triple(gen_params[0]);
      } else if (family == "universal") {
        need(2);
        h = universal_vertex_family(gen_params[0], gen_params[1]);
      } else if (family == "fano") {
        need(0);
        h = fano_plane();
      } else {
        need(0);
        if (!gen_seed) throw Error(ErrorKind::InvalidArgument, "gen random requires --seed");
        h = random_hypergraph(rn, rm, rmin, rmax, *gen_seed);
      }
      write_output(out_path, io::to_text(h));
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
