#ifndef HYPERCOLOR_IO_HPP
#define HYPERCOLOR_IO_HPP

// Text formats.
//
// Hypergraph:
//   # comment
//   p hyper <n> <m>          (optional, must precede all edge lines)
//   e <v1> <v2> ... <vk>     (0-based vertex ids)
// Without a header, n = 1 + largest vertex id mentioned.
//
// Coloring: one "<vertex_id> <color_index>" line per vertex, ids 0..n-1 in order.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hypercolor/hypergraph.hpp"

namespace hypercolor::io {

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::optional<std::uint64_t> parse_uint(std::string_view s) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

[[noreturn]] inline void fail(ErrorKind kind, std::size_t line_no, const std::string& what) {
  throw Error(kind, "line " + std::to_string(line_no) + ": " + what);
}

inline std::uint32_t parse_id(std::string_view token, std::size_t line_no, const char* what) {
  auto value = parse_uint(token);
  if (!value || *value > UINT32_MAX) {
    fail(ErrorKind::Parse, line_no, std::string("invalid ") + what + " '" + std::string(token) + "'");
  }
  return static_cast<std::uint32_t>(*value);
}

inline bool is_blank_or_comment(const std::vector<std::string_view>& tokens) {
  return tokens.empty() || tokens.front().starts_with('#');
}

}  // namespace detail

inline Hypergraph parse_hypergraph(std::istream& in) {
  std::optional<std::size_t> header_n;
  std::optional<std::size_t> header_m;
  std::size_t header_line = 0;
  std::vector<std::vector<Vertex>> raw;
  std::size_t max_id_plus_one = 0;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = detail::split_ws(line);
    if (detail::is_blank_or_comment(tokens)) continue;

    if (tokens[0] == "p") {
      if (header_n) detail::fail(ErrorKind::Parse, line_no, "duplicate header line");
      if (!raw.empty()) detail::fail(ErrorKind::Parse, line_no, "header must precede edge lines");
      if (tokens.size() != 4 || tokens[1] != "hyper") {
        detail::fail(ErrorKind::Parse, line_no, "expected header 'p hyper <n> <m>'");
      }
      header_n = detail::parse_id(tokens[2], line_no, "vertex count");
      header_m = detail::parse_id(tokens[3], line_no, "edge count");
      header_line = line_no;
    } else if (tokens[0] == "e") {
      std::vector<Vertex> edge;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        const Vertex v = detail::parse_id(tokens[i], line_no, "vertex id");
        if (header_n && v >= *header_n) {
          detail::fail(ErrorKind::VertexOutOfRange, line_no,
                       "vertex id " + std::to_string(v) + " is out of range for n = " + std::to_string(*header_n));
        }
        edge.push_back(v);
        max_id_plus_one = std::max<std::size_t>(max_id_plus_one, std::size_t{v} + 1);
      }
      std::vector<Vertex> distinct = edge;
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      if (distinct.size() < 2) {
        detail::fail(ErrorKind::EdgeTooSmall, line_no,
                     "edge has fewer than 2 distinct vertices; every hyperedge must have size at least 2");
      }
      raw.push_back(std::move(edge));
    } else {
      detail::fail(ErrorKind::Parse, line_no, "unrecognized line starting with '" + std::string(tokens[0]) + "'");
    }
  }

  if (header_m && *header_m != raw.size()) {
    detail::fail(ErrorKind::Parse, header_line,
                 "header declares " + std::to_string(*header_m) + " edges but " + std::to_string(raw.size()) +
                     " edge lines follow");
  }
  return Hypergraph::build(header_n.value_or(max_id_plus_one), raw);
}

inline Hypergraph parse_hypergraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_hypergraph(in);
}

inline void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  out << "p hyper " << h.vertex_count() << ' ' << h.edge_count() << '\n';
  for (const auto& e : h.edges()) {
    out << 'e';
    for (Vertex v : e) out << ' ' << v;
    out << '\n';
  }
}

inline std::string to_text(const Hypergraph& h) {
  std::ostringstream out;
  write_hypergraph(out, h);
  return out.str();
}

inline VertexColoring parse_coloring(std::istream& in) {
  std::vector<Color> colors;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = detail::split_ws(line);
    if (detail::is_blank_or_comment(tokens)) continue;
    if (tokens.size() != 2) detail::fail(ErrorKind::Parse, line_no, "expected '<vertex_id> <color_index>'");
    const auto v = detail::parse_id(tokens[0], line_no, "vertex id");
    const auto c = detail::parse_id(tokens[1], line_no, "color index");
    if (v != colors.size()) {
      detail::fail(ErrorKind::Parse, line_no,
                   "expected vertex id " + std::to_string(colors.size()) + ", got " + std::to_string(v));
    }
    colors.push_back(c);
  }
  return VertexColoring::from_colors(std::move(colors));
}

inline VertexColoring parse_coloring(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_coloring(in);
}

inline void write_coloring(std::ostream& out, const VertexColoring& c) {
  for (std::size_t v = 0; v < c.colors.size(); ++v) out << v << ' ' << c.colors[v] << '\n';
}

inline std::string to_text(const VertexColoring& c) {
  std::ostringstream out;
  write_coloring(out, c);
  return out.str();
}

inline Hypergraph read_hypergraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
  return parse_hypergraph(in);
}

inline VertexColoring read_coloring_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
  return parse_coloring(in);
}

}  // namespace hypercolor::io

#endif  // HYPERCOLOR_IO_HPP
