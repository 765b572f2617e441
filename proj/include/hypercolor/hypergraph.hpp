#ifndef HYPERCOLOR_HYPERGRAPH_HPP
#define HYPERCOLOR_HYPERGRAPH_HPP

// Core data types: hypergraphs, vertex colorings, edge-class colorings of the
// 1-intersection graph, and the step log of the bipartite recoloring process.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hypercolor {

using Vertex = std::uint32_t;
using EdgeIndex = std::uint32_t;
using Color = std::uint32_t;

/// Sorted, duplicate-free list of vertex ids.
using Edge = std::vector<Vertex>;

enum class ErrorKind {
  EdgeTooSmall,
  VertexOutOfRange,
  Parse,
  InvalidArgument,
  LimitExceeded,
  NotBipartite1IG,
  Not4Colorable1IG,
  InvalidClasses,
  NoFreeColor,
  OddOrder,
  Unsatisfiable,
  InternalInvariantViolation,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EdgeTooSmall: return "EdgeTooSmall";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
    case ErrorKind::NotBipartite1IG: return "NotBipartite1IG";
    case ErrorKind::Not4Colorable1IG: return "Not4Colorable1IG";
    case ErrorKind::InvalidClasses: return "InvalidClasses";
    case ErrorKind::NoFreeColor: return "NoFreeColor";
    case ErrorKind::OddOrder: return "OddOrder";
    case ErrorKind::Unsatisfiable: return "Unsatisfiable";
    case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by colorers that require a bipartite 1-intersection graph.
/// Carries an odd cycle of edge indices as the witness.
class NotBipartiteError : public Error {
 public:
  explicit NotBipartiteError(std::vector<EdgeIndex> odd_cycle)
      : Error(ErrorKind::NotBipartite1IG,
              "1-intersection graph is not bipartite (odd cycle of length " +
                  std::to_string(odd_cycle.size()) + ")"),
        odd_cycle_(std::move(odd_cycle)) {}

  const std::vector<EdgeIndex>& odd_cycle() const noexcept { return odd_cycle_; }

 private:
  std::vector<EdgeIndex> odd_cycle_;
};

namespace detail {

/// Size of the intersection of two sorted ranges, saturating at `cap`.
inline std::size_t intersection_size(std::span<const Vertex> a, std::span<const Vertex> b,
                                     std::size_t cap) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      if (++count >= cap) return count;
      ++i;
      ++j;
    }
  }
  return count;
}

}  // namespace detail

/// A hypergraph on vertices 0..n-1. Edges have size >= 2, are stored sorted,
/// and are pairwise distinct; an edge's position in `edges()` is its identity.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Validates and normalizes raw edges. Duplicate edges (as sets) are dropped
  /// keeping the first occurrence; the count is available from
  /// duplicates_removed().
  static Hypergraph build(std::size_t n, const std::vector<std::vector<Vertex>>& raw_edges) {
    Hypergraph h;
    h.n_ = n;
    std::set<Edge> seen;
    for (std::size_t i = 0; i < raw_edges.size(); ++i) {
      Edge e = raw_edges[i];
      std::sort(e.begin(), e.end());
      e.erase(std::unique(e.begin(), e.end()), e.end());
      if (!e.empty() && e.back() >= n) {
        throw Error(ErrorKind::VertexOutOfRange,
                    "edge " + std::to_string(i) + ": vertex id " + std::to_string(e.back()) +
                        " is out of range for n = " + std::to_string(n));
      }
      if (e.size() < 2) {
        throw Error(ErrorKind::EdgeTooSmall,
                    "edge " + std::to_string(i) +
                        " has fewer than 2 distinct vertices; every hyperedge must have size at least 2");
      }
      if (!seen.insert(e).second) {
        ++h.duplicates_removed_;
        continue;
      }
      h.edges_.push_back(std::move(e));
    }
    h.index_incidence();
    return h;
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeIndex i) const { return edges_.at(i); }

  /// Edge indices containing `v`, ascending.
  const std::vector<EdgeIndex>& incident_edges(Vertex v) const { return incidence_.at(v); }

  std::size_t duplicates_removed() const noexcept { return duplicates_removed_; }

  std::size_t min_edge_size() const noexcept {
    std::size_t best = 0;
    for (const auto& e : edges_) best = best == 0 ? e.size() : std::min(best, e.size());
    return best;
  }

  /// Spanning sub-hypergraph keeping the listed edges in the given order.
  Hypergraph subhypergraph(std::span<const EdgeIndex> keep) const {
    Hypergraph h;
    h.n_ = n_;
    h.edges_.reserve(keep.size());
    for (EdgeIndex i : keep) h.edges_.push_back(edges_.at(i));
    h.index_incidence();
    return h;
  }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void index_incidence() {
    incidence_.assign(n_, {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      for (Vertex v : edges_[i]) incidence_[v].push_back(static_cast<EdgeIndex>(i));
    }
  }

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeIndex>> incidence_;
  std::size_t duplicates_removed_ = 0;
};

inline Hypergraph build_hypergraph(std::size_t n, const std::vector<std::vector<Vertex>>& raw_edges) {
  return Hypergraph::build(n, raw_edges);
}

/// Simple undirected graph on edge indices; also used as a plain graph by the
/// exact solvers.
class IntersectionGraph {
 public:
  IntersectionGraph() = default;
  explicit IntersectionGraph(std::size_t vertex_count) : adjacency_(vertex_count) {}

  /// Builds from an edge list; ignores self-loops and repeated pairs.
  static IntersectionGraph from_pairs(std::size_t vertex_count,
                                      const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs) {
    IntersectionGraph g(vertex_count);
    for (auto [a, b] : pairs) {
      if (a >= vertex_count || b >= vertex_count) {
        throw Error(ErrorKind::InvalidArgument, "graph edge endpoint out of range");
      }
      if (a == b) continue;
      g.adjacency_[a].push_back(b);
      g.adjacency_[b].push_back(a);
    }
    for (auto& row : g.adjacency_) {
      std::sort(row.begin(), row.end());
      row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    return g;
  }

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }

  std::size_t edge_count() const noexcept {
    std::size_t total = 0;
    for (const auto& row : adjacency_) total += row.size();
    return total / 2;
  }

  const std::vector<std::uint32_t>& neighbors(std::uint32_t i) const { return adjacency_.at(i); }
  std::size_t degree(std::uint32_t i) const { return adjacency_.at(i).size(); }

  bool adjacent(std::uint32_t i, std::uint32_t j) const {
    const auto& row = adjacency_.at(i);
    return std::binary_search(row.begin(), row.end(), j);
  }

  friend bool operator==(const IntersectionGraph&, const IntersectionGraph&) = default;

 private:
  friend IntersectionGraph one_intersection_graph(const Hypergraph& h);
  std::vector<std::vector<std::uint32_t>> adjacency_;
};

/// Joins edges i and j iff they share exactly one vertex.
inline IntersectionGraph one_intersection_graph(const Hypergraph& h) {
  const auto m = h.edge_count();
  IntersectionGraph g(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (detail::intersection_size(h.edges()[i], h.edges()[j], 2) == 1) {
        g.adjacency_[i].push_back(static_cast<std::uint32_t>(j));
        g.adjacency_[j].push_back(static_cast<std::uint32_t>(i));
      }
    }
  }
  return g;
}

struct VertexColoring {
  std::vector<Color> colors;
  /// 1 + max color, or 0 when there are no vertices.
  std::size_t k = 0;

  static VertexColoring from_colors(std::vector<Color> colors) {
    VertexColoring c;
    for (Color x : colors) c.k = std::max<std::size_t>(c.k, std::size_t{x} + 1);
    c.colors = std::move(colors);
    return c;
  }

  /// Number of distinct colors that actually occur.
  std::size_t distinct_colors() const {
    std::vector<Color> sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
  }

  friend bool operator==(const VertexColoring&, const VertexColoring&) = default;
};

/// Coloring of the vertices of a 1-intersection graph, i.e. of hyperedges.
struct EdgeClassColoring {
  std::vector<std::uint32_t> classes;
  std::size_t k = 0;

  friend bool operator==(const EdgeClassColoring&, const EdgeClassColoring&) = default;
};

inline bool is_proper_class_coloring(const IntersectionGraph& g, const EdgeClassColoring& c) {
  if (c.classes.size() != g.vertex_count()) return false;
  for (std::uint32_t i = 0; i < g.vertex_count(); ++i) {
    if (c.classes[i] >= c.k) return false;
    for (auto j : g.neighbors(i)) {
      if (c.classes[i] == c.classes[j]) return false;
    }
  }
  return true;
}

struct ProperCheck {
  bool proper = true;
  std::vector<EdgeIndex> monochromatic;
};

inline bool is_monochromatic(const Edge& e, std::span<const Color> colors) {
  return std::all_of(e.begin(), e.end(), [&](Vertex v) { return colors[v] == colors[e.front()]; });
}

inline ProperCheck is_proper(const Hypergraph& h, const VertexColoring& c) {
  if (c.colors.size() != h.vertex_count()) {
    throw Error(ErrorKind::InvalidArgument,
                "coloring covers " + std::to_string(c.colors.size()) + " vertices, hypergraph has " +
                    std::to_string(h.vertex_count()));
  }
  ProperCheck result;
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    if (is_monochromatic(h.edges()[i], c.colors)) {
      result.proper = false;
      result.monochromatic.push_back(static_cast<EdgeIndex>(i));
    }
  }
  return result;
}

struct RecoloringStep {
  std::size_t t = 0;
  EdgeIndex edge = 0;    // h_t, the queue head being repaired
  Vertex vertex = 0;     // v_t, the vertex that was flipped
  Color new_color = 0;
  std::vector<EdgeIndex> newly_monochromatic;  // C_t, ascending
  std::vector<EdgeIndex> queue_after;          // Q_{t+1}

  friend bool operator==(const RecoloringStep&, const RecoloringStep&) = default;
};

/// One repair round, run after inserting an edge that was monochromatic.
struct RepairRound {
  EdgeIndex inserted = 0;
  std::vector<EdgeIndex> initial_queue;
  std::vector<RecoloringStep> steps;

  friend bool operator==(const RepairRound&, const RepairRound&) = default;
};

struct RecoloringTrace {
  std::vector<RepairRound> rounds;

  friend bool operator==(const RecoloringTrace&, const RecoloringTrace&) = default;
};

}  // namespace hypercolor

#endif  // HYPERCOLOR_HYPERGRAPH_HPP
