#ifndef HYPERCOLOR_EXACT_HPP
#define HYPERCOLOR_EXACT_HPP

// Exact decision procedures used as ground truth: bipartiteness with an
// odd-cycle witness, exact k-coloring of simple graphs (DSATUR-ordered
// backtracking), and exact chromatic numbers of graphs and hypergraphs.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <variant>
#include <vector>

#include "hypercolor/hypergraph.hpp"

namespace hypercolor {

/// Size caps for the exponential solvers. Exceeding one is an error, never a
/// silent fallback.
struct ExactLimits {
  std::size_t max_graph_vertices = 64;
  std::size_t max_hypergraph_vertices = 24;
};

struct OddCycle {
  /// Consecutive entries are adjacent, as are the last and the first.
  std::vector<std::uint32_t> cycle;
};

/// BFS 2-coloring. Components are started from their lowest-index vertex,
/// which goes to class 0; neighbors are scanned in ascending order.
inline std::variant<EdgeClassColoring, OddCycle> bipartition(const IntersectionGraph& g) {
  constexpr std::uint32_t unset = UINT32_MAX;
  const auto n = static_cast<std::uint32_t>(g.vertex_count());
  std::vector<std::uint32_t> side(n, unset);
  std::vector<std::uint32_t> parent(n, unset);
  std::deque<std::uint32_t> queue;

  for (std::uint32_t root = 0; root < n; ++root) {
    if (side[root] != unset) continue;
    side[root] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      for (auto w : g.neighbors(u)) {
        if (side[w] == unset) {
          side[w] = side[u] ^ 1U;
          parent[w] = u;
          queue.push_back(w);
          continue;
        }
        if (side[w] != side[u]) continue;

        // Same side across a BFS edge: both endpoints sit at the same depth,
        // so climbing in lockstep meets at their lowest common ancestor.
        std::vector<std::uint32_t> left{u};
        std::vector<std::uint32_t> right{w};
        auto a = u;
        auto b = w;
        while (a != b) {
          a = parent[a];
          b = parent[b];
          left.push_back(a);
          right.push_back(b);
        }
        right.pop_back();  // lca already recorded on the left path
        OddCycle witness;
        witness.cycle = std::move(left);
        witness.cycle.insert(witness.cycle.end(), right.rbegin(), right.rend());
        return witness;
      }
    }
  }
  return EdgeClassColoring{std::move(side), 2};
}

namespace detail {

inline void check_graph_cap(const IntersectionGraph& g, const ExactLimits& limits) {
  if (g.vertex_count() > limits.max_graph_vertices) {
    throw Error(ErrorKind::LimitExceeded,
                "graph has " + std::to_string(g.vertex_count()) + " vertices, exact-solver cap is " +
                    std::to_string(limits.max_graph_vertices));
  }
}

class DsaturSearch {
 public:
  DsaturSearch(const IntersectionGraph& g, std::size_t k)
      : g_(g), k_(k), n_(g.vertex_count()), color_(n_, unset), counts_(n_ * k, 0), saturation_(n_, 0) {}

  std::optional<EdgeClassColoring> run() {
    if (!extend(0, 0)) return std::nullopt;
    return EdgeClassColoring{color_, k_};
  }

 private:
  static constexpr std::uint32_t unset = UINT32_MAX;

  // Highest saturation, then highest degree, then lowest index.
  std::uint32_t pick() const {
    std::uint32_t best = unset;
    for (std::uint32_t v = 0; v < n_; ++v) {
      if (color_[v] != unset) continue;
      if (best == unset || saturation_[v] > saturation_[best] ||
          (saturation_[v] == saturation_[best] && g_.degree(v) > g_.degree(best))) {
        best = v;
      }
    }
    return best;
  }

  void assign(std::uint32_t v, std::uint32_t c) {
    color_[v] = c;
    for (auto u : g_.neighbors(v)) {
      if (counts_[u * k_ + c]++ == 0) ++saturation_[u];
    }
  }

  void unassign(std::uint32_t v) {
    const auto c = color_[v];
    for (auto u : g_.neighbors(v)) {
      if (--counts_[u * k_ + c] == 0) --saturation_[u];
    }
    color_[v] = unset;
  }

  bool extend(std::size_t colored, std::size_t used) {
    if (colored == n_) return true;
    const auto v = pick();
    if (saturation_[v] >= k_) return false;
    // A fresh color is interchangeable with any other unused one.
    const auto limit = std::min(k_, used + 1);
    for (std::uint32_t c = 0; c < limit; ++c) {
      if (counts_[v * k_ + c] != 0) continue;
      assign(v, c);
      if (extend(colored + 1, std::max<std::size_t>(used, c + 1))) return true;
      unassign(v);
    }
    return false;
  }

  const IntersectionGraph& g_;
  std::size_t k_;
  std::size_t n_;
  std::vector<std::uint32_t> color_;
  std::vector<std::uint32_t> counts_;  // counts_[v*k + c]: neighbors of v colored c
  std::vector<std::size_t> saturation_;
};

}  // namespace detail

/// Exact proper k-coloring, or nullopt when none exists.
inline std::optional<EdgeClassColoring> graph_k_coloring(const IntersectionGraph& g, std::size_t k,
                                                         const ExactLimits& limits = {}) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "graph_k_coloring requires k >= 1");
  detail::check_graph_cap(g, limits);
  return detail::DsaturSearch(g, k).run();
}

/// Size of a greedily grown clique; a lower bound on the chromatic number.
inline std::size_t greedy_clique_size(const IntersectionGraph& g) {
  const auto n = static_cast<std::uint32_t>(g.vertex_count());
  std::vector<std::uint32_t> by_degree(n);
  for (std::uint32_t v = 0; v < n; ++v) by_degree[v] = v;
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](auto a, auto b) { return g.degree(a) > g.degree(b); });

  std::size_t best = n == 0 ? 0 : 1;
  std::vector<std::uint32_t> clique;
  for (std::uint32_t seed = 0; seed < n; ++seed) {
    clique.assign(1, seed);
    for (auto v : by_degree) {
      if (v == seed) continue;
      if (std::all_of(clique.begin(), clique.end(), [&](auto u) { return g.adjacent(u, v); })) {
        clique.push_back(v);
      }
    }
    best = std::max(best, clique.size());
  }
  return best;
}

inline std::size_t graph_chromatic_number(const IntersectionGraph& g, const ExactLimits& limits = {}) {
  detail::check_graph_cap(g, limits);
  if (g.vertex_count() == 0) return 0;
  for (std::size_t k = greedy_clique_size(g);; ++k) {
    if (detail::DsaturSearch(g, k).run()) return k;
  }
}

/// Smallest feasible k together with a solution.
inline EdgeClassColoring graph_optimal_coloring(const IntersectionGraph& g, const ExactLimits& limits = {}) {
  detail::check_graph_cap(g, limits);
  if (g.vertex_count() == 0) return {};
  for (std::size_t k = greedy_clique_size(g);; ++k) {
    if (auto c = detail::DsaturSearch(g, k).run()) return *c;
  }
}

struct HypergraphChromatic {
  std::size_t chromatic_number = 0;
  VertexColoring witness;
};

namespace detail {

// Backtracking over covered vertices in order of decreasing edge degree. An
// edge is checked when its last vertex (in search order) gets a color.
class HypergraphSearch {
 public:
  explicit HypergraphSearch(const Hypergraph& h) : h_(h), color_(h.vertex_count(), 0) {
    for (Vertex v = 0; v < h.vertex_count(); ++v) {
      if (!h.incident_edges(v).empty()) order_.push_back(v);
    }
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
      return h.incident_edges(a).size() > h.incident_edges(b).size();
    });
    std::vector<std::size_t> position(h.vertex_count(), 0);
    for (std::size_t p = 0; p < order_.size(); ++p) position[order_[p]] = p;
    closing_.assign(order_.size(), {});
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
      std::size_t last = 0;
      for (Vertex v : h.edge(static_cast<EdgeIndex>(i))) last = std::max(last, position[v]);
      closing_[last].push_back(static_cast<EdgeIndex>(i));
    }
  }

  std::optional<VertexColoring> run(std::size_t k) {
    k_ = k;
    std::fill(color_.begin(), color_.end(), 0);
    if (!extend(0, 0)) return std::nullopt;
    return VertexColoring::from_colors(color_);
  }

 private:
  bool extend(std::size_t p, std::size_t used) {
    if (p == order_.size()) return true;
    const Vertex v = order_[p];
    const auto limit = std::min(k_, used + 1);
    for (Color c = 0; c < limit; ++c) {
      color_[v] = c;
      bool ok = true;
      for (EdgeIndex e : closing_[p]) {
        if (is_monochromatic(h_.edge(e), color_)) {
          ok = false;
          break;
        }
      }
      if (ok && extend(p + 1, std::max<std::size_t>(used, c + 1))) return true;
    }
    color_[v] = 0;
    return false;
  }

  const Hypergraph& h_;
  std::vector<Color> color_;
  std::vector<Vertex> order_;
  std::vector<std::vector<EdgeIndex>> closing_;
  std::size_t k_ = 0;
};

}  // namespace detail

/// Exact chromatic number with a witness. Uncovered vertices get color 0.
inline HypergraphChromatic hypergraph_chromatic_number(const Hypergraph& h, const ExactLimits& limits = {}) {
  if (h.vertex_count() > limits.max_hypergraph_vertices) {
    throw Error(ErrorKind::LimitExceeded,
                "hypergraph has " + std::to_string(h.vertex_count()) + " vertices, exact-oracle cap is " +
                    std::to_string(limits.max_hypergraph_vertices));
  }
  if (h.vertex_count() == 0) return {0, VertexColoring{}};
  if (h.edge_count() == 0) return {1, VertexColoring::from_colors(std::vector<Color>(h.vertex_count(), 0))};

  detail::HypergraphSearch search(h);
  for (std::size_t k = 2;; ++k) {
    if (auto c = search.run(k)) return {k, std::move(*c)};
  }
}

}  // namespace hypercolor

#endif  // HYPERCOLOR_EXACT_HPP
