#ifndef HYPERCOLOR_COLOR_HPP
#define HYPERCOLOR_COLOR_HPP

// Constructive colorers:
//   two_color   - proper 2-coloring when the 1-intersection graph is bipartite,
//                 built edge by edge with a queue-driven local repair.
//   four_color  - proper <=4-coloring from a 4-class coloring of the
//                 1-intersection graph, as the sum of two 2-colorings.
//   greedy_color- proper (k+1)-coloring from any proper k-class coloring of
//                 the 1-intersection graph.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <string>
#include <variant>
#include <vector>

#include "hypercolor/exact.hpp"
#include "hypercolor/hypergraph.hpp"

namespace hypercolor {

struct TwoColorResult {
  VertexColoring coloring;
  RecoloringTrace trace;
};

namespace detail {

[[noreturn]] inline void invariant_violation(const std::string& what) {
  throw Error(ErrorKind::InternalInvariantViolation, what);
}

class RecoloringProcess {
 public:
  RecoloringProcess(const Hypergraph& h, const EdgeClassColoring& sides)
      : h_(h),
        sides_(sides),
        colors_(h.vertex_count(), 0),
        recolored_(h.vertex_count(), 0),
        enqueued_(h.edge_count(), 0) {}

  TwoColorResult run() {
    for (EdgeIndex i = 0; i < h_.edge_count(); ++i) {
      if (is_monochromatic(h_.edge(i), colors_)) repair(i);
    }
    return {VertexColoring::from_colors(colors_), std::move(trace_)};
  }

 private:
  // Edges 0..inserted_ are present; everything else is ignored.
  void repair(EdgeIndex inserted) {
    RepairRound round;
    round.inserted = inserted;
    round.initial_queue = {inserted};

    const Color start_color = colors_[h_.edge(inserted).front()];
    const auto start_side = sides_.classes[inserted];

    std::vector<Vertex> touched_vertices;
    std::vector<EdgeIndex> touched_edges{inserted};
    enqueued_[inserted] = 1;
    std::deque<EdgeIndex> queue{inserted};

    for (std::size_t t = 0; !queue.empty(); ++t) {
      const EdgeIndex head = queue.front();
      const Edge& head_edge = h_.edge(head);
      if (!is_monochromatic(head_edge, colors_)) invariant_violation("queue head is not monochromatic");

      auto fresh = std::find_if(head_edge.begin(), head_edge.end(), [&](Vertex v) { return !recolored_[v]; });
      if (fresh == head_edge.end()) {
        invariant_violation("edge " + std::to_string(head) + " has every vertex already recolored in round " +
                            std::to_string(inserted));
      }
      const Vertex v = *fresh;
      colors_[v] ^= 1U;
      recolored_[v] = 1;
      touched_vertices.push_back(v);

      RecoloringStep step;
      step.t = t;
      step.edge = head;
      step.vertex = v;
      step.new_color = colors_[v];

      for (EdgeIndex f : h_.incident_edges(v)) {
        if (f > inserted) break;
        if (f == head || !is_monochromatic(h_.edge(f), colors_)) continue;
        // f just turned monochromatic through v, so it meets the head edge
        // in v alone, and its color fixes its side of the bipartition.
        if (detail::intersection_size(h_.edge(f), head_edge, 2) != 1) {
          invariant_violation("newly monochromatic edge " + std::to_string(f) + " does not 1-intersect edge " +
                              std::to_string(head));
        }
        const bool same_as_start = colors_[v] == start_color;
        if ((sides_.classes[f] == start_side) != same_as_start) {
          invariant_violation("monochromatic edge " + std::to_string(f) + " lies on the wrong side");
        }
        if (enqueued_[f]) {
          invariant_violation("edge " + std::to_string(f) + " entered the queue twice in round " +
                              std::to_string(inserted));
        }
        enqueued_[f] = 1;
        touched_edges.push_back(f);
        step.newly_monochromatic.push_back(f);
      }

      queue.pop_front();
      std::erase_if(queue, [&](EdgeIndex e) { return !is_monochromatic(h_.edge(e), colors_); });
      queue.insert(queue.end(), step.newly_monochromatic.begin(), step.newly_monochromatic.end());
      step.queue_after.assign(queue.begin(), queue.end());
      round.steps.push_back(std::move(step));
    }

    for (Vertex v : touched_vertices) recolored_[v] = 0;
    for (EdgeIndex e : touched_edges) enqueued_[e] = 0;
    trace_.rounds.push_back(std::move(round));
  }

  const Hypergraph& h_;
  const EdgeClassColoring& sides_;
  std::vector<Color> colors_;
  std::vector<char> recolored_;
  std::vector<char> enqueued_;
  RecoloringTrace trace_;
};

}  // namespace detail

/// Proper coloring with at most two colors, plus the repair log.
///
/// Edges are inserted in index order starting from the all-0 coloring. When
/// the inserted edge is monochromatic, a repair round runs a FIFO queue of
/// monochromatic edges: the head's lowest-index vertex not yet flipped in this
/// round is flipped, edges that became monochromatic are appended in
/// ascending order, and queued edges that stopped being monochromatic leave.
///
/// Throws NotBipartiteError if the 1-intersection graph has an odd cycle.
inline TwoColorResult two_color(const Hypergraph& h) {
  auto sides = bipartition(one_intersection_graph(h));
  if (auto* odd = std::get_if<OddCycle>(&sides)) throw NotBipartiteError(std::move(odd->cycle));

  auto result = detail::RecoloringProcess(h, std::get<EdgeClassColoring>(sides)).run();
  if (!is_proper(h, result.coloring).proper) detail::invariant_violation("two_color produced an improper coloring");
  return result;
}

struct FourColorResult {
  VertexColoring coloring;
  EdgeClassColoring classes;  // 4-class coloring of the 1-intersection graph
  VertexColoring low;         // colors {0,1}, proper on edges of classes 0 and 1
  VertexColoring high;        // colors {0,2}, proper on edges of classes 2 and 3
};

/// Proper coloring with at most four colors when the 1-intersection graph is
/// 4-colorable. Edges of classes {0,1} and {2,3} form two spanning
/// sub-hypergraphs with bipartite 1-intersection graphs; each is 2-colored and
/// the result is their pointwise sum.
///
/// Throws Not4Colorable1IG, or LimitExceeded from the exact solver.
inline FourColorResult four_color(const Hypergraph& h, const ExactLimits& limits = {}) {
  const auto ig = one_intersection_graph(h);
  auto classes = graph_k_coloring(ig, 4, limits);
  if (!classes) throw Error(ErrorKind::Not4Colorable1IG, "1-intersection graph is not 4-colorable");

  std::vector<EdgeIndex> low_edges;
  std::vector<EdgeIndex> high_edges;
  for (EdgeIndex i = 0; i < h.edge_count(); ++i) {
    (classes->classes[i] < 2 ? low_edges : high_edges).push_back(i);
  }
  const auto low_part = h.subhypergraph(low_edges);
  const auto high_part = h.subhypergraph(high_edges);

  auto split_two_color = [](const Hypergraph& part, const char* name) {
    try {
      return two_color(part).coloring;
    } catch (const NotBipartiteError&) {
      detail::invariant_violation(std::string("sub-hypergraph ") + name + " has a non-bipartite 1-intersection graph");
    }
  };
  VertexColoring low = split_two_color(low_part, "of classes {0,1}");
  VertexColoring high = split_two_color(high_part, "of classes {2,3}");
  for (auto& c : high.colors) c *= 2;
  high = VertexColoring::from_colors(std::move(high.colors));

  if (!is_proper(low_part, low).proper || !is_proper(high_part, high).proper) {
    detail::invariant_violation("a split 2-coloring is not proper on its sub-hypergraph");
  }

  std::vector<Color> sum(h.vertex_count());
  for (std::size_t v = 0; v < sum.size(); ++v) sum[v] = low.colors[v] + high.colors[v];
  auto coloring = VertexColoring::from_colors(std::move(sum));
  if (!is_proper(h, coloring).proper) detail::invariant_violation("four_color produced an improper coloring");
  return {std::move(coloring), std::move(*classes), std::move(low), std::move(high)};
}

/// Colors vertices in id order with the smallest color in 0..k that no
/// critical edge forbids. An edge is critical at v when v is its last
/// uncolored vertex and its other vertices share one color. Two critical edges
/// of one class meet in v and, not being 1-intersecting, in a colored vertex
/// too, so each class forbids at most one color.
///
/// Throws InvalidClasses if `classes` is not a proper coloring of the
/// 1-intersection graph of h.
inline VertexColoring greedy_color(const Hypergraph& h, const EdgeClassColoring& classes) {
  if (classes.classes.size() != h.edge_count() || !is_proper_class_coloring(one_intersection_graph(h), classes)) {
    throw Error(ErrorKind::InvalidClasses, "edge classes are not a proper coloring of the 1-intersection graph");
  }
  const std::size_t k = classes.k;
  constexpr Color none = UINT32_MAX;

  std::vector<Color> colors(h.vertex_count(), 0);
  std::vector<Color> forbidden_by_class(k, none);
  std::vector<char> forbidden(k + 1, 0);
  std::vector<std::uint32_t> used_classes;

  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    for (EdgeIndex e : h.incident_edges(v)) {
      const Edge& edge = h.edge(e);
      if (edge.back() != v) continue;
      const Color c = colors[edge.front()];
      const bool critical = std::all_of(edge.begin(), edge.end() - 1, [&](Vertex u) { return colors[u] == c; });
      if (!critical) continue;
      const auto cls = classes.classes[e];
      if (forbidden_by_class[cls] == none) {
        forbidden_by_class[cls] = c;
        used_classes.push_back(cls);
      } else if (forbidden_by_class[cls] != c) {
        detail::invariant_violation("class " + std::to_string(cls) + " forbids two colors at vertex " +
                                    std::to_string(v));
      }
      if (c <= k) forbidden[c] = 1;
    }

    std::size_t forbidden_count = 0;
    for (auto f : forbidden) forbidden_count += f ? 1 : 0;
    if (forbidden_count > k) {
      throw Error(ErrorKind::NoFreeColor, "all " + std::to_string(k + 1) + " colors are forbidden at vertex " +
                                              std::to_string(v));
    }
    colors[v] = static_cast<Color>(std::find(forbidden.begin(), forbidden.end(), 0) - forbidden.begin());

    for (auto cls : used_classes) forbidden_by_class[cls] = none;
    used_classes.clear();
    std::fill(forbidden.begin(), forbidden.end(), 0);
  }

  auto coloring = VertexColoring::from_colors(std::move(colors));
  if (!is_proper(h, coloring).proper) detail::invariant_violation("greedy_color produced an improper coloring");
  return coloring;
}

}  // namespace hypercolor

#endif  // HYPERCOLOR_COLOR_HPP
