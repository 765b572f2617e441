#ifndef HYPERCOLOR_GEN_HPP
#define HYPERCOLOR_GEN_HPP

// Named hypergraph families and a seeded random sampler.
//
// The sampler's bit stream is part of the file-level contract, so it is spelled
// out here rather than delegated to <random> distributions (whose outputs vary
// between standard library implementations):
//
//   splitmix64(x):  x += 0x9E3779B97F4A7C15;
//                   z = x; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
//                   z = (z ^ (z >> 27)) * 0x94D049BB133111EB; return z ^ (z >> 31)
//   Xoshiro256**:   state s[0..3] = four successive splitmix64 outputs from seed.
//   below(b):       threshold = (2^64 - b) mod b; draw r until r >= threshold;
//                   return r mod b.
//   random edge:    size = min_size + below(max_size - min_size + 1);
//                   pool = [0, 1, ..., n-1]; for j in [0, size):
//                   swap(pool[j], pool[j + below(n - j)]); edge = sort(pool[0, size)).
//                   An edge equal to an earlier one is discarded and redrawn.

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <vector>

#include "hypercolor/hypergraph.hpp"

namespace hypercolor {

/// One splitmix64 step: advances `state` and returns the mixed output.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class Xoshiro256 {
 public:
  explicit Xoshiro256(std::uint64_t seed) {
    for (auto& word : s_) word = splitmix64(seed);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  std::array<std::uint64_t, 4> s_{};
};

/// K_n as a 2-uniform hypergraph, pairs in lexicographic order.
inline Hypergraph complete_graph(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "complete_graph requires n >= 2");
  std::vector<std::vector<Vertex>> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) edges.push_back({a, b});
  }
  return Hypergraph::build(n, edges);
}

/// K_n (n even, n >= 4) together with the 3-edge {0,1,2}.
inline Hypergraph complete_plus_triple(std::size_t n) {
  if (n < 4 || n % 2 != 0) {
    throw Error(ErrorKind::OddOrder, "complete_plus_triple requires an even n >= 4, got " + std::to_string(n));
  }
  std::vector<std::vector<Vertex>> edges(complete_graph(n).edges());
  edges.push_back({0, 1, 2});
  return Hypergraph::build(n, edges);
}

/// m edges, each {0} plus `size - 1` private vertices.
inline Hypergraph universal_vertex_family(std::size_t m, std::size_t size) {
  if (m < 1 || size < 2) {
    throw Error(ErrorKind::InvalidArgument, "universal_vertex_family requires m >= 1 and size >= 2");
  }
  std::vector<std::vector<Vertex>> edges;
  Vertex next = 1;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Vertex> e{0};
    for (std::size_t j = 1; j < size; ++j) e.push_back(next++);
    edges.push_back(std::move(e));
  }
  return Hypergraph::build(next, edges);
}

/// The seven lines of the Fano plane on points 0..6.
inline Hypergraph fano_plane() {
  return Hypergraph::build(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

namespace detail {

inline std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
  constexpr std::uint64_t cap = UINT64_MAX / 2;
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > cap) return cap;
  }
  return static_cast<std::uint64_t>(result);
}

}  // namespace detail

/// m distinct edges with sizes uniform in [min_size, max_size]; see the header
/// comment for the exact sampling procedure.
inline Hypergraph random_hypergraph(std::size_t n, std::size_t m, std::size_t min_size, std::size_t max_size,
                                    std::uint64_t seed) {
  if (min_size < 2 || min_size > max_size || max_size > n || m < 1) {
    throw Error(ErrorKind::InvalidArgument,
                "random_hypergraph requires 2 <= min_size <= max_size <= n and m >= 1");
  }
  std::uint64_t available = 0;
  for (std::size_t s = min_size; s <= max_size; ++s) available += detail::binomial_saturating(n, s);
  if (m > available) {
    throw Error(ErrorKind::Unsatisfiable, "cannot draw " + std::to_string(m) + " distinct edges; only " +
                                              std::to_string(available) + " exist");
  }

  Xoshiro256 rng(seed);
  std::set<Edge> seen;
  std::vector<std::vector<Vertex>> edges;
  std::vector<Vertex> pool(n);
  while (edges.size() < m) {
    const auto size = static_cast<std::size_t>(rng.between(min_size, max_size));
    for (Vertex v = 0; v < n; ++v) pool[v] = v;
    for (std::size_t j = 0; j < size; ++j) std::swap(pool[j], pool[j + rng.below(n - j)]);
    Edge e(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
    std::sort(e.begin(), e.end());
    if (seen.insert(e).second) edges.push_back(std::move(e));
  }
  return Hypergraph::build(n, edges);
}

}  // namespace hypercolor

#endif  // HYPERCOLOR_GEN_HPP
