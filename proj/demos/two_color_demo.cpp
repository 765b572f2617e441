// Colors the hypergraph {0,1}, {1,2}, {2,3,4} and prints the repair log.

#include <iostream>

#include "hypercolor/color.hpp"
#include "hypercolor/io.hpp"

int main() {
  using namespace hypercolor;
  const auto h = build_hypergraph(5, {{0, 1}, {1, 2}, {2, 3, 4}});
  const auto result = two_color(h);
  for (const auto& round : result.trace.rounds) {
    std::cout << "inserted edge " << round.inserted << '\n';
    for (const auto& step : round.steps) {
      std::cout << "  t=" << step.t << " repair edge " << step.edge << " by flipping vertex " << step.vertex
                << " to " << step.new_color << ", " << step.newly_monochromatic.size() << " edge(s) queued\n";
    }
  }
  io::write_coloring(std::cout, result.coloring);
}
