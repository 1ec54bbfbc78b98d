#ifndef DIVPS_HYPERGRAPH_HPP
#define DIVPS_HYPERGRAPH_HPP

#include <array>
#include <utility>
#include <vector>

#include "divps/core.hpp"

namespace divps {

// The 4-point divider hypergraph: 6 divider-vertices, 4 edges (one per point,
// joining the 3 dividers through it). Each vertex lies in exactly 2 edges.
struct h4 {
  std::array<label_set, 6> vertices{};           // dividers in lex order
  std::array<std::array<int, 3>, 4> edges{};     // vertex indices per point
};

// A 0/1 color per vertex index of the owning hypergraph.
using binary_coloring = std::vector<int>;

enum class scenario { i, ii, iii, violation };

const char* scenario_name(scenario s);

// Builds the divider hypergraph of a 4-point configuration and colors each
// divider-vertex with psi of its dividon. Throws not_four_points.
std::pair<h4, binary_coloring> h4_coloring(const div_point_set& x);

h4 make_h4(label_set points);

// Violation if some edge is colored neither [0,0,0] nor [0,1,1]; otherwise
// the unique scenario by zero count (6 -> I, 3 -> II, 2 -> III).
scenario h4_scenario(const h4& h, const binary_coloring& c);

// The 3-and-6-uniform hypergraph over unit dividons: E1 edges group the 6
// vertices sharing a 4-point support, E2 edges group same-divider triples
// whose TBD union has 3 points.
struct hudps {
  std::vector<unit_dividon> vertices;      // sorted by (divider, tbd)
  std::vector<std::vector<int>> e1, e2;    // sorted vertex-index lists
};

// Builds the hypergraph of a unit configuration, coloring each vertex with
// its same-div bit.
std::pair<hudps, binary_coloring> hudps_coloring(const unit_div_point_set& u);

struct hudps_violation {
  int edge_set = 0;  // 1 or 2
  std::vector<int> edge;
};

struct hudps_report {
  bool passed = true;
  std::vector<hudps_violation> violations;
};

// E1 law: the edge's coloring matches the convex pattern (two 0s on
// complementary divider/tbd vertices, rest 1) xor the concave pattern (three
// 0s on dividers through one point, rest 1). E2 law: every vertex triple
// reads [1,1,1] or [1,0,0].
hudps_report check_hudps_laws(const hudps& h, const binary_coloring& c);

}  // namespace divps

#endif
