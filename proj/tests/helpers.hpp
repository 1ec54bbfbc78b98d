#ifndef DIVPS_TEST_HELPERS_HPP
#define DIVPS_TEST_HELPERS_HPP

#include <random>

#include "divps/geometry.hpp"

namespace divps::testing {

// deterministic random general-position point set with labels 1..n
inline planar_point_set random_points(std::mt19937& rng, int n, int coord_max = 1000)
{
  std::uniform_int_distribution<int> coord(0, coord_max);
  while (true) {
    planar_point_set pts;
    for (int l = 1; l <= n; ++l) pts.push_back({l, coord(rng), coord(rng)});
    try {
      build_dps(pts);
      return pts;
    } catch (const error&) {
      continue;  // collinear or duplicate; redraw
    }
  }
}

}  // namespace divps::testing

#endif
