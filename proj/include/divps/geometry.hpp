#ifndef DIVPS_GEOMETRY_HPP
#define DIVPS_GEOMETRY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "divps/core.hpp"

namespace divps {

// Coordinates are exact integers capped at |x|,|y| <= 10^9 so the cross
// product in the orientation test fits in int64.
struct planar_point {
  int label = 0;
  std::int64_t x = 0;
  std::int64_t y = 0;
};

using planar_point_set = std::vector<planar_point>;

constexpr std::int64_t max_coordinate = 1'000'000'000;

// Sign of (q-p) x (r-p): +1 counterclockwise, -1 clockwise, 0 collinear.
int orientation(const planar_point& p, const planar_point& q, const planar_point& r);

// Builds the div point set of a general-position point set: each pair is a
// divider and the remaining points are partitioned by the side of its line.
// Throws collinear_triple, duplicate_point, coordinate_out_of_range.
div_point_set build_dps(const planar_point_set& pts);

// 1 iff every point of the subset is a vertex of the subset's convex hull.
bool in_convex_position(const planar_point_set& pts, label_set subset);

// Brute-force scan for a k-subset in convex position; nullopt when none
// exists.
std::optional<label_set> find_convex_subset(const planar_point_set& pts, int k);

}  // namespace divps

#endif
