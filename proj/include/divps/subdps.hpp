#ifndef DIVPS_SUBDPS_HPP
#define DIVPS_SUBDPS_HPP

#include <vector>

#include "divps/catalog.hpp"
#include "divps/core.hpp"

namespace divps {

// Restriction of a configuration to a point subset: keep the unit dividons
// supported inside the subset and rebuild the dividon structure. Throws
// subset_too_small (|subset| < 4) or not_a_subset.
div_point_set sdps(const div_point_set& x, label_set subset);

// All C(n,m) sub configurations of size m; empty for m < 4.
std::vector<div_point_set> sdps_of(const div_point_set& x, int m);

// 1 iff every unit dividon of a is a unit dividon of b. Throws
// too_few_points for operands under 4 points.
int is_sub(const div_point_set& a, const div_point_set& b);

// Count of unit dividons common to both configurations; equals 6*C(k,4)
// with k the point-overlap size when both are subs of one configuration.
long long shared_unit_dividons(const div_point_set& a, const div_point_set& b);

// Largest m such that some m-subset restricts to a configuration isomorphic
// to the convex m-point configuration; 3 for any valid input of >= 3 points.
int convexity(const div_point_set& x);

struct comb_family_result {
  int v = 0, a = 0, b = 0;
  label_set subset = 0;
  // one entry per core: the core and the member subsets built over it
  std::vector<std::pair<label_set, std::vector<label_set>>> family;
};

// Constructs, for each way of dropping b elements of the given (v-a)-subset,
// the a+b size-(v-a) supersets of the resulting core, and verifies that the
// t-subsets shared by all members of one entry number exactly C(v-a-b, t).
comb_family_result comb_family(int v, int a, int b, label_set subset);

// Number of t-subsets common to every member of one family entry, counted
// by direct intersection.
long long shared_subsets(const std::vector<label_set>& members, int t);

}  // namespace divps

#endif
