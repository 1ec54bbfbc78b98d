#include "divps/subdps.hpp"

#include <algorithm>
#include <set>

namespace divps {

div_point_set sdps(const div_point_set& x, label_set subset)
{
  if ((subset & ~x.points) != 0) throw error(errc::not_a_subset, "subset exceeds the point set");
  if (set_size(subset) < 4) throw error(errc::subset_too_small, "restriction needs 4 points");
  const unit_div_point_set u = to_unit(x);
  std::vector<unit_dividon> kept;
  for (const unit_dividon& d : u.unit_dividons)
    if ((xi(d) & ~subset) == 0) kept.push_back(d);
  return from_unit(validate_udps(subset, kept));
}

std::vector<div_point_set> sdps_of(const div_point_set& x, int m)
{
  std::vector<div_point_set> out;
  if (m < 4 || m > x.size()) return out;
  for_each_subset(x.points, m, [&](label_set s) { out.push_back(sdps(x, s)); });
  return out;
}

int is_sub(const div_point_set& a, const div_point_set& b)
{
  if (a.size() < 4 || b.size() < 4)
    throw error(errc::too_few_points, "sub relation needs 4-point operands");
  const unit_div_point_set ua = to_unit(a);
  const unit_div_point_set ub = to_unit(b);
  std::set<unit_dividon, bool (*)(const unit_dividon&, const unit_dividon&)> bs(
      [](const unit_dividon& l, const unit_dividon& r) {
        return std::tie(l.divider, l.tbd, l.same_div) < std::tie(r.divider, r.tbd, r.same_div);
      });
  for (const unit_dividon& d : ub.unit_dividons) bs.insert(d);
  for (const unit_dividon& d : ua.unit_dividons)
    if (!bs.count(d)) return 0;
  return 1;
}

long long shared_unit_dividons(const div_point_set& a, const div_point_set& b)
{
  if (a.size() < 4 || b.size() < 4)
    throw error(errc::too_few_points, "shared count needs 4-point operands");
  const unit_div_point_set ua = to_unit(a);
  const unit_div_point_set ub = to_unit(b);
  long long count = 0;
  std::set<std::tuple<label_set, label_set, int>> bs;
  for (const unit_dividon& d : ub.unit_dividons) bs.insert({d.divider, d.tbd, d.same_div});
  for (const unit_dividon& d : ua.unit_dividons)
    count += bs.count({d.divider, d.tbd, d.same_div}) ? 1 : 0;
  return count;
}

int convexity(const div_point_set& x)
{
  const int n = x.size();
  if (n < 3) throw error(errc::too_few_points, "convexity needs 3 points");
  if (n == 3) return 3;

  // classify every 4-subset once; a convex m-subset must have all its
  // 4-subsets convex
  std::set<label_set> convex4;
  for_each_subset(x.points, 4, [&](label_set s) {
    if (classify4(sdps(x, s)) == four_class::convex) convex4.insert(s);
  });

  for (int m = n; m >= 5; --m) {
    bool found = false;
    const div_point_set target = conv_n(m);
    for_each_subset(x.points, m, [&](label_set s) {
      if (found) return;
      bool all_convex = true;
      for_each_subset(s, 4, [&](label_set q) {
        if (all_convex && !convex4.count(q)) all_convex = false;
      });
      if (all_convex && isomorphism(sdps(x, s), target)) found = true;
    });
    if (found) return m;
  }
  return convex4.empty() ? 3 : 4;
}

long long shared_subsets(const std::vector<label_set>& members, int t)
{
  if (members.empty()) return 0;
  long long count = 0;
  for_each_subset(members.front(), t, [&](label_set s) {
    for (label_set m : members)
      if ((s & ~m) != 0) return;
    ++count;
  });
  return count;
}

comb_family_result comb_family(int v, int a, int b, label_set subset)
{
  if (v < 2 || v > max_labels || a < 1 || b < 1 || b >= v - a)
    throw error(errc::bad_parameters, "need 1 <= a and 1 <= b < v-a");
  label_set universe = 0;
  for (int i = 1; i <= v; ++i) universe |= label_bit(i);
  if ((subset & ~universe) != 0 || set_size(subset) != v - a)
    throw error(errc::bad_parameters, "subset must be a (v-a)-subset of {1..v}");

  comb_family_result res{v, a, b, subset, {}};
  // one core per way of dropping b elements of the subset; the a+b members
  // of each entry are (v-a)-supersets of the core built from cyclic b-windows
  // over the a+b outside elements, ordered so the given subset is the first
  // window; every outside element is missed by some window, so the member
  // intersection is exactly the core
  for_each_subset(subset, b, [&](label_set dropped) {
    const label_set core = subset & ~dropped;
    std::vector<int> outside = labels_of(dropped);
    for (int l : labels_of(universe & ~core & ~dropped)) outside.push_back(l);
    const int w = static_cast<int>(outside.size());  // = a + b
    std::vector<label_set> members;
    for (int k = 0; k < w; ++k) {
      label_set add = 0;
      for (int i = 0; i < b; ++i) add |= label_bit(outside[static_cast<std::size_t>((k + i) % w)]);
      members.push_back(core | add);
    }
    res.family.emplace_back(core, std::move(members));
  });
  return res;
}

}  // namespace divps
