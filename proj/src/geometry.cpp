#include "divps/geometry.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace divps {

int orientation(const planar_point& p, const planar_point& q, const planar_point& r)
{
  const std::int64_t cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return cross > 0 ? 1 : cross < 0 ? -1 : 0;
}

namespace {

void check_input(const planar_point_set& pts)
{
  std::map<std::pair<std::int64_t, std::int64_t>, int> seen;
  label_set labels = 0;
  for (const planar_point& p : pts) {
    if (p.label < 1 || p.label > max_labels)
      throw error(errc::out_of_range, "label out of range: " + std::to_string(p.label));
    if (contains(labels, p.label))
      throw error(errc::duplicate_point, "duplicate label " + std::to_string(p.label));
    labels |= label_bit(p.label);
    if (std::abs(p.x) > max_coordinate || std::abs(p.y) > max_coordinate)
      throw error(errc::coordinate_out_of_range,
                  "coordinates must satisfy |x|,|y| <= 10^9 (point " + std::to_string(p.label) + ")");
    auto [it, fresh] = seen.emplace(std::pair{p.x, p.y}, p.label);
    if (!fresh)
      throw error(errc::duplicate_point, "points " + std::to_string(it->second) + " and " +
                                             std::to_string(p.label) + " coincide");
  }
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (orientation(pts[i], pts[j], pts[k]) == 0)
          throw error(errc::collinear_triple, "points " + std::to_string(pts[i].label) + ", " +
                                                  std::to_string(pts[j].label) + ", " +
                                                  std::to_string(pts[k].label) + " are collinear");
}

}  // namespace

div_point_set build_dps(const planar_point_set& pts)
{
  check_input(pts);
  std::map<int, const planar_point*> by_label;
  label_set points = 0;
  for (const planar_point& p : pts) {
    by_label[p.label] = &p;
    points |= label_bit(p.label);
  }
  std::vector<dividon> ds;
  for_each_subset(points, 2, [&](label_set d) {
    const auto ls = labels_of(d);
    const planar_point& a = *by_label[ls[0]];
    const planar_point& b = *by_label[ls[1]];
    label_set left = 0, right = 0;
    for (const planar_point& p : pts) {
      if (contains(d, p.label)) continue;
      (orientation(a, b, p) > 0 ? left : right) |= label_bit(p.label);
    }
    ds.push_back(make_dividon(d, left, right));
  });
  return validate_dps(points, ds);
}

bool in_convex_position(const planar_point_set& pts, label_set subset)
{
  std::map<int, const planar_point*> by_label;
  for (const planar_point& p : pts) by_label[p.label] = &p;
  std::vector<const planar_point*> sel;
  for (int l : labels_of(subset)) {
    auto it = by_label.find(l);
    if (it == by_label.end()) throw error(errc::not_a_subset, "unknown label " + std::to_string(l));
    sel.push_back(it->second);
  }
  if (sel.size() < 3) return true;
  // every point must be a hull vertex: no point inside the triangle of any
  // other three
  const std::size_t n = sel.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        for (std::size_t c = b + 1; c < n; ++c) {
          if (a == i || b == i || c == i) continue;
          const int s1 = orientation(*sel[a], *sel[b], *sel[i]);
          const int s2 = orientation(*sel[b], *sel[c], *sel[i]);
          const int s3 = orientation(*sel[c], *sel[a], *sel[i]);
          if (s1 == s2 && s2 == s3) return false;
        }
  return true;
}

std::optional<label_set> find_convex_subset(const planar_point_set& pts, int k)
{
  if (k < 3) throw error(errc::bad_parameters, "convex subset size must be at least 3");
  label_set all = 0;
  for (const planar_point& p : pts) all |= label_bit(p.label);
  std::optional<label_set> found;
  for_each_subset(all, k, [&](label_set s) {
    if (!found && in_convex_position(pts, s)) found = s;
  });
  return found;
}

}  // namespace divps
