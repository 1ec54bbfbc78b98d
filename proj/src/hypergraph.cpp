#include "divps/hypergraph.hpp"

#include <algorithm>
#include <map>

namespace divps {

const char* scenario_name(scenario s)
{
  switch (s) {
    case scenario::i: return "I";
    case scenario::ii: return "II";
    case scenario::iii: return "III";
    case scenario::violation: return "Violation";
  }
  return "?";
}

h4 make_h4(label_set points)
{
  if (set_size(points) != 4) throw error(errc::not_four_points, "h4 needs 4 points");
  h4 h;
  int k = 0;
  for_each_subset(points, 2, [&](label_set d) { h.vertices[static_cast<std::size_t>(k++)] = d; });
  int e = 0;
  for (int p : labels_of(points)) {
    std::array<int, 3> edge{};
    int t = 0;
    for (int v = 0; v < 6; ++v)
      if (contains(h.vertices[static_cast<std::size_t>(v)], p)) edge[static_cast<std::size_t>(t++)] = v;
    h.edges[static_cast<std::size_t>(e++)] = edge;
  }
  return h;
}

std::pair<h4, binary_coloring> h4_coloring(const div_point_set& x)
{
  if (x.size() != 4) throw error(errc::not_four_points, "h4 coloring needs 4 points");
  h4 h = make_h4(x.points);
  binary_coloring c(6, 0);
  for (int v = 0; v < 6; ++v) {
    const dividon& d = x.at(h.vertices[static_cast<std::size_t>(v)]);
    c[static_cast<std::size_t>(v)] = psi(d.div1, d.div2);
  }
  return {h, c};
}

scenario h4_scenario(const h4& h, const binary_coloring& c)
{
  for (const auto& e : h.edges) {
    int zeros = 0;
    for (int v : e) zeros += c[static_cast<std::size_t>(v)] == 0;
    if (zeros != 3 && zeros != 1) return scenario::violation;
  }
  int zeros = 0;
  for (int v = 0; v < 6; ++v) zeros += c[static_cast<std::size_t>(v)] == 0;
  switch (zeros) {
    case 6: return scenario::i;
    case 3: return scenario::ii;
    case 2: return scenario::iii;
    default: return scenario::violation;
  }
}

std::pair<hudps, binary_coloring> hudps_coloring(const unit_div_point_set& u)
{
  hudps h;
  h.vertices = u.unit_dividons;
  binary_coloring c;
  c.reserve(h.vertices.size());
  for (const unit_dividon& v : h.vertices) c.push_back(v.same_div);

  std::map<label_set, std::vector<int>> by_xi;
  std::map<label_set, std::vector<int>> by_divider;
  for (int i = 0; i < static_cast<int>(h.vertices.size()); ++i) {
    const unit_dividon& v = h.vertices[static_cast<std::size_t>(i)];
    by_xi[xi(v)].push_back(i);
    by_divider[v.divider].push_back(i);
  }
  for (auto& [support, idx] : by_xi) h.e1.push_back(idx);
  for (auto& [d, idx] : by_divider) {
    // same-divider triples whose TBD pairs cover exactly 3 points
    const int k = static_cast<int>(idx.size());
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        for (int l = j + 1; l < k; ++l) {
          const label_set tbd_union = h.vertices[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])].tbd |
                                      h.vertices[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])].tbd |
                                      h.vertices[static_cast<std::size_t>(idx[static_cast<std::size_t>(l)])].tbd;
          if (set_size(tbd_union) == 3)
            h.e2.push_back({idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)],
                            idx[static_cast<std::size_t>(l)]});
        }
  }
  return {h, c};
}

namespace {

bool e1_edge_lawful(const hudps& h, const binary_coloring& c, const std::vector<int>& e)
{
  // convex pattern: two 0-colored vertices with swapped divider/tbd, rest 1
  bool convex = false;
  for (std::size_t i = 0; i < e.size() && !convex; ++i)
    for (std::size_t j = i + 1; j < e.size() && !convex; ++j) {
      const unit_dividon& v1 = h.vertices[static_cast<std::size_t>(e[i])];
      const unit_dividon& v2 = h.vertices[static_cast<std::size_t>(e[j])];
      if (v1.divider != v2.tbd || v2.divider != v1.tbd) continue;
      if (c[static_cast<std::size_t>(e[i])] != 0 || c[static_cast<std::size_t>(e[j])] != 0) continue;
      bool rest_one = true;
      for (int v : e)
        if (v != e[i] && v != e[j] && c[static_cast<std::size_t>(v)] != 1) rest_one = false;
      convex = rest_one;
    }
  // concave pattern: three 0-colored vertices whose dividers share a point,
  // rest 1
  bool concave = false;
  for (std::size_t i = 0; i < e.size() && !concave; ++i)
    for (std::size_t j = i + 1; j < e.size() && !concave; ++j)
      for (std::size_t k = j + 1; k < e.size() && !concave; ++k) {
        const label_set common = h.vertices[static_cast<std::size_t>(e[i])].divider &
                                 h.vertices[static_cast<std::size_t>(e[j])].divider &
                                 h.vertices[static_cast<std::size_t>(e[k])].divider;
        if (set_size(common) != 1) continue;
        if (c[static_cast<std::size_t>(e[i])] != 0 || c[static_cast<std::size_t>(e[j])] != 0 ||
            c[static_cast<std::size_t>(e[k])] != 0)
          continue;
        bool rest_one = true;
        for (int v : e)
          if (v != e[i] && v != e[j] && v != e[k] && c[static_cast<std::size_t>(v)] != 1)
            rest_one = false;
        concave = rest_one;
      }
  return convex != concave;
}

}  // namespace

hudps_report check_hudps_laws(const hudps& h, const binary_coloring& c)
{
  hudps_report r;
  for (const auto& e : h.e1)
    if (!e1_edge_lawful(h, c, e)) r.violations.push_back({1, e});
  for (const auto& e : h.e2) {
    int ones = 0;
    for (int v : e) ones += c[static_cast<std::size_t>(v)] == 1;
    if (ones != 1 && ones != 3) r.violations.push_back({2, e});
  }
  r.passed = r.violations.empty();
  return r;
}

}  // namespace divps
