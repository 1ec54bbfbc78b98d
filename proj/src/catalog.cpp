#include "divps/catalog.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

namespace divps {

namespace {

struct row {
  std::vector<int> divider, div1, div2;
};

div_point_set build(std::initializer_list<row> rows)
{
  label_set points = 0;
  std::vector<dividon> ds;
  for (const row& r : rows) {
    const dividon d = make_dividon(set_of(r.divider), set_of(r.div1), set_of(r.div2));
    points |= d.divider | d.div1 | d.div2;
    ds.push_back(d);
  }
  return validate_dps(points, ds);
}

}  // namespace

const char* config_name_spelling(config_name n)
{
  switch (n) {
    case config_name::conc41: return "Conc41";
    case config_name::conv4: return "Conv4";
    case config_name::xempty4: return "XEmpty4";
    case config_name::conv5: return "Conv5";
    case config_name::conc51: return "Conc51";
    case config_name::conc52: return "Conc52";
  }
  return "?";
}

std::optional<config_name> parse_config_name(const std::string& s)
{
  for (config_name n : {config_name::conc41, config_name::conv4, config_name::xempty4,
                        config_name::conv5, config_name::conc51, config_name::conc52})
    if (s == config_name_spelling(n)) return n;
  return std::nullopt;
}

div_point_set named_config(config_name n)
{
  switch (n) {
    case config_name::conc41:
      return build({{{1, 2}, {3}, {4}},
                    {{1, 3}, {2}, {4}},
                    {{1, 4}, {2}, {3}},
                    {{2, 3}, {1, 4}, {}},
                    {{2, 4}, {1, 3}, {}},
                    {{3, 4}, {1, 2}, {}}});
    case config_name::conv4:
      return build({{{1, 2}, {3, 4}, {}},
                    {{1, 3}, {2}, {4}},
                    {{1, 4}, {2, 3}, {}},
                    {{2, 3}, {1, 4}, {}},
                    {{2, 4}, {1}, {3}},
                    {{3, 4}, {1, 2}, {}}});
    case config_name::xempty4:
      return build({{{1, 2}, {3, 4}, {}},
                    {{1, 3}, {2, 4}, {}},
                    {{1, 4}, {2, 3}, {}},
                    {{2, 3}, {1, 4}, {}},
                    {{2, 4}, {1, 3}, {}},
                    {{3, 4}, {1, 2}, {}}});
    case config_name::conv5:
      return build({{{1, 2}, {3, 4, 5}, {}},
                    {{1, 3}, {2}, {4, 5}},
                    {{1, 4}, {2, 3}, {5}},
                    {{1, 5}, {2, 3, 4}, {}},
                    {{2, 3}, {1, 4, 5}, {}},
                    {{2, 4}, {1, 5}, {3}},
                    {{2, 5}, {1}, {3, 4}},
                    {{3, 4}, {1, 2, 5}, {}},
                    {{3, 5}, {1, 2}, {4}},
                    {{4, 5}, {1, 2, 3}, {}}});
    case config_name::conc51:
      return build({{{1, 2}, {3, 4, 5}, {}},
                    {{1, 3}, {2}, {4, 5}},
                    {{1, 4}, {2, 3, 5}, {}},
                    {{1, 5}, {2, 3}, {4}},
                    {{2, 3}, {1, 4, 5}, {}},
                    {{2, 4}, {1, 5}, {3}},
                    {{2, 5}, {1}, {3, 4}},
                    {{3, 4}, {1, 2, 5}, {}},
                    {{3, 5}, {1, 2}, {4}},
                    {{4, 5}, {1}, {2, 3}}});
    case config_name::conc52:
      return build({{{1, 2}, {3, 4, 5}, {}},
                    {{1, 3}, {2}, {4, 5}},
                    {{1, 4}, {2, 3, 5}, {}},
                    {{1, 5}, {2, 3}, {4}},
                    {{2, 3}, {1, 5}, {4}},
                    {{2, 4}, {1, 3, 5}, {}},
                    {{2, 5}, {1}, {3, 4}},
                    {{3, 4}, {1, 5}, {2}},
                    {{3, 5}, {1, 2}, {4}},
                    {{4, 5}, {1}, {2, 3}}});
  }
  throw error(errc::unknown_name, "unknown catalog configuration");
}

div_point_set conv_n(int n)
{
  if (n < 3) throw error(errc::bad_n, "convex configuration needs at least 3 points");
  if (n > max_labels) throw error(errc::bad_n, "too many points");
  label_set points = 0;
  for (int i = 1; i <= n; ++i) points |= label_bit(i);
  std::vector<dividon> ds;
  for_each_subset(points, 2, [&](label_set d) {
    const int a = lowest_label(d);
    const int b = lowest_label(d & ~label_bit(a));
    label_set inside = 0;
    for (int p = a + 1; p < b; ++p) inside |= label_bit(p);
    ds.push_back(make_dividon(d, inside, points & ~d & ~inside));
  });
  return validate_dps(points, ds);
}

namespace {

// per-point invariant used to prune the isomorphism search
std::vector<int> point_signature(const div_point_set& x, int p)
{
  std::vector<int> sig;
  for (const dividon& d : x.dividons) {
    if (contains(d.divider, p)) {
      sig.push_back(std::min(set_size(d.div1), set_size(d.div2)));
    } else {
      const label_set own = contains(d.div1, p) ? d.div1 : d.div2;
      sig.push_back(100 + set_size(own));
    }
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

div_point_set relabel(const div_point_set& x, const bijection& f)
{
  label_set points = 0;
  auto map_set = [&](label_set s) {
    label_set out = 0;
    for (int l : labels_of(s)) out |= label_bit(f[static_cast<std::size_t>(l)]);
    return out;
  };
  points = map_set(x.points);
  std::vector<dividon> ds;
  for (const dividon& d : x.dividons)
    ds.push_back(make_dividon(map_set(d.divider), map_set(d.div1), map_set(d.div2)));
  return validate_dps(points, ds);
}

struct iso_search {
  const div_point_set& a;
  const div_point_set& b;
  std::vector<int> a_points, b_points;
  std::vector<std::vector<int>> a_sigs, b_sigs;
  bijection mapping;   // label -> label, 0 = unassigned
  label_set used_b = 0;

  bool consistent(int p) const
  {
    // check every dividon of a whose divider contains p and is fully mapped
    for (const dividon& da : a.dividons) {
      label_set mapped_pts = 0;
      for (int l : labels_of(a.points))
        if (mapping[static_cast<std::size_t>(l)]) mapped_pts |= label_bit(l);
      if (!contains(mapped_pts, p)) continue;
      if ((da.divider & ~mapped_pts) != 0) continue;
      label_set db_divider = 0;
      for (int l : labels_of(da.divider))
        db_divider |= label_bit(mapping[static_cast<std::size_t>(l)]);
      const dividon& db = b.at(db_divider);
      // div size profile must agree
      const auto prof = [](const dividon& d) {
        return std::pair{std::min(set_size(d.div1), set_size(d.div2)),
                         std::max(set_size(d.div1), set_size(d.div2))};
      };
      if (prof(da) != prof(db)) return false;
      // same-div relation must agree on all mapped TBD pairs
      const std::vector<int> tbd = labels_of(da.tbd() & mapped_pts);
      for (std::size_t i = 0; i < tbd.size(); ++i)
        for (std::size_t j = i + 1; j < tbd.size(); ++j) {
          const label_set pa = label_bit(tbd[i]) | label_bit(tbd[j]);
          const label_set pb = label_bit(mapping[static_cast<std::size_t>(tbd[i])]) |
                               label_bit(mapping[static_cast<std::size_t>(tbd[j])]);
          if (phi(da, pa) != phi(db, pb)) return false;
        }
    }
    return true;
  }

  bool extend(std::size_t k)
  {
    if (k == a_points.size()) {
      // full structural verification at the leaf
      return relabel(a, mapping) == b;
    }
    const int p = a_points[k];
    for (std::size_t j = 0; j < b_points.size(); ++j) {
      const int q = b_points[j];
      if (contains(used_b, q)) continue;
      if (a_sigs[k] != b_sigs[j]) continue;
      mapping[static_cast<std::size_t>(p)] = q;
      used_b |= label_bit(q);
      if (consistent(p) && extend(k + 1)) return true;
      mapping[static_cast<std::size_t>(p)] = 0;
      used_b &= ~label_bit(q);
    }
    return false;
  }
};

}  // namespace

std::optional<bijection> isomorphism(const div_point_set& a, const div_point_set& b)
{
  if (a.size() != b.size()) return std::nullopt;
  iso_search s{a, b, labels_of(a.points), labels_of(b.points), {}, {}, {}, 0};
  for (int p : s.a_points) s.a_sigs.push_back(point_signature(a, p));
  for (int q : s.b_points) s.b_sigs.push_back(point_signature(b, q));
  {
    auto as = s.a_sigs;
    auto bs = s.b_sigs;
    std::sort(as.begin(), as.end());
    std::sort(bs.begin(), bs.end());
    if (as != bs) return std::nullopt;
  }
  s.mapping.assign(static_cast<std::size_t>(max_labels) + 1, 0);
  if (s.extend(0)) return s.mapping;
  return std::nullopt;
}

std::string canonical_form(const div_point_set& x)
{
  const std::vector<int> pts = labels_of(x.points);
  const int n = static_cast<int>(pts.size());
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);

  std::string best;
  bijection f(static_cast<std::size_t>(max_labels) + 1, 0);
  do {
    for (int i = 0; i < n; ++i)
      f[static_cast<std::size_t>(pts[static_cast<std::size_t>(i)])] =
          image[static_cast<std::size_t>(i)];
    const div_point_set y = relabel(x, f);
    std::string s;
    for (const dividon& d : y.dividons) {
      for (int l : labels_of(d.divider)) s += static_cast<char>('a' + l);
      s += '|';
      for (int l : labels_of(d.div1)) s += static_cast<char>('a' + l);
      s += '|';
      for (int l : labels_of(d.div2)) s += static_cast<char>('a' + l);
      s += ';';
    }
    if (best.empty() || s < best) best = std::move(s);
  } while (std::next_permutation(image.begin(), image.end()));
  return best;
}

const char* four_class_name(four_class c)
{
  switch (c) {
    case four_class::concave_one: return "ConcaveOne";
    case four_class::convex: return "Convex";
    case four_class::unlawful: return "Unlawful";
  }
  return "?";
}

four_class classify4(const div_point_set& x)
{
  if (x.size() != 4) throw error(errc::not_four_points, "classification needs 4 points");
  if (!check_planarity_laws(x).passed) return four_class::unlawful;
  if (isomorphism(x, named_config(config_name::conc41))) return four_class::concave_one;
  return four_class::convex;
}

unsigned psi_bits4(const div_point_set& x)
{
  if (x.size() != 4) throw error(errc::not_four_points, "psi bits need 4 points");
  unsigned bits = 0;
  int k = 0;
  for_each_subset(x.points, 2, [&](label_set d) {
    const dividon& dv = x.at(d);
    if (psi(dv.div1, dv.div2)) bits |= 1u << k;
    ++k;
  });
  return bits;
}

four_class classify4_bits(unsigned bits)
{
  static const std::array<four_class, 64> table = [] {
    std::array<four_class, 64> t{};
    const label_set points = set_of({1, 2, 3, 4});
    for (unsigned b = 0; b < 64; ++b) {
      std::vector<dividon> ds;
      int k = 0;
      for_each_subset(points, 2, [&](label_set d) {
        const label_set tbd = points & ~d;
        if ((b >> k) & 1u) {
          ds.push_back(make_dividon(d, tbd, 0));
        } else {
          const label_set lo = label_bit(lowest_label(tbd));
          ds.push_back(make_dividon(d, lo, tbd & ~lo));
        }
        ++k;
      });
      t[b] = classify4(validate_dps(points, ds));
    }
    return t;
  }();
  return table[bits & 63u];
}

}  // namespace divps
