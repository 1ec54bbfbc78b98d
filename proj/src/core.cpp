#include "divps/core.hpp"

#include <algorithm>
#include <map>

namespace divps {

const char* errc_name(errc c)
{
  switch (c) {
    case errc::wrong_dividon_count: return "WrongDividonCount";
    case errc::overlapping_divs: return "OverlappingDivs";
    case errc::bad_divider_size: return "BadDividerSize";
    case errc::duplicate_divider: return "DuplicateDivider";
    case errc::tbd_not_in_divs: return "TbdNotInDivs";
    case errc::not_two_tbd: return "NotTwoTbd";
    case errc::too_few_points: return "TooFewPoints";
    case errc::more_than_two_divs: return "MoreThanTwoDivs";
    case errc::inconsistent_same_div: return "InconsistentSameDiv";
    case errc::not_four_points: return "NotFourPoints";
    case errc::bad_n: return "BadN";
    case errc::unknown_name: return "UnknownName";
    case errc::subset_too_small: return "SubsetTooSmall";
    case errc::not_a_subset: return "NotASubset";
    case errc::bad_parameters: return "BadParameters";
    case errc::collinear_triple: return "CollinearTriple";
    case errc::duplicate_point: return "DuplicatePoint";
    case errc::coordinate_out_of_range: return "CoordinateOutOfRange";
    case errc::out_of_range: return "OutOfRange";
    case errc::too_large: return "TooLarge";
    case errc::partial_assignment: return "PartialAssignment";
    case errc::malformed_dimacs: return "MalformedDimacs";
    case errc::resource_limit: return "ResourceLimit";
    case errc::bad_config: return "BadConfig";
  }
  return "UnknownError";
}

dividon make_dividon(label_set divider, label_set a, label_set b)
{
  dividon d;
  d.divider = divider;
  label_set tbd = a | b;
  if (tbd == 0) return d;
  // the div containing the smallest TBD label comes first; an empty div last
  if (contains(a, lowest_label(tbd))) {
    d.div1 = a;
    d.div2 = b;
  } else {
    d.div1 = b;
    d.div2 = a;
  }
  return d;
}

const dividon& div_point_set::at(label_set divider) const
{
  auto it = std::lower_bound(dividons.begin(), dividons.end(), divider,
                             [](const dividon& d, label_set k) { return d.divider < k; });
  if (it == dividons.end() || it->divider != divider)
    throw error(errc::bad_parameters, "no dividon for requested divider");
  return *it;
}

const unit_dividon& unit_div_point_set::at(label_set divider, label_set tbd) const
{
  auto key = std::pair{divider, tbd};
  auto it = std::lower_bound(unit_dividons.begin(), unit_dividons.end(), key,
                             [](const unit_dividon& u, const std::pair<label_set, label_set>& k) {
                               return std::pair{u.divider, u.tbd} < k;
                             });
  if (it == unit_dividons.end() || it->divider != divider || it->tbd != tbd)
    throw error(errc::bad_parameters, "no unit dividon for requested key");
  return *it;
}

div_point_set validate_dps(label_set points, std::span<const dividon> dividons)
{
  if (points == 0) throw error(errc::bad_parameters, "empty point set");
  const int n = set_size(points);
  const std::size_t expected = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (dividons.size() != expected)
    throw error(errc::wrong_dividon_count,
                "expected " + std::to_string(expected) + " dividons, got " +
                    std::to_string(dividons.size()));

  div_point_set out;
  out.points = points;
  out.dividons.reserve(expected);
  for (const dividon& d : dividons) {
    if (set_size(d.divider) != 2 || (d.divider & ~points) != 0)
      throw error(errc::bad_divider_size, "divider must be a 2-subset of the points");
    if ((d.div1 & d.div2) != 0)
      throw error(errc::overlapping_divs, "divs must be disjoint");
    if ((d.div1 | d.div2) != (points & ~d.divider))
      throw error(errc::overlapping_divs, "divs must partition the TBD points");
    out.dividons.push_back(make_dividon(d.divider, d.div1, d.div2));
  }
  std::sort(out.dividons.begin(), out.dividons.end(),
            [](const dividon& a, const dividon& b) { return a.divider < b.divider; });
  for (std::size_t i = 1; i < out.dividons.size(); ++i)
    if (out.dividons[i].divider == out.dividons[i - 1].divider)
      throw error(errc::duplicate_divider, "two dividons share a divider");
  return out;
}

unit_div_point_set validate_udps(label_set points, std::span<const unit_dividon> unit_dividons)
{
  const int n = set_size(points);
  if (n < 4) throw error(errc::too_few_points, "unit form needs at least 4 points");
  const std::size_t expected =
      static_cast<std::size_t>(n) * (n - 1) / 2 * ((n - 2) * (n - 3) / 2);
  if (unit_dividons.size() != expected)
    throw error(errc::wrong_dividon_count,
                "expected " + std::to_string(expected) + " unit dividons, got " +
                    std::to_string(unit_dividons.size()));

  unit_div_point_set out;
  out.points = points;
  out.unit_dividons.assign(unit_dividons.begin(), unit_dividons.end());
  for (const unit_dividon& u : out.unit_dividons) {
    if (set_size(u.divider) != 2 || (u.divider & ~points) != 0)
      throw error(errc::bad_divider_size, "divider must be a 2-subset of the points");
    if (set_size(u.tbd) != 2 || (u.tbd & ~points) != 0 || (u.tbd & u.divider) != 0)
      throw error(errc::overlapping_divs, "tbd must be a 2-subset disjoint from the divider");
    if (u.same_div > 1) throw error(errc::bad_parameters, "same_div must be 0 or 1");
  }
  std::sort(out.unit_dividons.begin(), out.unit_dividons.end(),
            [](const unit_dividon& a, const unit_dividon& b) {
              return std::pair{a.divider, a.tbd} < std::pair{b.divider, b.tbd};
            });
  for (std::size_t i = 1; i < out.unit_dividons.size(); ++i)
    if (out.unit_dividons[i].divider == out.unit_dividons[i - 1].divider &&
        out.unit_dividons[i].tbd == out.unit_dividons[i - 1].tbd)
      throw error(errc::duplicate_divider, "two unit dividons share a (divider, tbd) key");
  return out;
}

int phi(label_set div1, label_set div2, label_set tbd2)
{
  if (set_size(tbd2) != 2 || (tbd2 & ~(div1 | div2)) != 0)
    throw error(errc::tbd_not_in_divs, "tbd pair must be 2 points inside the divs");
  return ((tbd2 & div1) == tbd2 || (tbd2 & div2) == tbd2) ? 1 : 0;
}

int phi(const dividon& d, label_set tbd2) { return phi(d.div1, d.div2, tbd2); }

int psi(label_set div1, label_set div2)
{
  if (set_size(div1 | div2) != 2)
    throw error(errc::not_two_tbd, "psi needs exactly 2 TBD points");
  return (set_size(div1) == 2 || set_size(div2) == 2) ? 1 : 0;
}

namespace {

// phi of the dividon with divider d, over the 2 points of R outside d
int phi_in_subset(const div_point_set& x, label_set d, label_set r)
{
  const dividon& dv = x.at(d);
  return phi(dv, r & ~d);
}

void check_sharing_triple(int law, label_set r, const std::array<label_set, 3>& ds,
                          const std::array<int, 3>& vals, law_report& rep)
{
  // laws 1 and 2 quantified over every ordering of the triple
  for (int i = 0; i < 3; ++i) {
    const int a = vals[static_cast<std::size_t>(i)];
    const int b = vals[static_cast<std::size_t>((i + 1) % 3)];
    const int c = vals[static_cast<std::size_t>((i + 2) % 3)];
    const bool ok = (law == 1) ? ((a == 0) == (b == c)) : ((a == 1) == (b != c));
    if (!ok) {
      law_violation v;
      v.law = law;
      v.subset = r;
      v.dividers = ds;
      for (int k = 0; k < 3; ++k)
        v.tbds[static_cast<std::size_t>(k)] = r & ~ds[static_cast<std::size_t>(k)];
      rep.passed = false;
      rep.violations.push_back(v);
      return;
    }
  }
}

}  // namespace

law_report check_planarity_laws(const div_point_set& x)
{
  law_report rep;
  if (x.size() <= 3) return rep;  // vacuous

  for_each_subset(x.points, 4, [&](label_set r) {
    // laws 1-2: triples of dividers inside R sharing one point
    for (int p : labels_of(r)) {
      std::array<label_set, 3> ds{};
      std::array<int, 3> vals{};
      int k = 0;
      for (int q : labels_of(r & ~label_bit(p)))
        ds[static_cast<std::size_t>(k++)] = label_bit(p) | label_bit(q);
      for (int i = 0; i < 3; ++i)
        vals[static_cast<std::size_t>(i)] = phi_in_subset(x, ds[static_cast<std::size_t>(i)], r);
      check_sharing_triple(1, r, ds, vals, rep);
      check_sharing_triple(2, r, ds, vals, rep);
    }
    // law 3: the 3 dividers inside a 3-subset of R
    for_each_subset(r, 3, [&](label_set t) {
      std::array<label_set, 3> ds{};
      std::array<int, 3> vals{};
      int k = 0;
      for_each_subset(t, 2, [&](label_set d) { ds[static_cast<std::size_t>(k++)] = d; });
      bool all_zero = true;
      for (int i = 0; i < 3; ++i) {
        vals[static_cast<std::size_t>(i)] = phi_in_subset(x, ds[static_cast<std::size_t>(i)], r);
        all_zero = all_zero && vals[static_cast<std::size_t>(i)] == 0;
      }
      if (all_zero) {
        law_violation v;
        v.law = 3;
        v.subset = r;
        v.dividers = ds;
        for (int i = 0; i < 3; ++i)
          v.tbds[static_cast<std::size_t>(i)] = r & ~ds[static_cast<std::size_t>(i)];
        rep.passed = false;
        rep.violations.push_back(v);
      }
    });
  });
  return rep;
}

unit_div_point_set to_unit(const div_point_set& x)
{
  if (x.size() < 4) throw error(errc::too_few_points, "unit form needs at least 4 points");
  unit_div_point_set out;
  out.points = x.points;
  for (const dividon& d : x.dividons) {
    for_each_subset(d.tbd(), 2, [&](label_set pair) {
      unit_dividon u;
      u.divider = d.divider;
      u.tbd = pair;
      u.same_div = static_cast<std::uint8_t>(phi(d, pair));
      out.unit_dividons.push_back(u);
    });
  }
  std::sort(out.unit_dividons.begin(), out.unit_dividons.end(),
            [](const unit_dividon& a, const unit_dividon& b) {
              return std::pair{a.divider, a.tbd} < std::pair{b.divider, b.tbd};
            });
  return out;
}

div_point_set from_unit(const unit_div_point_set& u)
{
  const unit_div_point_set checked = validate_udps(u.points, u.unit_dividons);
  div_point_set out;
  out.points = checked.points;

  for_each_subset(checked.points, 2, [&](label_set divider) {
    const std::vector<int> tbd = labels_of(checked.points & ~divider);
    const int m = static_cast<int>(tbd.size());
    std::vector<int> parent(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) parent[static_cast<std::size_t>(i)] = i;
    auto find = [&](int a) {
      while (parent[static_cast<std::size_t>(a)] != a) a = parent[static_cast<std::size_t>(a)];
      return a;
    };
    // merge same-div pairs, then check every bit against the closure
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        const unit_dividon& ud =
            checked.at(divider, label_bit(tbd[static_cast<std::size_t>(i)]) |
                                    label_bit(tbd[static_cast<std::size_t>(j)]));
        if (ud.same_div) parent[static_cast<std::size_t>(find(i))] = find(j);
      }
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        const unit_dividon& ud =
            checked.at(divider, label_bit(tbd[static_cast<std::size_t>(i)]) |
                                    label_bit(tbd[static_cast<std::size_t>(j)]));
        if (!ud.same_div && find(i) == find(j))
          throw error(errc::inconsistent_same_div,
                      "same-div bits are not transitive for a divider");
      }
    std::map<int, label_set> classes;
    for (int i = 0; i < m; ++i)
      classes[find(i)] |= label_bit(tbd[static_cast<std::size_t>(i)]);
    if (classes.size() > 2)
      throw error(errc::more_than_two_divs, "same-div bits force 3 or more divs");
    label_set a = 0, b = 0;
    auto it = classes.begin();
    if (it != classes.end()) a = (it++)->second;
    if (it != classes.end()) b = it->second;
    out.dividons.push_back(make_dividon(divider, a, b));
  });
  std::sort(out.dividons.begin(), out.dividons.end(),
            [](const dividon& a, const dividon& b) { return a.divider < b.divider; });
  return out;
}

namespace {

void check_unit_triple_laws12(label_set r, const std::array<const unit_dividon*, 3>& t,
                              law_report& rep)
{
  std::array<int, 3> vals{};
  for (int i = 0; i < 3; ++i) vals[static_cast<std::size_t>(i)] = t[static_cast<std::size_t>(i)]->same_div;
  for (int law = 1; law <= 2; ++law) {
    for (int i = 0; i < 3; ++i) {
      const int a = vals[static_cast<std::size_t>(i)];
      const int b = vals[static_cast<std::size_t>((i + 1) % 3)];
      const int c = vals[static_cast<std::size_t>((i + 2) % 3)];
      const bool ok = (law == 1) ? ((a == 0) == (b == c)) : ((a == 1) == (b != c));
      if (!ok) {
        law_violation v;
        v.law = law;
        v.subset = r;
        for (int k = 0; k < 3; ++k) {
          v.dividers[static_cast<std::size_t>(k)] = t[static_cast<std::size_t>(k)]->divider;
          v.tbds[static_cast<std::size_t>(k)] = t[static_cast<std::size_t>(k)]->tbd;
        }
        rep.passed = false;
        rep.violations.push_back(v);
        break;
      }
    }
  }
}

}  // namespace

law_report check_unit_laws(const unit_div_point_set& u)
{
  law_report rep;

  // law 0: triples of unit dividons of one divider whose TBD union has 3 points.
  // Lawful patterns are [1,1,1] and [1,0,0].
  for_each_subset(u.points, 2, [&](label_set divider) {
    for_each_subset(u.points & ~divider, 3, [&](label_set triple) {
      std::array<const unit_dividon*, 3> t{};
      int k = 0;
      for_each_subset(triple, 2, [&](label_set pair) {
        t[static_cast<std::size_t>(k++)] = &u.at(divider, pair);
      });
      int ones = 0;
      for (const unit_dividon* ud : t) ones += ud->same_div;
      if (ones != 3 && ones != 1) {
        law_violation v;
        v.law = 0;
        v.subset = divider;
        for (int i = 0; i < 3; ++i) {
          v.dividers[static_cast<std::size_t>(i)] = t[static_cast<std::size_t>(i)]->divider;
          v.tbds[static_cast<std::size_t>(i)] = t[static_cast<std::size_t>(i)]->tbd;
        }
        rep.passed = false;
        rep.violations.push_back(v);
      }
    });
  });

  // laws 1-3: triples sharing the 4-point support
  for_each_subset(u.points, 4, [&](label_set r) {
    // dividers inside R sharing one point
    for (int p : labels_of(r)) {
      std::array<const unit_dividon*, 3> t{};
      int k = 0;
      for (int q : labels_of(r & ~label_bit(p))) {
        label_set d = label_bit(p) | label_bit(q);
        t[static_cast<std::size_t>(k++)] = &u.at(d, r & ~d);
      }
      check_unit_triple_laws12(r, t, rep);
    }
    // the 3 dividers inside a 3-subset of R: all-zero forbidden
    for_each_subset(r, 3, [&](label_set triple) {
      std::array<const unit_dividon*, 3> t{};
      int k = 0;
      for_each_subset(triple, 2, [&](label_set d) {
        t[static_cast<std::size_t>(k++)] = &u.at(d, r & ~d);
      });
      if (t[0]->same_div == 0 && t[1]->same_div == 0 && t[2]->same_div == 0) {
        law_violation v;
        v.law = 3;
        v.subset = r;
        for (int i = 0; i < 3; ++i) {
          v.dividers[static_cast<std::size_t>(i)] = t[static_cast<std::size_t>(i)]->divider;
          v.tbds[static_cast<std::size_t>(i)] = t[static_cast<std::size_t>(i)]->tbd;
        }
        rep.passed = false;
        rep.violations.push_back(v);
      }
    });
  });
  return rep;
}

}  // namespace divps
