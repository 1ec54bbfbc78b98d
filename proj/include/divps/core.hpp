#ifndef DIVPS_CORE_HPP
#define DIVPS_CORE_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "divps/error.hpp"
#include "divps/labels.hpp"

namespace divps {

// One divider (a 2-point pair) together with the 2-partition of the remaining
// points into divs. Divs are stored canonically: the div containing the
// smallest TBD label first, so syntactic equality is structural equality.
struct dividon {
  label_set divider = 0;
  label_set div1 = 0;
  label_set div2 = 0;

  label_set tbd() const { return div1 | div2; }
  friend bool operator==(const dividon&, const dividon&) = default;
};

// Builds a dividon in canonical div order from an arbitrary div pair.
dividon make_dividon(label_set divider, label_set a, label_set b);

struct div_point_set {
  label_set points = 0;
  std::vector<dividon> dividons;  // sorted by divider mask

  int size() const { return set_size(points); }
  const dividon& at(label_set divider) const;
  friend bool operator==(const div_point_set&, const div_point_set&) = default;
};

// A dividon restricted to exactly two TBD points; fully described by one bit.
struct unit_dividon {
  label_set divider = 0;
  label_set tbd = 0;
  std::uint8_t same_div = 0;  // 1 iff both TBD points share a div

  friend bool operator==(const unit_dividon&, const unit_dividon&) = default;
};

struct unit_div_point_set {
  label_set points = 0;
  std::vector<unit_dividon> unit_dividons;  // sorted by (divider, tbd)

  int size() const { return set_size(points); }
  const unit_dividon& at(label_set divider, label_set tbd) const;
  friend bool operator==(const unit_div_point_set&, const unit_div_point_set&) = default;
};

struct law_violation {
  int law = 0;          // 0 = same-divider triple law, 1..3 = 4-subset laws
  label_set subset = 0;  // witness 4-subset (law 0: the divider)
  std::array<label_set, 3> dividers{};
  std::array<label_set, 3> tbds{};
};

struct law_report {
  bool passed = true;
  std::vector<law_violation> violations;
};

// Returns a validated div point set or throws: wrong_dividon_count,
// overlapping_divs, bad_divider_size, duplicate_divider.
div_point_set validate_dps(label_set points, std::span<const dividon> dividons);

// Structural validation of a unit div point set: count, key uniqueness,
// divider/tbd disjointness, at least 4 points.
unit_div_point_set validate_udps(label_set points, std::span<const unit_dividon> unit_dividons);

// 1 iff both points of tbd2 lie in one div. Throws tbd_not_in_divs.
int phi(label_set div1, label_set div2, label_set tbd2);
int phi(const dividon& d, label_set tbd2);

// The two-TBD-point special case of phi. Throws not_two_tbd.
int psi(label_set div1, label_set div2);
inline int psi(const unit_dividon& u) { return u.same_div; }

// 4-point support of a unit dividon.
inline label_set xi(const unit_dividon& u) { return u.divider | u.tbd; }

// Checks the three planar-realizability laws over every 4-subset and
// qualifying dividon triple. Collects all violations; vacuous pass for
// configurations of 3 or fewer points.
law_report check_planarity_laws(const div_point_set& x);

// Expands each dividon into C(n-2,2) unit dividons. Throws too_few_points
// for fewer than 4 points.
unit_div_point_set to_unit(const div_point_set& x);

// Reconstructs the div 2-partitions from pairwise same-div bits. Throws
// more_than_two_divs or inconsistent_same_div when no div point set maps
// onto the input.
div_point_set from_unit(const unit_div_point_set& u);

// Law 0 over same-divider triples plus the three same-support laws.
law_report check_unit_laws(const unit_div_point_set& u);

}  // namespace divps

#endif
