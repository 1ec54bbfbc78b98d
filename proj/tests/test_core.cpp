#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "divps/catalog.hpp"
#include "divps/core.hpp"
#include "helpers.hpp"

using namespace divps;

TEST_CASE("validate accepts the catalog configurations")
{
  for (config_name n : {config_name::conc41, config_name::conv4, config_name::xempty4,
                        config_name::conv5, config_name::conc51, config_name::conc52}) {
    const div_point_set x = named_config(n);  // construction runs validate_dps
    CHECK(x.dividons.size() == static_cast<std::size_t>(x.size() * (x.size() - 1) / 2));
    for (const dividon& d : x.dividons) {
      CHECK(set_size(d.divider) == 2);
      CHECK((d.div1 & d.div2) == 0);
      CHECK((d.div1 | d.div2) == (x.points & ~d.divider));
    }
  }
}

TEST_CASE("validate rejects structural defects")
{
  const div_point_set base = named_config(config_name::conc41);

  SUBCASE("wrong dividon count")
  {
    auto ds = base.dividons;
    ds.pop_back();
    CHECK_THROWS_WITH_AS(validate_dps(base.points, ds), doctest::Contains("WrongDividonCount"),
                         error);
  }
  SUBCASE("duplicate divider")
  {
    auto ds = base.dividons;
    ds.back() = ds.front();
    CHECK_THROWS_AS(validate_dps(base.points, ds), error);
  }
  SUBCASE("overlapping divs")
  {
    auto ds = base.dividons;
    ds[0].div1 = set_of({3, 4});
    ds[0].div2 = set_of({4});
    CHECK_THROWS_WITH_AS(validate_dps(base.points, ds), doctest::Contains("OverlappingDivs"),
                         error);
  }
  SUBCASE("bad divider size")
  {
    auto ds = base.dividons;
    ds[0].divider = set_of({1, 2, 3});
    ds[0].div1 = set_of({4});
    ds[0].div2 = 0;
    CHECK_THROWS_AS(validate_dps(base.points, ds), error);
  }
}

TEST_CASE("phi")
{
  CHECK(phi(set_of({3}), set_of({4}), set_of({3, 4})) == 0);
  CHECK(phi(set_of({3, 4}), 0, set_of({3, 4})) == 1);
  CHECK(phi(set_of({2, 3}), set_of({5}), set_of({3, 5})) == 0);
  CHECK_THROWS_WITH_AS(phi(set_of({3}), set_of({4}), set_of({4, 5})),
                       doctest::Contains("TbdNotInDivs"), error);
}

TEST_CASE("psi")
{
  CHECK(psi(set_of({3}), set_of({4})) == 0);
  CHECK(psi(set_of({3, 4}), 0) == 1);
  CHECK_THROWS_WITH_AS(psi(set_of({3, 4}), set_of({5})), doctest::Contains("NotTwoTbd"), error);

  const div_point_set x = named_config(config_name::conc41);
  for (const dividon& d : x.dividons) {
    const int expected = contains(d.divider, 1) ? 0 : 1;
    CHECK(psi(d.div1, d.div2) == expected);
  }
}

TEST_CASE("xi and unit dividon structure")
{
  CHECK(xi({set_of({1, 2}), set_of({3, 4}), 1}) == set_of({1, 2, 3, 4}));
  CHECK(xi({set_of({2, 5}), set_of({7, 9}), 0}) == set_of({2, 5, 7, 9}));
  // divider overlapping tbd rejected at configuration construction
  std::vector<unit_dividon> bad = {{set_of({1, 2}), set_of({2, 3}), 1}};
  CHECK_THROWS_AS(validate_udps(set_of({1, 2, 3, 4}), bad), error);
}

TEST_CASE("planarity laws on the catalog")
{
  CHECK(check_planarity_laws(named_config(config_name::conv4)).passed);
  CHECK(check_planarity_laws(named_config(config_name::conc41)).passed);
  CHECK(check_planarity_laws(named_config(config_name::conv5)).passed);
  CHECK(check_planarity_laws(named_config(config_name::conc51)).passed);
  CHECK(check_planarity_laws(named_config(config_name::conc52)).passed);

  // the all-type1 configuration colors every edge [1,1,1]: laws 1 and 2 fail
  // on every triple while the all-zero law 3 is vacuously satisfied
  const law_report rep = check_planarity_laws(named_config(config_name::xempty4));
  CHECK_FALSE(rep.passed);
  bool saw12 = false;
  for (const law_violation& v : rep.violations) {
    CHECK(v.law != 3);
    if (v.law == 1 || v.law == 2) saw12 = true;
  }
  CHECK(saw12);
}

TEST_CASE("laws pass vacuously for 3 or fewer points")
{
  const div_point_set t = conv_n(3);
  CHECK(check_planarity_laws(t).passed);

  std::vector<dividon> two = {make_dividon(set_of({1, 2}), 0, 0)};
  CHECK(check_planarity_laws(validate_dps(set_of({1, 2}), two)).passed);
}

TEST_CASE("to_unit sizes and the 4-point identity")
{
  const unit_div_point_set u5 = to_unit(named_config(config_name::conv5));
  CHECK(u5.unit_dividons.size() == 30);  // C(5,2)*C(3,2)

  const div_point_set x4 = named_config(config_name::conc41);
  const unit_div_point_set u4 = to_unit(x4);
  CHECK(u4.unit_dividons.size() == 6);
  for (const unit_dividon& d : u4.unit_dividons) {
    const dividon& orig = x4.at(d.divider);
    CHECK(d.tbd == orig.tbd());
    CHECK(static_cast<int>(d.same_div) == psi(orig.div1, orig.div2));
  }

  CHECK_THROWS_WITH_AS(to_unit(conv_n(3)), doctest::Contains("TooFewPoints"), error);
}

TEST_CASE("from_unit inverts to_unit")
{
  for (config_name n : {config_name::conc41, config_name::conv4, config_name::conv5,
                        config_name::conc51, config_name::conc52}) {
    const div_point_set x = named_config(n);
    CHECK(from_unit(to_unit(x)) == x);
  }
}

TEST_CASE("from_unit diagnoses impossible bit patterns")
{
  // a full 5-point unit configuration with the divider {1,2} carrying the
  // probe bits and everything else copied from Conv5
  auto probe = [](int cd, int ce, int de) {
    unit_div_point_set u = to_unit(named_config(config_name::conv5));
    for (unit_dividon& d : u.unit_dividons) {
      if (d.divider != set_of({1, 2})) continue;
      if (d.tbd == set_of({3, 4})) d.same_div = static_cast<std::uint8_t>(cd);
      if (d.tbd == set_of({3, 5})) d.same_div = static_cast<std::uint8_t>(ce);
      if (d.tbd == set_of({4, 5})) d.same_div = static_cast<std::uint8_t>(de);
    }
    return u;
  };
  CHECK_THROWS_WITH_AS(from_unit(probe(1, 1, 0)), doctest::Contains("InconsistentSameDiv"), error);
  CHECK_THROWS_WITH_AS(from_unit(probe(0, 0, 0)), doctest::Contains("MoreThanTwoDivs"), error);
  CHECK(from_unit(probe(1, 1, 1)).at(set_of({1, 2})).div1 == set_of({3, 4, 5}));
}

TEST_CASE("unit laws")
{
  const unit_div_point_set u = to_unit(named_config(config_name::conv5));
  CHECK(check_unit_laws(u).passed);

  // 4-point unit form of a lawful configuration passes
  CHECK(check_unit_laws(to_unit(named_config(config_name::conc41))).passed);

  // every single bit flip must break law 0 or laws 1-3
  for (std::size_t i = 0; i < u.unit_dividons.size(); ++i) {
    unit_div_point_set flipped = u;
    flipped.unit_dividons[i].same_div ^= 1;
    CHECK_FALSE(check_unit_laws(flipped).passed);
  }
}

TEST_CASE("phi equals psi on 4-point dividons")
{
  for (config_name n : {config_name::conc41, config_name::conv4, config_name::xempty4}) {
    const div_point_set x = named_config(n);
    for (const dividon& d : x.dividons)
      CHECK(phi(d, x.points & ~d.divider) == psi(d.div1, d.div2));
  }
}

TEST_CASE("laws agree with unit laws")
{
  // exhaustively at n=4
  const label_set points = set_of({1, 2, 3, 4});
  for (unsigned bits = 0; bits < 64; ++bits) {
    std::vector<dividon> ds;
    int k = 0;
    for_each_subset(points, 2, [&](label_set d) {
      const label_set tbd = points & ~d;
      if ((bits >> k) & 1u) {
        ds.push_back(make_dividon(d, tbd, 0));
      } else {
        const label_set lo = label_bit(lowest_label(tbd));
        ds.push_back(make_dividon(d, lo, tbd & ~lo));
      }
      ++k;
    });
    const div_point_set x = validate_dps(points, ds);
    CHECK(check_planarity_laws(x).passed == check_unit_laws(to_unit(x)).passed);
  }

  // sampled geometric configurations at n=5..7 (lawful side)
  std::mt19937 rng(11);
  for (int n = 5; n <= 7; ++n)
    for (int rep = 0; rep < 10; ++rep) {
      const div_point_set x = build_dps(divps::testing::random_points(rng, n));
      CHECK(check_planarity_laws(x).passed);
      CHECK(check_unit_laws(to_unit(x)).passed);
    }
}

TEST_CASE("round trip on random lawful configurations")
{
  std::mt19937 rng(23);
  for (int rep = 0; rep < 25; ++rep) {
    const int n = 6 + rep % 4;
    const div_point_set x = build_dps(divps::testing::random_points(rng, n));
    const unit_div_point_set u = to_unit(x);
    CHECK(static_cast<long long>(u.unit_dividons.size()) ==
          static_cast<long long>(n) * (n - 1) / 2 * ((n - 2) * (n - 3) / 2));
    CHECK(from_unit(u) == x);
    CHECK(to_unit(from_unit(u)) == u);
  }
}
