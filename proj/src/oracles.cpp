#include "divps/oracles.hpp"

#include <array>
#include <bit>
#include <vector>

#include "divps/catalog.hpp"

#ifdef DIVPS_HAVE_OPENMP
#include <omp.h>
#endif

namespace divps {

enum_report enumerate4()
{
  enum_report r;
  const label_set points = set_of({1, 2, 3, 4});
  for (unsigned bits = 0; bits < 64; ++bits) {
    ++r.total;
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
    if (!check_planarity_laws(x).passed) continue;
    ++r.lawful;
    ++r.class_counts[canonical_form(x)];
    ++r.sub_conc_distribution[classify4(x) == four_class::concave_one ? 1 : 0];
  }
  return r;
}

namespace {

constexpr int divider_count5 = 10;

struct scan_tables {
  // per 4-subset: the 6 (divider index, psi-lookup) pairs in the subset's
  // lex divider order; psi bit = (digit == 0 || digit == isolate_digit)
  struct bit_source {
    int divider = 0;
    int isolate_digit = 0;
  };
  std::array<std::array<bit_source, 6>, 5> subsets{};
  std::array<bool, 64> lawful4{};
  std::array<bool, 64> concave4{};
};

const scan_tables& tables5()
{
  static const scan_tables t = [] {
    scan_tables t;
    const label_set points = set_of({1, 2, 3, 4, 5});
    std::vector<label_set> dividers;
    for_each_subset(points, 2, [&](label_set d) { dividers.push_back(d); });

    int si = 0;
    for_each_subset(points, 4, [&](label_set s) {
      const int excluded = lowest_label(points & ~s);
      int bit = 0;
      for_each_subset(s, 2, [&](label_set d) {
        int di = 0;
        while (dividers[static_cast<std::size_t>(di)] != d) ++di;
        const std::vector<int> tbd = labels_of(points & ~d);
        int isolate = 0;
        for (int i = 0; i < 3; ++i)
          if (tbd[static_cast<std::size_t>(i)] == excluded) isolate = i + 1;
        t.subsets[static_cast<std::size_t>(si)][static_cast<std::size_t>(bit)] = {di, isolate};
        ++bit;
      });
      ++si;
    });
    for (unsigned b = 0; b < 64; ++b) {
      const four_class c = classify4_bits(b);
      t.lawful4[b] = c != four_class::unlawful;
      t.concave4[b] = c == four_class::concave_one;
    }
    return t;
  }();
  return t;
}

void scan_range(std::uint32_t begin, std::uint32_t end, enum_report& r)
{
  const scan_tables& t = tables5();
  for (std::uint32_t code = begin; code < end; ++code) {
    ++r.total;
    std::array<int, divider_count5> digit{};
    std::uint32_t c = code;
    for (int i = 0; i < divider_count5; ++i) {
      digit[static_cast<std::size_t>(i)] = static_cast<int>(c & 3u);
      c >>= 2;
    }
    bool lawful = true;
    int conc = 0;
    for (const auto& subset : t.subsets) {
      unsigned bits = 0;
      for (int k = 0; k < 6; ++k) {
        const auto& src = subset[static_cast<std::size_t>(k)];
        const int d = digit[static_cast<std::size_t>(src.divider)];
        if (d == 0 || d == src.isolate_digit) bits |= 1u << k;
      }
      if (!t.lawful4[bits]) {
        lawful = false;
        break;
      }
      conc += t.concave4[bits];
    }
    if (!lawful) continue;
    ++r.lawful;
    ++r.class_counts[canonical_form(decode5(code))];
    ++r.sub_conc_distribution[conc];
  }
}

}  // namespace

div_point_set decode5(std::uint32_t code)
{
  const label_set points = set_of({1, 2, 3, 4, 5});
  std::vector<dividon> ds;
  std::uint32_t c = code;
  for_each_subset(points, 2, [&](label_set d) {
    const int digit = static_cast<int>(c & 3u);
    c >>= 2;
    const std::vector<int> tbd = labels_of(points & ~d);
    const label_set all = points & ~d;
    if (digit == 0) {
      ds.push_back(make_dividon(d, all, 0));
    } else {
      const label_set iso = label_bit(tbd[static_cast<std::size_t>(digit - 1)]);
      ds.push_back(make_dividon(d, iso, all & ~iso));
    }
  });
  return validate_dps(points, ds);
}

enum_report enumerate5_serial()
{
  enum_report r;
  scan_range(0, 1u << 20, r);
  return r;
}

enum_report enumerate5(int threads)
{
#ifdef DIVPS_HAVE_OPENMP
  const int requested = threads > 0 ? threads : omp_get_max_threads();
  if (requested <= 1) return enumerate5_serial();
  tables5();  // build the shared tables before the parallel region
  // partition by the leading base-4 digits: 256 chunks of 4^6 codes
  constexpr int chunks = 256;
  constexpr std::uint32_t chunk_size = (1u << 20) / chunks;
  std::vector<enum_report> parts(chunks);
#pragma omp parallel for schedule(static) num_threads(requested)
  for (int i = 0; i < chunks; ++i)
    scan_range(static_cast<std::uint32_t>(i) * chunk_size,
               static_cast<std::uint32_t>(i + 1) * chunk_size, parts[static_cast<std::size_t>(i)]);
  enum_report r;
  for (const enum_report& p : parts) {
    r.total += p.total;
    r.lawful += p.lawful;
    for (const auto& [k, v] : p.class_counts) r.class_counts[k] += v;
    for (const auto& [k, v] : p.sub_conc_distribution) r.sub_conc_distribution[k] += v;
  }
  return r;
#else
  (void)threads;
  return enumerate5_serial();
#endif
}

int parity_equivalence()
{
  for (unsigned assign = 0; assign < 32; ++assign) {
    const int ones = std::popcount(assign);
    const bool allowed = ones == 4 || ones == 2 || ones == 0;  // the three multisets
    const bool even = ones % 2 == 0;
    if (allowed != even) return 0;
  }
  return 1;
}

}  // namespace divps
