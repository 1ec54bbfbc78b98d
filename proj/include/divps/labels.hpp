#ifndef DIVPS_LABELS_HPP
#define DIVPS_LABELS_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace divps {

// Point labels are dense integers 1..n; a set of labels is a bitmask with
// bit (l-1) set for label l. This caps configurations at 32 points, well
// above the desk scale the library targets.
using label_set = std::uint32_t;

constexpr int max_labels = 32;

inline label_set label_bit(int label) { return label_set{1} << (label - 1); }

inline int set_size(label_set s) { return std::popcount(s); }

inline int lowest_label(label_set s) { return std::countr_zero(s) + 1; }

inline bool contains(label_set s, int label) { return (s >> (label - 1)) & 1u; }

inline std::vector<int> labels_of(label_set s)
{
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(set_size(s)));
  while (s) {
    out.push_back(lowest_label(s));
    s &= s - 1;
  }
  return out;
}

inline label_set set_of(const std::vector<int>& labels)
{
  label_set s = 0;
  for (int l : labels) {
    if (l < 1 || l > max_labels)
      throw std::out_of_range("label out of range: " + std::to_string(l));
    s |= label_bit(l);
  }
  return s;
}

// Calls f(subset) for every k-subset of s, in lexicographic label order.
template <typename F>
void for_each_subset(label_set s, int k, F&& f)
{
  std::vector<int> ls = labels_of(s);
  const int n = static_cast<int>(ls.size());
  if (k < 0 || k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    label_set sub = 0;
    for (int i : idx) sub |= label_bit(ls[static_cast<std::size_t>(i)]);
    f(sub);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace divps

#endif
