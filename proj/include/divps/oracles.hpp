#ifndef DIVPS_ORACLES_HPP
#define DIVPS_ORACLES_HPP

#include <cstdint>
#include <map>
#include <string>

#include "divps/core.hpp"

namespace divps {

struct enum_report {
  long long total = 0;
  long long lawful = 0;
  // canonical form -> count of labeled configurations in that class
  std::map<std::string, long long> class_counts;
  // count of ConcaveOne 4-subsets -> number of lawful configurations
  std::map<int, long long> sub_conc_distribution;

  friend bool operator==(const enum_report&, const enum_report&) = default;
};

// All 2^6 four-point configurations over {1,2,3,4}, law-checked with the
// full law sweep and classified by isomorphism.
enum_report enumerate4();

// All 4^10 five-point configurations over {1..5}; each divider's three TBD
// points take one of 4 partitions (digit 0: together; digit i: the i-th TBD
// point isolated). Single-threaded reference scan.
enum_report enumerate5_serial();

// Same report, statically partitioned by leading digits across threads
// (threads <= 0 picks the runtime default). Falls back to the serial scan
// without OpenMP.
enum_report enumerate5(int threads = 0);

// Decodes a base-4 configuration code (10 digits, divider-major in lex
// order) into the five-point div point set it denotes.
div_point_set decode5(std::uint32_t code);

// 1 iff, over all 2^5 assignments, multiset membership in
// {[1,1,1,1,0],[1,1,0,0,0],[0,0,0,0,0]} coincides with an even ones count.
int parity_equivalence();

}  // namespace divps

#endif
