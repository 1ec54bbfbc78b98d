#ifndef DIVPS_SATGEN_HPP
#define DIVPS_SATGEN_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "divps/error.hpp"

namespace divps {

using var_id = int;  // 1-based lex rank of a 4-subset of {1..m}

// C(n,k) in long long; exact for the desk-scale arguments used here.
long long binomial(int n, int k);

// Lexicographic rank of a 4-subset of {1..m}, starting at 1.
var_id rank4(const std::array<int, 4>& subset, int m);
std::array<int, 4> unrank4(var_id id, int m);

struct sat_instance {
  int n = 0;             // the Erdos-Szekeres parameter
  int m = 0;             // 2^(n-2)+1 points
  int var_count = 0;     // C(m,4)
  std::vector<std::array<var_id, 5>> groups_a;  // one per 5-subset, lex order
  std::vector<std::vector<var_id>> groups_b;    // one per n-subset, lex order
};

// Builds the instance for a given n: an A-group per 5-subset of {1..m}
// holding the ranks of its five 4-subsets, a B-group per n-subset holding
// the ranks of its C(n,4) 4-subsets. paper_set_b_filter keeps only B-groups
// containing variable 2, reproducing the reference distribution for
// comparison. Throws too_large past the variable budget.
sat_instance gen_instance(int n, bool paper_set_b_filter = false, int max_vars = 10000);

// 1 iff every A-group's value multiset is [1,1,1,1,0], [1,1,0,0,0] or
// [0,0,0,0,0] and no B-group reads all-zero. assign is indexed by variable,
// entry 0 unused. Throws partial_assignment.
int check_assignment(const sat_instance& inst, const std::vector<int>& assign);

struct cnf_formula {
  int var_count = 0;
  std::vector<std::vector<int>> clauses;  // signed literals, no zero

  friend bool operator==(const cnf_formula&, const cnf_formula&) = default;
};

// 16 parity clauses per A-group (one per odd-weight sign pattern) plus one
// positive clause per B-group; pointwise equal to check_assignment.
cnf_formula to_cnf(const sat_instance& inst);

bool eval_cnf(const cnf_formula& cnf, const std::vector<int>& assign);

void export_dimacs(const cnf_formula& cnf, std::ostream& out);
std::string to_dimacs(const cnf_formula& cnf);
cnf_formula parse_dimacs(std::istream& in);  // throws malformed_dimacs

// Instance manifest: n, m, group counts, clause count and an FNV-1a hash of
// the DIMACS bytes, serialized as JSON.
std::string instance_manifest(const sat_instance& inst, const cnf_formula& cnf);

std::uint64_t fnv1a(const std::string& bytes);

// -- embedded solver ---------------------------------------------------------

enum class sat_status { satisfiable, unsatisfiable };

struct solve_result {
  sat_status status = sat_status::unsatisfiable;
  std::vector<int> model;  // indexed by variable, entry 0 unused
  long long conflicts = 0;
  long long decisions = 0;
};

struct solve_options {
  bool learn = false;              // record a blocking clause per conflict
  long long max_conflicts = -1;    // negative: unlimited
};

// Deterministic complete search: unit propagation, branching on the lowest
// unassigned variable trying true first. Throws resource_limit when the
// conflict budget runs out.
solve_result solve(const cnf_formula& cnf, const solve_options& opts = {});

}  // namespace divps

#endif
