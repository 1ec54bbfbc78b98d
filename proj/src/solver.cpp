#include <algorithm>
#include <vector>

#include "divps/satgen.hpp"

namespace divps {

namespace {

struct dpll {
  const solve_options& opts;
  int var_count;
  std::vector<std::vector<int>> clauses;
  std::vector<int> val;  // -1 unassigned, else 0/1
  // decision stack: variable picked at each level, and whether both phases
  // were tried; below each level sits the trail of implied assignments
  struct level {
    int var = 0;
    bool flipped = false;
    std::vector<int> assigned;  // vars set at this level (decision first)
  };
  std::vector<level> stack;
  std::vector<int> root_assigned;
  long long conflicts = 0;
  long long decisions = 0;

  explicit dpll(const cnf_formula& cnf, const solve_options& o)
      : opts(o), var_count(cnf.var_count), clauses(cnf.clauses),
        val(static_cast<std::size_t>(cnf.var_count) + 1, -1)
  {
  }

  int value(int lit) const
  {
    const int v = val[static_cast<std::size_t>(lit > 0 ? lit : -lit)];
    if (v < 0) return -1;
    return (lit > 0) == (v == 1) ? 1 : 0;
  }

  void assign(int lit, std::vector<int>& sink)
  {
    const int v = lit > 0 ? lit : -lit;
    val[static_cast<std::size_t>(v)] = lit > 0 ? 1 : 0;
    sink.push_back(v);
  }

  // full-scan unit propagation to fixpoint; false on conflict
  bool propagate(std::vector<int>& sink)
  {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& clause : clauses) {
        int unassigned = 0;
        int free_lit = 0;
        bool satisfied = false;
        for (int lit : clause) {
          const int v = value(lit);
          if (v == 1) {
            satisfied = true;
            break;
          }
          if (v == -1) {
            ++unassigned;
            free_lit = lit;
            if (unassigned > 1) break;
          }
        }
        if (satisfied) continue;
        if (unassigned == 0) return false;
        if (unassigned == 1) {
          assign(free_lit, sink);
          changed = true;
        }
      }
    }
    return true;
  }

  void undo(std::vector<int>& assigned)
  {
    for (int v : assigned) val[static_cast<std::size_t>(v)] = -1;
    assigned.clear();
  }

  void learn_blocking_clause()
  {
    std::vector<int> clause;
    for (const level& l : stack) {
      const int phase = val[static_cast<std::size_t>(l.var)];
      clause.push_back(phase == 1 ? -l.var : l.var);
    }
    if (!clause.empty()) clauses.push_back(std::move(clause));
  }

  // backtrack after a conflict; false when the search space is exhausted
  bool resolve_conflict()
  {
    ++conflicts;
    if (opts.max_conflicts >= 0 && conflicts > opts.max_conflicts)
      throw error(errc::resource_limit, "conflict budget exhausted");
    if (opts.learn) learn_blocking_clause();
    while (!stack.empty() && stack.back().flipped) {
      undo(stack.back().assigned);
      stack.pop_back();
    }
    if (stack.empty()) return false;
    level& l = stack.back();
    const int var = l.var;
    undo(l.assigned);
    l.flipped = true;
    assign(-var, l.assigned);  // true was tried first
    return true;
  }

  solve_result run()
  {
    for (const auto& clause : clauses)
      if (clause.empty()) return {sat_status::unsatisfiable, {}, 0, 0};

    if (!propagate(root_assigned)) return {sat_status::unsatisfiable, {}, conflicts, decisions};

    while (true) {
      int pick = 0;
      for (int v = 1; v <= var_count; ++v)
        if (val[static_cast<std::size_t>(v)] < 0) {
          pick = v;
          break;
        }
      if (pick == 0) {
        solve_result r{sat_status::satisfiable, val, conflicts, decisions};
        r.model[0] = 0;
        return r;
      }
      ++decisions;
      stack.push_back({pick, false, {}});
      assign(pick, stack.back().assigned);
      while (!propagate(stack.back().assigned)) {
        if (!resolve_conflict())
          return {sat_status::unsatisfiable, {}, conflicts, decisions};
      }
    }
  }
};

}  // namespace

solve_result solve(const cnf_formula& cnf, const solve_options& opts)
{
  dpll s(cnf, opts);
  return s.run();
}

}  // namespace divps
