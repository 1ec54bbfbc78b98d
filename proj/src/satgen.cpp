#include "divps/satgen.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace divps {

long long binomial(int n, int k)
{
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

var_id rank4(const std::array<int, 4>& subset, int m)
{
  std::array<int, 4> s = subset;
  std::sort(s.begin(), s.end());
  if (s[0] < 1 || s[3] > m || s[0] == s[1] || s[1] == s[2] || s[2] == s[3])
    throw error(errc::out_of_range, "rank4 needs a 4-subset of {1..m}");
  // count 4-subsets lexicographically smaller
  long long rank = 1;
  int prev = 0;
  for (int i = 0; i < 4; ++i) {
    for (int v = prev + 1; v < s[static_cast<std::size_t>(i)]; ++v)
      rank += binomial(m - v, 3 - i);
    prev = s[static_cast<std::size_t>(i)];
  }
  return static_cast<var_id>(rank);
}

std::array<int, 4> unrank4(var_id id, int m)
{
  if (id < 1 || id > binomial(m, 4)) throw error(errc::out_of_range, "rank out of range");
  std::array<int, 4> s{};
  long long rest = id;
  int prev = 0;
  for (int i = 0; i < 4; ++i) {
    int v = prev + 1;
    while (true) {
      const long long block = binomial(m - v, 3 - i);
      if (rest <= block) break;
      rest -= block;
      ++v;
    }
    s[static_cast<std::size_t>(i)] = v;
    prev = v;
  }
  return s;
}

namespace {

template <typename F>
void for_each_ksubset(int m, int k, F&& f)
{
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    f(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i + 1) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

sat_instance gen_instance(int n, bool paper_set_b_filter, int max_vars)
{
  if (n < 5) throw error(errc::bad_n, "instances start at n = 5");
  if (n - 2 >= 30) throw error(errc::too_large, "point count overflows");
  const int m = (1 << (n - 2)) + 1;
  const long long vars = binomial(m, 4);
  if (vars > max_vars)
    throw error(errc::too_large, "instance needs " + std::to_string(vars) +
                                     " variables, budget is " + std::to_string(max_vars));

  sat_instance inst;
  inst.n = n;
  inst.m = m;
  inst.var_count = static_cast<int>(vars);

  for_each_ksubset(m, 5, [&](const std::vector<int>& s) {
    std::array<var_id, 5> group{};
    int k = 0;
    // the five 4-subsets, lex order = drop elements from the back
    for (int skip = 4; skip >= 0; --skip) {
      std::array<int, 4> four{};
      int t = 0;
      for (int i = 0; i < 5; ++i)
        if (i != skip) four[static_cast<std::size_t>(t++)] = s[static_cast<std::size_t>(i)];
      group[static_cast<std::size_t>(k++)] = rank4(four, m);
    }
    std::sort(group.begin(), group.end());
    inst.groups_a.push_back(group);
  });

  for_each_ksubset(m, n, [&](const std::vector<int>& s) {
    std::vector<var_id> group;
    std::vector<int> idx = {0, 1, 2, 3};
    while (true) {
      std::array<int, 4> four{};
      for (int i = 0; i < 4; ++i)
        four[static_cast<std::size_t>(i)] = s[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
      group.push_back(rank4(four, m));
      int i = 3;
      const int nn = static_cast<int>(s.size());
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == nn - 4 + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < 4; ++j)
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    std::sort(group.begin(), group.end());
    if (!paper_set_b_filter || std::find(group.begin(), group.end(), 2) != group.end())
      inst.groups_b.push_back(std::move(group));
  });
  return inst;
}

int check_assignment(const sat_instance& inst, const std::vector<int>& assign)
{
  if (static_cast<int>(assign.size()) != inst.var_count + 1)
    throw error(errc::partial_assignment, "assignment must cover all variables");
  for (std::size_t i = 1; i < assign.size(); ++i)
    if (assign[i] != 0 && assign[i] != 1)
      throw error(errc::partial_assignment, "assignment values must be 0 or 1");

  for (const auto& g : inst.groups_a) {
    int ones = 0;
    for (var_id v : g) ones += assign[static_cast<std::size_t>(v)];
    if (ones != 0 && ones != 2 && ones != 4) return 0;
  }
  for (const auto& g : inst.groups_b) {
    bool any = false;
    for (var_id v : g)
      if (assign[static_cast<std::size_t>(v)]) any = true;
    if (!any) return 0;
  }
  return 1;
}

cnf_formula to_cnf(const sat_instance& inst)
{
  cnf_formula cnf;
  cnf.var_count = inst.var_count;
  for (const auto& g : inst.groups_a) {
    // even-ones parity: forbid each odd-ones assignment of the group
    for (unsigned pattern = 0; pattern < 32; ++pattern) {
      int bits = 0;
      for (int i = 0; i < 5; ++i) bits += (pattern >> i) & 1u;
      if (bits % 2 == 0) continue;
      std::vector<int> clause;
      for (int i = 0; i < 5; ++i) {
        const var_id v = g[static_cast<std::size_t>(i)];
        clause.push_back(((pattern >> i) & 1u) ? -v : v);
      }
      cnf.clauses.push_back(std::move(clause));
    }
  }
  for (const auto& g : inst.groups_b) {
    std::vector<int> clause(g.begin(), g.end());
    cnf.clauses.push_back(std::move(clause));
  }
  return cnf;
}

bool eval_cnf(const cnf_formula& cnf, const std::vector<int>& assign)
{
  for (const auto& clause : cnf.clauses) {
    bool sat = false;
    for (int lit : clause) {
      const int v = lit > 0 ? lit : -lit;
      if ((lit > 0) == (assign[static_cast<std::size_t>(v)] == 1)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

void export_dimacs(const cnf_formula& cnf, std::ostream& out)
{
  out << "p cnf " << cnf.var_count << ' ' << cnf.clauses.size() << '\n';
  for (const auto& clause : cnf.clauses) {
    for (int lit : clause) out << lit << ' ';
    out << "0\n";
  }
}

std::string to_dimacs(const cnf_formula& cnf)
{
  std::ostringstream out;
  export_dimacs(cnf, out);
  return out.str();
}

cnf_formula parse_dimacs(std::istream& in)
{
  cnf_formula cnf;
  long long declared_clauses = -1;
  std::string line;
  int line_no = 0;
  std::vector<int> pending;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == 'c') continue;
    if (line[0] == 'p') {
      std::istringstream hs(line);
      std::string p, fmt;
      if (!(hs >> p >> fmt >> cnf.var_count >> declared_clauses) || fmt != "cnf")
        throw error(errc::malformed_dimacs, "bad header at line " + std::to_string(line_no));
      continue;
    }
    if (declared_clauses < 0)
      throw error(errc::malformed_dimacs, "clause before header at line " + std::to_string(line_no));
    std::istringstream ls(line);
    int lit;
    while (ls >> lit) {
      if (lit == 0) {
        cnf.clauses.push_back(pending);
        pending.clear();
      } else {
        const int v = lit > 0 ? lit : -lit;
        if (v > cnf.var_count)
          throw error(errc::malformed_dimacs,
                      "literal out of range at line " + std::to_string(line_no));
        pending.push_back(lit);
      }
    }
    if (!ls.eof())
      throw error(errc::malformed_dimacs, "bad token at line " + std::to_string(line_no));
  }
  if (!pending.empty()) throw error(errc::malformed_dimacs, "unterminated final clause");
  if (declared_clauses < 0) throw error(errc::malformed_dimacs, "missing header");
  if (declared_clauses != static_cast<long long>(cnf.clauses.size()))
    throw error(errc::malformed_dimacs, "clause count mismatch");
  return cnf;
}

std::uint64_t fnv1a(const std::string& bytes)
{
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

std::string instance_manifest(const sat_instance& inst, const cnf_formula& cnf)
{
  std::ostringstream out;
  out << "{\n"
      << "  \"n\": " << inst.n << ",\n"
      << "  \"m\": " << inst.m << ",\n"
      << "  \"variables\": " << inst.var_count << ",\n"
      << "  \"groups_a\": " << inst.groups_a.size() << ",\n"
      << "  \"groups_b\": " << inst.groups_b.size() << ",\n"
      << "  \"clauses\": " << cnf.clauses.size() << ",\n"
      << "  \"dimacs_fnv1a\": \"" << std::hex << fnv1a(to_dimacs(cnf)) << std::dec << "\"\n"
      << "}\n";
  return out.str();
}

}  // namespace divps
