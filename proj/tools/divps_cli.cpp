#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "divps/catalog.hpp"
#include "divps/core.hpp"
#include "divps/geometry.hpp"
#include "divps/io.hpp"
#include "divps/oracles.hpp"
#include "divps/satgen.hpp"
#include "divps/subdps.hpp"

namespace {

using nlohmann::json;
using namespace divps;

// --input path or --name catalog spelling
div_point_set load_dps_arg(const std::string& input, const std::string& name)
{
  if (!name.empty()) {
    const auto n = parse_config_name(name);
    if (!n) throw error(errc::unknown_name, "unknown configuration name: " + name);
    return named_config(*n);
  }
  if (input.empty()) throw error(errc::bad_config, "need --input or --name");
  const config_document doc = load_config(read_file(input));
  if (doc.dps) return *doc.dps;
  return from_unit(*doc.udps);
}

div_point_set load_dps_path_or_name(const std::string& arg)
{
  if (const auto n = parse_config_name(arg)) return named_config(*n);
  const config_document doc = load_config(read_file(arg));
  if (doc.dps) return *doc.dps;
  return from_unit(*doc.udps);
}

json law_report_json(const law_report& rep)
{
  json out;
  out["passed"] = rep.passed;
  json vs = json::array();
  for (const law_violation& v : rep.violations) {
    json rec;
    rec["law"] = v.law;
    rec["subset"] = labels_of(v.subset);
    json divs = json::array();
    for (label_set d : v.dividers)
      if (d) divs.push_back(labels_of(d));
    rec["dividers"] = divs;
    vs.push_back(rec);
  }
  out["violations"] = vs;
  return out;
}

json report_json(const enum_report& r)
{
  json out;
  out["total"] = r.total;
  out["lawful"] = r.lawful;
  json classes = json::array();
  const std::array<std::pair<config_name, const char*>, 6> names = {{
      {config_name::conc41, "Conc41"}, {config_name::conv4, "Conv4"},
      {config_name::xempty4, "XEmpty4"}, {config_name::conv5, "Conv5"},
      {config_name::conc51, "Conc51"}, {config_name::conc52, "Conc52"},
  }};
  for (const auto& [form, count] : r.class_counts) {
    json rec;
    std::string label = "unnamed";
    for (const auto& [cn, spelling] : names)
      if (canonical_form(named_config(cn)) == form) label = spelling;
    rec["name"] = label;
    rec["count"] = count;
    classes.push_back(rec);
  }
  out["classes"] = classes;
  json dist;
  for (const auto& [k, v] : r.sub_conc_distribution) dist[std::to_string(k)] = v;
  out["concave_subset_distribution"] = dist;
  return out;
}

void print_report(const enum_report& r, bool as_json)
{
  const json j = report_json(r);
  if (as_json) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::cout << "total " << r.total << "\nlawful " << r.lawful << "\nclasses:\n";
  for (const auto& rec : j["classes"])
    std::cout << "  " << rec["name"].get<std::string>() << "  " << rec["count"] << '\n';
  std::cout << "concave 4-subset counts:\n";
  for (const auto& [k, v] : r.sub_conc_distribution) std::cout << "  " << k << " -> " << v << '\n';
}

int run_external_solver(const std::string& cmd, const std::string& cnf_path, bool as_json)
{
  const std::string full = cmd + " " + cnf_path + " 2>/dev/null";
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) {
    std::cerr << "error: cannot run " << cmd << '\n';
    return 1;
  }
  std::string out;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
  pclose(pipe);
  std::string verdict = "UNKNOWN";
  if (out.find("s SATISFIABLE") != std::string::npos) verdict = "SAT";
  else if (out.find("s UNSATISFIABLE") != std::string::npos) verdict = "UNSAT";
  if (as_json)
    std::cout << json{{"solver", "external"}, {"status", verdict}}.dump(2) << '\n';
  else
    std::cout << verdict << '\n';
  return verdict == "UNKNOWN" ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"div point set toolkit"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string input, name, points_file, out_file, manifest_file;
  std::string iso_a, iso_b;
  std::string solver = "embedded", external_cmd = "varisat";
  int threads = 0, n = 5, k = 0;
  long long max_conflicts = -1;
  bool set_b_filter = false, learn = false;

  auto* validate = app.add_subcommand("validate", "structural validation of a configuration file");
  validate->add_option("--input", input)->required();

  auto* classify = app.add_subcommand("classify", "classify a 4-point configuration");
  classify->add_option("--input", input);
  classify->add_option("--name", name);

  auto* convexity_cmd = app.add_subcommand("convexity", "largest convex sub-configuration size");
  convexity_cmd->add_option("--input", input);
  convexity_cmd->add_option("--name", name);

  auto* iso = app.add_subcommand("iso", "isomorphism between two configurations");
  iso->add_option("a", iso_a, "file or catalog name")->required();
  iso->add_option("b", iso_b, "file or catalog name")->required();

  auto* ingest = app.add_subcommand("ingest", "build a configuration from planar points");
  ingest->add_option("--points", points_file)->required();
  ingest->add_option("--out", out_file);
  ingest->add_option("--find-convex", k, "also search for a convex k-subset");

  auto* laws = app.add_subcommand("laws", "check the planarity laws");
  laws->add_option("--input", input);
  laws->add_option("--name", name);

  app.add_subcommand("enumerate4", "scan all 64 four-point configurations");
  auto* enum5 = app.add_subcommand("enumerate5", "scan all 4^10 five-point configurations");
  enum5->add_option("--threads", threads, "worker count (0 = runtime default, 1 = serial)");
  enum5->add_flag("--report", "print the full report (default)");

  auto* gensat = app.add_subcommand("gen-sat", "generate a CNF instance");
  gensat->add_option("--n", n)->required();
  gensat->add_option("--out", out_file)->required();
  gensat->add_flag("--paper-setB-filter", set_b_filter,
                   "keep only B-groups containing variable 2 (reference comparison)");
  gensat->add_option("--manifest", manifest_file, "write an instance manifest");

  auto* solve_cmd = app.add_subcommand("solve", "solve a DIMACS CNF file");
  solve_cmd->add_option("--input", input)->required();
  solve_cmd->add_option("--solver", solver)->check(CLI::IsMember({"embedded", "external"}));
  solve_cmd->add_option("--external-cmd", external_cmd);
  solve_cmd->add_flag("--learn", learn, "record a blocking clause per conflict");
  solve_cmd->add_option("--max-conflicts", max_conflicts, "conflict budget (negative: unlimited)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*validate) {
      const config_document doc = load_config(read_file(input));
      const int pts = doc.dps ? doc.dps->size() : doc.udps->size();
      const std::size_t records =
          doc.dps ? doc.dps->dividons.size() : doc.udps->unit_dividons.size();
      if (as_json)
        std::cout << json{{"valid", true},
                          {"form", doc.dps ? "dividons" : "unit_dividons"},
                          {"points", pts},
                          {"records", records}}
                         .dump(2)
                  << '\n';
      else
        std::cout << "valid (" << pts << " points, " << records << " "
                  << (doc.dps ? "dividons" : "unit dividons") << ")\n";
    } else if (*classify) {
      const four_class c = classify4(load_dps_arg(input, name));
      if (as_json)
        std::cout << json{{"class", four_class_name(c)}}.dump(2) << '\n';
      else
        std::cout << four_class_name(c) << '\n';
    } else if (*convexity_cmd) {
      const int c = divps::convexity(load_dps_arg(input, name));
      if (as_json)
        std::cout << json{{"convexity", c}}.dump(2) << '\n';
      else
        std::cout << c << '\n';
    } else if (*iso) {
      const auto f = isomorphism(load_dps_path_or_name(iso_a), load_dps_path_or_name(iso_b));
      if (!f) {
        if (as_json)
          std::cout << json{{"isomorphic", false}}.dump(2) << '\n';
        else
          std::cout << "not isomorphic\n";
        return 1;
      }
      json mapping;
      const div_point_set a = load_dps_path_or_name(iso_a);
      for (int l : labels_of(a.points))
        mapping[std::to_string(l)] = (*f)[static_cast<std::size_t>(l)];
      if (as_json)
        std::cout << json{{"isomorphic", true}, {"mapping", mapping}}.dump(2) << '\n';
      else {
        std::cout << "isomorphic:";
        for (int l : labels_of(a.points))
          std::cout << ' ' << l << "->" << (*f)[static_cast<std::size_t>(l)];
        std::cout << '\n';
      }
    } else if (*ingest) {
      const planar_point_set pts = load_points(read_file(points_file));
      const div_point_set x = build_dps(pts);
      const std::string text = save_dps(x);
      if (!out_file.empty())
        write_file(out_file, text);
      else
        std::cout << text;
      if (k > 0) {
        const auto found = find_convex_subset(pts, k);
        if (found)
          std::cout << "convex " << k << "-subset:";
        else
          std::cout << "no convex " << k << "-subset";
        if (found)
          for (int l : labels_of(*found)) std::cout << ' ' << l;
        std::cout << '\n';
      }
    } else if (*laws) {
      const div_point_set x = load_dps_arg(input, name);
      const law_report rep = check_planarity_laws(x);
      if (as_json)
        std::cout << law_report_json(rep).dump(2) << '\n';
      else if (rep.passed)
        std::cout << "pass\n";
      else {
        std::cout << "fail (" << rep.violations.size() << " violations)\n";
        for (const law_violation& v : rep.violations) {
          std::cout << "  law " << v.law << " on {";
          for (int l : labels_of(v.subset)) std::cout << ' ' << l;
          std::cout << " }\n";
        }
      }
      return rep.passed ? 0 : 1;
    } else if (*app.get_subcommand("enumerate4")) {
      print_report(enumerate4(), as_json);
    } else if (*enum5) {
      print_report(threads == 1 ? enumerate5_serial() : enumerate5(threads), as_json);
    } else if (*gensat) {
      const sat_instance inst = gen_instance(n, set_b_filter);
      const cnf_formula cnf = to_cnf(inst);
      write_file(out_file, to_dimacs(cnf));
      if (!manifest_file.empty()) write_file(manifest_file, instance_manifest(inst, cnf));
      if (as_json)
        std::cout << json{{"n", inst.n},
                          {"m", inst.m},
                          {"variables", inst.var_count},
                          {"groups_a", inst.groups_a.size()},
                          {"groups_b", inst.groups_b.size()},
                          {"clauses", cnf.clauses.size()},
                          {"out", out_file}}
                         .dump(2)
                  << '\n';
      else
        std::cout << "p cnf " << cnf.var_count << ' ' << cnf.clauses.size() << " -> " << out_file
                  << '\n';
    } else if (*solve_cmd) {
      if (solver == "external") return run_external_solver(external_cmd, input, as_json);
      std::ifstream in(input);
      if (!in) throw error(errc::bad_config, "cannot open " + input);
      const cnf_formula cnf = parse_dimacs(in);
      const solve_result res = divps::solve(cnf, {learn, max_conflicts});
      const bool sat = res.status == sat_status::satisfiable;
      if (as_json) {
        json out{{"solver", "embedded"},
                 {"status", sat ? "SAT" : "UNSAT"},
                 {"conflicts", res.conflicts},
                 {"decisions", res.decisions}};
        if (sat) {
          json model = json::array();
          for (int v = 1; v <= cnf.var_count; ++v)
            model.push_back(res.model[static_cast<std::size_t>(v)] ? v : -v);
          out["model"] = model;
        }
        std::cout << out.dump(2) << '\n';
      } else {
        std::cout << (sat ? "SAT" : "UNSAT") << '\n';
        if (sat) {
          std::cout << "v";
          for (int v = 1; v <= cnf.var_count; ++v)
            std::cout << ' ' << (res.model[static_cast<std::size_t>(v)] ? v : -v);
          std::cout << " 0\n";
        }
      }
    }
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
