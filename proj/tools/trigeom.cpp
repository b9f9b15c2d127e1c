// Command-line front end: build spaces and their triangle complexes, check
// structural facts against the shipped expectation table, export DOT and
// hypermap files, and run the whole verification suite.
//
// Exit codes: 0 success / expectations matched; 1 expectation mismatch or
// suite failure; 2 invalid arguments; 3 scale bound exceeded; 4 hypermap
// unavailable (not thin, not orientable, or not a connected residually
// connected geometry).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "trigeom/hypermap.hpp"
#include "trigeom/io.hpp"
#include "trigeom/report.hpp"

namespace {

using namespace trigeom;

int default_bound() {
  if (const char* env = std::getenv("TRIGEOM_MAX_ELEMENTS")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
    std::cerr << "ignoring bad TRIGEOM_MAX_ELEMENTS value '" << env << "'\n";
  }
  return 5000;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + out_path);
  f << text;
}

const char* yn(bool v) { return v ? "true" : "false"; }

std::string pair_text(const DiagramPair& dp) {
  if (dp.disconnected) return "disconnected";
  if (!dp.uniform) return "nonuniform";
  auto num = [](int x) {
    return x == kInfinity ? std::string("inf") : std::to_string(x);
  };
  return "(" + num(dp.params.d_point) + "," + num(dp.params.gonality) + "," +
         num(dp.params.d_line) + ")";
}

std::vector<std::string> diagram_lines(const Diagram& d) {
  std::vector<std::string> out;
  std::string n = "diagram n:", s = "diagram s:";
  for (long long x : d.n) n += " " + std::to_string(x);
  for (long long x : d.s) s += " " + std::to_string(x);
  out.push_back(n);
  out.push_back(s);
  for (const auto& [key, dp] : d.pairs)
    out.push_back("diagram " + std::to_string(key.first + 1) + "-" +
                  std::to_string(key.second + 1) + ": " + pair_text(dp));
  return out;
}

nlohmann::json load_table(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read expectation table " + path);
  nlohmann::json j;
  f >> j;
  return j;
}

struct Mismatch {
  std::string field, computed, expected;
};

// Compare a report against one expectation row, restricted to the requested
// fields (the row may carry informational keys the comparison ignores).
std::vector<Mismatch> compare_row(const InstanceReport& r,
                                  const nlohmann::json& row,
                                  const std::set<std::string>& fields) {
  std::vector<Mismatch> out;
  auto boolean = [&](const char* key, bool got) {
    if (!fields.count(key) || !row.contains(key)) return;
    bool want = row[key].get<bool>();
    if (got != want) out.push_back({key, yn(got), yn(want)});
  };
  auto integer = [&](const char* key, long long got) {
    if (!fields.count(key) || !row.contains(key)) return;
    long long want = row[key].get<long long>();
    if (got != want)
      out.push_back({key, std::to_string(got), std::to_string(want)});
  };
  boolean("connected", r.connected);
  boolean("rc", r.residually_connected);
  boolean("thin", r.firm == Firmness::thin);
  boolean("ft", r.flag_transitive);
  boolean("duality", r.has_duality);
  boolean("triality", r.has_triality);
  integer("aut", r.aut_order);
  integer("cor", r.cor_order);
  return out;
}

std::vector<Mismatch> compare_diagram(const Diagram& d,
                                      const nlohmann::json& want) {
  std::vector<Mismatch> out;
  long long n = want["n"].get<long long>(), s = want["s"].get<long long>();
  for (size_t t = 0; t < d.n.size(); ++t) {
    if (d.n[t] != n)
      out.push_back({"diagram n_" + std::to_string(t + 1),
                     std::to_string(d.n[t]), std::to_string(n)});
    if (d.s[t] != s)
      out.push_back({"diagram s_" + std::to_string(t + 1),
                     std::to_string(d.s[t]), std::to_string(s)});
  }
  const auto& e = want["d"];
  std::string etext = "(" + std::to_string(e[0].get<int>()) + "," +
                      std::to_string(e[1].get<int>()) + "," +
                      std::to_string(e[2].get<int>()) + ")";
  for (const auto& [key, dp] : d.pairs) {
    std::string name = "diagram " + std::to_string(key.first + 1) + "-" +
                       std::to_string(key.second + 1);
    bool ok = dp.uniform && !dp.disconnected &&
              dp.params.d_point == e[0].get<int>() &&
              dp.params.gonality == e[1].get<int>() &&
              dp.params.d_line == e[2].get<int>();
    if (!ok) out.push_back({name, pair_text(dp), etext});
  }
  return out;
}

// Scale guard from the parameters alone, before anything large is built.
// Returns the predicted element count of the requested object, or -1 when
// the bound is exceeded (message already printed).
long long guarded_size(const SpaceDesc& d, bool delta, int bound) {
  SpaceShape sh = predict_shape(d);
  long long size = delta ? (sh.flags >= (1LL << 61) ? sh.flags : 3 * sh.flags)
                         : sh.points + sh.lines;
  if (size > bound) {
    std::cerr << "scale bound exceeded: " << (delta ? "complex" : "space")
              << " has " << size << " elements (bound " << bound << ")\n";
    return -1;
  }
  return size;
}

int cmd_build(const std::vector<std::string>& tokens, bool delta,
              const std::string& out) {
  SpaceDesc d = parse_space(tokens);
  if (guarded_size(d, delta, default_bound()) < 0) return 3;
  LinearSpace sp = build_space(d);
  nlohmann::json j;
  if (delta) {
    TriangleComplex tc = triangle_complex(sp);
    j = geometry_to_json(tc.sys());
    auto comp = connected_components(tc.sys());
    if (comp.second != 1) std::cerr << "components: " << comp.second << "\n";
  } else {
    j = geometry_to_json(sp.sys);
  }
  write_output(j.dump(2) + "\n", out);
  return 0;
}

int cmd_check(const std::vector<std::string>& tokens, bool all, bool rc,
              bool ft, bool duality, bool triality, bool diag,
              const std::string& expect, const std::string& table_path,
              bool json_mode) {
  if (!(rc || ft || duality || triality || diag)) all = true;
  SpaceDesc d = parse_space(tokens);
  ReportOptions opt;
  opt.max_elements = default_bound();
  InstanceReport r = report(d, opt);
  if (r.scale_exceeded) {
    std::cerr << "scale bound exceeded: complex has " << r.delta_elements
              << " elements (bound " << opt.max_elements << ")\n";
    return 3;
  }

  if (json_mode) {
    std::cout << report_to_json(r).dump(2) << "\n";
  } else {
    if (all) {
      std::cout << "connected: " << yn(r.connected) << "\n";
      std::cout << "components: " << r.components << "\n";
    }
    if (all || rc) std::cout << "RC: " << yn(r.residually_connected) << "\n";
    if (all) std::cout << "firmness: " << to_string(r.firm) << "\n";
    if (all || ft)
      std::cout << "flag-transitive: " << yn(r.flag_transitive) << " (orbit "
                << r.chamber_orbit << ")\n";
    if (all || duality) std::cout << "duality: " << yn(r.has_duality) << "\n";
    if (all || triality)
      std::cout << "triality: " << yn(r.has_triality) << "\n";
    if (all) {
      std::cout << "aut: " << r.aut_order << "\n";
      std::cout << "cor: " << r.cor_order << "\n";
      std::cout << "method: " << r.group_method << "\n";
    }
    if (all || diag)
      for (const std::string& line : diagram_lines(r.delta_diagram))
        std::cout << line << "\n";
  }

  if (expect.empty()) return 0;
  nlohmann::json table = load_table(table_path);
  std::string key = d.str();
  if (!table["rows"].contains(key)) {
    std::cerr << "no expectations for '" << key << "'\n";
    return 2;
  }
  std::set<std::string> fields;
  if (all) fields = {"connected", "rc", "thin", "ft", "duality", "triality",
                     "aut", "cor"};
  if (rc) fields.insert("rc");
  if (ft) fields.insert("ft");
  if (duality) fields.insert("duality");
  if (triality) fields.insert("triality");
  std::vector<Mismatch> bad = compare_row(r, table["rows"][key], fields);
  if ((all || diag) && table["diagrams"].contains(key))
    for (const Mismatch& m : compare_diagram(r.delta_diagram,
                                             table["diagrams"][key]))
      bad.push_back(m);
  for (const Mismatch& m : bad)
    std::cout << "MISMATCH " << m.field << ": computed " << m.computed
              << ", expected " << m.expected << "\n";
  if (bad.empty()) {
    std::cout << "expectations: ok\n";
    return 0;
  }
  return 1;
}

int cmd_export(const std::vector<std::string>& tokens, bool dot, bool hyper,
               const std::string& out) {
  SpaceDesc d = parse_space(tokens);
  if (guarded_size(d, true, default_bound()) < 0) return 3;
  TriangleComplex tc = triangle_complex(build_space(d));
  if (dot) {
    write_output(geometry_to_dot(tc.sys(), "delta"), out);
    return 0;
  }
  if (hyper) {
    try {
      Hypermap h = hypermap_export(tc.sys());
      write_output(hypermap_to_json(h).dump(2) + "\n", out);
      std::cerr << hypermap_summary(h) << "\n";
      return 0;
    } catch (const HypermapUnavailable& e) {
      std::cerr << e.what() << "\n";
      return 4;
    }
  }
  std::cerr << "export: pass --dot or --hypermap\n";
  return 2;
}

int cmd_suite(int max_elements, const std::string& table_path,
              bool json_mode) {
  ReportOptions opt;
  opt.max_elements = max_elements > 0 ? max_elements : default_bound();
  nlohmann::json table = load_table(table_path);
  bool all_pass = true;
  nlohmann::json jrows = nlohmann::json::array();
  std::ostringstream text;

  const std::set<std::string> row_fields = {"connected", "rc",     "thin",
                                            "ft",        "duality", "triality",
                                            "aut",       "cor"};
  for (const auto& [key, row] : table["rows"].items()) {
    InstanceReport r = report(key, opt);
    nlohmann::json jr;
    jr["space"] = key;
    if (r.scale_exceeded) {
      text << "row " << key << ": skipped: scale\n";
      jr["status"] = "skipped: scale";
      jrows.push_back(std::move(jr));
      continue;
    }
    std::vector<Mismatch> bad = compare_row(r, row, row_fields);
    if (table["diagrams"].contains(key))
      for (const Mismatch& m :
           compare_diagram(r.delta_diagram, table["diagrams"][key]))
        bad.push_back(m);
    if (bad.empty()) {
      text << "row " << key << ": PASS\n";
      jr["status"] = "pass";
    } else {
      all_pass = false;
      text << "row " << key << ": FAIL";
      for (const Mismatch& m : bad)
        text << " [" << m.field << " computed " << m.computed << " expected "
             << m.expected << "]";
      text << "\n";
      jr["status"] = "fail";
    }
    jr["report"] = report_to_json(r);
    jrows.push_back(std::move(jr));
  }

  nlohmann::json jcases = nlohmann::json::array();
  for (const CharacterizationCase& c : verify_characterization(opt)) {
    nlohmann::json jc;
    jc["space"] = c.descriptor;
    jc["expected_positive"] = c.expected_positive;
    if (c.skipped) {
      text << "case " << c.descriptor << ": skipped: scale\n";
      jc["status"] = "skipped: scale";
    } else if (c.pass) {
      text << "case " << c.descriptor << ": PASS (" << c.detail << ")\n";
      jc["status"] = "pass";
      jc["detail"] = c.detail;
    } else {
      all_pass = false;
      text << "case " << c.descriptor << ": FAIL (" << c.detail << ")\n";
      jc["status"] = "fail";
      jc["detail"] = c.detail;
    }
    jcases.push_back(std::move(jc));
  }

  text << "suite: " << (all_pass ? "PASS" : "FAIL") << "\n";
  if (json_mode) {
    nlohmann::json j;
    j["rows"] = std::move(jrows);
    j["cases"] = std::move(jcases);
    j["pass"] = all_pass;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text.str();
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"triangle complexes of finite linear spaces"};
  app.require_subcommand(1);

  std::vector<std::string> space;
  std::string out_path, expect, table_path = "data/table1.json";
  bool delta = false, all = false, rc = false, ft = false, duality = false,
       triality = false, diag = false, dot = false, hyper = false,
       json_mode = false;
  int max_elements = 0;

  CLI::App* build = app.add_subcommand("build", "write a space or its complex as JSON");
  build->add_option("space", space, "pg n q | ag n q | kv v | uh q")
      ->expected(2, 3);
  build->add_flag("--delta", delta, "build the triangle complex, not the space");
  build->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* check = app.add_subcommand("check", "compute structural facts");
  check->add_option("space", space, "pg n q | ag n q | kv v | uh q")
      ->expected(2, 3);
  check->add_flag("--all", all, "all checks (default)");
  check->add_flag("--rc", rc, "residual connectedness");
  check->add_flag("--ft", ft, "flag transitivity");
  check->add_flag("--duality", duality, "duality presence");
  check->add_flag("--triality", triality, "triality presence");
  check->add_flag("--diagram", diag, "diagram parameters");
  check->add_option("--expect", expect, "compare against the expectation table")
      ->check(CLI::IsMember({"table1"}));
  check->add_option("--table", table_path, "expectation table path");
  check->add_flag("--json", json_mode, "JSON report instead of text");

  CLI::App* exp = app.add_subcommand("export", "write DOT or hypermap files");
  exp->add_option("space", space, "pg n q | ag n q | kv v | uh q")
      ->expected(2, 3);
  exp->add_flag("--dot", dot, "DOT of the complex incidence graph");
  exp->add_flag("--hypermap", hyper, "hypermap JSON (thin complexes)");
  exp->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* suite = app.add_subcommand("suite", "run every table row and the characterization cases");
  suite->add_option("--max-elements", max_elements, "scale bound override");
  suite->add_option("--table", table_path, "expectation table path");
  suite->add_flag("--json", json_mode, "JSON results");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (build->parsed()) return cmd_build(space, delta, out_path);
    if (check->parsed())
      return cmd_check(space, all, rc, ft, duality, triality, diag, expect,
                       table_path, json_mode);
    if (exp->parsed()) return cmd_export(space, dot, hyper, out_path);
    if (suite->parsed()) return cmd_suite(max_elements, table_path, json_mode);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 2;
}
