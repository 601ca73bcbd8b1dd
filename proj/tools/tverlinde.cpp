// Command-line front end: solve / index / tqft / verify.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 numeric failure
// (branch collision or Newton divergence).

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "tverlinde/json_io.hpp"

namespace {

using namespace tv;

struct GlobalOpts {
  std::string group = "su2";
  int order = 32;
  std::string format = "json";  // json | csv | table
  std::string output;           // empty = stdout
};

int group_rank_n(const std::string& group) {
  if (group.rfind("su", 0) != 0) throw CLI::ValidationError("--group", "expected suN, e.g. su2");
  int n = std::stoi(group.substr(2));
  if (n < 2) throw CLI::ValidationError("--group", "SU(N) needs N >= 2");
  if (n > RootSystem::weyl_cap)
    throw CLI::ValidationError("--group", "Weyl enumeration too large for SU(" + std::to_string(n) +
                                              "); the cap is N <= " + std::to_string(RootSystem::weyl_cap));
  return n;
}

void emit(const GlobalOpts& g, const std::string& text) {
  if (g.output.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream f(g.output);
    f << text << "\n";
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find(',') == std::string::npos) return s;
  return "\"" + s + "\"";
}

/// "2,1" -> Borel puncture; "2,1@3" -> Levi contains simple root 3 (1-based).
std::pair<Weight, ParabolicSpec> parse_puncture(const std::string& text, int level) {
  auto at = text.find('@');
  Weight w = parse_weight(text.substr(0, at), level);
  ParabolicSpec p;
  if (at != std::string::npos) {
    std::stringstream ss(text.substr(at + 1));
    std::string item;
    while (std::getline(ss, item, ',')) p.levi.insert(std::stoi(item) - 1);
  }
  return {w, p};
}

int cmd_solve(const GlobalOpts& g, int level, double t, int steps, double t_max,
              double newton_tol) {
  RootSystem rs(group_rank_n(g.group));
  ContinuationOptions opts;
  if (steps > 0) opts.steps = steps;
  if (t_max > 0) opts.t_max = static_cast<Real>(t_max);
  if (newton_tol > 0) opts.newton_tol = static_cast<Real>(newton_tol);
  auto roots = solve_roots(rs, level, static_cast<Real>(t), opts);
  if (g.format == "json") {
    emit(g, roots_to_json(roots).dump(2));
  } else {
    std::ostringstream os;
    if (g.format == "csv") {
      os << "branch,xi,residual\n";
      for (const auto& r : roots) {
        os << csv_escape(r.branch.str()) << ",\"";
        auto xi = r.point.xi();
        for (size_t i = 0; i < xi.size(); ++i) os << (i ? ";" : "") << static_cast<double>(xi[i]);
        os << "\"," << static_cast<double>(r.residual) << "\n";
      }
    } else {
      os << "branch      xi                     residual\n";
      for (const auto& r : roots) {
        os << r.branch.str() << "  [";
        auto xi = r.point.xi();
        for (size_t i = 0; i < xi.size(); ++i) os << (i ? ", " : "") << static_cast<double>(xi[i]);
        os << "]  " << static_cast<double>(r.residual) << "\n";
      }
    }
    std::string s = os.str();
    if (!s.empty() && s.back() == '\n') s.pop_back();
    emit(g, s);
  }
  return 0;
}

int cmd_index(const GlobalOpts& g, int level, double t, int genus, int R,
              const std::vector<std::string>& puncture_args, const std::string& punctures_list,
              int steps, double t_max, double newton_tol) {
  RootSystem rs(group_rank_n(g.group));
  IndexRequest req;
  req.level = level;
  req.t = static_cast<Real>(t);
  req.genus = genus;
  req.R = R;
  if (steps > 0) req.options.steps = steps;
  if (t_max > 0) req.options.t_max = static_cast<Real>(t_max);
  if (newton_tol > 0) req.options.newton_tol = static_cast<Real>(newton_tol);
  for (const auto& p : puncture_args) req.punctures.push_back(parse_puncture(p, level));
  if (!punctures_list.empty()) {
    if (rs.n() != 2)
      throw CLI::ValidationError("--punctures", "comma list form is SU(2) only; use --puncture");
    std::stringstream ss(punctures_list);
    std::string item;
    while (std::getline(ss, item, ','))
      req.punctures.emplace_back(Weight{{std::stoi(item)}, level}, ParabolicSpec::borel());
  }
  auto res = index(rs, req);
  if (g.format == "json") {
    emit(g, index_to_json(res).dump(2));
  } else if (g.format == "csv") {
    std::ostringstream os;
    os << "branch,re,im\n";
    for (size_t i = 0; i < res.per_root.size(); ++i)
      os << csv_escape(res.branches[i].str()) << "," << static_cast<double>(res.per_root[i].real())
         << "," << static_cast<double>(res.per_root[i].imag()) << "\n";
    os << "value," << static_cast<double>(res.value) << ",";
    emit(g, os.str());
  } else {
    std::ostringstream os;
    os << "value = " << static_cast<double>(res.value) << "\nper-root contributions:\n";
    for (size_t i = 0; i < res.per_root.size(); ++i)
      os << "  " << res.branches[i].str() << ": " << static_cast<double>(res.per_root[i].real())
         << (res.per_root[i].imag() >= 0 ? " + " : " - ")
         << std::abs(static_cast<double>(res.per_root[i].imag())) << "i\n";
    std::string s = os.str();
    s.pop_back();
    emit(g, s);
  }
  return 0;
}

int cmd_tqft(const GlobalOpts& g, int level, int genus, const std::string& punctures_list,
             int twisted, bool dump_algebra) {
  if (group_rank_n(g.group) != 2)
    throw CLI::ValidationError("--group", "the exact TQFT path is SU(2) only");
  FrobeniusData alg = su2_algebra(level, g.order);
  if (dump_algebra) {
    emit(g, frobenius_to_json(alg).dump(2));
    return 0;
  }
  Surface s;
  s.genus = genus;
  s.twisted_marks = twisted;
  if (!punctures_list.empty()) {
    std::stringstream ss(punctures_list);
    std::string item;
    while (std::getline(ss, item, ','))
      s.boundaries.push_back(Weight{{std::stoi(item)}, level});
  }
  Series value = evaluate(alg, s);
  if (g.format == "json") {
    json j;
    j["level"] = level;
    j["genus"] = genus;
    json labels = json::array();
    for (const auto& b : s.boundaries) labels.push_back(b.coords[0]);
    j["labels"] = labels;
    j["twisted"] = twisted;
    j["order"] = g.order;
    j["series"] = series_to_json(value);
    emit(g, j.dump(2));
  } else if (g.format == "csv") {
    std::ostringstream os;
    os << "degree,coefficient\n";
    auto strs = value.coeff_strings();
    for (size_t m = 0; m < strs.size(); ++m) os << m << "," << strs[m] << "\n";
    std::string out = os.str();
    out.pop_back();
    emit(g, out);
  } else {
    emit(g, value.str());
  }
  return 0;
}

int cmd_verify(const GlobalOpts& g, SuiteConfig cfg, const std::string& golden_dir) {
  cfg.order = g.order;
  SuiteReport rep = run_suite(cfg);
  if (!golden_dir.empty()) {
    // compare the expanded closed forms against checked-in golden files
    SuiteItem gold{"golden files", 3, true, 0.0L, golden_dir};
    std::ifstream f(golden_dir + "/closed_forms_order32.json");
    if (!f) {
      gold.pass = false;
      gold.note = "missing " + golden_dir + "/closed_forms_order32.json";
    } else {
      json j;
      f >> j;
      for (const auto& e : j.at("genus2")) {
        int k = e.at("k").get<int>();
        if (!(series_from_json(e.at("series")) == genus2_closed(k, 32))) gold.pass = false;
      }
      for (const auto& e : j.at("genus3")) {
        int k = e.at("k").get<int>();
        if (!(series_from_json(e.at("series")) == genus3_closed(k, 32))) gold.pass = false;
      }
      for (const auto& e : j.at("twisted_genus2")) {
        int k = e.at("k").get<int>();
        if (!(series_from_json(e.at("series")) == twisted_genus2_closed(k, 32).whole))
          gold.pass = false;
      }
      for (const auto& e : j.at("genus0")) {
        int n = e.at("n").get<int>();
        if (!(series_from_json(e.at("series")) == genus0_poincare(RootSystem(n), 32)))
          gold.pass = false;
      }
    }
    rep.items.push_back(gold);
  }
  if (g.format == "json")
    emit(g, report_to_json(rep).dump(2));
  else
    emit(g, rep.table());
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"t-deformed Verlinde computations for SU(N): Bethe-ansatz numerics and the exact SU(2) TQFT"};
  app.set_config("--config", "", "Config file (ini), same keys as the long options");
  GlobalOpts g;
  app.add_option("--order", g.order, "Series truncation order")->envname("TVERLINDE_ORDER");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--output", g.output, "Write output to a file instead of stdout");
  app.require_subcommand(1);
  

  int level = 1, genus = 0, R = 2, steps = 0, twisted = 0;
  double t = 0.0, t_max = 0.0, newton_tol = 0.0;
  std::string t_list;
  std::vector<std::string> puncture_args;
  std::string punctures_list, golden_dir;
  bool dump_algebra = false;
  SuiteConfig cfg;
  bool suite_serial = false;

  auto* solve = app.add_subcommand("solve", "Continue the fixed-point equations from t=0 and emit the roots");
  solve->fallthrough();
  solve->add_option("--group", g.group, "suN");
  solve->add_option("--level", level, "level k")->required();
  solve->add_option("--t", t, "deformation parameter")->required();
  solve->add_option("--steps", steps, "continuation steps");
  solve->add_option("--t-max", t_max, "continuation guard");
  solve->add_option("--newton-tol", newton_tol, "Newton tolerance override");

  auto* idx = app.add_subcommand("index", "Evaluate the deformed index at (g, k, t, R) with optional punctures");
  idx->fallthrough();
  idx->add_option("--group", g.group, "suN");
  idx->add_option("--level", level, "level k")->required();
  idx->add_option("--t", t, "deformation parameter")->required();
  idx->add_option("--genus", genus, "genus");
  idx->add_option("--R", R, "twist (default 2; R <= 0 switches to the lambda_{-t} characters)");
  idx->add_option("--puncture", puncture_args, "weight as comma-separated coordinates, optional @levi");
  idx->add_option("--punctures", punctures_list, "SU(2) shorthand: comma list of labels");
  idx->add_option("--steps", steps, "continuation steps");
  idx->add_option("--t-max", t_max, "continuation guard");
  idx->add_option("--newton-tol", newton_tol, "Newton tolerance override");

  auto* tq = app.add_subcommand("tqft", "Evaluate the exact SU(2) TQFT series for a surface");
  tq->fallthrough();
  tq->add_option("--level", level, "level k")->required();
  tq->add_option("--genus", genus, "genus");
  tq->add_option("--punctures", punctures_list, "comma list of boundary labels");
  tq->add_option("--twisted", twisted, "number of twisted-cap insertions");
  tq->add_flag("--algebra", dump_algebra, "dump the Frobenius data as JSON instead of evaluating");

  auto* ver = app.add_subcommand("verify", "Run the identity suite");
  ver->fallthrough();
  ver->add_option("--su2-kmax", cfg.su2_kmax, "SU(2) level range")->check(CLI::NonNegativeNumber);
  ver->add_option("--su3-kmax", cfg.su3_kmax, "SU(3) level range")->check(CLI::NonNegativeNumber);
  ver->add_option("--genus-max", cfg.genus_max, "genus range");
  ver->add_option("--tol", cfg.tol_numeric, "numeric tolerance");
  ver->add_option("--t-list", t_list, "comma list of t samples for the numeric checks");
  ver->add_option("--golden-dir", golden_dir, "directory of golden polynomial files to compare");
  ver->add_flag("--serial", suite_serial, "disable parallel suite execution");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (suite_serial) cfg.parallel = false;
    if (!t_list.empty()) {
      cfg.t_list.clear();
      std::stringstream ss(t_list);
      std::string item;
      while (std::getline(ss, item, ',')) cfg.t_list.push_back(static_cast<Real>(std::stod(item)));
    }
    if (solve->parsed()) return cmd_solve(g, level, t, steps, t_max, newton_tol);
    if (idx->parsed())
      return cmd_index(g, level, t, genus, R, puncture_args, punctures_list, steps, t_max, newton_tol);
    if (tq->parsed()) return cmd_tqft(g, level, genus, punctures_list, twisted, dump_algebra);
    if (ver->parsed()) return cmd_verify(g, cfg, golden_dir);
  } catch (const NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << " (t = " << static_cast<double>(e.t) << ")\n";
    return 3;
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
