// Command-line front end: parses inputs, calls the library, writes tables
// and a run manifest.
#include "mahler/approx/classify.hpp"
#include "mahler/approx/suites.hpp"
#include "mahler/approx/verify.hpp"
#include "mahler/error.hpp"
#include "mahler/io/output.hpp"
#include "mahler/measures/measures.hpp"
#include "mahler/resultant/rat_map.hpp"
#include "mahler/resultant/resultant_ops.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <iostream>
#include <sstream>

using namespace mahler;
using nlohmann::ordered_json;

namespace {

struct Globals {
  std::string out_dir;
  std::string config_path;
  long precision_cap = 0;
  unsigned threads = 0;
};

// Files written by the command; digested into the manifest.
struct Run {
  Globals g;
  io::RunConfig cfg;
  std::string dir;  // empty: stdout only
  std::map<std::string, std::string> snapshot;
  std::vector<std::string> files;
  std::uint64_t seed = 0;

  void emit(const std::string& name, const std::string& text) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    if (dir.empty()) return;
    io::write_file(dir, name, text.back() == '\n' ? text : text + "\n");
    files.push_back(name);
  }
};

std::string utc_now() {
  const std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

std::string join_args(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += ' ';
    s += argv[i];
  }
  return s;
}

std::vector<std::int64_t> parse_list(const std::string& text) {
  std::vector<std::int64_t> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    try {
      v.push_back(std::stoll(item));
    } catch (const std::logic_error&) {
      throw ParseError("bad integer list: " + text);
    }
  return v;
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    try {
      v.push_back(std::stod(item));
    } catch (const std::logic_error&) {
      throw ParseError("bad number list: " + text);
    }
  return v;
}

std::vector<std::int64_t> resolve_schedule(const std::string& heights, const std::string& schedule) {
  if (!heights.empty()) return parse_list(heights);
  const auto bc = parse_list(schedule.empty() ? "10,3" : schedule);
  if (bc.size() != 2) throw ParseError("--schedule expects base,count");
  return geometric_schedule(bc[0], static_cast<int>(bc[1]));
}

RatMap parse_map(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return ratmap_make(poly_parse(text), IntPoly::constant(1));
  return ratmap_parse(text.substr(0, slash), text.substr(slash + 1));
}

ordered_json poly_summary(const IntPoly& f, bool canonical) {
  ordered_json j;
  j["result"] = poly_format(f);
  j["pretty"] = poly_pretty(f);
  j["degree"] = f.degree();
  j["height"] = f.is_zero() ? "0" : height(f).get_str();
  j["leading"] = f.is_zero() ? "0" : f.leading().get_str();
  if (canonical && !f.is_zero()) {
    const auto [c, p] = content_primitive(f);
    j["content"] = c.get_str();
    j["canonical"] = poly_format(p);
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resultant arithmetic, certified Mahler measures and polynomial approximation lab"};
  app.set_version_flag("--version", std::string(MAHLER_VERSION));
  app.require_subcommand(1);
  Globals g;
  app.add_option("--out", g.out_dir, "Output directory (also MAHLER_OUTPUT_DIR or output_dir in the config)");
  app.add_option("--config", g.config_path, "key=value file: precision_cap, threads, output_dir");
  app.add_option("--precision-cap", g.precision_cap, "Precision cap in bits");
  app.add_option("--threads", g.threads, "Search threads (0: all cores)");
  app.footer(constant_syntax_help());

  // poly
  std::string op, lhs, rhs;
  bool canonical = false;
  auto* poly = app.add_subcommand("poly", "Resultant and Cauchy products of integer polynomials");
  poly->add_option("--op", op, "boxtimes | boxplus | boxminus | cauchy | boxcircle")
      ->required()
      ->check(CLI::IsMember({"boxtimes", "boxplus", "boxminus", "cauchy", "boxcircle"}));
  poly->add_option("--lhs", lhs, "Coefficients a0,a1,...,ad")->required();
  poly->add_option("--rhs", rhs, "Coefficients, or p/q for boxcircle")->required();
  poly->add_flag("--canonical", canonical, "Also print the content-primitive form");

  // measure
  std::string mpoly, mtheta, mrho = "1";
  long mprec = 64;
  auto* measure = app.add_subcommand("measure", "Mahler measure and theta-measures");
  measure->add_option("--poly", mpoly, "Coefficients a0,...,ad")->required();
  measure->add_option("--theta", mtheta, "Target constant");
  measure->add_option("--rho", mrho, "Disk radius in (0,1], rational");
  measure->add_option("--precision", mprec, "Bits");

  // search
  std::string stheta, heights, schedule;
  int sdeg = 1;
  double sbudget = 0;
  auto* search = app.add_subcommand("search", "Best approximating polynomials over a height schedule");
  search->add_option("--theta", stheta, "Target constant")->required();
  search->add_option("--deg", sdeg, "Maximum degree (rows for 1..deg)")->check(CLI::PositiveNumber);
  search->add_option("--heights", heights, "Comma-separated heights");
  search->add_option("--schedule", schedule, "Geometric schedule base,count (default 10,3)");
  search->add_option("--budget", sbudget, "Max screened vectors per cell (0: none)");

  // classify
  std::string ctheta;
  ClassifyOptions copt;
  auto* classify = app.add_subcommand("classify", "Heuristic Mahler class with evidence table");
  classify->add_option("--theta", ctheta, "Target constant")->required();
  classify->add_option("--max-deg", copt.d_max)->check(CLI::PositiveNumber);
  classify->add_option("--max-height", copt.H_max);
  classify->add_option("--schedule-base", copt.base);
  classify->add_option("--threshold", copt.divergence_threshold, "Divergence threshold for exponents");
  classify->add_option("--budget", copt.search_budget, "Max screened vectors per cell");

  // spectra
  std::string ptheta, avals = "0.25,0.5,0.75,1,1.25,1.5,2,3,4", bvals = "0.25,0.5,0.75,1,1.25,1.5,2,3,4";
  int pdeg = 1;
  std::int64_t pH = 100000, pbase = 2;
  auto* spectra = app.add_subcommand("spectra", "Attainable growth/decay exponent grid");
  spectra->add_option("--theta", ptheta, "Target constant")->required();
  spectra->add_option("--deg", pdeg)->check(CLI::PositiveNumber);
  spectra->add_option("--max-height", pH);
  spectra->add_option("--schedule-base", pbase);
  spectra->add_option("--a", avals, "Growth exponents");
  spectra->add_option("--b", bvals, "Decay exponents");

  // verify
  std::string suite;
  std::uint64_t seed = 1;
  long count = 0;
  auto* verify = app.add_subcommand("verify", "Randomized law and inequality suites");
  std::vector<std::string> choices = suite_names();
  choices.push_back("all");
  verify->add_option("--suite", suite, "Suite name or all")->required()->check(CLI::IsMember(choices));
  verify->add_option("--seed", seed);
  verify->add_option("--count", count, "Instances (0: suite default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  const auto t0 = std::chrono::steady_clock::now();
  Run run;
  run.g = g;
  int status = 0;
  try {
    if (!g.config_path.empty()) run.cfg = io::apply_config(io::read_config(g.config_path));
    if (g.precision_cap > 0) run.cfg.precision_cap = g.precision_cap;
    if (g.threads > 0) run.cfg.threads = g.threads;
    if (!g.out_dir.empty())
      run.dir = g.out_dir;
    else if (const char* env = std::getenv("MAHLER_OUTPUT_DIR"); env && *env)
      run.dir = env;
    else if (!g.config_path.empty())
      run.dir = run.cfg.output_dir;
    set_precision_cap(run.cfg.precision_cap);
    run.snapshot["precision_cap"] = std::to_string(run.cfg.precision_cap);
    run.snapshot["threads"] = std::to_string(run.cfg.threads);

    if (*poly) {
      const IntPoly f = poly_parse(lhs);
      IntPoly r;
      if (op == "boxcircle") {
        r = box_circle(f, parse_map(rhs));
      } else {
        const IntPoly h = poly_parse(rhs);
        if (op == "boxtimes") r = box_times(f, h);
        if (op == "boxplus") r = box_plus(f, h);
        if (op == "boxminus") r = box_minus(f, h);
        if (op == "cauchy") r = cauchy_mul(f, h);
      }
      ordered_json j;
      j["op"] = op;
      j["lhs"] = lhs;
      j["rhs"] = rhs;
      const ordered_json summary = poly_summary(r, canonical);
      for (const auto& [k, v] : summary.items()) j[k] = v;
      run.snapshot["op"] = op;
      run.emit("poly.json", j.dump(2));
    } else if (*measure) {
      const IntPoly f = poly_parse(mpoly);
      run.snapshot["precision"] = std::to_string(mprec);
      if (mtheta.empty()) {
        ordered_json j;
        j["poly"] = poly_format(f);
        j["height"] = height(f).get_str();
        j["mahler"] = ordered_json::parse(interval_json(mahler_measure(f, mprec)));
        if (f.degree() >= 1) {
          ordered_json roots = ordered_json::array();
          for (const auto& r : roots_certified(f, mprec).roots) roots.push_back(ordered_json::parse(root_json(r)));
          j["roots"] = roots;
        }
        run.emit("measure.json", j.dump(2));
      } else {
        mpq_class rho;
        if (rho.set_str(mrho, 10) != 0) throw ParseError("bad --rho: " + mrho);
        rho.canonicalize();
        run.emit("measure.json", measure_report_json(theta_measures(f, const_parse(mtheta), rho, mprec)));
      }
    } else if (*search) {
      const RealConstant theta = const_parse(stheta);
      const auto sched = resolve_schedule(heights, schedule);
      SearchOptions so;
      so.threads = run.cfg.threads;
      so.budget = static_cast<std::uint64_t>(sbudget);
      const ExponentTable t = exponent_table(theta, sdeg, sched, so);
      std::string csv = io::approx_csv_header();
      for (const auto& row : t.rows) csv += io::approx_csv_row(row);
      run.snapshot["theta"] = theta.spec;
      run.snapshot["deg"] = std::to_string(sdeg);
      run.emit("approx_table.csv", csv);
    } else if (*classify) {
      copt.threads = run.cfg.threads;
      run.emit("class_report.json", class_report_json(classify_mahler(const_parse(ctheta), copt)));
    } else if (*spectra) {
      std::vector<std::pair<double, double>> grid;
      for (double a : parse_doubles(avals))
        for (double b : parse_doubles(bvals)) grid.emplace_back(a, b);
      SearchOptions so;
      so.threads = run.cfg.threads;
      so.budget = 5000000;
      run.emit("spectra.csv", io::spectra_csv(spectra_grid(const_parse(ptheta), pdeg, pH, grid, pbase, so), pdeg));
    } else if (*verify) {
      run.seed = seed;
      const std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
      for (const auto& name : names) {
        const SuiteReport r = run_suite(name, seed, count);
        run.emit("verify_" + name + ".json", suite_report_json(r));
        std::cerr << name << ": " << (r.ok() ? "PASS" : "FAIL") << " " << r.passed + r.expected_negative << "/"
                  << r.total << "\n";
        if (!r.ok()) status = 1;
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (!run.dir.empty()) {
    io::RunManifest m;
    m.command_line = join_args(argc, argv);
    m.config = run.snapshot;
    m.precision_cap = run.cfg.precision_cap;
    m.seed = run.seed;
    m.tool_version = MAHLER_VERSION;
    m.wall_clock = utc_now();
    m.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (const auto& f : run.files) m.digests[f] = io::sha256_file(run.dir + "/" + f);
    io::write_file(run.dir, "manifest.json", io::manifest_json(m) + "\n");
  }
  return status;
}
