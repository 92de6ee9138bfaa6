// Command-line surface: compute sections and perimeters, run verification
// suites, tabulate the ball function and the Busemann-Petty comparison, and
// search for the extremal direction.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubeperim/ballfn.hpp"
#include "cubeperim/bpcheck.hpp"
#include "cubeperim/extremal.hpp"
#include "cubeperim/oracle.hpp"
#include "cubeperim/sections.hpp"
#include "cubeperim/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace cubeperim;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct OutputSink {
  std::string format = "json";  // json | csv
  std::string path;             // empty = stdout
  std::vector<json> rows;

  void add(json row) { rows.push_back(std::move(row)); }

  static std::string csv_cell(const json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
      std::string s;
      for (const auto& e : v) {
        if (!s.empty()) s += ';';
        s += csv_cell(e);
      }
      return s;
    }
    return v.dump();
  }

  void flush() const {
    std::ostringstream os;
    if (format == "csv") {
      if (!rows.empty()) {
        bool first = true;
        for (auto it = rows.front().begin(); it != rows.front().end(); ++it) {
          os << (first ? "" : ",") << it.key();
          first = false;
        }
        os << "\n";
        for (const json& row : rows) {
          first = true;
          for (auto it = row.begin(); it != row.end(); ++it) {
            os << (first ? "" : ",") << csv_cell(it.value());
            first = false;
          }
          os << "\n";
        }
      }
    } else {
      for (const json& row : rows) os << row.dump() << "\n";
    }
    if (path.empty()) {
      std::cout << os.str();
    } else {
      std::ofstream f(path, std::ios::binary);
      f << os.str();
    }
  }
};

std::vector<double> parse_coords(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(std::stod(tok));
  }
  return out;
}

// "3..8" or a single "5".
std::pair<int, int> parse_range(const std::string& s) {
  const auto pos = s.find("..");
  if (pos == std::string::npos) {
    const int n = std::stoi(s);
    return {n, n};
  }
  return {std::stoi(s.substr(0, pos)), std::stoi(s.substr(pos + 2))};
}

Field parse_field(const std::string& s) {
  if (s == "real") return Field::real;
  if (s == "complex") return Field::complex;
  throw CLI::ValidationError("--field", "must be real or complex");
}

json report_row(const VerificationReport& r) {
  return json{{"name", r.name},       {"inputs", r.inputs},
              {"computed", r.computed}, {"bound", r.bound},
              {"margin", r.margin},   {"tolerance", r.tolerance},
              {"pass", r.pass}};
}

int cmd_section(const std::string& field_s, const std::string& coords_s,
                double t, std::uint64_t seed, OutputSink& sink) {
  const Field field = parse_field(field_s);
  Direction a = Direction::canonicalize(parse_coords(coords_s), field);
  json row;
  row["n"] = a.n();
  row["field"] = field_s;
  row["a"] = a.coords;
  row["t"] = t;
  row["A"] = section_volume(a, t);
  if (t == 0.0) {
    SectionProfile p = section_profile(a);
    row["D"] = p.D;
    if (a.n() >= 3) row["P"] = p.P;
    if (p.holder_bound) row["holder_bound"] = *p.holder_bound;
    if (p.projection_bound) row["projection_bound"] = *p.projection_bound;
  }
  row["cor5_bound"] = cor5_bound(t, field_multiplier(field));
  if (field == Field::real) {
    const double oracle_v = oracle::section_volume_oracle(a, t);
    row["oracle"] = oracle_v;
    row["discrepancy"] = row["A"].get<double>() - oracle_v;
  } else {
    const auto mc = oracle::mc_complex_section(a, 1000000, 0.05, seed);
    row["oracle"] = mc.value;
    row["oracle_std_error"] = mc.std_error;
    row["discrepancy"] = row["A"].get<double>() - mc.value;
  }
  sink.add(std::move(row));
  return kExitOk;
}

int cmd_verify(const std::string& suite, const std::string& range,
               int samples, std::uint64_t seed, OutputSink& sink) {
  verify::SuiteOptions opt;
  std::tie(opt.n_min, opt.n_max) = parse_range(range);
  if (opt.n_min < 3 || opt.n_min > opt.n_max) {
    throw CLI::ValidationError("--n", "need 3 <= lo <= hi");
  }
  opt.samples = samples;
  opt.seed = seed;
  const auto reports = verify::run_suite(suite, opt);
  bool all_pass = true;
  for (const auto& r : reports) {
    sink.add(report_row(r));
    all_pass = all_pass && r.pass;
  }
  return all_pass ? kExitOk : kExitVerifyFail;
}

int cmd_ballfn(const std::string& p_list, const std::string& range,
               bool special, OutputSink& sink) {
  std::vector<double> ps;
  if (!p_list.empty()) ps = parse_coords(p_list);
  if (!range.empty()) {
    std::stringstream ss(range);
    std::string a, b, c;
    std::getline(ss, a, ':');
    std::getline(ss, b, ':');
    std::getline(ss, c, ':');
    const double lo = std::stod(a), hi = std::stod(b), step = std::stod(c);
    for (double p = lo; p <= hi + 1e-12; p += step) ps.push_back(p);
  }
  for (double p : ps) {
    json row;
    row["p"] = p;
    row["f"] = ballfn::ball_f(p);
    if (p > 4.0 / 3.0) {
      row["f_complex"] = ballfn::ball_f_complex(p);
    } else {
      row["f_complex"] = nullptr;
    }
    row["kos"] = ballfn::kos_asymptotic(p);
    sink.add(std::move(row));
  }
  if (special) {
    const auto sp = ballfn::find_special_points();
    sink.add(json{{"point", "p1"}, {"value", sp.p1},
                  {"meaning", "f = sqrt(3/pi)"}});
    sink.add(json{{"point", "p2"}, {"value", sp.p2}, {"meaning", "f' = 0"}});
    sink.add(json{{"point", "p0"}, {"value", sp.p0}, {"meaning", "f'' = 0"}});
  }
  if (ps.empty() && !special) {
    throw CLI::ValidationError("ballfn", "give --p, --range, or --special");
  }
  return kExitOk;
}

int cmd_bp(const std::string& field_s, int n_min, int n_max, bool root,
           OutputSink& sink) {
  const bool do_real = field_s != "complex";
  const bool do_complex = field_s != "real";
  if (do_real) {
    for (const auto& r : bpcheck::bp_table(n_min, n_max)) {
      sink.add(json{{"field", "real"},
                    {"n", r.n},
                    {"radius", r.radius},
                    {"bp", r.bp},
                    {"counterexample", r.counterexample}});
    }
  }
  if (do_complex) {
    for (int n = n_min; n <= n_max; ++n) {
      const double bp = bpcheck::bp_complex_value(n);
      sink.add(json{{"field", "complex"},
                    {"n", n},
                    {"radius", bpcheck::ball_radius_complex(n)},
                    {"bp", bp},
                    {"counterexample", bp < 1.0}});
    }
  }
  if (root) {
    if (do_real) {
      sink.add(json{{"field", "real"}, {"root", bpcheck::bp_root(false)}});
    }
    if (do_complex) {
      sink.add(json{{"field", "complex"}, {"root", bpcheck::bp_root(true)}});
    }
  }
  return kExitOk;
}

int cmd_extremal(int n, const std::string& field_s, std::uint64_t seed,
                 int multistarts, int resolution, OutputSink& sink) {
  extremal::SearchConfig cfg;
  cfg.n = n;
  cfg.field = parse_field(field_s);
  cfg.seed = seed;
  cfg.multistarts = multistarts;
  cfg.grid_resolution = resolution;
  const auto rep = extremal::search_max_perimeter(cfg);
  sink.add(json{{"n", n},
                {"field", field_s},
                {"best_direction", rep.best_direction.coords},
                {"best_value", rep.best_value},
                {"target_value", rep.target_value},
                {"margin", rep.margin},
                {"evaluations", rep.evaluations}});
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cube and polydisc hyperplane sections: volumes, perimeters, "
               "and inequality verification"};
  app.set_config("--config", "", "Flat key=value config file");
  std::string format = "json", output;
  app.add_option("--format", format, "Output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->envname("CUBEPERIM_FORMAT");
  app.add_option("--output", output, "Write output to this file")
      ->envname("CUBEPERIM_OUTPUT");
  app.require_subcommand(1);

  std::string field = "real", coords, suite = "all", nrange = "3..8";
  std::string p_list, p_range;
  double t = 0.0;
  int samples = 50, n = 4, multistarts = 50, resolution = 24;
  int bp_min = 3, bp_max = 20;
  std::uint64_t seed = 7;
  bool special = false, bp_root_flag = false;

  auto* sec = app.add_subcommand("section", "Section volume and perimeter");
  sec->add_option("--field", field)->envname("CUBEPERIM_FIELD");
  sec->add_option("--a", coords, "Direction, comma-separated")->required();
  sec->add_option("--t", t, "Normalized offset");
  sec->add_option("--seed", seed)->envname("CUBEPERIM_SEED");

  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("--suite", suite)
      ->check(CLI::IsMember(verify::suite_names()));
  ver->add_option("--n", nrange, "Dimension range lo..hi");
  ver->add_option("--samples", samples);
  ver->add_option("--seed", seed)->envname("CUBEPERIM_SEED");

  auto* bf = app.add_subcommand("ballfn", "Ball function values");
  bf->add_option("--p", p_list, "Exponents, comma-separated");
  bf->add_option("--range", p_range, "lo:hi:step sweep");
  bf->add_flag("--special", special, "Report p1, p2, p0");
  std::string emit;
  bf->add_option("--emit", emit, "plot-data emits the same rows (CSV-ready)");

  auto* bp = app.add_subcommand("bp", "Busemann-Petty comparison table");
  bp->add_option("--field", field)->check(
      CLI::IsMember({"real", "complex", "both"}));
  bp->add_option("--min", bp_min);
  bp->add_option("--max", bp_max);
  bp->add_flag("--root", bp_root_flag, "Report the crossover roots");

  auto* ext = app.add_subcommand("extremal", "Search for the maximizer");
  ext->add_option("--n", n)->check(CLI::Range(3, 8));
  ext->add_option("--field", field)->envname("CUBEPERIM_FIELD");
  ext->add_option("--seed", seed)->envname("CUBEPERIM_SEED");
  ext->add_option("--multistarts", multistarts);
  ext->add_option("--resolution", resolution);

  // Let --format/--output appear after the subcommand as well.
  for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  OutputSink sink;
  sink.format = format;
  sink.path = output;
  int rc = kExitOk;
  try {
    if (sec->parsed()) {
      rc = cmd_section(field, coords, t, seed, sink);
    } else if (ver->parsed()) {
      rc = cmd_verify(suite, nrange, samples, seed, sink);
    } else if (bf->parsed()) {
      rc = cmd_ballfn(p_list, p_range, special, sink);
    } else if (bp->parsed()) {
      rc = cmd_bp(field, bp_min, bp_max, bp_root_flag, sink);
    } else if (ext->parsed()) {
      rc = cmd_extremal(n, field, seed, multistarts, resolution, sink);
    }
  } catch (const QuadratureError& e) {
    std::cerr << "numerical non-convergence: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  }
  sink.flush();
  return rc;
}
