#include "udgdom/cli.hpp"

#include <chrono>
#include <ctime>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "udgdom/approx.hpp"
#include "udgdom/exact.hpp"
#include "udgdom/experiment.hpp"
#include "udgdom/io.hpp"
#include "udgdom/reduction.hpp"

namespace udgdom::cli {

namespace {

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void emit(const std::string& path, const std::string& contents, std::ostream& out) {
  if (path.empty()) {
    out << contents;
  } else {
    io::write_file(path, contents);
  }
}

struct Options {
  ExperimentConfig cfg;
  std::string problem = "tds";
  std::size_t exact_limit = 0;  // 0: per-problem default
  std::string in;
  std::string out;
  std::string grid;
  std::string roles;
  bool scale2 = false;
  std::size_t max_n = 4;
};

void add_instance_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--n", o.cfg.n, "points per instance")->check(CLI::PositiveNumber);
  cmd->add_option("--width", o.cfg.box_width, "box width")->check(CLI::PositiveNumber);
  cmd->add_option("--height", o.cfg.box_height, "box height")->check(CLI::PositiveNumber);
  cmd->add_option("--radius", o.cfg.radius, "disk radius")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", o.cfg.seed, "generator seed");
}

int cmd_generate(Options& o, std::ostream& out) {
  o.cfg.problem = parse_problem(o.problem);
  emit(o.out, io::format_instance(generate_instance(o.cfg)), out);
  return kOk;
}

int cmd_solve(Options& o, std::ostream& out) {
  const Problem p = parse_problem(o.problem);
  const UnitDiskGraph g = build_udg(io::parse_instance(io::read_file(o.in)));
  if (p == Problem::kTds) {
    const auto s = tds_udg_sc(g);
    if (!o.out.empty()) io::write_file(o.out, io::format_set_solution("tds", s.members));
    out << s.members.size() << '\n';
  } else if (p == Problem::kTrds) {
    const auto f = trdf_udg_sc(g);
    if (!o.out.empty()) io::write_file(o.out, io::format_labelling_solution("trds", f));
    out << f.weight() << '\n';
  } else {
    throw InvalidInputError("solve supports tds and trds only");
  }
  return kOk;
}

int cmd_exact(Options& o, std::ostream& out) {
  const Problem p = parse_problem(o.problem);
  const std::size_t limit = o.exact_limit ? o.exact_limit : default_exact_limit(p);
  const UnitDiskGraph g = build_udg(io::parse_instance(io::read_file(o.in)));
  std::string solution;
  ExactResult r;
  switch (p) {
    case Problem::kDs:
      r = exact_min_ds(g, limit);
      solution = io::format_set_solution("ds", r.members);
      break;
    case Problem::kTds:
      r = exact_min_tds(g, limit);
      solution = io::format_set_solution("tds", r.members);
      break;
    case Problem::kRds:
      r = exact_min_rdf(g, limit);
      solution = io::format_labelling_solution("rds", r.assignment);
      break;
    case Problem::kTrds:
      r = exact_min_trdf(g, false, limit);
      solution = io::format_labelling_solution("trds", r.assignment);
      break;
  }
  if (!o.out.empty()) io::write_file(o.out, solution);
  out << r.objective << '\n';
  return kOk;
}

std::string default_roles_path(const std::string& out) {
  const std::string suffix = ".json";
  if (out.size() > suffix.size() && out.compare(out.size() - suffix.size(), suffix.size(), suffix) == 0) {
    return out.substr(0, out.size() - suffix.size()) + ".roles.json";
  }
  return out + ".roles.json";
}

int cmd_reduce(Options& o, std::ostream& out) {
  const GridGraph g = io::parse_grid(io::read_file(o.grid));
  const GadgetUdg gadget = grid_to_gadget(g, o.scale2);
  io::write_file(o.out, io::format_instance(gadget.udg.pointset()));
  io::write_file(o.roles.empty() ? default_roles_path(o.out) : o.roles,
                 io::format_roles(gadget.roles));
  out << gadget.udg.size() << '\n';
  return kOk;
}

int cmd_ratio(Options& o, std::ostream& out) {
  o.cfg.problem = parse_problem(o.problem);
  if (o.exact_limit) o.cfg.exact_limit = o.exact_limit;
  const RatioReport report = run_ratio(o.cfg, workers_from_env());
  std::ostringstream csv;
  write_ratio_csv(csv, report, utc_timestamp());
  emit(o.out, csv.str(), out);
  if (!o.out.empty()) {
    out << "max_ratio=" << report.max_ratio() << " mean_ratio=" << report.mean_ratio() << '\n';
  }
  return report.all_verified() && report.all_within_bound() ? kOk : kViolation;
}

int cmd_verify_claim(Options& o, std::ostream& out) {
  const std::size_t limit = o.exact_limit ? o.exact_limit : kDefaultRomanOracleLimit;
  const auto entries = sweep_claim(o.max_n, workers_from_env(), limit);
  write_claim_report(out, entries);
  for (const auto& e : entries) {
    if (!e.check.passed()) return kViolation;
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Total and total Roman domination on unit disk graphs", "udgdom"};
  app.require_subcommand(1);
  Options o;

  auto* generate = app.add_subcommand("generate", "write a random instance");
  add_instance_options(generate, o);
  generate->add_option("--problem", o.problem, "tds/trds resample isolated draws");
  generate->add_option("--out", o.out, "instance file (stdout if omitted)");

  auto* solve = app.add_subcommand("solve", "run the approximation algorithm");
  solve->add_option("--problem", o.problem, "tds or trds")->required();
  solve->add_option("--in", o.in, "instance file")->required();
  solve->add_option("--out", o.out, "solution file");

  auto* exact = app.add_subcommand("exact", "run an exact oracle");
  exact->add_option("--problem", o.problem, "ds, tds, rds or trds")->required();
  exact->add_option("--in", o.in, "instance file")->required();
  exact->add_option("--out", o.out, "solution file");
  exact->add_option("--exact-limit", o.exact_limit, "maximum vertex count");

  auto* reduce = app.add_subcommand("reduce", "build the gadget graph of a grid graph");
  reduce->add_option("--grid", o.grid, "grid graph file")->required();
  reduce->add_option("--out", o.out, "gadget instance file")->required();
  reduce->add_option("--roles", o.roles, "roles sidecar (default <out>.roles.json)");
  reduce->add_flag("--scale2", o.scale2, "double coordinates, radius 1");

  auto* ratio = app.add_subcommand("ratio", "measure approximation ratios");
  add_instance_options(ratio, o);
  ratio->add_option("--trials", o.cfg.trials, "number of instances")->check(CLI::PositiveNumber);
  ratio->add_option("--problem", o.problem, "tds or trds");
  ratio->add_option("--exact-limit", o.exact_limit, "largest n solved exactly");
  ratio->add_option("--out", o.out, "CSV report (stdout if omitted)");

  auto* claim = app.add_subcommand("verify-claim", "check the grid-graph reduction exhaustively");
  claim->add_option("--max-n", o.max_n, "largest grid graph")->check(CLI::PositiveNumber);
  claim->add_option("--exact-limit", o.exact_limit, "TRDF oracle vertex limit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*generate) return cmd_generate(o, out);
    if (*solve) return cmd_solve(o, out);
    if (*exact) return cmd_exact(o, out);
    if (*reduce) return cmd_reduce(o, out);
    if (*ratio) return cmd_ratio(o, out);
    if (*claim) return cmd_verify_claim(o, out);
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kSizeLimit;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInstance;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}

}  // namespace udgdom::cli
