#include "udgdom/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "udgdom/approx.hpp"
#include "udgdom/exact.hpp"

namespace udgdom {

Problem parse_problem(const std::string& name) {
  if (name == "ds") return Problem::kDs;
  if (name == "tds") return Problem::kTds;
  if (name == "rds") return Problem::kRds;
  if (name == "trds") return Problem::kTrds;
  throw InvalidInputError("unknown problem '" + name + "' (expected ds, tds, rds or trds)");
}

std::string to_string(Problem p) {
  switch (p) {
    case Problem::kDs: return "ds";
    case Problem::kTds: return "tds";
    case Problem::kRds: return "rds";
    case Problem::kTrds: return "trds";
  }
  return "?";
}

bool needs_no_isolated(Problem p) { return p == Problem::kTds || p == Problem::kTrds; }

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

InstanceRng::InstanceRng(std::uint64_t seed, std::uint64_t stream)
    : engine_(splitmix64(seed ^ splitmix64(stream))) {}

double InstanceRng::unit() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t InstanceRng::below(std::uint64_t bound) {
  // Rejection sampling keeps the result unbiased and platform independent.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::size_t default_exact_limit(Problem p) {
  return p == Problem::kDs || p == Problem::kTds ? kDefaultSetOracleLimit
                                                 : kDefaultRomanOracleLimit;
}

PointSet generate_instance(const ExperimentConfig& cfg, std::uint64_t stream) {
  if (cfg.n == 0) throw InvalidInputError("n must be positive");
  if (!(cfg.box_width > 0.0) || !(cfg.box_height > 0.0) || !(cfg.radius > 0.0)) {
    throw InvalidInputError("box dimensions and radius must be positive");
  }
  InstanceRng rng(cfg.seed, stream);
  for (std::size_t attempt = 0; attempt < kGenerateRetryCap; ++attempt) {
    PointSet ps;
    ps.radius = cfg.radius;
    ps.points.reserve(cfg.n);
    for (std::size_t i = 0; i < cfg.n; ++i) {
      const double x = rng.uniform(0.0, cfg.box_width);
      const double y = rng.uniform(0.0, cfg.box_height);
      ps.points.push_back({x, y});
    }
    if (!needs_no_isolated(cfg.problem)) return ps;
    if (isolated_vertices(UnitDiskGraph(ps)).empty()) return ps;
  }
  throw RetryExhaustedError("no instance without isolated vertices after " +
                            std::to_string(kGenerateRetryCap) + " attempts");
}

namespace {

template <typename F>
void parallel_for(std::size_t count, std::size_t workers, F&& body) {
  workers = std::max<std::size_t>(1, std::min(workers, count));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mu);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

double ratio_of(const RatioReportRow& r) {
  return static_cast<double>(r.approx) / static_cast<double>(*r.exact);
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string fraction_string(Fraction f) {
  return std::to_string(f.num) + "/" + std::to_string(f.den);
}

}  // namespace

bool RatioReportRow::within_bound() const {
  return !exact || udgdom::within_bound(approx, *exact, bound);
}

bool RatioReport::all_verified() const {
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.verified; });
}

bool RatioReport::all_within_bound() const {
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.within_bound(); });
}

double RatioReport::max_ratio() const {
  double m = 0.0;
  for (const auto& r : rows) {
    if (r.exact) m = std::max(m, ratio_of(r));
  }
  return m;
}

double RatioReport::mean_ratio() const {
  double sum = 0.0;
  std::size_t count = 0;
  for (const auto& r : rows) {
    if (!r.exact) continue;
    sum += ratio_of(r);
    ++count;
  }
  return count ? sum / static_cast<double>(count) : 0.0;
}

RatioReport run_ratio(const ExperimentConfig& cfg, std::size_t workers) {
  if (cfg.problem != Problem::kTds && cfg.problem != Problem::kTrds) {
    throw InvalidInputError("ratio experiments support tds and trds only");
  }
  const std::size_t limit = cfg.exact_limit.value_or(default_exact_limit(cfg.problem));
  RatioReport report;
  report.problem = cfg.problem;
  report.rows.resize(cfg.trials);

  parallel_for(cfg.trials, workers, [&](std::size_t trial) {
    const UnitDiskGraph g(generate_instance(cfg, trial));
    RatioReportRow row;
    row.trial = trial;
    row.n = g.size();
    row.edges = g.edge_count();
    const bool exact_ok = g.size() <= limit;
    if (cfg.problem == Problem::kTds) {
      const auto s = tds_udg_sc(g);
      row.approx = static_cast<std::int64_t>(s.members.size());
      row.verified = verify_tds(g, s);
      row.bound = kTdsBound;
      if (exact_ok) row.exact = exact_min_tds(g, limit).objective;
    } else {
      const auto f = trdf_udg_sc(g);
      row.approx = f.weight();
      row.verified = verify_trdf(g, f);
      row.bound = kTrdsBound;
      if (exact_ok) row.exact = exact_min_trdf(g, false, limit).objective;
    }
    report.rows[trial] = row;
  });
  return report;
}

void write_ratio_csv(std::ostream& os, const RatioReport& report,
                     const std::optional<std::string>& timestamp) {
  if (timestamp) os << "# generated_at=" << *timestamp << '\n';
  os << "trial,n,edges,approx,exact,ratio,bound,verified\n";
  std::size_t exact_rows = 0;
  for (const auto& r : report.rows) {
    os << r.trial << ',' << r.n << ',' << r.edges << ',' << r.approx << ',';
    if (r.exact) {
      ++exact_rows;
      os << *r.exact << ',' << fixed6(ratio_of(r));
    } else {
      os << "NA,NA";
    }
    os << ',' << fraction_string(r.bound) << ',' << (r.verified ? "true" : "false") << '\n';
  }
  const Fraction bound = report.problem == Problem::kTds ? kTdsBound : kTrdsBound;
  os << "# summary,problem=" << to_string(report.problem) << ",trials=" << report.rows.size()
     << ",exact_rows=" << exact_rows << ",max_ratio=" << fixed6(report.max_ratio())
     << ",mean_ratio=" << fixed6(report.mean_ratio()) << ",bound=" << fraction_string(bound)
     << ",all_verified=" << (report.all_verified() ? "true" : "false")
     << ",all_within_bound=" << (report.all_within_bound() ? "true" : "false") << '\n';
}

std::vector<ClaimSweepEntry> sweep_claim(std::size_t max_n, std::size_t workers,
                                         std::size_t roman_limit) {
  auto graphs = enumerate_lattice_animals(max_n);
  for (const auto& g : graphs) {
    const std::size_t gadget_size = g.size() + 2 * g.edges().size();
    if (gadget_size > roman_limit) throw SizeLimitError(gadget_size, roman_limit);
  }
  std::vector<ClaimCheck> checks(graphs.size());
  parallel_for(graphs.size(), workers,
               [&](std::size_t i) { checks[i] = check_claim(graphs[i], roman_limit); });

  std::vector<ClaimSweepEntry> out;
  out.reserve(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    out.push_back({std::move(graphs[i]), checks[i]});
  }
  return out;
}

void write_claim_report(std::ostream& os, const std::vector<ClaimSweepEntry>& entries) {
  std::size_t passed = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& [g, c] = entries[i];
    os << "graph " << i << " cells=";
    for (std::size_t v = 0; v < g.size(); ++v) {
      os << (v ? ";" : "") << g.vertices()[v].ix << ',' << g.vertices()[v].iy;
    }
    os << " n=" << c.n << " m=" << c.m << " gadget=" << c.gadget_vertices
       << " gamma=" << c.gamma << " gamma_tR=" << c.gamma_tr << ' '
       << (c.passed() ? "pass" : "FAIL") << '\n';
    passed += c.passed() ? 1 : 0;
  }
  os << "total=" << entries.size() << " passed=" << passed << '\n';
}

std::size_t workers_from_env() {
  const char* v = std::getenv("UDGDOM_WORKERS");
  if (!v || !*v) return 1;
  char* end = nullptr;
  const unsigned long n = std::strtoul(v, &end, 10);
  return (end && *end == '\0' && n > 0) ? static_cast<std::size_t>(n) : 1;
}

}  // namespace udgdom
