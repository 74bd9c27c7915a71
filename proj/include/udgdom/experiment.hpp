#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "udgdom/geometry.hpp"
#include "udgdom/reduction.hpp"
#include "udgdom/setcover.hpp"

namespace udgdom {

enum class Problem { kDs, kTds, kRds, kTrds };

Problem parse_problem(const std::string& name);  // throws InvalidInputError
std::string to_string(Problem p);
bool needs_no_isolated(Problem p);

// Portable instance stream: std::mt19937_64 seeded with
// splitmix64(seed ^ splitmix64(stream)). Reals are the top 53 bits of each
// draw scaled to [0, 1), so the same (seed, stream) gives the same doubles on
// every platform.
class InstanceRng {
 public:
  InstanceRng(std::uint64_t seed, std::uint64_t stream);
  double unit();  // [0, 1)
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  std::uint64_t below(std::uint64_t bound);  // [0, bound), bound > 0

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

struct ExperimentConfig {
  std::size_t trials = 1;
  std::size_t n = 10;
  double box_width = 5.0;
  double box_height = 5.0;
  double radius = 1.0;
  std::uint64_t seed = 1;
  std::optional<std::size_t> exact_limit;  // per-problem oracle default when empty
  Problem problem = Problem::kTds;
};

inline constexpr std::size_t kGenerateRetryCap = 1000;

std::size_t default_exact_limit(Problem p);

// n points uniform in [0, width) x [0, height). When the problem needs a graph
// without isolated vertices, isolated draws are resampled up to the retry cap,
// after which RetryExhaustedError is thrown.
PointSet generate_instance(const ExperimentConfig& cfg, std::uint64_t stream = 0);

struct RatioReportRow {
  std::size_t trial = 0;
  std::size_t n = 0;
  std::size_t edges = 0;
  std::int64_t approx = 0;
  std::optional<std::int64_t> exact;
  Fraction bound{};
  bool verified = false;

  bool within_bound() const;
};

struct RatioReport {
  Problem problem = Problem::kTds;
  std::vector<RatioReportRow> rows;

  bool all_verified() const;
  bool all_within_bound() const;
  double max_ratio() const;   // over rows with an exact value; 0 if none
  double mean_ratio() const;  // same rows
};

// Runs tds_udg_sc or trdf_udg_sc on cfg.trials instances (stream = trial id),
// with the exact optimum when n is within the oracle limit. Trials are split
// over `workers` threads; rows stay in trial order.
RatioReport run_ratio(const ExperimentConfig& cfg, std::size_t workers = 1);

// CSV: header row, one row per trial, "NA" for missing exact values, LF line
// endings, then a "# summary" line. Only the optional first line
// "# generated_at=..." depends on the clock.
void write_ratio_csv(std::ostream& os, const RatioReport& report,
                     const std::optional<std::string>& timestamp = std::nullopt);

struct ClaimSweepEntry {
  GridGraph graph;
  ClaimCheck check;
};

// check_claim on every lattice animal with 2..max_n cells. Throws
// SizeLimitError up front if any gadget would exceed the TRDF oracle limit.
std::vector<ClaimSweepEntry> sweep_claim(std::size_t max_n, std::size_t workers = 1,
                                         std::size_t roman_limit = kDefaultRomanOracleLimit);

void write_claim_report(std::ostream& os, const std::vector<ClaimSweepEntry>& entries);

// UDGDOM_WORKERS, default 1.
std::size_t workers_from_env();

}  // namespace udgdom
