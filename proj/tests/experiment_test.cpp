#include <sstream>

#include "doctest.h"
#include "udgdom/experiment.hpp"
#include "udgdom/io.hpp"

using namespace udgdom;

namespace {

std::string csv(const RatioReport& r, std::optional<std::string> stamp = std::nullopt) {
  std::ostringstream os;
  write_ratio_csv(os, r, stamp);
  return os.str();
}

}  // namespace

TEST_SUITE("experiment") {
  TEST_CASE("generator is a pure function of seed and stream") {
    InstanceRng a(42, 7), b(42, 7), c(42, 8);
    for (int i = 0; i < 100; ++i) {
      const double x = a.unit();
      CHECK(x == b.unit());
      CHECK(x >= 0.0);
      CHECK(x < 1.0);
    }
    CHECK(a.unit() != c.unit());
  }

  TEST_CASE("splitmix64 reference values") {
    // First outputs of the reference splitmix64 generator seeded with 0.
    CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
    CHECK(splitmix64(0x9e3779b97f4a7c15ULL) == 0x6e789e6aa1b965f4ULL);
  }

  TEST_CASE("generate is deterministic") {
    ExperimentConfig cfg;
    cfg.n = 10;
    cfg.seed = 42;
    const auto a = io::format_instance(generate_instance(cfg));
    const auto b = io::format_instance(generate_instance(cfg));
    CHECK(a == b);
  }

  TEST_CASE("generated instances honour the box and the isolation rule") {
    ExperimentConfig cfg;
    cfg.n = 30;
    cfg.box_width = 4;
    cfg.box_height = 4;
    for (std::uint64_t s = 0; s < 20; ++s) {
      const auto ps = generate_instance(cfg, s);
      CHECK(ps.points.size() == 30);
      for (const auto& p : ps.points) {
        CHECK(p.x >= 0.0);
        CHECK(p.x < 4.0);
        CHECK(p.y >= 0.0);
        CHECK(p.y < 4.0);
      }
      const auto g = build_udg(io::parse_instance(io::format_instance(ps)));
      CHECK(isolated_vertices(g).empty());
    }
  }

  TEST_CASE("single point cannot avoid isolation") {
    ExperimentConfig cfg;
    cfg.n = 1;
    cfg.problem = Problem::kTds;
    CHECK_THROWS_AS(generate_instance(cfg), RetryExhaustedError);
    cfg.problem = Problem::kDs;
    CHECK(generate_instance(cfg).points.size() == 1);
  }

  TEST_CASE("problem names") {
    for (auto p : {Problem::kDs, Problem::kTds, Problem::kRds, Problem::kTrds}) {
      CHECK(parse_problem(to_string(p)) == p);
    }
    CHECK_THROWS_AS(parse_problem("mds"), InvalidInputError);
  }

  TEST_CASE("ratio rows for tds and trds") {
    ExperimentConfig cfg;
    cfg.trials = 50;
    cfg.n = 12;
    cfg.box_width = cfg.box_height = 3;
    cfg.seed = 7;
    for (auto p : {Problem::kTds, Problem::kTrds}) {
      cfg.problem = p;
      const auto report = run_ratio(cfg);
      REQUIRE(report.rows.size() == 50);
      CHECK(report.all_verified());
      CHECK(report.all_within_bound());
      for (const auto& r : report.rows) CHECK(r.exact.has_value());
      CHECK(report.max_ratio() >= 1.0);
      CHECK(report.max_ratio() <= static_cast<double>(report.rows[0].bound.num) /
                                       static_cast<double>(report.rows[0].bound.den));
    }
  }

  TEST_CASE("report body is identical across runs and worker counts") {
    ExperimentConfig cfg;
    cfg.trials = 16;
    cfg.n = 11;
    cfg.box_width = cfg.box_height = 3;
    cfg.seed = 123;
    cfg.problem = Problem::kTrds;
    const auto one = csv(run_ratio(cfg, 1));
    CHECK(one == csv(run_ratio(cfg, 1)));
    CHECK(one == csv(run_ratio(cfg, 4)));
    const auto stamped = csv(run_ratio(cfg, 2), "2026-01-01T00:00:00Z");
    CHECK(stamped == "# generated_at=2026-01-01T00:00:00Z\n" + one);
  }

  TEST_CASE("CSV dialect") {
    ExperimentConfig cfg;
    cfg.trials = 3;
    cfg.n = 25;
    cfg.box_width = cfg.box_height = 4;
    cfg.exact_limit = 10;
    const auto text = csv(run_ratio(cfg));
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    CHECK(line == "trial,n,edges,approx,exact,ratio,bound,verified");
    for (int i = 0; i < 3; ++i) {
      std::getline(in, line);
      CHECK(line.find(",NA,NA,1291/180,true") != std::string::npos);
    }
    std::getline(in, line);
    CHECK(line.rfind("# summary,problem=tds,trials=3,exact_rows=0", 0) == 0);
    CHECK(text.find('\r') == std::string::npos);
  }

  TEST_CASE("ratio rejects plain domination problems") {
    ExperimentConfig cfg;
    cfg.problem = Problem::kDs;
    CHECK_THROWS_AS(run_ratio(cfg), InvalidInputError);
  }

  TEST_CASE("claim sweep up to three cells") {
    const auto entries = sweep_claim(3, 2);
    CHECK(entries.size() == 8);
    for (const auto& e : entries) CHECK(e.check.passed());
    std::ostringstream os;
    write_claim_report(os, entries);
    CHECK(os.str().find("total=8 passed=8") != std::string::npos);
    CHECK_THROWS_AS(sweep_claim(5), SizeLimitError);
  }
}
