#include <filesystem>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "udgdom/approx.hpp"
#include "udgdom/cli.hpp"
#include "udgdom/io.hpp"

using namespace udgdom;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::initializer_list<std::string> args) {
  std::vector<std::string> storage{"udgdom"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("udgdom_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string without_timestamp(const std::string& csv) {
  return csv.rfind("# generated_at=", 0) == 0 ? csv.substr(csv.find('\n') + 1) : csv;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("generate is byte-identical for the same seed") {
    TempDir dir;
    REQUIRE(run({"generate", "--n", "10", "--seed", "42", "--out", dir.file("a.json")}).code == 0);
    REQUIRE(run({"generate", "--n", "10", "--seed", "42", "--out", dir.file("b.json")}).code == 0);
    CHECK(io::read_file(dir.file("a.json")) == io::read_file(dir.file("b.json")));
    CHECK(run({"generate", "--n", "1", "--problem", "tds"}).code == cli::kInvalidInstance);
    const auto piped = run({"generate", "--n", "30", "--width", "4", "--height", "4"});
    CHECK(build_udg(io::parse_instance(piped.out)).size() == 30);
  }

  TEST_CASE("solve writes verifiable solutions") {
    TempDir dir;
    io::write_file(dir.file("p3.json"), io::format_instance({{{0, 0}, {1, 0}, {2, 0}}, 1.0}));
    const auto g = build_udg(io::parse_instance(io::read_file(dir.file("p3.json"))));

    auto r = run({"solve", "--problem", "tds", "--in", dir.file("p3.json"), "--out", dir.file("t.json")});
    CHECK(r.code == 0);
    CHECK(r.out == "3\n");
    const auto tds = io::parse_solution(io::read_file(dir.file("t.json")));
    CHECK(verify_tds(g, {tds.members}));

    r = run({"solve", "--problem", "trds", "--in", dir.file("p3.json"), "--out", dir.file("r.json")});
    CHECK(r.code == 0);
    CHECK(r.out == "5\n");
    const auto trds = io::parse_solution(io::read_file(dir.file("r.json")));
    CHECK(verify_trdf(g, trds.assignment));
  }

  TEST_CASE("solve reports isolated vertices") {
    TempDir dir;
    io::write_file(dir.file("iso.json"), io::format_instance({{{0, 0}, {0.5, 0}, {9, 9}, {20, 0}}, 1.0}));
    const auto r = run({"solve", "--problem", "tds", "--in", dir.file("iso.json")});
    CHECK(r.code == cli::kInvalidInstance);
    CHECK(r.err.find("isolated vertices: 2 3") != std::string::npos);
    CHECK(run({"solve", "--problem", "tds", "--in", dir.file("missing.json")}).code ==
          cli::kInvalidInstance);
  }

  TEST_CASE("exact oracles") {
    TempDir dir;
    io::write_file(dir.file("p3.json"), io::format_instance({{{0, 0}, {1, 0}, {2, 0}}, 1.0}));
    CHECK(run({"exact", "--problem", "ds", "--in", dir.file("p3.json")}).out == "1\n");
    CHECK(run({"exact", "--problem", "tds", "--in", dir.file("p3.json")}).out == "2\n");
    CHECK(run({"exact", "--problem", "rds", "--in", dir.file("p3.json")}).out == "2\n");
    const auto r = run({"exact", "--problem", "trds", "--in", dir.file("p3.json"), "--out", dir.file("o.json")});
    CHECK(r.out == "3\n");
    CHECK(io::parse_solution(io::read_file(dir.file("o.json"))).assignment.weight() == 3);

    PointSet big;
    for (int i = 0; i < 25; ++i) big.points.push_back({0.4 * i, 0});
    io::write_file(dir.file("big.json"), io::format_instance(big));
    CHECK(run({"exact", "--problem", "ds", "--in", dir.file("big.json"), "--exact-limit", "20"}).code ==
          cli::kSizeLimit);
    CHECK(run({"exact", "--problem", "trds", "--in", dir.file("big.json")}).code == cli::kSizeLimit);
  }

  TEST_CASE("reduce writes the gadget and its roles") {
    TempDir dir;
    io::write_file(dir.file("p2.json"), R"({"vertices": [[0, 0], [1, 0]]})");
    auto r = run({"reduce", "--grid", dir.file("p2.json"), "--out", dir.file("g.json")});
    CHECK(r.code == 0);
    CHECK(r.out == "4\n");
    const auto ps = io::parse_instance(io::read_file(dir.file("g.json")));
    CHECK(ps.radius == 0.5);
    CHECK(io::parse_roles(io::read_file(dir.file("g.roles.json"))).size() == 4);

    io::write_file(dir.file("l.json"), R"({"vertices": [[0, 0], [1, 0], [1, 1]]})");
    r = run({"reduce", "--grid", dir.file("l.json"), "--out", dir.file("l_out.json"), "--scale2"});
    CHECK(r.out == "7\n");
    CHECK(io::parse_instance(io::read_file(dir.file("l_out.json"))).radius == 1.0);

    io::write_file(dir.file("iso.json"), R"({"vertices": [[0, 0], [1, 0], [4, 4]]})");
    CHECK(run({"reduce", "--grid", dir.file("iso.json"), "--out", dir.file("x.json")}).code ==
          cli::kInvalidInstance);
  }

  TEST_CASE("ratio report is deterministic and within bounds") {
    TempDir dir;
    for (const std::string problem : {"tds", "trds"}) {
      const auto a = run({"ratio", "--trials", "20", "--n", "12", "--width", "3", "--height", "3",
                          "--seed", "7", "--problem", problem, "--out", dir.file("a.csv")});
      const auto b = run({"ratio", "--trials", "20", "--n", "12", "--width", "3", "--height", "3",
                          "--seed", "7", "--problem", problem, "--out", dir.file("b.csv")});
      CHECK(a.code == 0);
      CHECK(b.code == 0);
      const auto body = without_timestamp(io::read_file(dir.file("a.csv")));
      CHECK(body == without_timestamp(io::read_file(dir.file("b.csv"))));
      CHECK(body.find("all_verified=true,all_within_bound=true") != std::string::npos);
    }
  }

  TEST_CASE("verify-claim") {
    const auto r = run({"verify-claim", "--max-n", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("total=2 passed=2") != std::string::npos);
    CHECK(run({"verify-claim", "--max-n", "5"}).code == cli::kSizeLimit);
  }

  TEST_CASE("usage errors") {
    CHECK(run({}).code != 0);
    CHECK(run({"solve", "--in", "x.json"}).code != 0);
  }
}
