#include "doctest.h"
#include "oracles.hpp"
#include "udgdom/approx.hpp"

using namespace udgdom;

namespace {

UnitDiskGraph path3() { return build_udg({{{0, 0}, {1, 0}, {2, 0}}, 1.0}); }
UnitDiskGraph edge() { return build_udg({{{0, 0}, {0.5, 0}}, 1.0}); }

RomanAssignment labels(std::vector<std::uint8_t> v) { return RomanAssignment{std::move(v)}; }

}  // namespace

TEST_SUITE("approx") {
  TEST_CASE("bounds are the derived rationals") {
    // 44/9 + 137/60 and 44/9 + 137/120 in lowest terms.
    CHECK(kTdsBound.num * 540 == (44 * 60 + 137 * 9) * kTdsBound.den);
    CHECK(kTrdsBound.num * 1080 == (44 * 120 + 137 * 9) * kTrdsBound.den);
    CHECK(within_bound(1291, 180, kTdsBound));
    CHECK_FALSE(within_bound(1292, 180, kTdsBound));
  }

  TEST_CASE("tds on a path of three") {
    const auto g = path3();
    const auto t = tds_udg_sc_trace(g);
    CHECK(t.independent.members == std::vector<Vertex>{0, 2});
    CHECK(t.cover.owners == std::vector<Vertex>{1});
    CHECK(t.result.members == std::vector<Vertex>{0, 1, 2});
    CHECK(verify_tds(g, t.result));
    // gamma_t(P3) = 2.
    CHECK(within_bound(3, 2, kTdsBound));
  }

  TEST_CASE("tds on a single edge") {
    const auto g = edge();
    CHECK(tds_udg_sc(g).members == std::vector<Vertex>{0, 1});
  }

  TEST_CASE("trdf on a path of three") {
    const auto g = path3();
    const auto f = trdf_udg_sc(g);
    CHECK(f.values == std::vector<std::uint8_t>{2, 1, 2});
    CHECK(f.weight() == 5);
    CHECK(verify_trdf(g, f));
  }

  TEST_CASE("trdf on a single edge") {
    const auto f = trdf_udg_sc(edge());
    CHECK(f.values == std::vector<std::uint8_t>{2, 1});
    CHECK(f.weight() == 3);
  }

  TEST_CASE("isolated vertices are rejected") {
    const auto g = build_udg({{{0, 0}, {0.5, 0}, {9, 9}}, 1.0});
    CHECK_THROWS_AS(tds_udg_sc(g), IsolatedVertexError);
    CHECK_THROWS_AS(trdf_udg_sc(g), IsolatedVertexError);
    try {
      tds_udg_sc(g);
    } catch (const IsolatedVertexError& e) {
      CHECK(e.vertices() == std::vector<Vertex>{2});
    }
  }

  TEST_CASE("verify_tds") {
    const auto g = path3();
    CHECK(verify_tds(g, {{0, 1, 2}}));
    CHECK(verify_tds(g, {{0, 1}}));
    CHECK_FALSE(verify_tds(g, {{0, 2}}));
    CHECK_FALSE(verify_tds(g, {{1}}));
    CHECK_FALSE(verify_tds(g, {{0, 5}}));
  }

  TEST_CASE("verify_trdf") {
    const auto g = path3();
    CHECK(verify_trdf(g, labels({2, 1, 2})));
    CHECK(verify_trdf(g, labels({0, 2, 1})));
    CHECK_FALSE(verify_trdf(g, labels({2, 0, 0})));
    CHECK_FALSE(verify_trdf(g, labels({1, 1, 0})));
    CHECK_FALSE(verify_trdf(g, labels({2, 1})));
    CHECK_FALSE(verify_trdf(g, labels({3, 1, 2})));
    CHECK(is_roman_dominating(g, labels({0, 2, 0})));
    CHECK_FALSE(verify_trdf(g, labels({0, 2, 0})));
  }

  TEST_CASE("disconnected graph with K2 components") {
    const auto g = build_udg({{{0, 0}, {0.5, 0}, {10, 0}, {10.9, 0}, {11.8, 0}}, 1.0});
    const auto s = tds_udg_sc(g);
    CHECK(verify_tds(g, s));
    CHECK(verify_trdf(g, trdf_udg_sc(g)));
  }

  TEST_CASE("random instances: verifiers, decomposition and bounds against enumeration") {
    InstanceRng rng(31, 0);
    for (int round = 0; round < 60; ++round) {
      const std::size_t n = 2 + rng.below(11);
      const auto ps = oracle::random_connected_enough(rng, n, 2.5, 2.5);
      const auto g = build_udg(ps);
      const auto adj = oracle::all_pairs(ps);

      const auto t = tds_udg_sc_trace(g);
      REQUIRE(verify_tds(g, t.result));
      CHECK(check_independent_maximal(g, t.independent));
      CHECK(t.result.members.size() == t.independent.members.size() + t.cover.owners.size());
      for (Vertex u : t.cover.owners) {
        CHECK_FALSE(std::binary_search(t.independent.members.begin(),
                                       t.independent.members.end(), u));
      }

      const auto f = trdf_udg_sc(g);
      REQUIRE(verify_trdf(g, f));
      for (Vertex v : t.independent.members) CHECK(f.values[v] == 2);
      CHECK(f.count(2) == t.independent.members.size());

      const auto gamma = oracle::enumerate_min_set(adj, false)->size;
      const auto gamma_t = oracle::enumerate_min_set(adj, true)->size;
      const auto dt = static_cast<std::int64_t>(t.result.members.size());
      CHECK(within_bound(dt, static_cast<std::int64_t>(gamma_t), kTdsBound));
      // |D| <= 5 gamma and |T| <= H(5) gamma give (5 + 137/60) gamma.
      CHECK(dt * 60 <= (5 * 60 + 137) * static_cast<std::int64_t>(gamma));

      if (n <= 9) {
        const auto gamma_tr = oracle::enumerate_min_labelling(adj, true)->weight;
        CHECK(within_bound(f.weight(), gamma_tr, kTrdsBound));
      }
    }
  }
}
