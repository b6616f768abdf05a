#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ribbonmc/enumerate.hpp"

using namespace ribbonmc;

TEST_CASE("k formula") {
  CHECK(trivalent_k(1, 0, 3) == 1);
  CHECK(trivalent_k(1, 0, 1) == -1);  // k = -1 infeasible
  CHECK(trivalent_k(1, 1, 1) == 3);
  CHECK(trivalent_k(2, 0, 2) == 2);
}

TEST_CASE("R_{1,0}(3) is the tripod alone") {
  auto v = enumerate_graphs(1, 0, {3});
  CHECK(v.size() == 1);
  CHECK(v[0].g.num_edges() == 0);
  CHECK(v[0].g.num_leaves() == 3);
}

TEST_CASE("R_{1,0}(1) empty") {
  CHECK(enumerate_graphs(1, 0, {1}).empty());
}

TEST_CASE("small counts match brute oracle") {
  EnumOptions brute;
  brute.brute = true;
  for (auto [ell, g, s] : std::vector<std::tuple<int, int, std::vector<int>>>{
           {1, 0, {3}}, {1, 0, {4}}, {1, 0, {5}}, {1, 0, {6}},
           {2, 0, {1, 1}}, {2, 0, {1, 2}}, {2, 0, {2, 1}}, {2, 0, {2, 2}},
           {2, 0, {1, 3}}, {3, 0, {1, 1, 1}}, {1, 1, {1}}, {1, 1, {2}}}) {
    auto fast = enumerate_canonical(ell, g, s);
    auto slow = enumerate_canonical(ell, g, s, brute);
    CAPTURE(ell);
    CAPTURE(g);
    CHECK(fast == slow);
  }
}

TEST_CASE("frozen counts from the brute oracle") {
  // computed once with the exhaustive pairing oracle and frozen
  CHECK(enumerate_graphs(1, 0, {4}).size() == 2);
  CHECK(enumerate_graphs(2, 0, {1, 1}).size() == 1);
}

TEST_CASE("resource bound") {
  EnumOptions o;
  o.max_k = 2;
  CHECK_THROWS_AS(enumerate_graphs(1, 0, {6}, o), ResourceError);
}

TEST_CASE("every enumerated graph satisfies the Euler identities") {
  for (auto [ell, g, s] : feasible_signatures(4)) {
    for (const auto& lg : enumerate_graphs(ell, g, s)) {
      auto sig = signature(lg.g);
      CHECK(sig.ell == ell);
      CHECK(sig.g == g);
      int k = sig.k, e = lg.g.num_edges(), stot = lg.g.num_leaves();
      CHECK(k - e == 2 - 2 * g - ell);
      CHECK(k == 2 * (2 * g + ell - 2) + stot);
    }
  }
}
