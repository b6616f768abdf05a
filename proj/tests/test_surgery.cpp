#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ribbonmc/enumerate.hpp"
#include "ribbonmc/surgery.hpp"

using namespace ribbonmc;

TEST_CASE("glue then cut returns the original") {
  for (auto [ell, g, s] : std::vector<std::tuple<int, int, std::vector<int>>>{
           {2, 0, {1, 2}}, {2, 0, {2, 2}}, {3, 0, {2, 1, 1}}, {2, 0, {1, 3}}}) {
    for (const auto& lg : enumerate_graphs(ell, g, s)) {
      MarkedGraph m = g210(lg);
      CHECK(is_special_labelling(m));
      CutResult cr = cut(m);
      CHECK(canonical_form(cr.cut) == canonical_form(lg));
      // and cut then glue is the identity on the marked graph
      MarkedGraph m2 = glue(cr.cut, cr.flags[0], cr.flags[1]);
      CHECK(marked_key(m2) == marked_key(m));
    }
  }
}

TEST_CASE("g120 round trip and error cases") {
  for (const auto& lg : enumerate_graphs(1, 0, {5})) {
    CHECK_THROWS_AS(g120(lg, 2), DomainError);
    CHECK_THROWS_AS(g120(lg, 5), DomainError);
    for (int j = 3; j <= 4; ++j) {
      MarkedGraph m = g120(lg, j);
      CHECK(is_special_labelling(m));
      CHECK(classify_cut(m) == CutClass::C12);
      CutResult cr = cut(m);
      CHECK(canonical_form(cr.cut) == canonical_form(lg));
    }
  }
}

TEST_CASE("cutting a (1,1) marked graph along a non-separating edge gives (2,0)") {
  for (const auto& lg : enumerate_graphs(1, 1, {1})) {
    for (int e = 0; e < lg.g.num_edges(); ++e) {
      MarkedGraph m{lg, e, std::array<int, 2>{lg.g.edges[e][0], lg.g.edges[e][1]}};
      auto cls = classify_cut(m);
      auto cr = cut(m);
      auto sig = signature(cr.cut.g);
      if (cls == CutClass::C12) {
        CHECK(sig.ell == 0 + 0);  // unreachable for ell=1 input
      } else {
        CHECK(sig.ell == 2);
        CHECK(sig.g == (cls == CutClass::C1c ? 0 : 1));
      }
    }
  }
}

TEST_CASE("g210 lands in the 1c marked set (glue1 bijection)") {
  // R_{2,0}(1,2) --g210--> R^{oms}_{1,1,1c}(1)
  std::set<std::string> image;
  for (const auto& lg : enumerate_graphs(2, 0, {1, 2})) {
    MarkedGraph m = g210(lg);
    CHECK(classify_cut(m) == CutClass::C1c);
    auto sig = signature(m.lg.g);
    CHECK(sig.ell == 1);
    CHECK(sig.g == 1);
    CHECK(m.lg.s_vec() == std::vector<int>{1});
    image.insert(marked_key(m));
  }
  // injectivity (it is a bijection onto its image; inverse is cut)
  CHECK(image.size() == enumerate_graphs(2, 0, {1, 2}).size());
}

TEST_CASE("glue2 domain and image sizes agree") {
  auto a = enumerate_graphs(1, 0, {3});
  auto b = enumerate_graphs(1, 0, {4});
  std::set<std::string> image;
  for (const auto& g1 : a)
    for (const auto& g2 : b) {
      MarkedGraph m = g210_pair(g1, g2);
      CHECK(classify_cut(m) == CutClass::C1dc);
      CHECK(is_special_labelling(m));
      image.insert(marked_key(m));
    }
  CHECK(image.size() == a.size() * b.size());
}

TEST_CASE("duality I has order 4 and Ibar is a fixed-point-free involution") {
  int checked = 0;
  for (auto [ell, g, s] : std::vector<std::tuple<int, int, std::vector<int>>>{
           {1, 0, {4}}, {1, 0, {5}}, {2, 0, {1, 2}}, {1, 1, {1}}, {1, 1, {2}}}) {
    for (const auto& lg : enumerate_graphs(ell, g, s)) {
      for (int e = 0; e < lg.g.num_edges(); ++e) {
        auto [x, y] = lg.g.edges[e];
        MarkedGraph m{lg, e, std::array<int, 2>{x, y}};
        MarkedGraph r = m;
        for (int i = 0; i < 4; ++i) r = duality_I(r);
        CHECK(marked_key(r) == marked_key(m));

        MarkedGraph mm{lg, e, std::nullopt};
        MarkedGraph ib = duality_Ibar(mm);
        CHECK(marked_key(ib) != marked_key(mm));  // no fixed points
        MarkedGraph ib2 = duality_Ibar(ib);
        CHECK(marked_key(ib2) == marked_key(mm));  // involution
        ++checked;
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("classification covers the disjoint-union decomposition") {
  // every o-marked graph from R_{1,1}(2) splits into exactly one of 1c/1dc/12
  int n1c = 0, n1dc = 0, n12 = 0;
  for (const auto& lg : enumerate_graphs(1, 1, {2}))
    for (int e = 0; e < lg.g.num_edges(); ++e) {
      MarkedGraph m{lg, e, std::array<int, 2>{lg.g.edges[e][0], lg.g.edges[e][1]}};
      switch (classify_cut(m)) {
        case CutClass::C1c: ++n1c; break;
        case CutClass::C1dc: ++n1dc; break;
        case CutClass::C12: ++n12; break;
      }
      // connectivity check matches components of the cut graph
      auto cr = cut(m);
      int nc = num_components(cr.cut.g);
      CHECK(((classify_cut(m) == CutClass::C1dc) == (nc == 2)));
    }
  CHECK(n1c + n1dc + n12 > 0);
}
