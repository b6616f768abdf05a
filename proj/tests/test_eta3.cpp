#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ribbonmc/enumerate.hpp"
#include "ribbonmc/eta3.hpp"
#include "ribbonmc/surgery.hpp"

using namespace ribbonmc;

namespace {

// glued extension inherited from the pre-glue one: new edge first.
ExtendedLabelling inherit_glued(const MarkedGraph& m, const ExtendedLabelling& pre) {
  ExtendedLabelling x;
  x.vertex_order = pre.vertex_order;
  x.flag_start = pre.flag_start;
  x.edge_order.push_back(m.edge);
  for (int e : pre.edge_order) x.edge_order.push_back(e);
  x.orientation.assign(m.lg.g.num_edges(), {0, 0});
  for (size_t e = 0; e < pre.orientation.size(); ++e) x.orientation[e] = pre.orientation[e];
  x.orientation[m.edge] = {m.oriented()[0], m.oriented()[1]};
  return x;
}

}  // namespace

TEST_CASE("eta3 toggle axioms and (ii)/(iv) independence") {
  for (const auto& lg : enumerate_graphs(1, 0, {4})) {
    ExtendedLabelling x = reference_extension(lg);
    int base = eta3(lg, x);

    // flip one edge orientation -> toggles
    ExtendedLabelling y = x;
    std::swap(y.orientation[0][0], y.orientation[0][1]);
    CHECK(eta3(lg, y) == (base ^ 1));

    // swap two adjacent vertices -> toggles
    y = x;
    std::swap(y.vertex_order[0], y.vertex_order[1]);
    CHECK(eta3(lg, y) == (base ^ 1));

    // item (iv): rotating a vertex start does nothing
    y = x;
    y.flag_start[0] = (y.flag_start[0] + 1) % 3;
    CHECK(eta3(lg, y) == base);
  }
  // swap of two adjacent edges toggles (need a graph with >= 2 edges)
  for (const auto& lg : enumerate_graphs(1, 0, {5})) {
    ExtendedLabelling x = reference_extension(lg);
    int base = eta3(lg, x);
    std::swap(x.edge_order[0], x.edge_order[1]);
    CHECK(eta3(lg, x) == (base ^ 1));
  }
  // boundary swap toggles
  for (const auto& lg : enumerate_graphs(2, 0, {1, 2})) {
    ExtendedLabelling x = reference_extension(lg);
    int base = eta3(lg, x);
    LabelledGraph sw = lg;
    std::swap(sw.first_leaf[0], sw.first_leaf[1]);
    sw.finalize();
    CHECK(eta3(sw, x) == (base ^ 1));
  }
  // item (ii): rotating the first leaf of a boundary does nothing
  for (const auto& lg : enumerate_graphs(1, 0, {4})) {
    ExtendedLabelling x = reference_extension(lg);
    int base = eta3(lg, x);
    auto ls = lg.boundary_leaves(0);
    LabelledGraph rot = lg;
    rot.first_leaf[0] = ls[1];
    rot.finalize();
    CHECK(eta3(rot, x) == base);
  }
}

TEST_CASE("eta3 glue identity for g210 on all edges (small sets)") {
  for (auto [ell, g, s] : std::vector<std::tuple<int, int, std::vector<int>>>{
           {2, 0, {1, 2}}, {2, 0, {2, 2}}, {2, 0, {1, 3}}, {3, 0, {2, 1, 1}}}) {
    for (const auto& lg : enumerate_graphs(ell, g, s)) {
      int stot = lg.g.num_leaves();
      for (unsigned long seed = 1; seed <= 5; ++seed) {
        ExtendedLabelling pre = random_extension(lg, seed);
        MarkedGraph m = g210(lg);
        ExtendedLabelling post = inherit_glued(m, pre);
        int lhs = (eta3(lg, pre) + eta3(m.lg, post)) & 1;
        CHECK(lhs == ((stot - 1) & 1));
      }
    }
  }
}

TEST_CASE("eta3 glue identity for g120") {
  for (auto [ell, g, s] : std::vector<std::tuple<int, int, std::vector<int>>>{
           {1, 0, {5}}, {1, 0, {6}}, {2, 0, {4, 1}}, {1, 1, {4}}}) {
    for (const auto& lg : enumerate_graphs(ell, g, s)) {
      auto sv = lg.s_vec();
      if (sv[0] < 4) continue;
      int stot = lg.g.num_leaves();
      for (int j = 3; j <= sv[0] - 1; ++j) {
        for (unsigned long seed = 1; seed <= 3; ++seed) {
          ExtendedLabelling pre = random_extension(lg, seed);
          MarkedGraph m = g120(lg, j);
          ExtendedLabelling post = inherit_glued(m, pre);
          int lhs = (eta3(lg, pre) + eta3(m.lg, post)) & 1;
          CHECK(lhs == ((stot - 1) & 1));
        }
      }
    }
  }
}

TEST_CASE("eta3 disjoint-union identity (eta3-3)") {
  auto As = enumerate_graphs(1, 0, {3});
  auto Bs = enumerate_graphs(1, 0, {4});
  for (const auto& g1 : As)
    for (const auto& g2 : Bs) {
      int l1 = g1.ell(), s1 = g1.g.num_leaves(), s2 = g2.g.num_leaves();
      int stot = s1 + s2;
      for (unsigned long seed = 1; seed <= 5; ++seed) {
        ExtendedLabelling x1 = random_extension(g1, seed);
        ExtendedLabelling x2 = random_extension(g2, seed + 100);
        LabelledGraph du = disjoint_union_mucan(g1, g2);
        // disjoint-union extension: G1 parts before G2 parts
        ExtendedLabelling xd;
        xd.vertex_order = x1.vertex_order;
        for (int v : x2.vertex_order) xd.vertex_order.push_back(v + g1.g.num_vertices());
        xd.flag_start = x1.flag_start;
        for (int fs : x2.flag_start) xd.flag_start.push_back(fs);
        xd.edge_order = x1.edge_order;
        for (int e : x2.edge_order) xd.edge_order.push_back(e + g1.g.num_edges());
        xd.orientation = x1.orientation;
        for (auto [t, h] : x2.orientation)
          xd.orientation.push_back({t + g1.g.flag_count, h + g1.g.flag_count});

        MarkedGraph m = g210(du);
        ExtendedLabelling post = inherit_glued(m, xd);
        int lhs = (eta3(g1, x1) + eta3(g2, x2) + eta3(m.lg, post)) & 1;
        int rhs = (1 + l1 * s2 + l1 + stot + s1 * s2) & 1;
        CHECK(lhs == rhs);
      }
    }
}

TEST_CASE("gluing sign relation for the reordering permutation") {
  for (const auto& lg : enumerate_graphs(2, 0, {2, 2})) {
    for (unsigned long seed = 1; seed <= 5; ++seed) {
      ExtendedLabelling pre = random_extension(lg, seed);
      int r0 = rbar_parity(lg, pre);
      MarkedGraph m = g210(lg);
      ExtendedLabelling post = inherit_glued(m, pre);
      int r1 = rbar_parity(m.lg, post);
      // u at position 1, v at position s1+1 in the exterior order: |v-u| = s1
      int s1 = lg.s_vec()[0];
      CHECK(r1 == ((r0 + s1 - 1) & 1));
    }
  }
}

TEST_CASE("duality preserves eta3 and flips the reordering parity") {
  for (const auto& lg : enumerate_graphs(1, 0, {4})) {
    for (int e = 0; e < lg.g.num_edges(); ++e) {
      auto [u, v] = lg.g.edges[e];
      MarkedGraph m{lg, e, std::array<int, 2>{u, v}};
      // extension with the marked edge oriented (u,v); vertex starts so the
      // tuples read (z,w,u) and (v,x,y)
      ExtendedLabelling x = reference_extension(lg);
      x.orientation[e] = {u, v};
      int a = lg.g.vertex_of(u), b = lg.g.vertex_of(v);
      x.flag_start[a] = (lg.g.pos_in_vertex(u) + 1) % 3;  // u last
      x.flag_start[b] = lg.g.pos_in_vertex(v);            // v first
      MarkedGraph im = duality_I(m);
      // corresponding extension on I(m): same edges/orientations, vertex
      // starts making the new tuples read (y,z,u) and (v,w,x)
      ExtendedLabelling xi = x;
      xi.flag_start[a] = (im.lg.g.pos_in_vertex(u) + 1) % 3;
      xi.flag_start[b] = im.lg.g.pos_in_vertex(v);
      CHECK(eta3(lg, x) == eta3(im.lg, xi));
      CHECK(rbar_parity(lg, x) != rbar_parity(im.lg, xi));
    }
  }
}
