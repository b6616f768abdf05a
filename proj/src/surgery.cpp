#include "ribbonmc/surgery.hpp"

#include <algorithm>
#include <map>

namespace ribbonmc {

int face_left(const LabelledGraph& lg, int u, int v) {
  (void)u;
  return lg.boundary_of_flag(v);
}
int face_right(const LabelledGraph& lg, int u, int v) {
  (void)v;
  return lg.boundary_of_flag(u);
}

CutClass classify_cut(const MarkedGraph& m) {
  auto [u, v] = m.oriented();
  if (m.lg.boundary_of_flag(u) != m.lg.boundary_of_flag(v)) return CutClass::C12;
  // splitting case: connected after cut?
  RibbonGraph g = m.lg.g;
  g.edges.erase(g.edges.begin() + m.edge);
  g.leaves.push_back(u);
  g.leaves.push_back(v);
  g.finalize();
  return num_components(g) == 1 ? CutClass::C1c : CutClass::C1dc;
}

CutResult cut(const MarkedGraph& m) {
  auto [u, v] = m.oriented();
  CutClass cls = classify_cut(m);
  RibbonGraph g = m.lg.g;
  g.edges.erase(g.edges.begin() + m.edge);
  g.leaves.push_back(u);
  g.leaves.push_back(v);
  g.finalize();

  LabelledGraph out;
  out.g = g;
  int bu = m.lg.boundary_of_flag(u), bv = m.lg.boundary_of_flag(v);
  if (cls == CutClass::C12) {
    out.first_leaf.push_back(u);  // merged face
    for (int b = 0; b < m.lg.ell(); ++b)
      if (b != bu && b != bv) out.first_leaf.push_back(m.lg.first_leaf[b]);
  } else {
    out.first_leaf.push_back(u);
    out.first_leaf.push_back(v);
    for (int b = 0; b < m.lg.ell(); ++b)
      if (b != bu) out.first_leaf.push_back(m.lg.first_leaf[b]);
  }
  out.finalize();
  return {std::move(out), {u, v}, cls};
}

std::vector<LabelledGraph> split_components(const LabelledGraph& lg) {
  auto comp = components(lg.g);
  int nc = comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
  // order components by smallest boundary number
  std::vector<int> rank(nc, INT32_MAX);
  for (int b = 0; b < lg.ell(); ++b) {
    int c = comp[lg.g.vertex_of(lg.first_leaf[b])];
    rank[c] = std::min(rank[c], b);
  }
  std::vector<int> order(nc);
  for (int i = 0; i < nc; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return rank[a] < rank[b]; });

  std::vector<LabelledGraph> out;
  for (int ci : order) {
    RibbonGraph sub;
    std::vector<int> fmap(lg.g.flag_count, -1);
    for (int vtx = 0; vtx < lg.g.num_vertices(); ++vtx) {
      if (comp[vtx] != ci) continue;
      std::vector<int> tup;
      for (int f : lg.g.vertices[vtx]) {
        fmap[f] = sub.flag_count++;
        tup.push_back(fmap[f]);
      }
      sub.vertices.push_back(std::move(tup));
    }
    for (auto [a, b] : lg.g.edges)
      if (comp[lg.g.vertex_of(a)] == ci) sub.edges.push_back({fmap[a], fmap[b]});
    for (int f : lg.g.leaves)
      if (comp[lg.g.vertex_of(f)] == ci) sub.leaves.push_back(fmap[f]);
    sub.finalize();
    LabelledGraph slg;
    slg.g = std::move(sub);
    for (int b = 0; b < lg.ell(); ++b)
      if (comp[lg.g.vertex_of(lg.first_leaf[b])] == ci)
        slg.first_leaf.push_back(fmap[lg.first_leaf[b]]);
    slg.finalize();
    out.push_back(std::move(slg));
  }
  return out;
}

MarkedGraph glue(const LabelledGraph& cutg, int u, int v) {
  const auto& g0 = cutg.g;
  if (u == v || !g0.is_leaf(u) || !g0.is_leaf(v)) throw DomainError("glue needs two distinct leaves");
  if (g0.vertex_of(u) == g0.vertex_of(v)) throw DomainError("glue would create a self-loop");
  if (cutg.boundary_of_flag(u) == cutg.boundary_of_flag(v)) {
    // reject cyclically adjacent leaves on one boundary
    auto ls = cutg.boundary_leaves(cutg.boundary_of_flag(u));
    int n = (int)ls.size();
    for (int i = 0; i < n; ++i)
      if (ls[i] == u) {
        if (ls[(i + 1) % n] == v || ls[(i + n - 1) % n] == v)
          throw DomainError("gluing adjacent leaves on one boundary");
      }
  }
  RibbonGraph g = g0;
  g.edges.push_back({std::min(u, v), std::max(u, v)});
  int eid = (int)g.edges.size() - 1;
  g.leaves.erase(std::remove(g.leaves.begin(), g.leaves.end(), u), g.leaves.end());
  g.leaves.erase(std::remove(g.leaves.begin(), g.leaves.end(), v), g.leaves.end());
  g.finalize();

  // old global leaf positions
  auto old_order = cutg.leaf_order();
  std::map<int, int> pos;
  for (size_t i = 0; i < old_order.size(); ++i) pos[old_order[i]] = (int)i;

  auto bds = trace_boundaries(g);
  struct FaceLab {
    int first = -1, minpos = INT32_MAX;
  };
  std::vector<FaceLab> fl;
  for (const auto& bd : bds) {
    const auto& lc = bd.leaf_cycle;
    int n = (int)lc.size();
    // rotation whose old-position sequence is increasing
    int best = -1;
    for (int r = 0; r < n; ++r) {
      bool inc = true;
      for (int i = 0; i + 1 < n && inc; ++i)
        if (pos[lc[(r + i) % n]] > pos[lc[(r + i + 1) % n]]) inc = false;
      if (inc) {
        if (best != -1 && n > 1) throw DomainError("ambiguous labelling transfer");
        best = r;
        if (n == 1) break;
      }
    }
    if (best == -1) throw DomainError("gluing does not preserve the leaf ordering");
    FaceLab f;
    f.first = lc[best];
    f.minpos = pos[f.first];
    fl.push_back(f);
  }
  std::sort(fl.begin(), fl.end(), [](const FaceLab& a, const FaceLab& b) {
    return a.minpos < b.minpos;
  });
  LabelledGraph out;
  out.g = std::move(g);
  for (const auto& f : fl) out.first_leaf.push_back(f.first);
  out.finalize();
  return {std::move(out), eid, std::array<int, 2>{u, v}};
}

MarkedGraph g210(const LabelledGraph& lg) {
  if (lg.ell() < 2) throw DomainError("g210 needs at least two boundaries");
  auto s = lg.s_vec();
  if (s[0] + s[1] < 3) throw DomainError("g210 needs s1+s2 >= 3");
  return glue(lg, lg.first_leaf[0], lg.first_leaf[1]);
}

LabelledGraph disjoint_union(const LabelledGraph& g1, const LabelledGraph& g2) {
  RibbonGraph g;
  int off = g1.g.flag_count;
  g.flag_count = off + g2.g.flag_count;
  g.vertices = g1.g.vertices;
  for (const auto& t : g2.g.vertices) {
    std::vector<int> tt;
    for (int f : t) tt.push_back(f + off);
    g.vertices.push_back(std::move(tt));
  }
  g.edges = g1.g.edges;
  for (auto [a, b] : g2.g.edges) g.edges.push_back({a + off, b + off});
  g.leaves = g1.g.leaves;
  for (int f : g2.g.leaves) g.leaves.push_back(f + off);
  g.finalize();
  LabelledGraph out;
  out.g = std::move(g);
  out.first_leaf = g1.first_leaf;
  for (int f : g2.first_leaf) out.first_leaf.push_back(f + off);
  out.finalize();
  return out;
}

LabelledGraph disjoint_union_mucan(const LabelledGraph& g1, const LabelledGraph& g2) {
  LabelledGraph du = disjoint_union(g1, g2);
  // reorder boundaries: G1.b1, G2.b1, G1.b2.., G2.b2..
  std::vector<int> fl;
  int l1 = g1.ell(), l2 = g2.ell();
  fl.push_back(du.first_leaf[0]);
  fl.push_back(du.first_leaf[l1]);
  for (int b = 1; b < l1; ++b) fl.push_back(du.first_leaf[b]);
  for (int b = 1; b < l2; ++b) fl.push_back(du.first_leaf[l1 + b]);
  du.first_leaf = fl;
  du.finalize();
  return du;
}

MarkedGraph g210_pair(const LabelledGraph& g1, const LabelledGraph& g2) {
  LabelledGraph du = disjoint_union_mucan(g1, g2);
  return g210(du);
}

MarkedGraph g120(const LabelledGraph& lg, int j) {
  auto s = lg.s_vec();
  if (s[0] < 4) throw DomainError("g120 needs s1 >= 4");
  if (j < 3 || j > s[0] - 1) throw DomainError("g120 needs 3 <= j <= s1-1");
  auto ls = lg.boundary_leaves(0);
  return glue(lg, ls[0], ls[j - 1]);
}

MarkedGraph duality_I(const MarkedGraph& m) {
  if (!m.orient) throw DomainError("duality needs an oriented marked edge");
  auto [u, v] = *m.orient;
  const auto& g0 = m.lg.g;
  int a = g0.vertex_of(u), b = g0.vertex_of(v);
  if (a == b) throw DomainError("duality needs distinct endpoints");
  auto rot = [&](int vtx, int f, int offset) {
    // tuple rotated so that f sits at position `offset`
    const auto& t = g0.vertices[vtx];
    int d = (int)t.size(), p = g0.pos_in_vertex(f);
    std::vector<int> out(d);
    for (int i = 0; i < d; ++i) out[(i + offset) % d] = t[(p + i) % d];
    return out;
  };
  // (z,w,u) and (v,x,y) -> (y,z,u) and (v,w,x)
  auto ta = rot(a, u, 2);  // [z, w, u]
  auto tb = rot(b, v, 0);  // [v, x, y]
  int z = ta[0], w = ta[1], x = tb[1], y = tb[2];
  RibbonGraph g = g0;
  g.vertices[a] = {y, z, u};
  g.vertices[b] = {v, w, x};
  g.finalize();
  LabelledGraph out;
  out.g = std::move(g);
  out.first_leaf = m.lg.first_leaf;
  out.finalize();
  // boundary numbering carries over via the first leaves
  return {std::move(out), m.edge, std::array<int, 2>{u, v}};
}

MarkedGraph duality_Ibar(const MarkedGraph& m) {
  // orient the marked edge canonically, apply I, forget the orientation
  auto id = canonical_flag_order(m.lg);
  auto [a, b] = m.lg.g.edges[m.edge];
  MarkedGraph om = m;
  om.orient = (id[a] < id[b]) ? std::array<int, 2>{a, b} : std::array<int, 2>{b, a};
  MarkedGraph r = duality_I(om);
  r.orient.reset();
  return r;
}

std::string marked_key(const MarkedGraph& m) {
  auto id = canonical_flag_order(m.lg);
  auto [a, b] = m.lg.g.edges[m.edge];
  int x = id[a], y = id[b];
  if (!m.orient && x > y) std::swap(x, y);
  if (m.orient) {
    x = id[(*m.orient)[0]];
    y = id[(*m.orient)[1]];
  }
  return canonical_form(m.lg) + "|m" + std::to_string(x) + "," + std::to_string(y);
}

bool is_special_labelling(const MarkedGraph& m) {
  auto [u, v] = m.oriented();
  const auto& lg = m.lg;
  int bl = face_left(lg, u, v), br = face_right(lg, u, v);
  if (bl != 0) return false;
  // first leaf on the left boundary: first leaf met walking from v
  int f = lg.g.next(v);
  while (!lg.g.is_leaf(f)) f = lg.g.next(f);
  if (lg.first_leaf[0] != f) return false;
  if (br != bl) {
    if (br != 1) return false;
    int h = lg.g.next(u);
    while (!lg.g.is_leaf(h)) h = lg.g.next(h);
    if (lg.first_leaf[1] != h) return false;
  }
  if (classify_cut(m) == CutClass::C1dc) {
    // boundaries of the tail component before those of the head component
    auto cr = cut(m);
    auto comp = components(cr.cut.g);
    int cu = comp[cr.cut.g.vertex_of(u)];
    bool seen_head = false;
    for (int b = 0; b < cr.cut.ell(); ++b) {
      if (b < 2) continue;
      int c = comp[cr.cut.g.vertex_of(cr.cut.first_leaf[b])];
      if (c != cu) seen_head = true;
      else if (seen_head) return false;
    }
  }
  return true;
}

}  // namespace ribbonmc
