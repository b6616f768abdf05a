#include "ribbonmc/eta3.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "ribbonmc/surgery.hpp"

namespace ribbonmc {

namespace {

int orbit_min_flag(const LabelledGraph& lg, int b) {
  return *std::min_element(lg.face_flags(b).begin(), lg.face_flags(b).end());
}

int vertex_min_flag(const RibbonGraph& g, int v) {
  return *std::min_element(g.vertices[v].begin(), g.vertices[v].end());
}

int seq_inversion_parity(const std::vector<int>& a) {
  int p = 0;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if (a[i] > a[j]) p ^= 1;
  return p;
}

// star values are isomorphism invariants: keyed by the canonical form of the
// minimizing labelling, computed from canonical-order data only.
std::map<std::string, int>& star_memo() {
  static std::map<std::string, int> m;
  return m;
}
std::mutex memo_mu;

int eta3_conn(const LabelledGraph& lg, const ExtendedLabelling& x);

// Component split keeping maps back to the parent graph.
struct CompSplit {
  LabelledGraph sub;
  std::vector<int> fmap;            // sub flag -> parent flag
  std::vector<int> vmap;            // sub vertex -> parent vertex
  std::vector<int> emap;            // sub edge -> parent edge
  std::vector<int> boundary_ranks;  // parent boundary numbers in this comp
};

std::vector<CompSplit> split_mapped(const LabelledGraph& lg) {
  auto comp = components(lg.g);
  int nc = comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
  std::vector<int> rank(nc, INT32_MAX);
  for (int b = 0; b < lg.ell(); ++b) {
    int c = comp[lg.g.vertex_of(lg.first_leaf[b])];
    rank[c] = std::min(rank[c], b);
  }
  std::vector<int> order(nc);
  for (int i = 0; i < nc; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return rank[a] < rank[b]; });

  std::vector<CompSplit> out;
  for (int ci : order) {
    CompSplit cs;
    RibbonGraph sub;
    std::vector<int> pf2sf(lg.g.flag_count, -1);
    for (int vtx = 0; vtx < lg.g.num_vertices(); ++vtx) {
      if (comp[vtx] != ci) continue;
      std::vector<int> tup;
      for (int f : lg.g.vertices[vtx]) {
        pf2sf[f] = sub.flag_count;
        cs.fmap.push_back(f);
        tup.push_back(sub.flag_count++);
      }
      sub.vertices.push_back(std::move(tup));
      cs.vmap.push_back(vtx);
    }
    for (int e = 0; e < lg.g.num_edges(); ++e) {
      auto [a, b] = lg.g.edges[e];
      if (comp[lg.g.vertex_of(a)] != ci) continue;
      sub.edges.push_back({pf2sf[a], pf2sf[b]});
      cs.emap.push_back(e);
    }
    for (int f : lg.g.leaves)
      if (comp[lg.g.vertex_of(f)] == ci) sub.leaves.push_back(pf2sf[f]);
    sub.finalize();
    cs.sub.g = std::move(sub);
    for (int b = 0; b < lg.ell(); ++b)
      if (comp[lg.g.vertex_of(lg.first_leaf[b])] == ci) {
        cs.sub.first_leaf.push_back(pf2sf[lg.first_leaf[b]]);
        cs.boundary_ranks.push_back(b);
      }
    cs.sub.finalize();
    out.push_back(std::move(cs));
  }
  return out;
}

ExtendedLabelling restrict_extension(const LabelledGraph& parent,
                                     const ExtendedLabelling& x, const CompSplit& cs) {
  ExtendedLabelling r;
  std::vector<int> v2sub(parent.g.num_vertices(), -1), e2sub(parent.g.num_edges(), -1),
      f2sub(parent.g.flag_count, -1);
  for (size_t i = 0; i < cs.vmap.size(); ++i) v2sub[cs.vmap[i]] = (int)i;
  for (size_t i = 0; i < cs.emap.size(); ++i) e2sub[cs.emap[i]] = (int)i;
  for (size_t i = 0; i < cs.fmap.size(); ++i) f2sub[cs.fmap[i]] = (int)i;
  for (int v : x.vertex_order)
    if (v2sub[v] >= 0) r.vertex_order.push_back(v2sub[v]);
  r.flag_start.assign(cs.vmap.size(), 0);
  for (size_t sv = 0; sv < cs.vmap.size(); ++sv) r.flag_start[sv] = x.flag_start[cs.vmap[sv]];
  for (int e : x.edge_order)
    if (e2sub[e] >= 0) r.edge_order.push_back(e2sub[e]);
  r.orientation.assign(cs.emap.size(), {0, 0});
  for (size_t se = 0; se < cs.emap.size(); ++se) {
    auto [t, h] = x.orientation[cs.emap[se]];
    r.orientation[se] = {f2sub[t], f2sub[h]};
  }
  return r;
}

int star_value(const LabelledGraph& L0, const ExtendedLabelling& E0);

int eta3_conn(const LabelledGraph& lg, const ExtendedLabelling& x) {
  LabelledGraph L0 = canonical_labelled_min(lg);
  ExtendedLabelling E0 = reference_extension(L0);
  return (star_value(L0, E0) + eta3_delta(lg, x, L0, E0)) & 1;
}

int eta3_impl(const LabelledGraph& lg, const ExtendedLabelling& x) {
  if (num_components(lg.g) == 1) return eta3_conn(lg, x);
  auto parts = split_mapped(lg);
  // component rank of every boundary / vertex / edge in the given orders
  std::vector<int> brank(lg.ell()), vrank(lg.g.num_vertices()), erank(lg.g.num_edges());
  for (size_t ci = 0; ci < parts.size(); ++ci) {
    for (int b : parts[ci].boundary_ranks) brank[b] = (int)ci;
    for (int v : parts[ci].vmap) vrank[v] = (int)ci;
    for (int e : parts[ci].emap) erank[e] = (int)ci;
  }
  int par = seq_inversion_parity(brank);
  std::vector<int> vseq, eseq;
  for (int v : x.vertex_order) vseq.push_back(vrank[v]);
  for (int e : x.edge_order) eseq.push_back(erank[e]);
  par ^= seq_inversion_parity(vseq) ^ seq_inversion_parity(eseq);
  for (const auto& cs : parts)
    par ^= eta3_conn(cs.sub, restrict_extension(lg, x, cs)) & 1;
  return par;
}

// Pins the per-class constant via the canonical edge and the glue
// identities; see header.
int compute_star(const LabelledGraph& L0, const ExtendedLabelling& E0) {
  const RibbonGraph& g = L0.g;
  if (g.num_edges() == 0) return 0;  // tripod
  auto id = canonical_flag_order(L0);
  // canonical edge: lexicographically smallest canonical flag pair
  int best = -1;
  std::array<int, 2> bestpair{INT32_MAX, INT32_MAX};
  for (int e = 0; e < g.num_edges(); ++e) {
    auto [a, b] = g.edges[e];
    std::array<int, 2> p{std::min(id[a], id[b]), std::max(id[a], id[b])};
    if (p < bestpair) {
      bestpair = p;
      best = e;
    }
  }
  auto [a, b] = g.edges[best];
  int u = (id[a] < id[b]) ? a : b, v = (id[a] < id[b]) ? b : a;

  MarkedGraph m{L0, best, std::array<int, 2>{u, v}};
  CutResult cr = cut(m);
  int s_cut = cr.cut.g.num_leaves();

  int rhs = 0;
  LabelledGraph pre;                // pre-glue labelled graph for the identity
  ExtendedLabelling Eparts_vertex;  // assembled below
  std::vector<int> edge_seq_parent;  // cut-graph edge ids in extension order
  std::vector<std::array<int, 2>> orient_parent(cr.cut.g.num_edges());

  if (cr.cls == CutClass::C1dc) {
    auto parts = split_mapped(cr.cut);
    const CompSplit& c1 = parts[0];  // tail side: contains boundary 1 (leaf u)
    const CompSplit& c2 = parts[1];
    ExtendedLabelling E1 = reference_extension(c1.sub), E2 = reference_extension(c2.sub);
    int l1 = c1.sub.ell();
    int s1 = c1.sub.g.num_leaves(), s2 = c2.sub.g.num_leaves();
    rhs = (eta3_conn(c1.sub, E1) + eta3_conn(c2.sub, E2) + 1 + l1 * s2 + l1 + (s1 + s2) +
           s1 * s2) &
          1;
    // pre-glue labelling: u-face, v-face, G1's others, G2's others
    pre.g = cr.cut.g;
    pre.first_leaf.push_back(u);
    pre.first_leaf.push_back(v);
    for (const auto& cs : {std::cref(c1), std::cref(c2)})
      for (int bb : cs.get().boundary_ranks)
        if (bb >= 2) pre.first_leaf.push_back(cr.cut.first_leaf[bb]);
    pre.finalize();
    // disjoint-union extension: G1 vertices/edges before G2's
    for (const auto& cs : {std::cref(c1), std::cref(c2)}) {
      const auto& E = (&cs.get() == &c1) ? E1 : E2;
      for (int sv : E.vertex_order) Eparts_vertex.vertex_order.push_back(cs.get().vmap[sv]);
      for (int se : E.edge_order) edge_seq_parent.push_back(cs.get().emap[se]);
      for (size_t se = 0; se < cs.get().emap.size(); ++se) {
        auto [t, h] = E.orientation[se];
        orient_parent[cs.get().emap[se]] = {cs.get().fmap[t], cs.get().fmap[h]};
      }
    }
  } else {
    ExtendedLabelling Ec = reference_extension(cr.cut);
    rhs = (eta3_conn(cr.cut, Ec) + s_cut + 1) & 1;
    pre = cr.cut;
    Eparts_vertex.vertex_order = Ec.vertex_order;
    edge_seq_parent = Ec.edge_order;
    orient_parent = Ec.orientation;
  }

  MarkedGraph reglued = glue(pre, u, v);
  const LabelledGraph& Lhat = reglued.lg;
  // glued extension: new edge first, then the cut-graph edges
  ExtendedLabelling Ehat;
  Ehat.vertex_order = Eparts_vertex.vertex_order;
  Ehat.flag_start.assign(Lhat.g.num_vertices(), 0);
  Ehat.edge_order.push_back(reglued.edge);
  for (int e : edge_seq_parent) Ehat.edge_order.push_back(e);
  Ehat.orientation.assign(Lhat.g.num_edges(), {0, 0});
  for (int e = 0; e < (int)orient_parent.size(); ++e) Ehat.orientation[e] = orient_parent[e];
  Ehat.orientation[reglued.edge] = {u, v};

  int star = (rhs + eta3_delta(Lhat, Ehat, L0, E0)) & 1;
  return star;
}

int star_value(const LabelledGraph& L0, const ExtendedLabelling& E0) {
  std::string key = canonical_form(L0);
  {
    std::lock_guard<std::mutex> lk(memo_mu);
    auto it = star_memo().find(key);
    if (it != star_memo().end()) return it->second;
  }
  int star = compute_star(L0, E0);
  std::lock_guard<std::mutex> lk(memo_mu);
  star_memo().emplace(std::move(key), star);
  return star;
}

}  // namespace

LabelledGraph canonical_labelled_min(const LabelledGraph& lg) {
  auto bds = trace_boundaries(lg.g);
  int ell = (int)bds.size();
  std::vector<int> idx(ell);
  for (int i = 0; i < ell; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end());
  LabelledGraph best;
  std::string bestkey;
  do {
    std::vector<int> choice(ell, 0);
    for (;;) {
      LabelledGraph cand;
      cand.g = lg.g;
      for (int b = 0; b < ell; ++b)
        cand.first_leaf.push_back(bds[idx[b]].leaf_cycle[choice[b]]);
      cand.finalize();
      std::string key = canonical_form(cand);
      if (bestkey.empty() || key < bestkey) {
        bestkey = key;
        best = std::move(cand);
      }
      int b = ell - 1;
      while (b >= 0 && ++choice[b] == (int)bds[idx[b]].leaf_cycle.size()) choice[b--] = 0;
      if (b < 0) break;
    }
  } while (std::next_permutation(idx.begin(), idx.end()));
  return best;
}

int eta3_delta(const LabelledGraph& l1, const ExtendedLabelling& x1,
               const LabelledGraph& l0, const ExtendedLabelling& x0) {
  // boundary permutation (orbits identified by min flag)
  std::map<int, int> orb1, orb0;
  for (int b = 0; b < l1.ell(); ++b) orb1[orbit_min_flag(l1, b)] = b;
  for (int b = 0; b < l0.ell(); ++b) orb0[orbit_min_flag(l0, b)] = b;
  std::vector<int> sigma(l0.ell());
  for (auto [mf, b0] : orb0) sigma[b0] = orb1.at(mf);
  int par = seq_inversion_parity(sigma);

  // vertex sequence parity (vertices identified by min flag)
  std::map<int, int> vpos0;
  for (size_t i = 0; i < x0.vertex_order.size(); ++i)
    vpos0[vertex_min_flag(l0.g, x0.vertex_order[i])] = (int)i;
  std::vector<int> vseq;
  for (int v : x1.vertex_order) vseq.push_back(vpos0.at(vertex_min_flag(l1.g, v)));
  par ^= seq_inversion_parity(vseq);

  // edge sequence parity and orientation flips (edges identified by flag pair)
  std::map<std::array<int, 2>, int> epos0;
  std::map<std::array<int, 2>, std::array<int, 2>> eor0;
  for (size_t i = 0; i < x0.edge_order.size(); ++i) {
    int e = x0.edge_order[i];
    epos0[l0.g.edges[e]] = (int)i;
    eor0[l0.g.edges[e]] = x0.orientation[e];
  }
  std::vector<int> eseq;
  for (int e : x1.edge_order) eseq.push_back(epos0.at(l1.g.edges[e]));
  par ^= seq_inversion_parity(eseq);
  for (int e = 0; e < l1.g.num_edges(); ++e)
    if (x1.orientation[e] != eor0.at(l1.g.edges[e])) par ^= 1;
  return par;
}

int eta3(const LabelledGraph& lg, const ExtendedLabelling& x) { return eta3_impl(lg, x); }

int eta3_reference(const LabelledGraph& lg) { return eta3(lg, reference_extension(lg)); }

}  // namespace ribbonmc
