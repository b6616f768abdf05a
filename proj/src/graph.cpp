#include "ribbonmc/graph.hpp"

#include <algorithm>
#include <numeric>

namespace ribbonmc {

bool RibbonGraph::trivalent() const {
  for (const auto& v : vertices)
    if (v.size() != 3) return false;
  return true;
}

int RibbonGraph::succ(int f) const {
  const auto& tup = vertices[flag_vertex_[f]];
  int p = flag_pos_[f];
  return tup[(p + 1) % tup.size()];
}

void RibbonGraph::finalize() {
  flag_vertex_.assign(flag_count, -1);
  flag_pos_.assign(flag_count, -1);
  iota_.assign(flag_count, -1);
  flag_edge_.assign(flag_count, -1);
  leaf_mark_.assign(flag_count, 0);

  if (vertices.empty()) throw StructuralError("graph has no vertices");
  for (size_t vi = 0; vi < vertices.size(); ++vi) {
    const auto& tup = vertices[vi];
    if (tup.empty()) throw StructuralError("empty vertex tuple");
    for (size_t p = 0; p < tup.size(); ++p) {
      int f = tup[p];
      if (f < 0 || f >= flag_count) throw StructuralError("flag id out of range");
      if (flag_vertex_[f] != -1) throw StructuralError("flag in two vertices");
      flag_vertex_[f] = (int)vi;
      flag_pos_[f] = (int)p;
    }
  }
  for (int f = 0; f < flag_count; ++f)
    if (flag_vertex_[f] == -1) throw StructuralError("flag missing from vertices");

  for (size_t ei = 0; ei < edges.size(); ++ei) {
    auto [a, b] = edges[ei];
    if (a == b) throw StructuralError("degenerate edge");
    if (a > b) std::swap(a, b), edges[ei] = {a, b};
    for (int f : {a, b}) {
      if (f < 0 || f >= flag_count) throw StructuralError("edge flag out of range");
      if (iota_[f] != -1) throw StructuralError("flag in two edges/leaves");
    }
    if (flag_vertex_[a] == flag_vertex_[b]) throw StructuralError("self-loop edge");
    iota_[a] = b;
    iota_[b] = a;
    flag_edge_[a] = flag_edge_[b] = (int)ei;
  }
  std::sort(leaves.begin(), leaves.end());
  for (int f : leaves) {
    if (f < 0 || f >= flag_count) throw StructuralError("leaf flag out of range");
    if (iota_[f] != -1) throw StructuralError("flag in two edges/leaves");
    iota_[f] = f;
    leaf_mark_[f] = 1;
  }
  for (int f = 0; f < flag_count; ++f)
    if (iota_[f] == -1) throw StructuralError("flag neither edge nor leaf");
}

static std::vector<Boundary> trace_impl(const RibbonGraph& g, bool strict) {
  std::vector<char> vis(g.flag_count, 0);
  std::vector<Boundary> out;
  for (int f0 = 0; f0 < g.flag_count; ++f0) {
    if (vis[f0]) continue;
    Boundary b;
    int f = f0;
    do {
      vis[f] = 1;
      b.flags.push_back(f);
      if (g.is_leaf(f)) b.leaf_cycle.push_back(f);
      f = g.next(f);
    } while (f != f0);
    if (strict && b.leaf_cycle.empty())
      throw StructuralError("boundary component without leaf");
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<Boundary> trace_boundaries(const RibbonGraph& g) {
  return trace_impl(g, true);
}
std::vector<Boundary> trace_boundaries_lenient(const RibbonGraph& g) {
  return trace_impl(g, false);
}

std::vector<int> components(const RibbonGraph& g) {
  int k = g.num_vertices();
  std::vector<int> comp(k, -1);
  int nc = 0;
  for (int v0 = 0; v0 < k; ++v0) {
    if (comp[v0] != -1) continue;
    std::vector<int> stack{v0};
    comp[v0] = nc;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int f : g.vertices[v]) {
        int f2 = g.iota(f);
        if (f2 == f) continue;
        int w = g.vertex_of(f2);
        if (comp[w] == -1) {
          comp[w] = nc;
          stack.push_back(w);
        }
      }
    }
    ++nc;
  }
  return comp;
}

int num_components(const RibbonGraph& g) {
  auto c = components(g);
  return c.empty() ? 0 : 1 + *std::max_element(c.begin(), c.end());
}

Signature signature(const RibbonGraph& g) {
  auto bds = trace_boundaries(g);
  auto comp = components(g);
  int nc = comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());

  Signature sig;
  sig.k = g.num_vertices();
  sig.ell = (int)bds.size();
  for (const auto& b : bds) sig.s_vec.push_back((int)b.leaf_cycle.size());

  // genus per component via chi = k_i - e_i = 2 - 2g_i - ell_i
  std::vector<int> kc(nc, 0), ec(nc, 0), lc(nc, 0);
  for (int v = 0; v < g.num_vertices(); ++v) ++kc[comp[v]];
  for (auto [a, b] : g.edges) ++ec[comp[g.vertex_of(a)]];
  for (const auto& b : bds) ++lc[comp[g.vertex_of(b.flags[0])]];
  int gtot = 0;
  for (int c = 0; c < nc; ++c) {
    int chi = kc[c] - ec[c];
    int twog = 2 - lc[c] - chi;
    if (twog < 0 || twog % 2 != 0)
      throw StructuralError("Euler identity violated (component genus)");
    gtot += twog / 2;
  }
  sig.g = gtot;

  // trivalent flag count identity 3k = 2e + s
  if (g.trivalent()) {
    if (3 * sig.k != 2 * g.num_edges() + g.num_leaves())
      throw StructuralError("flag count identity violated");
  }
  return sig;
}

}  // namespace ribbonmc
