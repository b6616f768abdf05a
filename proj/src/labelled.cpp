#include "ribbonmc/labelled.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace ribbonmc {

void LabelledGraph::finalize() {
  if (!g.finalized()) g.finalize();
  auto bds = trace_boundaries(g);
  if ((int)bds.size() != ell())
    throw StructuralError("labelling has wrong number of boundaries");
  face_of_.assign(g.flag_count, -1);
  face_flags_.assign(ell(), {});
  std::vector<char> used(bds.size(), 0);
  for (int b = 0; b < ell(); ++b) {
    int f0 = first_leaf[b];
    if (f0 < 0 || f0 >= g.flag_count || !g.is_leaf(f0))
      throw StructuralError("first leaf is not a leaf");
    // locate the traced component containing f0
    int which = -1;
    for (size_t i = 0; i < bds.size(); ++i)
      if (std::find(bds[i].flags.begin(), bds[i].flags.end(), f0) != bds[i].flags.end())
        which = (int)i;
    if (which < 0 || used[which]) throw StructuralError("bad boundary assignment");
    used[which] = 1;
    // rotate the walk to start at f0
    std::vector<int> w;
    int f = f0;
    do {
      w.push_back(f);
      face_of_[f] = b;
      f = g.next(f);
    } while (f != f0);
    face_flags_[b] = std::move(w);
  }
}

std::vector<int> LabelledGraph::boundary_leaves(int b) const {
  std::vector<int> out;
  for (int f : face_flags_[b])
    if (g.is_leaf(f)) out.push_back(f);
  return out;
}

std::vector<int> LabelledGraph::leaf_order() const {
  std::vector<int> out;
  for (int b = 0; b < ell(); ++b) {
    auto l = boundary_leaves(b);
    out.insert(out.end(), l.begin(), l.end());
  }
  return out;
}

std::vector<int> LabelledGraph::s_vec() const {
  std::vector<int> s;
  for (int b = 0; b < ell(); ++b) s.push_back((int)boundary_leaves(b).size());
  return s;
}

int LabelledGraph::boundary_of_flag(int f) const { return face_of_[f]; }

std::vector<int> canonical_flag_order(const LabelledGraph& lg) {
  std::vector<int> id(lg.g.flag_count, -1);
  int nxt = 0;
  for (int b = 0; b < lg.ell(); ++b)
    for (int f : lg.face_flags(b))
      if (id[f] == -1) id[f] = nxt++;
  return id;  // boundary walks cover all flags
}

std::string canonical_form(const LabelledGraph& lg) {
  auto id = canonical_flag_order(lg);
  const auto& g = lg.g;
  std::ostringstream os;
  os << "k" << g.num_vertices() << "e" << g.num_edges() << "s" << g.num_leaves();
  // vertices: rotate each tuple to its minimal canonical flag, sort tuples
  std::vector<std::vector<int>> vt;
  for (const auto& tup : g.vertices) {
    std::vector<int> c;
    for (int f : tup) c.push_back(id[f]);
    size_t best = std::min_element(c.begin(), c.end()) - c.begin();
    std::vector<int> rot;
    for (size_t i = 0; i < c.size(); ++i) rot.push_back(c[(best + i) % c.size()]);
    vt.push_back(std::move(rot));
  }
  std::sort(vt.begin(), vt.end());
  os << "|V";
  for (const auto& t : vt) {
    os << "(";
    for (int f : t) os << f << " ";
    os << ")";
  }
  std::vector<std::array<int, 2>> ed;
  for (auto [a, b] : g.edges) {
    int x = id[a], y = id[b];
    if (x > y) std::swap(x, y);
    ed.push_back({x, y});
  }
  std::sort(ed.begin(), ed.end());
  os << "|E";
  for (auto [a, b] : ed) os << "{" << a << "," << b << "}";
  std::vector<int> lf;
  for (int f : g.leaves) lf.push_back(id[f]);
  std::sort(lf.begin(), lf.end());
  os << "|L";
  for (int f : lf) os << f << " ";
  os << "|F";
  for (int f : lg.first_leaf) os << id[f] << " ";
  return os.str();
}

std::vector<int> edge_order_flags(const LabelledGraph& lg, const ExtendedLabelling& x) {
  std::vector<int> out;
  for (int e : x.edge_order) {
    out.push_back(x.orientation[e][0]);
    out.push_back(x.orientation[e][1]);
  }
  for (int f : lg.leaf_order()) out.push_back(f);
  return out;
}

std::vector<int> vertex_order_flags(const LabelledGraph& lg, const ExtendedLabelling& x) {
  std::vector<int> out;
  for (int v : x.vertex_order) {
    const auto& tup = lg.g.vertices[v];
    int d = (int)tup.size(), st = x.flag_start[v];
    for (int i = 0; i < d; ++i) out.push_back(tup[(st + i) % d]);
  }
  return out;
}

Perm reordering_permutation(const LabelledGraph& lg, const ExtendedLabelling& x) {
  auto oe = edge_order_flags(lg, x);
  auto ov = vertex_order_flags(lg, x);
  std::vector<int> inv_ov(lg.g.flag_count, -1);
  for (size_t i = 0; i < ov.size(); ++i) inv_ov[ov[i]] = (int)i;
  Perm r(oe.size());
  for (size_t i = 0; i < oe.size(); ++i) r[i] = inv_ov[oe[i]];
  return r;
}

int rbar_parity(const LabelledGraph& lg, const ExtendedLabelling& x) {
  return perm_parity(reordering_permutation(lg, x));
}

ExtendedLabelling reference_extension(const LabelledGraph& lg) {
  auto id = canonical_flag_order(lg);
  const auto& g = lg.g;
  ExtendedLabelling x;
  // vertex order: ascending min canonical flag
  std::vector<std::pair<int, int>> vk;
  for (int v = 0; v < g.num_vertices(); ++v) {
    int m = INT32_MAX;
    for (int f : g.vertices[v]) m = std::min(m, id[f]);
    vk.push_back({m, v});
  }
  std::sort(vk.begin(), vk.end());
  for (auto [m, v] : vk) x.vertex_order.push_back(v);
  // start flag: the minimal canonical flag of the tuple
  x.flag_start.assign(g.num_vertices(), 0);
  for (int v = 0; v < g.num_vertices(); ++v) {
    const auto& tup = g.vertices[v];
    int best = 0;
    for (size_t i = 1; i < tup.size(); ++i)
      if (id[tup[i]] < id[tup[best]]) best = (int)i;
    x.flag_start[v] = best;
  }
  // edge order: ascending (min,max) canonical pair; orientation min -> max
  std::vector<std::pair<std::array<int, 2>, int>> ek;
  x.orientation.assign(g.num_edges(), {0, 0});
  for (int e = 0; e < g.num_edges(); ++e) {
    auto [a, b] = g.edges[e];
    if (id[a] > id[b]) std::swap(a, b);
    ek.push_back({{id[a], id[b]}, e});
    x.orientation[e] = {a, b};
  }
  std::sort(ek.begin(), ek.end());
  for (auto& [kk, e] : ek) x.edge_order.push_back(e);
  return x;
}

ExtendedLabelling random_extension(const LabelledGraph& lg, unsigned long seed) {
  std::mt19937_64 rng(seed);
  const auto& g = lg.g;
  ExtendedLabelling x = reference_extension(lg);
  std::shuffle(x.vertex_order.begin(), x.vertex_order.end(), rng);
  std::shuffle(x.edge_order.begin(), x.edge_order.end(), rng);
  for (int v = 0; v < g.num_vertices(); ++v)
    x.flag_start[v] = (int)(rng() % g.vertices[v].size());
  for (int e = 0; e < g.num_edges(); ++e)
    if (rng() & 1) std::swap(x.orientation[e][0], x.orientation[e][1]);
  return x;
}

std::string dump_graph(const LabelledGraph& lg) {
  std::ostringstream os;
  os << "vertices:";
  for (const auto& t : lg.g.vertices) {
    os << " (";
    for (size_t i = 0; i < t.size(); ++i) os << (i ? " " : "") << t[i];
    os << ")";
  }
  os << "\nedges:";
  for (auto [a, b] : lg.g.edges) os << " {" << a << "," << b << "}";
  os << "\nleaves:";
  for (int f : lg.g.leaves) os << " " << f;
  os << "\nlabelling:";
  for (int b = 0; b < lg.ell(); ++b) {
    os << " b" << (b + 1) << ":[";
    auto ls = lg.boundary_leaves(b);
    for (size_t i = 0; i < ls.size(); ++i) os << (i ? " " : "") << ls[i];
    os << "]";
  }
  os << "\n";
  return os.str();
}

std::string to_dot(const LabelledGraph& lg) {
  std::ostringstream os;
  os << "graph ribbon {\n";
  for (int v = 0; v < lg.g.num_vertices(); ++v) os << "  v" << v << " [shape=circle];\n";
  for (auto [a, b] : lg.g.edges)
    os << "  v" << lg.g.vertex_of(a) << " -- v" << lg.g.vertex_of(b)
       << " [label=\"" << a << "-" << b << "\"];\n";
  for (size_t i = 0; i < lg.g.leaves.size(); ++i) {
    int f = lg.g.leaves[i];
    os << "  l" << f << " [shape=point];\n";
    os << "  v" << lg.g.vertex_of(f) << " -- l" << f << " [style=dashed,label=\"b"
       << (lg.boundary_of_flag(f) + 1) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace ribbonmc
