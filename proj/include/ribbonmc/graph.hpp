#ifndef RIBBONMC_GRAPH_HPP
#define RIBBONMC_GRAPH_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ribbonmc {

struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ribbon graph described by its flags (0..flag_count-1): a vertex is a
// cyclically ordered tuple of flags, an edge an unordered flag pair, a leaf
// a single flag.  Every flag lies in exactly one vertex and in exactly one
// edge or leaf.  Self-loops are rejected (forced for trivalent graphs by the
// one-leaf-per-boundary condition).
struct RibbonGraph {
  int flag_count = 0;
  std::vector<std::vector<int>> vertices;
  std::vector<std::array<int, 2>> edges;  // stored with first < second
  std::vector<int> leaves;                // sorted

  int num_vertices() const { return (int)vertices.size(); }
  int num_edges() const { return (int)edges.size(); }
  int num_leaves() const { return (int)leaves.size(); }
  bool trivalent() const;

  // flag -> vertex index / position within the vertex tuple
  int vertex_of(int f) const { return flag_vertex_[f]; }
  int pos_in_vertex(int f) const { return flag_pos_[f]; }
  // cyclic successor at the vertex
  int succ(int f) const;
  // edge involution, identity on leaves
  int iota(int f) const { return iota_[f]; }
  bool is_leaf(int f) const { return iota_[f] == f && leaf_mark_[f]; }
  int edge_of(int f) const { return flag_edge_[f]; }  // -1 for leaves

  // Structural validation; throws StructuralError.  Must be called after
  // construction (finalize() does it).
  void finalize();

  // Boundary walk step: next(f) = cyclic-successor-at-vertex(iota(f)).
  int next(int f) const { return succ(iota(f)); }

  bool finalized() const { return !iota_.empty(); }

 private:
  std::vector<int> flag_vertex_, flag_pos_, iota_, flag_edge_;
  std::vector<char> leaf_mark_;
};

// One traced boundary component: flags in traversal order (a cycle of the
// next() permutation) and the leaves among them in visit order.
struct Boundary {
  std::vector<int> flags;
  std::vector<int> leaf_cycle;
};

// Orbits of next(); every component has >= 1 leaf or a StructuralError is
// raised (one-leaf-per-boundary condition).  Orbits are listed with the
// smallest flag first; ordering of the list is by smallest flag.
std::vector<Boundary> trace_boundaries(const RibbonGraph& g);

// Same, but tolerate leafless boundaries (used by validation paths that
// report instead of throwing).
std::vector<Boundary> trace_boundaries_lenient(const RibbonGraph& g);

struct Signature {
  int k = 0, ell = 0, g = 0;
  std::vector<int> s_vec;  // leaf counts per boundary (in traced order)
  int total_leaves() const {
    int s = 0;
    for (int x : s_vec) s += x;
    return s;
  }
};

// Signature of a graph; for disconnected graphs k,e,s,ell aggregate and g is
// additive per component.  Checks the Euler identity per component.
Signature signature(const RibbonGraph& g);

// Connected components by vertices-and-edges; returns vertex index -> comp.
std::vector<int> components(const RibbonGraph& g);
int num_components(const RibbonGraph& g);

}  // namespace ribbonmc

#endif
