#ifndef RIBBONMC_LABELLED_HPP
#define RIBBONMC_LABELLED_HPP

#include <map>
#include <string>

#include "ribbonmc/graph.hpp"
#include "ribbonmc/perm.hpp"

namespace ribbonmc {

// Labelling = numbering of boundary components plus, per boundary, a leaf
// numbering compatible with the traced cyclic order.  Both are pinned down
// by the ordered list of first leaves.
struct LabelledGraph {
  RibbonGraph g;
  std::vector<int> first_leaf;  // boundary b (0-based) starts at this leaf

  int ell() const { return (int)first_leaf.size(); }

  // Leaves of boundary b in labelling order (rotation of the traced cycle
  // starting at first_leaf[b]).
  std::vector<int> boundary_leaves(int b) const;
  // All leaves in labelling order: boundary 0 first.
  std::vector<int> leaf_order() const;
  std::vector<int> s_vec() const;

  // flag -> (boundary index, position of its face)
  int boundary_of_flag(int f) const;

  void finalize();  // validates labelling against traced boundaries

 private:
  std::vector<int> face_of_;           // flag -> boundary index
  std::vector<std::vector<int>> face_flags_;  // boundary -> flags from first leaf
 public:
  const std::vector<int>& face_flags(int b) const { return face_flags_[b]; }
};

// Canonical byte encoding: complete invariant of label-preserving
// isomorphism.  The boundary walks rooted at the numbered first leaves visit
// every flag in a canonical order; renumbering flags by first visit gives an
// isomorphism-invariant serialization.
std::string canonical_form(const LabelledGraph& lg);

// The flag renumbering used by canonical_form: flag -> canonical id.
std::vector<int> canonical_flag_order(const LabelledGraph& lg);

// Items (iii)-(vi): vertex order, first flag per vertex, edge order, edge
// orientations.
struct ExtendedLabelling {
  std::vector<int> vertex_order;                 // position -> vertex id
  std::vector<int> flag_start;                   // vertex id -> start pos in tuple
  std::vector<int> edge_order;                   // position -> edge id
  std::vector<std::array<int, 2>> orientation;   // edge id -> (tail, head)
};

// Edge order O_e: positions 0..2e-1 carry the edges (tail then head per
// edge), positions 2e.. carry the leaves in labelling order.
std::vector<int> edge_order_flags(const LabelledGraph& lg, const ExtendedLabelling& x);
// Vertex order O_v: flags grouped by vertex_order, starting at flag_start.
std::vector<int> vertex_order_flags(const LabelledGraph& lg, const ExtendedLabelling& x);

// Reordering permutation R = O_v^{-1} o O_e on {0..|Flag|-1}.
Perm reordering_permutation(const LabelledGraph& lg, const ExtendedLabelling& x);
int rbar_parity(const LabelledGraph& lg, const ExtendedLabelling& x);

// Deterministic reference extension derived from canonical_form.
ExtendedLabelling reference_extension(const LabelledGraph& lg);

// Uniformly random extension.
ExtendedLabelling random_extension(const LabelledGraph& lg, unsigned long seed);

// Dump / DOT formats (External Interfaces).
std::string dump_graph(const LabelledGraph& lg);
std::string to_dot(const LabelledGraph& lg);

}  // namespace ribbonmc

#endif
