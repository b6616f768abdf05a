#ifndef RIBBONMC_SURGERY_HPP
#define RIBBONMC_SURGERY_HPP

#include "ribbonmc/labelled.hpp"

namespace ribbonmc {

// Marked graph: connected labelled graph with a marked edge, oriented when
// orient is set (o-marked).
struct MarkedGraph {
  LabelledGraph lg;
  int edge = -1;
  std::optional<std::array<int, 2>> orient;  // (tail, head)

  std::array<int, 2> oriented() const {
    if (orient) return *orient;
    return lg.g.edges[edge];
  }
};

enum class CutClass { C1c, C1dc, C12 };

// Which face is on the left/right of the oriented edge (u,v): the boundary
// walk step leaving flag v runs along the left of u->v, the one leaving u
// along the right.
int face_left(const LabelledGraph& lg, int u, int v);
int face_right(const LabelledGraph& lg, int u, int v);

CutClass classify_cut(const MarkedGraph& m);

struct CutResult {
  LabelledGraph cut;
  std::array<int, 2> flags;  // ordered (u,v) from the marked orientation
  CutClass cls;
};

// Cut open the marked edge; labelling transfer: the new boundaries are
// numbered first (u-face then v-face, first leaves u and v) in the split
// case, or the merged face first (first leaf u) in the 12 case; remaining
// boundaries keep their relative order and first leaves.
CutResult cut(const MarkedGraph& m);

// Split a disconnected labelled graph into component labelled graphs, in
// order of smallest boundary number; the permutation taking the boundary
// order to the component-blocked one is returned via unshuffle parity
// helpers in eta3.cpp.
std::vector<LabelledGraph> split_components(const LabelledGraph& lg);

// Glue exterior flags u,v to a new oriented edge; the labelling transfers by
// requalifying u,v and keeping the order of the remaining exterior flags.
MarkedGraph glue(const LabelledGraph& cutg, int u, int v);

// Special gluing operations (inputs connected, trivalent):
//   g210: glue the first leaves of boundaries 1,2 (needs ell>=2, s1+s2>=3).
//   g210_pair: mu_can-shuffled disjoint union of two graphs, then g210.
//   g120: glue leaf 1 and leaf j (1-based, 3<=j<=s1-1) of boundary 1.
MarkedGraph g210(const LabelledGraph& lg);
MarkedGraph g210_pair(const LabelledGraph& g1, const LabelledGraph& g2);
MarkedGraph g120(const LabelledGraph& lg, int j);

// mu_can-shuffled disjoint union (boundary order: G1.b1, G2.b1, G1 rest,
// G2 rest); flags of g2 are offset by g1.flag_count.
LabelledGraph disjoint_union_mucan(const LabelledGraph& g1, const LabelledGraph& g2);
// Plain disjoint union labelling (G1's boundaries before G2's).
LabelledGraph disjoint_union(const LabelledGraph& g1, const LabelledGraph& g2);

// Duality on o-marked graphs (order 4) and the induced involution on marked
// graphs (orientation chosen canonically, then forgotten).
MarkedGraph duality_I(const MarkedGraph& m);
MarkedGraph duality_Ibar(const MarkedGraph& m);

// Canonical key of a marked graph (canonical form + canonical edge ids).
std::string marked_key(const MarkedGraph& m);

// Does the labelling of the o-marked graph satisfy the special-labelling
// rules (boundary 1 left of the marked edge etc.)?
bool is_special_labelling(const MarkedGraph& m);

}  // namespace ribbonmc

#endif
