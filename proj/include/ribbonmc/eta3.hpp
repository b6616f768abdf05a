#ifndef RIBBONMC_ETA3_HPP
#define RIBBONMC_ETA3_HPP

#include "ribbonmc/labelled.hpp"

namespace ribbonmc {

// Sign exponent eta3 of an extended labelled trivalent ribbon graph.
//
// The absolute normalization is fixed as follows: eta3 := 0 for the
// canonically labelled tripod; for a connected graph with edges, its value
// on one distinguished (canonical-edge) glued labelling is pinned by the
// glue identities
//     eta3(glued) = eta3(cut) + s_cut - 1                (cut connected)
//     eta3(glued) = eta3(G1) + eta3(G2)
//                   + 1 + l1*s2 + l1 + s + s1*s2         (cut disconnected)
// and transported to arbitrary labellings/extensions by the toggle rules
// (boundary swap, vertex swap, edge swap, edge flip each add 1; items (ii)
// and (iv) do not matter).  Disjoint unions are additive in the canonical
// component order, with unshuffle parities for interleaved numberings.
int eta3(const LabelledGraph& lg, const ExtendedLabelling& x);

// eta3 with the deterministic reference extension.
int eta3_reference(const LabelledGraph& lg);

// Relative parity between two extended labellings of the same flag set:
// boundary permutation + vertex order + edge order + orientation flips.
int eta3_delta(const LabelledGraph& l1, const ExtendedLabelling& x1,
               const LabelledGraph& l0, const ExtendedLabelling& x0);

// The labelling of the underlying graph minimizing canonical_form (used as
// the per-isomorphism-class base point).
LabelledGraph canonical_labelled_min(const LabelledGraph& lg);

}  // namespace ribbonmc

#endif
