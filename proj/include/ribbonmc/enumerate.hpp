#ifndef RIBBONMC_ENUMERATE_HPP
#define RIBBONMC_ENUMERATE_HPP

#include "ribbonmc/labelled.hpp"

namespace ribbonmc {

struct EnumOptions {
  int max_k = 8;        // supported envelope
  bool brute = false;   // disable symmetry reductions (oracle mode)
};

// Vertex count of a connected trivalent graph of type (ell,g) with s leaves,
// or -1 when infeasible:  k = 2(2g+ell-2)+s.
int trivalent_k(int ell, int g, int s);

// All isomorphism classes of connected labelled trivalent ribbon graphs with
// s_vec[b] leaves on boundary b (the set R_{ell,g}(s_1..s_ell)), as canonical
// representatives sorted by canonical form.  Throws ResourceError when k
// exceeds opts.max_k.
std::vector<LabelledGraph> enumerate_graphs(int ell, int g,
                                            const std::vector<int>& s_vec,
                                            const EnumOptions& opts = {});

// Canonical forms of the enumerated set (sorted).
std::vector<std::string> enumerate_canonical(int ell, int g,
                                             const std::vector<int>& s_vec,
                                             const EnumOptions& opts = {});

// Process-wide memo keyed by (ell,g,s_vec); thread-safe.
const std::vector<LabelledGraph>& enumerate_cached(int ell, int g,
                                                   const std::vector<int>& s_vec,
                                                   int max_k = 8);

// All signatures (ell,g,s_vec ordered compositions) with k <= max_k.
std::vector<std::tuple<int, int, std::vector<int>>> feasible_signatures(int max_k);

}  // namespace ribbonmc

#endif
