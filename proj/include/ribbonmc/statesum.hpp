#ifndef RIBBONMC_STATESUM_HPP
#define RIBBONMC_STATESUM_HPP

#include "ribbonmc/dibl.hpp"
#include "ribbonmc/enumerate.hpp"
#include "ribbonmc/eta3.hpp"
#include "ribbonmc/surgery.hpp"

namespace ribbonmc {

struct Cutoff {
  int max_ell = 3;
  int max_genus = 1;
  int max_weight = 6;
};

// Everything the graph state sums need: the cyclic DGA, a harmonic subspace
// with special propagator, and the induced cyclic complex structure on H.
struct McContext {
  const CyclicDGA* dga = nullptr;
  HarmonicData harm;
  Propagator prop;
  CyclicComplex hcx;       // H with restricted pairing, d = 0
  std::vector<Vec> hvecs;  // H basis in A coordinates
  Mat p_upper;             // P^{ab} = <P e^a, e^b>
  std::vector<std::array<int, 2>> p_support;
  // plain triples (e_a ^ e_b, e_c) over the A basis
  std::vector<Rat> triple;  // [a*dim*dim + b*dim + c]
  Rat plain_triple(int a, int b, int c) const;

  int max_k = 8;
};

// Builds the context; when prop is null a special propagator is constructed
// from the default harmonic decomposition.
McContext make_context(const CyclicDGA& dga, const Propagator* prop = nullptr);
McContext make_context(const CyclicDGA& dga, const Mat& p_op,
                       const HarmonicData& harm);

// Contraction plan for one labelled graph with an extended labelling: slot
// tables and the combinatorial sign (-1)^{Rbar + (n-1) eta3}.
struct ContractionPlan {
  LabelledGraph lg;
  ExtendedLabelling ext;
  int base_sign = 1;
  int k = 0, e = 0, s = 0, ell = 0;
  std::vector<int> s_vec;
  // edge-order slots: 2e interior (tail,head interleaved), then s leaves
  std::vector<int> slot_of_flag;
  std::vector<std::array<int, 3>> vertex_slots;  // slots of each vertex in order
  // inversion pairs of the reordering permutation, as per-slot partner masks
  std::vector<uint32_t> inv_mask;
};

ContractionPlan make_plan(const McContext& ctx, const LabelledGraph& lg);
ContractionPlan make_plan(const McContext& ctx, const LabelledGraph& lg,
                          const ExtendedLabelling& ext);

// Algebraic I_Gamma(alpha): alpha = one word of H indices per boundary.
// Non-adapted alpha (wrong word lengths) gives 0.
Rat contract(const McContext& ctx, const ContractionPlan& plan, const WordTuple& alpha);

// m_Gamma(alpha) = (-1)^{s_Gamma(alpha)} I_Gamma(alpha)
Rat m_gamma(const McContext& ctx, const ContractionPlan& plan, const WordTuple& alpha);
int s_gamma_exponent(const McContext& ctx, const ContractionPlan& plan,
                     const WordTuple& alpha);

// all values of m_Gamma as a (non-quotient) coefficient map over canonical
// keys is not well-defined (m_Gamma is not cyclic); the assembled levels are:
// m_{ell,g} = 1/ell! sum over R_{ell,g} with total weight <= max_weight.
BarTensor assemble_mc_level(const McContext& ctx, int ell, int g, int max_weight,
                            int workers = 1);

using McElement = std::map<std::pair<int, int>, BarTensor>;

// all m_{ell,g} with ell <= max_ell, g <= max_genus, weight <= max_weight
McElement assemble_mc(const McContext& ctx, const Cutoff& cut, int workers = 1);

// MC_{ell,g} = hat_p210 m_{ell+1,g-1}
//            + 1/2 sum_{l1+l2=ell+1, g1+g2=g} hat_p210(m_{l1,g1} (x) m_{l2,g2})|conn
//            + hat_p120 m_{ell-1,g},
// evaluated on words of total weight <= max_weight.  Levels read at weight
// max_weight + 2 must be present in `m` (DomainError otherwise).
BarTensor mc_residual(const McContext& ctx, const McElement& m, int ell, int g,
                      int max_weight);

// restrict a tensor to entries of total weight <= w
BarTensor bt_truncate_weight(const BarTensor& t, int w);

}  // namespace ribbonmc

#endif
