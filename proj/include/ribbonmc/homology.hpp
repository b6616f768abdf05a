#ifndef RIBBONMC_HOMOLOGY_HPP
#define RIBBONMC_HOMOLOGY_HPP

#include "ribbonmc/statesum.hpp"

namespace ribbonmc {

// Basis of the weight-w cyclic dual space: canonical orbit representatives
// with sign-consistent t_alg orbits.
std::vector<Word> cyclic_word_basis(const CyclicComplex& cx, int w);

// Twisted differential D = p110 + p210(m_{1,0}, .) on the weight-truncated
// dual cyclic bar complex of H.  D lowers the bar degree |w| by 1 and lowers
// weight by at least 1, so the truncation is a complex.
struct TwistedComplex {
  const CyclicComplex* cx = nullptr;
  int max_weight = 0;
  std::vector<Word> basis;                   // all weights <= max_weight
  std::vector<int> weight, degree;           // per basis element (|w| grading)
  std::vector<std::map<int, Rat>> d_columns; // D(delta_u) expanded
};

TwistedComplex twisted_differential(const CyclicComplex& hcx, const BarTensor& m10,
                                    int max_weight);

// is D^2 = 0?  returns the first offending basis word otherwise
std::optional<std::string> twisted_square_check(const TwistedComplex& tc);

struct RankRecord {
  int degree, weight, rank;
  bool operator==(const RankRecord&) const = default;
};

// homology ranks of the weight-truncated complex, one table per truncation
// level 1..max_weight, graded by the bar degree
std::vector<RankRecord> homology_ranks(const TwistedComplex& tc);

// Connes cyclic chain complex of the DGA at weight <= max_weight (word
// length), built from the classical d_i/b/t/N operations, with homology
// ranks per (bar degree, truncation level).  The bar degree convention is
// aligned with the twisted side (the canonical degree -1 shift of the
// projection C(A) -> C^lambda(A) is applied).
std::vector<RankRecord> cyclic_cohomology(const CyclicDGA& a, int max_weight);

// A-infinity operations transferred to H, in the shifted (bar) convention:
// the stored b_k are recovered from m_{1,0} via
//     <b_k(x_1..x_k), y> = (-1)^n m_{1,0}(x_1,...,x_k, y),
// and satisfy the bar-differential square-zero relation with plain shifted
// Koszul prefix signs.  The classical product is the desuspension
// m_2(x,y) = (-1)^{deg x} b_2(x,y).
struct AInfinity {
  const CyclicComplex* cx = nullptr;
  // m[k] maps H-words of length k to H vectors (k >= 2 entries present)
  std::map<int, std::map<Word, Vec>> m;
};

AInfinity extract_ainfty(const McContext& ctx, const BarTensor& m10, int max_arity);

// bar-differential square: Stasheff relations up to the given word length;
// returns offending word if any
std::optional<std::string> stasheff_check(const AInfinity& ai, int max_weight);

// apply m_k tables to a word of H indices (expanding intermediate vectors)
Vec ainfty_apply(const AInfinity& ai, int k, const std::vector<Vec>& args);

std::string format_rank_table(const std::vector<RankRecord>& recs);

}  // namespace ribbonmc

#endif
