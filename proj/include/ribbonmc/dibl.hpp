#ifndef RIBBONMC_DIBL_HPP
#define RIBBONMC_DIBL_HPP

#include "ribbonmc/bartensor.hpp"

namespace ribbonmc {

// Canonical dIBL operations on the dual cyclic bar complex of a cyclic
// complex: p110 = d*, p210 = (c120 N_alg)*, p120 = (c210 N_alg^{x2})*.
// All act on the first one/two tensor factors; the hat versions sum over
// factor positions with dual Koszul shuffle signs and symmetrize.
struct DiblOps {
  const CyclicComplex* cx;
  Mat dual;  // row a = coordinates of e^a

  explicit DiblOps(const CyclicComplex& c) : cx(&c), dual(c.cyclic_dual_basis()) {}

  // pointwise evaluations
  Rat eval_p110_1(const BarTensor& t, const WordTuple& out) const;
  Rat eval_p210_12(const BarTensor& t, const WordTuple& out) const;
  Rat eval_p120_1(const BarTensor& t, const WordTuple& out) const;

  // full operators on the first factor(s): input t.ell factors, output
  // t.ell / t.ell-1 / t.ell+1 factors
  BarTensor p110_1(const BarTensor& t) const;
  BarTensor p210_12(const BarTensor& t) const;
  BarTensor p120_1(const BarTensor& t) const;

  // hat operations (inputs as quotient representatives; outputs symmetrized)
  BarTensor hat_p110(const BarTensor& t) const;
  BarTensor hat_p210(const BarTensor& t) const;
  BarTensor hat_p120(const BarTensor& t) const;

  // connected part of hat_p210(a (x) b): the two consumed factors come from
  // the two different tensor factors
  BarTensor hat_p210_conn(const BarTensor& a, const BarTensor& b) const;

  // id^{(x)f} (x) op (x) id^{...}: operator at factor position f (p210 uses
  // factors f,f+1); leading-factor Koszul signs via graded conjugation
  BarTensor apply_p110_at(const BarTensor& t, int f) const;
  BarTensor apply_p210_at(const BarTensor& t, int f) const;
  BarTensor apply_p120_at(const BarTensor& t, int f) const;
};

// m^can as a weight-3 bar tensor (ell = 1) of a cyclic DGA.
BarTensor canonical_mc_weight3(const CyclicDGA& a);

}  // namespace ribbonmc

#endif
