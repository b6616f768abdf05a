#ifndef RIBBONMC_BARTENSOR_HPP
#define RIBBONMC_BARTENSOR_HPP

#include <map>

#include "ribbonmc/algebra.hpp"

namespace ribbonmc {

// A word is a sequence of basis indices of a cyclic complex; a functional on
// tensor products of cyclic words is stored by its values on canonical orbit
// representatives (lexicographically minimal rotation per factor).
using Word = std::vector<int>;
using WordTuple = std::vector<Word>;

// shifted degree |w| = sum (deg - 1)
int word_sdeg(const CyclicComplex& cx, const Word& w);
// degree in B^cyc*[3-n] per factor: sum_f (|w_f| + n - 3)
int tuple_cdeg(const CyclicComplex& cx, const WordTuple& t);

// t_alg rotation: (x_1..x_k) -> (x_k, x_1..x_{k-1}) with the shifted Koszul
// sign; applied `times` times.
std::pair<Word, int> t_alg(const CyclicComplex& cx, const Word& w, int times = 1);

// canonical rotation of a word: lexicographically smallest among rotations,
// with the accumulated sign.  sign 0 means the orbit is sign-inconsistent
// (self-rotation with sign -1), forcing any cyclic functional to vanish.
std::pair<Word, int> canonical_rotation(const CyclicComplex& cx, const Word& w);

// Functional on (B^cyc A[3-n])^{otimes ell}, finitely supported, with values
// accessed through cyclic canonicalization per factor.
struct BarTensor {
  int ell = 1;
  std::map<WordTuple, Rat> c;

  bool zero() const;
  // first nonzero entry (for reporting offending words)
  std::string first_nonzero(const CyclicComplex& cx) const;
};

void bt_add(const CyclicComplex& cx, BarTensor& t, const WordTuple& w, const Rat& v);
Rat bt_value(const CyclicComplex& cx, const BarTensor& t, const WordTuple& w);
BarTensor bt_sum(const BarTensor& a, const BarTensor& b);
BarTensor bt_scale(const Rat& r, const BarTensor& a);
bool bt_equal(const BarTensor& a, const BarTensor& b);

// is every supported tuple of the same total C[1]-degree?  returns it.
std::optional<int> bt_degree(const CyclicComplex& cx, const BarTensor& t);

// symmetrize over factor permutations with dual Koszul signs (1/ell! sum)
BarTensor bt_symmetrize(const CyclicComplex& cx, const BarTensor& t);
bool bt_is_symmetric(const CyclicComplex& cx, const BarTensor& t);

// graded tensor product: (T1 (x) T2)(u,v) = (-1)^{deg T2 * deg u} T1(u) T2(v)
BarTensor bt_tensor(const CyclicComplex& cx, const BarTensor& a, const BarTensor& b);

// graded factor permutation: output factor i = input factor perm[i], with
// the Koszul sign of the move (C[1]-degrees) applied entrywise
BarTensor bt_permute(const CyclicComplex& cx, const BarTensor& t,
                     const std::vector<int>& perm);

// move factors i (and j) to the front, preserving the rest, with the dual
// Koszul sign applied entrywise
BarTensor bt_move_front(const CyclicComplex& cx, const BarTensor& t, int i, int j = -1);

// canonical diff-able dump: "(ell) | word-tuple | rational" lines
std::string bt_dump(const CyclicComplex& cx, const BarTensor& t, int ell_tag, int g_tag);

}  // namespace ribbonmc

#endif
