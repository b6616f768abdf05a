#ifndef RIBBONMC_PERM_HPP
#define RIBBONMC_PERM_HPP

#include <cstdint>
#include <vector>

namespace ribbonmc {

// Permutations are vectors p with p[i] = image of position i (0-based).
using Perm = std::vector<int>;

Perm identity_perm(int n);
Perm compose(const Perm& f, const Perm& g);  // (f*g)[i] = f[g[i]]
Perm inverse(const Perm& p);
bool is_perm(const Perm& p);

// Parity (number of inversions mod 2).
int perm_parity(const Perm& p);

// Sign exponent (mod 2) for rearranging graded symbols: the word
// (x_0,...,x_{k-1}) with degrees deg[i] becomes (x_{p[0]},...,x_{p[k-1]}).
// Each transposition of adjacent symbols a,b contributes deg(a)*deg(b).
int koszul_exponent(const Perm& p, const std::vector<int>& degs);

// koszul_sign: +1/-1, with optional shift applied to every degree
// (shifted=true uses |x| = deg x - 1).
int koszul_sign(const Perm& p, const std::vector<int>& degs, bool shifted);

// P-operator exponent: P(x) = sum_j (k-j)*deg x_j, eq-style with j = 1..k.
int p_exponent(const std::vector<int>& degs);

// P_b exponent: sum_b (ell-b)*|alpha^b| over boundary blocks, where
// |alpha^b| is the total shifted degree of block b.  The caller weights
// the result by (n-1).
int pb_exponent(const std::vector<int>& block_shifted_degs);

// All shuffles of {0..ell-1} for the given block sizes: permutations sigma
// (as position->value maps on sorted input) preserving the relative order
// inside each block.  |Sh| = ell! / prod(parts!).
// Returned perms q satisfy: q[i] = new position of element i.
std::vector<Perm> shuffles(const std::vector<int>& parts);

}  // namespace ribbonmc

#endif
