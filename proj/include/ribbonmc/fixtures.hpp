#ifndef RIBBONMC_FIXTURES_HPP
#define RIBBONMC_FIXTURES_HPP

#include "ribbonmc/algebra.hpp"

namespace ribbonmc {

// Built-in cyclic DGA fixtures:
//   formal-s2   n=2, {1, om}, d=0
//   formal-s3   n=3, {1, v}, d=0
//   heisenberg  n=3, Lambda(e1,e2,e3) with d e3 = e12 (nonformal: nonzero
//               Massey product, so graphs with edges contribute)
//   heis-s1     n=4, heisenberg tensor Lambda(w) (even-n sign coverage)
const CyclicDGA& fixture(const std::string& name);
std::vector<std::string> fixture_names();

// Graded tensor product of cyclic DGAs (degree n1+n2).
CyclicDGA tensor_dga(const CyclicDGA& a, const CyclicDGA& b);

// Exterior algebra Lambda(x_1..x_k) on degree-1 generators with
// d x_i = (given 2-forms), pairing = top coefficient.
CyclicDGA exterior_dga(int k, const std::vector<std::pair<int, std::vector<std::pair<Rat, std::pair<int, int>>>>>& diffs);

}  // namespace ribbonmc

#endif
