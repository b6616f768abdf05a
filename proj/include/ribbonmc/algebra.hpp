#ifndef RIBBONMC_ALGEBRA_HPP
#define RIBBONMC_ALGEBRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "ribbonmc/graph.hpp"
#include "ribbonmc/rational.hpp"

namespace ribbonmc {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;  // row-major; (M x)_i = sum_j M[i][j] x_j

Mat zero_mat(int r, int c);
Mat identity_mat(int n);
Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_sub(const Mat& a, const Mat& b);
Mat mat_scale(const Rat& c, const Mat& a);
Vec mat_apply(const Mat& m, const Vec& x);
bool mat_is_zero(const Mat& m);
int mat_rank(Mat m);
// solve M x = b; empty optional when inconsistent
std::optional<Vec> solve(Mat m, Vec b);
// basis of the null space (as columns of the returned matrix's rows? no:
// returned as a list of vectors)
std::vector<Vec> null_space(Mat m);
std::optional<Mat> mat_inverse(Mat m);

// Finite graded cyclic cochain complex over Q: basis with degrees, pairing
// matrix, differential.
struct CyclicComplex {
  int n = 0;  // pairing degree
  std::vector<std::string> names;
  std::vector<int> degs;
  Mat pairing;  // pairing[a][b] = (e_a, e_b)
  Mat d;        // d e_a = sum_b d[b][a] e_b

  int dim() const { return (int)names.size(); }
  int name_index(const std::string& s) const;
  // cyclic pairing <x,y> = (-1)^{deg x}(x,y) on basis elements
  Rat cpair(int a, int b) const;
  Rat pair_vec(const Vec& x, const Vec& y) const;
  // dual basis for the cyclic pairing: <e_a, e^b> = delta; row b of the
  // returned matrix is the coordinate vector of e^b.
  Mat cyclic_dual_basis() const;
};

// Cyclic DGA: complex plus product tensor.
struct CyclicDGA {
  CyclicComplex cx;
  // mul[a][b] = coordinates of e_a ^ e_b
  std::vector<std::vector<Vec>> mul;

  Vec product(const Vec& x, const Vec& y) const;
  // triple intersection product m^can(x0,x1,x2) = (-1)^{deg x1+n}(x0^x1, x2)
  Rat triple_product(int a, int b, int c) const;
  Rat triple_product(const Vec& x0, const Vec& x1, const Vec& x2) const;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
  void fail(std::string why) {
    ok = false;
    violations.push_back(std::move(why));
  }
};

ValidationReport validate_complex(const CyclicComplex& c, bool require_perfect = true);
ValidationReport validate_dga(const CyclicDGA& a, bool require_perfect = true);

struct HarmonicData {
  std::vector<Vec> basis;       // basis of H
  std::vector<Vec> dual_basis;  // e^a in H with (e_a, e^b) = delta
  Mat projection;               // pi_H
};

// H must satisfy ker d = im d (+) H; pi_H(x) = sum_a (e_a,x) e^a.
HarmonicData harmonic_decomposition(const CyclicComplex& c, const std::vector<Vec>& h_basis);
// Default harmonic subspace: deterministic complement of im d in ker d.
std::vector<Vec> default_harmonic_basis(const CyclicComplex& c);

struct Propagator {
  Mat op;   // degree -1 operator
  Mat proj; // pi with dP+Pd = pi - 1
  bool homotopy = false, symmetric = false, special = false;
};

// Check the propagator identities exactly; updates the flags.
void check_propagator(const CyclicComplex& c, Propagator& p);

// Special symmetric propagator with im(pi) = H.  complement_choice, when
// given, is a basis of a complement C of ker d (im P = C after the isotropic
// correction).  Default tries the pairing-orthogonal complement of ker d and
// falls back to a deterministically constructed one when that is degenerate.
Propagator build_propagator(const CyclicComplex& c, const HarmonicData& h,
                            const std::vector<Vec>* complement_choice = nullptr);

// P2 := (pi-1) P (pi-1), P3 := -P2 d P2 (special propagator from any
// symmetric homotopy operator with respect to the same pi).
Propagator specialize(const CyclicComplex& c, const Propagator& p);

// P^{ab} = <P e^a, e^b> matrix in the cyclic-dual basis.
Mat propagator_upper(const CyclicComplex& c, const Mat& p_op);

}  // namespace ribbonmc

#endif
