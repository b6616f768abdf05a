#include "ribbonmc/algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ribbonmc {

Mat zero_mat(int r, int c) { return Mat(r, Vec(c, Rat(0))); }

Mat identity_mat(int n) {
  Mat m = zero_mat(n, n);
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  int r = (int)a.size(), k = (int)b.size(), c = (int)b[0].size();
  Mat m = zero_mat(r, c);
  for (int i = 0; i < r; ++i)
    for (int t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (int j = 0; j < c; ++j) m[i][j] += a[i][t] * b[t][j];
    }
  return m;
}

Mat mat_add(const Mat& a, const Mat& b) {
  Mat m = a;
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) m[i][j] += b[i][j];
  return m;
}

Mat mat_sub(const Mat& a, const Mat& b) {
  Mat m = a;
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) m[i][j] -= b[i][j];
  return m;
}

Mat mat_scale(const Rat& c, const Mat& a) {
  Mat m = a;
  for (auto& row : m)
    for (auto& x : row) x *= c;
  return m;
}

Vec mat_apply(const Mat& m, const Vec& x) {
  Vec y(m.size(), Rat(0));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j)
      if (m[i][j] != 0 && x[j] != 0) y[i] += m[i][j] * x[j];
  return y;
}

bool mat_is_zero(const Mat& m) {
  for (const auto& row : m)
    for (const auto& x : row)
      if (x != 0) return false;
  return true;
}

namespace {
// row-reduce in place; returns pivot columns
std::vector<int> rref(Mat& m) {
  std::vector<int> pivots;
  int rows = (int)m.size(), cols = rows ? (int)m[0].size() : 0, r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[p], m[r]);
    Rat inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (int j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}
}  // namespace

int mat_rank(Mat m) { return (int)rref(m).size(); }

std::optional<Vec> solve(Mat m, Vec b) {
  int rows = (int)m.size(), cols = rows ? (int)m[0].size() : 0;
  for (int i = 0; i < rows; ++i) m[i].push_back(b[i]);
  auto piv = rref(m);
  Vec x(cols, Rat(0));
  for (int i = 0; i < rows; ++i) {
    bool allz = true;
    for (int j = 0; j < cols; ++j)
      if (m[i][j] != 0) allz = false;
    if (allz && m[i][cols] != 0) return std::nullopt;
  }
  for (size_t r = 0; r < piv.size(); ++r)
    if (piv[r] < cols) x[piv[r]] = m[r][cols];
  return x;
}

std::vector<Vec> null_space(Mat m) {
  int cols = m.empty() ? 0 : (int)m[0].size();
  auto piv = rref(m);
  std::vector<char> ispiv(cols, 0);
  for (int c : piv) ispiv[c] = 1;
  std::vector<Vec> out;
  for (int free = 0; free < cols; ++free) {
    if (ispiv[free]) continue;
    Vec v(cols, Rat(0));
    v[free] = 1;
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][free];
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Mat> mat_inverse(Mat m) {
  int n = (int)m.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i].push_back(i == j ? Rat(1) : Rat(0));
  }
  auto piv = rref(m);
  if ((int)piv.size() != n) return std::nullopt;
  Mat inv = zero_mat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

int CyclicComplex::name_index(const std::string& s) const {
  for (int i = 0; i < dim(); ++i)
    if (names[i] == s) return i;
  throw DomainError("unknown basis name: " + s);
}

Rat CyclicComplex::cpair(int a, int b) const {
  Rat r = pairing[a][b];
  if (degs[a] & 1) r = -r;
  return r;
}

Rat CyclicComplex::pair_vec(const Vec& x, const Vec& y) const {
  Rat r(0);
  for (int a = 0; a < dim(); ++a) {
    if (x[a] == 0) continue;
    for (int b = 0; b < dim(); ++b)
      if (pairing[a][b] != 0 && y[b] != 0) r += x[a] * pairing[a][b] * y[b];
  }
  return r;
}

Mat CyclicComplex::cyclic_dual_basis() const {
  Mat c = zero_mat(dim(), dim());
  for (int a = 0; a < dim(); ++a)
    for (int b = 0; b < dim(); ++b) c[a][b] = cpair(a, b);
  auto inv = mat_inverse(c);
  if (!inv) throw DomainError("pairing is not perfect");
  // row b of X: coordinates of e^b, with sum_c X[b][c] <e_a,e_c> = delta_a^b
  Mat x = zero_mat(dim(), dim());
  for (int b = 0; b < dim(); ++b)
    for (int cc = 0; cc < dim(); ++cc) x[b][cc] = (*inv)[cc][b];
  return x;
}

Vec CyclicDGA::product(const Vec& x, const Vec& y) const {
  Vec out(cx.dim(), Rat(0));
  for (int a = 0; a < cx.dim(); ++a) {
    if (x[a] == 0) continue;
    for (int b = 0; b < cx.dim(); ++b) {
      if (y[b] == 0) continue;
      for (int c = 0; c < cx.dim(); ++c)
        if (mul[a][b][c] != 0) out[c] += x[a] * y[b] * mul[a][b][c];
    }
  }
  return out;
}

Rat CyclicDGA::triple_product(int a, int b, int c) const {
  Rat r(0);
  for (int t = 0; t < cx.dim(); ++t)
    if (mul[a][b][t] != 0 && cx.pairing[t][c] != 0) r += mul[a][b][t] * cx.pairing[t][c];
  if ((cx.degs[b] + cx.n) & 1) r = -r;
  return r;
}

Rat CyclicDGA::triple_product(const Vec& x0, const Vec& x1, const Vec& x2) const {
  Rat r(0);
  for (int a = 0; a < cx.dim(); ++a)
    for (int b = 0; b < cx.dim(); ++b)
      for (int c = 0; c < cx.dim(); ++c)
        if (x0[a] != 0 && x1[b] != 0 && x2[c] != 0)
          r += x0[a] * x1[b] * x2[c] * triple_product(a, b, c);
  return r;
}

ValidationReport validate_complex(const CyclicComplex& c, bool require_perfect) {
  ValidationReport rep;
  int n = c.dim();
  std::ostringstream os;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (c.pairing[a][b] != 0 && c.degs[a] + c.degs[b] != c.n)
        rep.fail("pairing degree violation at (" + c.names[a] + "," + c.names[b] + ")");
      Rat sym = c.pairing[b][a];
      if ((c.degs[a] * c.degs[b]) & 1) sym = -sym;
      if (c.pairing[a][b] != sym)
        rep.fail("graded symmetry violation at (" + c.names[a] + "," + c.names[b] + ")");
    }
  // d degree +1 and d^2 = 0
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (c.d[b][a] != 0 && c.degs[b] != c.degs[a] + 1)
        rep.fail("differential degree violation at d(" + c.names[a] + ")");
  if (!mat_is_zero(mat_mul(c.d, c.d))) rep.fail("d^2 != 0");
  // (dx,y) = (-1)^{1+deg x}(x,dy)
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Rat lhs(0), rhs(0);
      for (int t = 0; t < n; ++t) {
        if (c.d[t][a] != 0) lhs += c.d[t][a] * c.pairing[t][b];
        if (c.d[t][b] != 0) rhs += c.pairing[a][t] * c.d[t][b];
      }
      if ((1 + c.degs[a]) & 1) rhs = -rhs;
      if (lhs != rhs)
        rep.fail("differential/pairing compatibility fails at (" + c.names[a] + "," +
                 c.names[b] + ")");
    }
  if (require_perfect && !mat_inverse(c.pairing))
    rep.fail("pairing is not perfect");
  return rep;
}

ValidationReport validate_dga(const CyclicDGA& a, bool require_perfect) {
  ValidationReport rep = validate_complex(a.cx, require_perfect);
  const auto& c = a.cx;
  int n = c.dim();
  // product degree 0
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int t = 0; t < n; ++t)
        if (a.mul[x][y][t] != 0 && c.degs[t] != c.degs[x] + c.degs[y])
          rep.fail("product degree violation at (" + c.names[x] + "," + c.names[y] + ")");
  // associativity
  for (int x = 0; x < n && rep.violations.size() < 64; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Vec ex(n, Rat(0)), ey(n, Rat(0)), ez(n, Rat(0));
        ex[x] = ey[y] = ez[z] = 1;
        if (a.product(a.product(ex, ey), ez) != a.product(ex, a.product(ey, ez)))
          rep.fail("associativity fails at (" + c.names[x] + "," + c.names[y] + "," +
                   c.names[z] + ")");
      }
  // Leibniz: d(xy) = dx y + (-1)^{deg x} x dy
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Vec ex(n, Rat(0)), ey(n, Rat(0));
      ex[x] = ey[y] = 1;
      Vec lhs = mat_apply(c.d, a.product(ex, ey));
      Vec rhs = a.product(mat_apply(c.d, ex), ey);
      Vec t = a.product(ex, mat_apply(c.d, ey));
      for (int i = 0; i < n; ++i) rhs[i] += ((c.degs[x] & 1) ? -t[i] : t[i]);
      if (lhs != rhs) rep.fail("Leibniz fails at (" + c.names[x] + "," + c.names[y] + ")");
    }
  // cyclicity (x^y, z) = (x, y^z)
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Vec ex(n, Rat(0)), ey(n, Rat(0)), ez(n, Rat(0));
        ex[x] = ey[y] = ez[z] = 1;
        if (c.pair_vec(a.product(ex, ey), ez) != c.pair_vec(ex, a.product(ey, ez))) {
          rep.fail("product cyclicity fails at (" + c.names[x] + "," + c.names[y] + "," +
                   c.names[z] + ")");
        }
      }
  return rep;
}

namespace {

// extend a graded independent family to a basis of the graded span of `pool`
std::vector<Vec> complete_basis(const std::vector<Vec>& have, const std::vector<Vec>& pool) {
  std::vector<Vec> result;
  Mat m;
  auto try_add = [&](const Vec& v, bool keep) {
    Mat test = m;
    test.push_back(v);
    if (mat_rank(test) > (int)m.size()) {
      m.push_back(v);
      if (keep) result.push_back(v);
      return true;
    }
    return false;
  };
  for (const auto& v : have) try_add(v, false);
  for (const auto& v : pool) try_add(v, true);
  return result;
}

}  // namespace

std::vector<Vec> default_harmonic_basis(const CyclicComplex& c) {
  auto kerd0 = null_space(c.d);
  // homogeneous pieces (d has degree 1, so parts of kernel vectors are again
  // in the kernel); statesum needs graded harmonic representatives
  std::vector<Vec> kerd;
  for (const auto& v : kerd0) {
    std::map<int, Vec> parts;
    for (int i = 0; i < c.dim(); ++i)
      if (v[i] != 0) parts.try_emplace(c.degs[i], Vec(c.dim(), Rat(0))).first->second[i] = v[i];
    for (auto& [dg, p] : parts) kerd.push_back(p);
  }
  // image of d
  std::vector<Vec> imd;
  {
    Mat cols;
    for (int a = 0; a < c.dim(); ++a) {
      Vec e(c.dim(), Rat(0));
      e[a] = 1;
      Vec da = mat_apply(c.d, e);
      bool z = true;
      for (auto& t : da)
        if (t != 0) z = false;
      if (!z) cols.push_back(da);
    }
    Mat m;
    for (const auto& v : cols) {
      Mat t = m;
      t.push_back(v);
      if (mat_rank(t) > (int)m.size()) {
        m.push_back(v);
        imd.push_back(v);
      }
    }
  }
  return complete_basis(imd, kerd);
}

HarmonicData harmonic_decomposition(const CyclicComplex& c, const std::vector<Vec>& h_basis) {
  int n = c.dim();
  for (const auto& h : h_basis) {
    Vec dh = mat_apply(c.d, h);
    for (const auto& t : dh)
      if (t != 0) throw DomainError("harmonic basis not closed");
  }
  // im d (+) H = ker d
  Mat imd_rows;
  for (int a = 0; a < n; ++a) {
    Vec e(n, Rat(0));
    e[a] = 1;
    imd_rows.push_back(mat_apply(c.d, e));
  }
  int rk_im = mat_rank(imd_rows);
  int dim_ker = n - mat_rank(c.d);
  Mat both = imd_rows;
  for (const auto& h : h_basis) both.push_back(h);
  if (mat_rank(both) != rk_im + (int)h_basis.size() ||
      rk_im + (int)h_basis.size() != dim_ker)
    throw DomainError("harmonic basis is not a complement of im d in ker d");

  HarmonicData hd;
  hd.basis = h_basis;
  int hn = (int)h_basis.size();
  // dual basis inside H: (e_a, e^b) = delta
  Mat gram = zero_mat(hn, hn);
  for (int a = 0; a < hn; ++a)
    for (int b = 0; b < hn; ++b) gram[a][b] = c.pair_vec(h_basis[a], h_basis[b]);
  auto gi = mat_inverse(gram);
  if (!gi) throw DomainError("pairing degenerate on harmonic subspace");
  for (int b = 0; b < hn; ++b) {
    Vec eb(n, Rat(0));
    for (int cc = 0; cc < hn; ++cc)
      for (int i = 0; i < n; ++i) eb[i] += (*gi)[cc][b] * h_basis[cc][i];
    hd.dual_basis.push_back(std::move(eb));
  }
  // pi_H(x) = sum_a (e_a, x) e^a
  hd.projection = zero_mat(n, n);
  for (int a = 0; a < hn; ++a)
    for (int j = 0; j < n; ++j) {
      Vec ej(n, Rat(0));
      ej[j] = 1;
      Rat co = c.pair_vec(h_basis[a], ej);
      if (co == 0) continue;
      for (int i = 0; i < n; ++i) hd.projection[i][j] += co * hd.dual_basis[a][i];
    }
  return hd;
}

void check_propagator(const CyclicComplex& c, Propagator& p) {
  int n = c.dim();
  Mat dp = mat_mul(c.d, p.op), pd = mat_mul(p.op, c.d);
  Mat proj = mat_sub(identity_mat(n), mat_scale(Rat(-1), mat_add(dp, pd)));
  // proj = 1 + dP + Pd; homotopy iff -(dP+Pd) is a projection iff proj^2=proj
  p.homotopy = mat_mul(proj, proj) == proj && proj == p.proj;
  // symmetry (Px,y) = (-1)^{deg x}(x,Py):  P^T Pr = diag((-1)^deg) Pr P
  Mat lhs = zero_mat(n, n), rhs = zero_mat(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int t = 0; t < n; ++t) {
        if (p.op[t][a] != 0) lhs[a][b] += p.op[t][a] * c.pairing[t][b];
        if (p.op[t][b] != 0) rhs[a][b] += c.pairing[a][t] * p.op[t][b];
      }
      if (c.degs[a] & 1) rhs[a][b] = -rhs[a][b];
    }
  p.symmetric = (lhs == rhs);
  Mat pp = mat_mul(p.op, p.op);
  Mat pdp = mat_mul(p.op, mat_mul(c.d, p.op));
  p.special = mat_is_zero(pp) && pdp == mat_scale(Rat(-1), p.op);
}

Propagator build_propagator(const CyclicComplex& c, const HarmonicData& h,
                            const std::vector<Vec>* complement_choice) {
  int n = c.dim();
  auto kerd = null_space(c.d);
  int dim_ker = (int)kerd.size();
  int dim_c = n - dim_ker;

  // candidate complement C0 of ker d
  std::vector<Vec> c0;
  auto is_complement = [&](const std::vector<Vec>& cand) {
    if ((int)cand.size() != dim_c) return false;
    Mat m;
    for (const auto& v : kerd) m.push_back(v);
    for (const auto& v : cand) m.push_back(v);
    return mat_rank(m) == n;
  };
  if (complement_choice) {
    c0 = *complement_choice;
    if (!is_complement(c0)) throw DomainError("complement_choice is not a complement of ker d");
  } else {
    // pairing-orthogonal complement of ker d
    Mat sys;
    for (const auto& v : kerd) {
      Vec row(n, Rat(0));
      for (int j = 0; j < n; ++j) {
        Vec ej(n, Rat(0));
        ej[j] = 1;
        row[j] = c.pair_vec(v, ej);
      }
      sys.push_back(std::move(row));
    }
    c0 = null_space(sys);
    if (!is_complement(c0)) {
      // degenerate; fall back to a deterministic complement inside H^perp
      Mat sysH;
      for (const auto& v : h.basis) {
        Vec row(n, Rat(0));
        for (int j = 0; j < n; ++j) {
          Vec ej(n, Rat(0));
          ej[j] = 1;
          row[j] = c.pair_vec(v, ej);
        }
        sysH.push_back(std::move(row));
      }
      std::vector<Vec> hperp;
      if (sysH.empty()) {
        for (int j = 0; j < n; ++j) {
          Vec ej(n, Rat(0));
          ej[j] = 1;
          hperp.push_back(std::move(ej));
        }
      } else {
        hperp = null_space(sysH);
      }
      c0 = complete_basis(kerd, hperp);
      if (!is_complement(c0)) throw DomainError("no complement of ker d derivable");
    }
  }
  // make C graded: split every vector into homogeneous parts and re-extract
  {
    std::vector<Vec> graded;
    for (const auto& v : c0) {
      std::map<int, Vec> parts;
      for (int i = 0; i < n; ++i)
        if (v[i] != 0) {
          auto& p = parts.try_emplace(c.degs[i], Vec(n, Rat(0))).first->second;
          p[i] = v[i];
        }
      for (auto& [dg, p] : parts) graded.push_back(p);
    }
    c0 = complete_basis(kerd, graded);
    if (!is_complement(c0)) throw DomainError("complement cannot be graded");
  }
  // isotropic correction: C := { c0 + phi(c0) }, phi into im d, so that
  // (C,C) = 0; requires C inside H^perp
  std::vector<Vec> imd;
  for (int a = 0; a < n; ++a) {
    Vec e(n, Rat(0));
    e[a] = 1;
    Vec da = mat_apply(c.d, e);
    bool z = true;
    for (auto& t : da)
      if (t != 0) z = false;
    if (!z) imd.push_back(da);
  }
  {
    Mat m;
    std::vector<Vec> ind;
    for (const auto& v : imd) {
      Mat t = m;
      t.push_back(v);
      if (mat_rank(t) > (int)m.size()) {
        m.push_back(v);
        ind.push_back(v);
      }
    }
    imd = ind;
  }
  int di = (int)imd.size();
  std::vector<Vec> cc;  // corrected complement
  for (const auto& v : c0) {
    // phi(v) in im d with (phi(v), c') = -1/2 (v, c') for all c' in c0
    Mat sys;
    Vec rhsv;
    for (const auto& w : c0) {
      Vec row(di, Rat(0));
      for (int j = 0; j < di; ++j) row[j] = c.pair_vec(imd[j], w);
      sys.push_back(std::move(row));
      rhsv.push_back(Rat(-1, 2) * c.pair_vec(v, w));
    }
    // also keep phi(v) orthogonal to H (automatic: im d ⟂ H when H ⊂ ker d)
    auto sol = solve(sys, rhsv);
    if (!sol) throw DomainError("isotropic correction failed");
    Vec corrected = v;
    for (int j = 0; j < di; ++j)
      for (int i = 0; i < n; ++i) corrected[i] += (*sol)[j] * imd[j][i];
    cc.push_back(std::move(corrected));
  }
  // build P: zero on H and C, -(d|C)^{-1} on im d
  Mat basis;  // columns: H, im d images of C (i.e. dC), C
  std::vector<Vec> dcc;
  for (const auto& v : cc) dcc.push_back(mat_apply(c.d, v));
  Mat cols;  // n x n, columns stacked
  auto push_col = [&](const Vec& v) { cols.push_back(v); };
  for (const auto& v : h.basis) push_col(v);
  for (const auto& v : dcc) push_col(v);
  for (const auto& v : cc) push_col(v);
  if ((int)cols.size() != n) throw DomainError("decomposition dimension mismatch");
  Mat B = zero_mat(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) B[i][j] = cols[j][i];
  auto Binv = mat_inverse(B);
  if (!Binv) throw DomainError("decomposition is not a basis");
  Mat pb = zero_mat(n, n);  // P on the decomposition basis
  int hn = (int)h.basis.size();
  for (int j = 0; j < (int)dcc.size(); ++j) {
    // P(d c_j) = -c_j
    for (int i = 0; i < n; ++i) pb[i][hn + j] = -cc[j][i];
  }
  Propagator p;
  p.op = mat_mul(pb, *Binv);
  p.proj = h.projection;
  check_propagator(c, p);
  return p;
}

Propagator specialize(const CyclicComplex& c, const Propagator& p) {
  int n = c.dim();
  Mat pim1 = mat_sub(p.proj, identity_mat(n));
  Mat p2 = mat_mul(pim1, mat_mul(p.op, pim1));
  Mat p3 = mat_scale(Rat(-1), mat_mul(p2, mat_mul(c.d, p2)));
  Propagator out;
  out.op = p3;
  out.proj = p.proj;
  check_propagator(c, out);
  return out;
}

Mat propagator_upper(const CyclicComplex& c, const Mat& p_op) {
  int n = c.dim();
  Mat dual = c.cyclic_dual_basis();
  Mat out = zero_mat(n, n);
  for (int a = 0; a < n; ++a) {
    Vec ea(dual[a]);
    Vec pea = mat_apply(p_op, ea);
    int deg_pea = (c.n - c.degs[a]) - 1;  // deg e^a - 1
    for (int b = 0; b < n; ++b) {
      Rat v = c.pair_vec(pea, dual[b]);
      if (deg_pea & 1) v = -v;
      out[a][b] = v;
    }
  }
  return out;
}

}  // namespace ribbonmc
