#include "ribbonmc/bartensor.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "ribbonmc/perm.hpp"

namespace ribbonmc {

int word_sdeg(const CyclicComplex& cx, const Word& w) {
  int d = 0;
  for (int a : w) d += cx.degs[a] - 1;
  return d;
}

int tuple_cdeg(const CyclicComplex& cx, const WordTuple& t) {
  int d = 0;
  for (const auto& w : t) d += word_sdeg(cx, w) + cx.n - 3;
  return d;
}

std::pair<Word, int> t_alg(const CyclicComplex& cx, const Word& w, int times) {
  Word cur = w;
  int sign = 1;
  for (int i = 0; i < times; ++i) {
    int k = (int)cur.size();
    int last = cur[k - 1];
    int e = 0;
    for (int j = 0; j + 1 < k; ++j) e += (cx.degs[cur[j]] - 1);
    e *= (cx.degs[last] - 1);
    if (e & 1) sign = -sign;
    Word nxt(k);
    nxt[0] = last;
    for (int j = 0; j + 1 < k; ++j) nxt[j + 1] = cur[j];
    cur = std::move(nxt);
  }
  return {cur, sign};
}

std::pair<Word, int> canonical_rotation(const CyclicComplex& cx, const Word& w) {
  int k = (int)w.size();
  // all rotations with accumulated signs; a word reappearing with two
  // different signs kills every cyclic functional on its orbit
  std::map<Word, int> seen;
  Word cur = w;
  int sign = 1;
  for (int i = 0; i < k; ++i) {
    auto it = seen.find(cur);
    if (it == seen.end()) seen.emplace(cur, sign);
    else if (it->second != sign) return {seen.begin()->first, 0};
    auto [nw, s] = t_alg(cx, cur, 1);
    cur = std::move(nw);
    sign *= s;
  }
  if (cur == w && sign != 1) return {seen.begin()->first, 0};
  return *seen.begin();
}

namespace {

// canonicalize a tuple; returns sign 0 when some factor is inconsistent
std::pair<WordTuple, int> canon_tuple(const CyclicComplex& cx, const WordTuple& t) {
  WordTuple out;
  out.reserve(t.size());
  int sign = 1;
  for (const auto& w : t) {
    auto [cw, s] = canonical_rotation(cx, w);
    if (s == 0) return {{}, 0};
    sign *= s;
    out.push_back(std::move(cw));
  }
  return {out, sign};
}

}  // namespace

bool BarTensor::zero() const {
  for (const auto& [k, v] : c)
    if (v != 0) return false;
  return true;
}

std::string BarTensor::first_nonzero(const CyclicComplex& cx) const {
  for (const auto& [k, v] : c)
    if (v != 0) {
      std::ostringstream os;
      os << "(";
      for (size_t f = 0; f < k.size(); ++f) {
        if (f) os << " | ";
        for (size_t i = 0; i < k[f].size(); ++i)
          os << (i ? " " : "") << cx.names[k[f][i]];
      }
      os << ") -> " << to_string(v);
      return os.str();
    }
  return "(zero)";
}

void bt_add(const CyclicComplex& cx, BarTensor& t, const WordTuple& w, const Rat& v) {
  if (v == 0) return;
  auto [cw, s] = canon_tuple(cx, w);
  if (s == 0) return;
  Rat& slot = t.c[cw];
  slot += (s > 0 ? v : -v);
  if (slot == 0) t.c.erase(cw);
}

Rat bt_value(const CyclicComplex& cx, const BarTensor& t, const WordTuple& w) {
  auto [cw, s] = canon_tuple(cx, w);
  if (s == 0) return Rat(0);
  auto it = t.c.find(cw);
  if (it == t.c.end()) return Rat(0);
  return s > 0 ? it->second : Rat(-it->second);
}

BarTensor bt_sum(const BarTensor& a, const BarTensor& b) {
  BarTensor out = a;
  for (const auto& [k, v] : b.c) {
    Rat& slot = out.c[k];
    slot += v;
    if (slot == 0) out.c.erase(k);
  }
  return out;
}

BarTensor bt_scale(const Rat& r, const BarTensor& a) {
  BarTensor out = a;
  if (r == 0) {
    out.c.clear();
    return out;
  }
  for (auto& [k, v] : out.c) v *= r;
  return out;
}

bool bt_equal(const BarTensor& a, const BarTensor& b) {
  return a.ell == b.ell && a.c == b.c;
}

std::optional<int> bt_degree(const CyclicComplex& cx, const BarTensor& t) {
  std::optional<int> d;
  for (const auto& [k, v] : t.c) {
    if (v == 0) continue;
    int dd = tuple_cdeg(cx, k);
    if (d && *d != dd) throw DomainError("inhomogeneous bar tensor");
    d = dd;
  }
  return d;
}

BarTensor bt_symmetrize(const CyclicComplex& cx, const BarTensor& t) {
  int ell = t.ell;
  BarTensor out;
  out.ell = ell;
  std::vector<int> idx(ell);
  for (int i = 0; i < ell; ++i) idx[i] = i;
  Rat inv_fact(1);
  for (int i = 2; i <= ell; ++i) inv_fact /= i;
  std::sort(idx.begin(), idx.end());
  do {
    for (const auto& [k, v] : t.c) {
      WordTuple w(ell);
      std::vector<int> degs(ell);
      for (int i = 0; i < ell; ++i) degs[i] = word_sdeg(cx, k[i]) + cx.n - 3;
      // permuted tuple: position i gets factor idx[i]
      Perm p(idx);
      for (int i = 0; i < ell; ++i) w[i] = k[idx[i]];
      int s = koszul_exponent(p, degs) ? -1 : 1;
      bt_add(cx, out, w, inv_fact * Rat(s) * v);
    }
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

bool bt_is_symmetric(const CyclicComplex& cx, const BarTensor& t) {
  return bt_equal(bt_symmetrize(cx, t), t);
}

BarTensor bt_tensor(const CyclicComplex& cx, const BarTensor& a, const BarTensor& b) {
  BarTensor out;
  out.ell = a.ell + b.ell;
  auto db = bt_degree(cx, b);
  int degb = db ? *db : 0;
  for (const auto& [ka, va] : a.c) {
    int dega = tuple_cdeg(cx, ka);
    int sgn = (degb * dega) & 1 ? -1 : 1;
    for (const auto& [kb, vb] : b.c) {
      WordTuple w = ka;
      for (const auto& f : kb) w.push_back(f);
      bt_add(cx, out, w, Rat(sgn) * va * vb);
    }
  }
  return out;
}

BarTensor bt_permute(const CyclicComplex& cx, const BarTensor& t,
                     const std::vector<int>& perm) {
  BarTensor out;
  out.ell = t.ell;
  for (const auto& [k, v] : t.c) {
    WordTuple w(t.ell);
    std::vector<int> degs(t.ell);
    for (int f = 0; f < t.ell; ++f) degs[f] = word_sdeg(cx, k[f]) + cx.n - 3;
    for (int f = 0; f < t.ell; ++f) w[f] = k[perm[f]];
    int s = koszul_exponent(perm, degs) ? -1 : 1;
    bt_add(cx, out, w, Rat(s) * v);
  }
  return out;
}

BarTensor bt_move_front(const CyclicComplex& cx, const BarTensor& t, int i, int j) {
  std::vector<int> p;
  p.push_back(i);
  if (j >= 0) p.push_back(j);
  for (int f = 0; f < t.ell; ++f)
    if (f != i && f != j) p.push_back(f);
  return bt_permute(cx, t, p);
}

std::string bt_dump(const CyclicComplex& cx, const BarTensor& t, int ell_tag, int g_tag) {
  std::ostringstream os;
  for (const auto& [k, v] : t.c) {
    if (v == 0) continue;
    os << "(" << ell_tag << "," << g_tag << ") |";
    for (size_t f = 0; f < k.size(); ++f) {
      if (f) os << " ;";
      for (int a : k[f]) os << " " << cx.names[a];
    }
    os << " | " << to_string(v) << "\n";
  }
  return os.str();
}

}  // namespace ribbonmc
