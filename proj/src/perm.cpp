#include "ribbonmc/perm.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace ribbonmc {

Perm identity_perm(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

Perm compose(const Perm& f, const Perm& g) {
  assert(f.size() == g.size());
  Perm h(f.size());
  for (size_t i = 0; i < g.size(); ++i) h[i] = f[g[i]];
  return h;
}

Perm inverse(const Perm& p) {
  Perm q(p.size());
  for (size_t i = 0; i < p.size(); ++i) q[p[i]] = (int)i;
  return q;
}

bool is_perm(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= (int)p.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

int perm_parity(const Perm& p) {
  int par = 0;
  std::vector<char> vis(p.size(), 0);
  for (size_t i = 0; i < p.size(); ++i) {
    if (vis[i]) continue;
    int len = 0;
    for (size_t j = i; !vis[j]; j = p[j]) {
      vis[j] = 1;
      ++len;
    }
    par ^= (len - 1) & 1;
  }
  return par;
}

int koszul_exponent(const Perm& p, const std::vector<int>& degs) {
  assert(p.size() == degs.size());
  int e = 0;
  const int n = (int)p.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p[i] > p[j]) e += degs[p[i]] * degs[p[j]];
  return e & 1;
}

int koszul_sign(const Perm& p, const std::vector<int>& degs, bool shifted) {
  std::vector<int> d(degs);
  if (shifted)
    for (int& x : d) x -= 1;
  return koszul_exponent(p, d) ? -1 : 1;
}

int p_exponent(const std::vector<int>& degs) {
  int k = (int)degs.size(), e = 0;
  for (int j = 0; j < k; ++j) e += (k - 1 - j) * degs[j];
  return e & 1;
}

int pb_exponent(const std::vector<int>& block_shifted_degs) {
  int ell = (int)block_shifted_degs.size(), e = 0;
  for (int b = 0; b < ell; ++b) e += (ell - 1 - b) * block_shifted_degs[b];
  return e & 1;
}

std::vector<Perm> shuffles(const std::vector<int>& parts) {
  int ell = 0;
  for (int p : parts) ell += p;
  // Interleave blocks preserving inner order: choose, position by position,
  // which block supplies the next element.
  std::vector<Perm> out;
  std::vector<int> taken(parts.size(), 0);
  Perm cur(ell);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == ell) {
      out.push_back(cur);
      return;
    }
    int base = 0;
    for (size_t b = 0; b < parts.size(); ++b) {
      if (taken[b] < parts[b]) {
        cur[base + taken[b]] = pos;  // element (base+taken) goes to position pos
        ++taken[b];
        rec(pos + 1);
        --taken[b];
      }
      base += parts[b];
    }
  };
  rec(0);
  return out;
}

}  // namespace ribbonmc
