#include "ribbonmc/fixtures.hpp"

#include <map>
#include <mutex>

namespace ribbonmc {

namespace {

int wedge_sign(unsigned s, unsigned t) {
  // (-1)^{#{(i in s, j in t): i > j}}
  int cnt = 0;
  for (int i = 0; i < 16; ++i)
    if (s >> i & 1)
      for (int j = 0; j < i; ++j)
        if (t >> j & 1) ++cnt;
  return (cnt & 1) ? -1 : 1;
}

}  // namespace

CyclicDGA exterior_dga(
    int k,
    const std::vector<std::pair<int, std::vector<std::pair<Rat, std::pair<int, int>>>>>& diffs) {
  int n = 1 << k;
  CyclicDGA a;
  a.cx.n = k;
  a.cx.names.resize(n);
  a.cx.degs.resize(n);
  for (unsigned s = 0; s < (unsigned)n; ++s) {
    std::string nm = "one";
    if (s) {
      nm = "e";
      for (int i = 0; i < k; ++i)
        if (s >> i & 1) nm += std::to_string(i + 1);
    }
    a.cx.names[s] = nm;
    a.cx.degs[s] = __builtin_popcount(s);
  }
  a.cx.pairing = zero_mat(n, n);
  unsigned full = n - 1;
  for (unsigned s = 0; s < (unsigned)n; ++s)
    for (unsigned t = 0; t < (unsigned)n; ++t)
      if ((s & t) == 0 && (s | t) == full) a.cx.pairing[s][t] = wedge_sign(s, t);
  a.mul.assign(n, std::vector<Vec>(n, Vec(n, Rat(0))));
  for (unsigned s = 0; s < (unsigned)n; ++s)
    for (unsigned t = 0; t < (unsigned)n; ++t)
      if ((s & t) == 0) a.mul[s][t][s | t] = wedge_sign(s, t);
  // d on generators, extended as a derivation
  std::vector<Vec> dgen(k, Vec(n, Rat(0)));
  for (const auto& [gen, terms] : diffs)
    for (const auto& [co, pr] : terms) {
      unsigned tgt = (1u << (pr.first - 1)) | (1u << (pr.second - 1));
      dgen[gen - 1][tgt] += co;
    }
  a.cx.d = zero_mat(n, n);
  for (unsigned s = 1; s < (unsigned)n; ++s) {
    // d(e_S) = sum_{i in S} (-1)^{#{j in S: j < i}} e_{S minus i} * d e_i,
    // with d e_i moved into place via the product table
    int pos = 0;
    for (int i = 0; i < k; ++i) {
      if (!(s >> i & 1)) continue;
      unsigned rest = s & ~(1u << i);
      for (unsigned t = 0; t < (unsigned)n; ++t) {
        if (dgen[i][t] == 0) continue;
        // term: (-1)^pos e_{pre} ^ d e_i ^ e_{post} = (-1)^pos *
        //       sign(rest split) ... easiest via two wedges:
        // e_S = (-1)^pos e_i ^ e_rest, so d contribution is
        // (-1)^pos d(e_i) ^ e_rest
        if ((t & rest) != 0) continue;
        Rat c = dgen[i][t] * wedge_sign(t, rest);
        if (pos & 1) c = -c;
        a.cx.d[t | rest][s] += c;
      }
      ++pos;
    }
  }
  return a;
}

CyclicDGA tensor_dga(const CyclicDGA& x, const CyclicDGA& y) {
  int nx = x.cx.dim(), ny = y.cx.dim(), n = nx * ny;
  auto id = [&](int i, int j) { return i * ny + j; };
  CyclicDGA a;
  a.cx.n = x.cx.n + y.cx.n;
  a.cx.names.resize(n);
  a.cx.degs.resize(n);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) {
      std::string nm = x.cx.names[i];
      if (y.cx.names[j] != "one") nm = (nm == "one") ? y.cx.names[j] : nm + "." + y.cx.names[j];
      a.cx.names[id(i, j)] = nm;
      a.cx.degs[id(i, j)] = x.cx.degs[i] + y.cx.degs[j];
    }
  a.cx.pairing = zero_mat(n, n);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j)
      for (int p = 0; p < nx; ++p)
        for (int q = 0; q < ny; ++q) {
          Rat v = x.cx.pairing[i][p] * y.cx.pairing[j][q];
          if (v == 0) continue;
          if ((y.cx.degs[j] * x.cx.degs[p]) & 1) v = -v;
          a.cx.pairing[id(i, j)][id(p, q)] = v;
        }
  a.cx.d = zero_mat(n, n);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) {
      for (int t = 0; t < nx; ++t)
        if (x.cx.d[t][i] != 0) a.cx.d[id(t, j)][id(i, j)] += x.cx.d[t][i];
      for (int t = 0; t < ny; ++t)
        if (y.cx.d[t][j] != 0) {
          Rat v = y.cx.d[t][j];
          if (x.cx.degs[i] & 1) v = -v;
          a.cx.d[id(i, t)][id(i, j)] += v;
        }
    }
  a.mul.assign(n, std::vector<Vec>(n, Vec(n, Rat(0))));
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j)
      for (int p = 0; p < nx; ++p)
        for (int q = 0; q < ny; ++q) {
          int sgn = ((y.cx.degs[j] * x.cx.degs[p]) & 1) ? -1 : 1;
          for (int t = 0; t < nx; ++t) {
            if (x.mul[i][p][t] == 0) continue;
            for (int u = 0; u < ny; ++u) {
              if (y.mul[j][q][u] == 0) continue;
              a.mul[id(i, j)][id(p, q)][id(t, u)] += sgn * x.mul[i][p][t] * y.mul[j][q][u];
            }
          }
        }
  return a;
}

namespace {

CyclicDGA make_formal_sphere(int n) {
  CyclicDGA a;
  a.cx.n = n;
  a.cx.names = {"one", n == 2 ? "om" : "v"};
  a.cx.degs = {0, n};
  a.cx.pairing = zero_mat(2, 2);
  a.cx.pairing[0][1] = 1;
  a.cx.pairing[1][0] = 1;  // (v,1) = (-1)^{n*0}(1,v) = 1
  a.cx.d = zero_mat(2, 2);
  a.mul.assign(2, std::vector<Vec>(2, Vec(2, Rat(0))));
  a.mul[0][0][0] = 1;
  a.mul[0][1][1] = 1;
  a.mul[1][0][1] = 1;
  return a;
}

CyclicDGA make_circle() {
  CyclicDGA a;
  a.cx.n = 1;
  a.cx.names = {"one", "w"};
  a.cx.degs = {0, 1};
  a.cx.pairing = zero_mat(2, 2);
  a.cx.pairing[0][1] = 1;
  a.cx.pairing[1][0] = 1;
  a.cx.d = zero_mat(2, 2);
  a.mul.assign(2, std::vector<Vec>(2, Vec(2, Rat(0))));
  a.mul[0][0][0] = 1;
  a.mul[0][1][1] = 1;
  a.mul[1][0][1] = 1;
  return a;
}

std::map<std::string, CyclicDGA> build_all() {
  std::map<std::string, CyclicDGA> m;
  m["formal-s2"] = make_formal_sphere(2);
  m["formal-s3"] = make_formal_sphere(3);
  // Heisenberg nilmanifold model: d e3 = e1^e2
  m["heisenberg"] = exterior_dga(3, {{3, {{Rat(1), {1, 2}}}}});
  m["heis-s1"] = tensor_dga(m["heisenberg"], make_circle());
  for (auto& [nm, a] : m) {
    auto rep = validate_dga(a);
    if (!rep.ok) throw DomainError("fixture " + nm + " invalid: " + rep.violations[0]);
  }
  return m;
}

}  // namespace

const CyclicDGA& fixture(const std::string& name) {
  static std::map<std::string, CyclicDGA> all = build_all();
  auto it = all.find(name);
  if (it == all.end()) throw DomainError("unknown fixture: " + name);
  return it->second;
}

std::vector<std::string> fixture_names() {
  return {"formal-s2", "formal-s3", "heisenberg", "heis-s1"};
}

}  // namespace ribbonmc
