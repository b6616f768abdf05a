#include "ribbonmc/homology.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace ribbonmc {

std::vector<Word> cyclic_word_basis(const CyclicComplex& cx, int w) {
  std::vector<Word> out;
  Word cur(w, 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == w) {
      auto [cw, s] = canonical_rotation(cx, cur);
      if (s != 0 && cw == cur) out.push_back(cur);
      return;
    }
    for (int a = 0; a < cx.dim(); ++a) {
      cur[pos] = a;
      rec(pos + 1);
    }
  };
  if (w >= 1) rec(0);
  return out;
}

TwistedComplex twisted_differential(const CyclicComplex& hcx, const BarTensor& m10,
                                    int max_weight) {
  TwistedComplex tc;
  tc.cx = &hcx;
  tc.max_weight = max_weight;
  std::map<Word, int> index;
  for (int w = 1; w <= max_weight; ++w)
    for (auto& word : cyclic_word_basis(hcx, w)) {
      index[word] = (int)tc.basis.size();
      tc.basis.push_back(word);
      tc.weight.push_back(w);
      tc.degree.push_back(word_sdeg(hcx, word));
    }
  DiblOps ops(hcx);
  tc.d_columns.resize(tc.basis.size());
  for (size_t i = 0; i < tc.basis.size(); ++i) {
    BarTensor delta;
    delta.ell = 1;
    delta.c[{tc.basis[i]}] = 1;
    BarTensor img = ops.p110_1(delta);
    img = bt_sum(img, ops.p210_12(bt_tensor(hcx, m10, delta)));
    for (const auto& [k, v] : img.c) {
      auto it = index.find(k[0]);
      if (it == index.end()) {
        if ((int)k[0].size() <= max_weight)
          throw DomainError("twisted differential left the truncation");
        continue;
      }
      tc.d_columns[i][it->second] = v;
    }
  }
  return tc;
}

std::optional<std::string> twisted_square_check(const TwistedComplex& tc) {
  for (size_t i = 0; i < tc.basis.size(); ++i) {
    std::map<int, Rat> acc;
    for (const auto& [j, v] : tc.d_columns[i])
      for (const auto& [k, w] : tc.d_columns[j]) {
        acc[k] += v * w;
      }
    for (const auto& [k, v] : acc)
      if (v != 0) {
        std::ostringstream os;
        os << "D^2 != 0 at basis word #" << i << " (";
        for (int a : tc.basis[i]) os << tc.cx->names[a] << " ";
        os << ")";
        return os.str();
      }
  }
  return std::nullopt;
}

namespace {

// rank of a sparse rational matrix given as rows; destroys the input.
// Pivoting prefers short rows (the complexes here are very sparse).
int sparse_rank(std::vector<std::map<int, Rat>> rows) {
  int rank = 0;
  // index rows by size in a simple worklist
  std::vector<char> used(rows.size(), 0);
  for (;;) {
    int best = -1;
    size_t best_len = SIZE_MAX;
    for (size_t i = 0; i < rows.size(); ++i)
      if (!used[i] && !rows[i].empty() && rows[i].size() < best_len) {
        best = (int)i;
        best_len = rows[i].size();
      }
    if (best < 0) break;
    used[best] = 1;
    ++rank;
    int pcol = rows[best].begin()->first;
    Rat pval = rows[best].begin()->second;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (used[i] || rows[i].empty()) continue;
      auto it = rows[i].find(pcol);
      if (it == rows[i].end()) continue;
      Rat f = it->second / pval;
      for (const auto& [c, v] : rows[best]) {
        Rat& slot = rows[i][c];
        slot -= f * v;
        if (slot == 0) rows[i].erase(c);
      }
    }
  }
  return rank;
}

// homology ranks of a degree-graded complex with differential of degree
// `ddeg`, restricted to the subset `keep`
std::vector<RankRecord> graded_ranks(const std::vector<int>& degree,
                                     const std::vector<char>& keep,
                                     const std::vector<std::map<int, Rat>>& cols, int wlevel,
                                     int ddeg) {
  std::map<int, std::vector<int>> by_deg;
  for (size_t i = 0; i < degree.size(); ++i)
    if (keep[i]) by_deg[degree[i]].push_back((int)i);
  // rank of D restricted to source degree d
  std::map<int, int> rank_from;
  for (auto& [d, idxs] : by_deg) {
    std::vector<std::map<int, Rat>> rows;
    for (int i : idxs) {
      std::map<int, Rat> col;
      for (const auto& [j, v] : cols[i])
        if (keep[j]) col[j] = v;
      if (!col.empty()) rows.push_back(std::move(col));
    }
    rank_from[d] = sparse_rank(std::move(rows));
  }
  std::vector<RankRecord> out;
  for (auto& [d, idxs] : by_deg) {
    int dim = (int)idxs.size();
    int r_out = rank_from.count(d) ? rank_from[d] : 0;
    int r_in = rank_from.count(d - ddeg) ? rank_from[d - ddeg] : 0;
    out.push_back({d, wlevel, dim - r_out - r_in});
  }
  return out;
}

}  // namespace

std::vector<RankRecord> homology_ranks(const TwistedComplex& tc) {
  std::vector<RankRecord> out;
  for (int wl = 1; wl <= tc.max_weight; ++wl) {
    std::vector<char> keep(tc.basis.size(), 0);
    for (size_t i = 0; i < tc.basis.size(); ++i) keep[i] = tc.weight[i] <= wl;
    // twisted D lowers the bar degree by 1
    auto recs = graded_ranks(tc.degree, keep, tc.d_columns, wl, -1);
    out.insert(out.end(), recs.begin(), recs.end());
  }
  std::sort(out.begin(), out.end(), [](const RankRecord& a, const RankRecord& b) {
    return std::tie(a.weight, a.degree) < std::tie(b.weight, b.degree);
  });
  return out;
}

namespace {

// analytic cyclic rotation of eq (cyc-signs): t = (-1)^l t_l with
// t_l [a_0|..|a_l] = (-1)^{deg a_l (deg a_0+..+deg a_{l-1})}[a_l|a_0|..]
std::pair<Word, int> t_an(const CyclicComplex& cx, const Word& w) {
  int L = (int)w.size(), l = L - 1;
  int last = w[L - 1], e = 0;
  for (int i = 0; i + 1 < L; ++i) e += cx.degs[w[i]];
  e = (e * cx.degs[last] + l) & 1;
  Word nw(L);
  nw[0] = last;
  for (int i = 0; i + 1 < L; ++i) nw[i + 1] = w[i];
  return {nw, e ? -1 : 1};
}

std::pair<Word, int> an_canonical(const CyclicComplex& cx, const Word& w) {
  std::map<Word, int> seen;
  Word cur = w;
  int sign = 1;
  for (size_t i = 0; i < w.size(); ++i) {
    auto it = seen.find(cur);
    if (it == seen.end()) seen.emplace(cur, sign);
    else if (it->second != sign) return {seen.begin()->first, 0};
    auto [nw, s] = t_an(cx, cur);
    cur = std::move(nw);
    sign *= s;
  }
  if (cur == w && sign != 1) return {seen.begin()->first, 0};
  return *seen.begin();
}

}  // namespace

std::vector<RankRecord> cyclic_cohomology(const CyclicDGA& a, int max_weight) {
  const auto& cx = a.cx;
  // basis: sign-consistent t-orbits of words of length <= max_weight
  std::vector<Word> basis;
  std::vector<int> weight, degree;
  std::map<Word, int> index;
  for (int L = 1; L <= max_weight; ++L) {
    Word cur(L, 0);
    std::function<void(int)> rec = [&](int pos) {
      if (pos == L) {
        auto [cw, s] = an_canonical(cx, cur);
        if (s != 0 && cw == cur) {
          index[cur] = (int)basis.size();
          basis.push_back(cur);
          weight.push_back(L);
          degree.push_back(word_sdeg(cx, cur));
        }
        return;
      }
      for (int x = 0; x < cx.dim(); ++x) {
        cur[pos] = x;
        rec(pos + 1);
      }
    };
    rec(0);
  }
  // differential d + b on orbit classes
  std::vector<std::map<int, Rat>> cols(basis.size());
  auto add = [&](std::map<int, Rat>& col, const Word& w, const Rat& v) {
    if (v == 0) return;
    auto [cw, s] = an_canonical(cx, w);
    if (s == 0) return;
    auto it = index.find(cw);
    if (it == index.end()) return;
    col[it->second] += s > 0 ? v : Rat(-v);
    if (col[it->second] == 0) col.erase(it->second);
  };
  for (size_t bi = 0; bi < basis.size(); ++bi) {
    const Word& w = basis[bi];
    int L = (int)w.size(), l = L - 1;
    auto& col = cols[bi];
    // d as a derivation with respect to nonshifted degrees
    int pre = 0;
    for (int i = 0; i < L; ++i) {
      for (int t = 0; t < cx.dim(); ++t) {
        if (cx.d[t][w[i]] == 0) continue;
        Word nw = w;
        nw[i] = t;
        add(col, nw, (pre & 1) ? Rat(-cx.d[t][w[i]]) : cx.d[t][w[i]]);
      }
      pre += cx.degs[w[i]];
    }
    // b(c) = (-1)^{deg c - l + 1} sum_i (-1)^i d_i(c)
    if (L >= 2) {
      int degc = word_sdeg(cx, w) + 1;  // deg in A (x) A[1]^{(x)l}: sum deg - l
      int outer = (degc - l + 1) & 1;
      for (int i = 0; i <= l; ++i) {
        Rat sgn = ((outer + i) & 1) ? Rat(-1) : Rat(1);
        if (i < l) {
          const Vec& prod = a.mul[w[i]][w[i + 1]];
          for (int t = 0; t < cx.dim(); ++t) {
            if (prod[t] == 0) continue;
            Word nw;
            for (int j = 0; j < L; ++j) {
              if (j == i) nw.push_back(t);
              else if (j != i + 1) nw.push_back(w[j]);
            }
            add(col, nw, sgn * prod[t]);
          }
        } else {
          // d_l: (-1)^{deg a_l (deg a_0+...+deg a_{l-1})}[a_l ^ a_0 | a_1 | ...]
          int e = 0;
          for (int j = 0; j + 1 < L; ++j) e += cx.degs[w[j]];
          e *= cx.degs[w[l]];
          const Vec& prod = a.mul[w[l]][w[0]];
          for (int t = 0; t < cx.dim(); ++t) {
            if (prod[t] == 0) continue;
            Word nw;
            nw.push_back(t);
            for (int j = 1; j + 1 < L; ++j) nw.push_back(w[j]);
            add(col, nw, ((e & 1) ? Rat(-sgn) : sgn) * prod[t]);
          }
        }
      }
    }
  }
  // square check
  for (size_t i = 0; i < basis.size(); ++i) {
    std::map<int, Rat> acc;
    for (const auto& [j, v] : cols[i])
      for (const auto& [k, w2] : cols[j]) acc[k] += v * w2;
    for (const auto& [k, v] : acc)
      if (v != 0) throw DomainError("Connes differential does not square to zero");
  }
  std::vector<RankRecord> out;
  for (int wl = 1; wl <= max_weight; ++wl) {
    std::vector<char> keep(basis.size(), 0);
    for (size_t i = 0; i < basis.size(); ++i) keep[i] = weight[i] <= wl;
    // d+b raises the bar degree by 1
    auto recs = graded_ranks(degree, keep, cols, wl, +1);
    out.insert(out.end(), recs.begin(), recs.end());
  }
  std::sort(out.begin(), out.end(), [](const RankRecord& x, const RankRecord& y) {
    return std::tie(x.weight, x.degree) < std::tie(y.weight, y.degree);
  });
  return out;
}

AInfinity extract_ainfty(const McContext& ctx, const BarTensor& m10, int max_arity) {
  AInfinity ai;
  ai.cx = &ctx.hcx;
  int hn = ctx.hcx.dim();
  Mat cp = zero_mat(hn, hn);
  for (int x = 0; x < hn; ++x)
    for (int y = 0; y < hn; ++y) cp[x][y] = ctx.hcx.cpair(x, y);
  int n = ctx.hcx.n;
  for (int k = 2; k <= max_arity; ++k) {
    std::map<Word, Vec> table;
    Word cur(k, 0);
    std::function<void(int)> rec = [&](int pos) {
      if (pos == k) {
        Vec rhs(hn, Rat(0));
        bool nz = false;
        for (int b = 0; b < hn; ++b) {
          Word w = cur;
          w.push_back(b);
          Rat v = bt_value(ctx.hcx, m10, {w});
          if (n & 1) v = -v;
          rhs[b] = v;
          if (v != 0) nz = true;
        }
        if (nz) {
          // solve <m, h_b> = rhs_b:  sum_a c_a cp[a][b] = rhs[b]
          Mat sys = zero_mat(hn, hn);
          for (int b = 0; b < hn; ++b)
            for (int a2 = 0; a2 < hn; ++a2) sys[b][a2] = cp[a2][b];
          auto sol = solve(sys, rhs);
          if (!sol) throw DomainError("a-infinity extraction failed");
          table[cur] = *sol;
        }
        return;
      }
      for (int a2 = 0; a2 < hn; ++a2) {
        cur[pos] = a2;
        rec(pos + 1);
      }
    };
    rec(0);
    ai.m[k] = std::move(table);
  }
  return ai;
}

Vec ainfty_apply(const AInfinity& ai, int k, const std::vector<Vec>& args) {
  int hn = ai.cx->dim();
  Vec out(hn, Rat(0));
  auto it = ai.m.find(k);
  if (it == ai.m.end()) return out;
  // expand multilinearly
  std::function<void(size_t, Word&, Rat)> rec = [&](size_t pos, Word& w, Rat co) {
    if (pos == args.size()) {
      auto jt = it->second.find(w);
      if (jt == it->second.end()) return;
      for (int i = 0; i < hn; ++i) out[i] += co * jt->second[i];
      return;
    }
    for (int i = 0; i < hn; ++i) {
      if (args[pos][i] == 0) continue;
      w.push_back(i);
      rec(pos + 1, w, co * args[pos][i]);
      w.pop_back();
    }
  };
  Word w;
  rec(0, w, Rat(1));
  return out;
}

std::optional<std::string> stasheff_check(const AInfinity& ai, int max_weight) {
  const auto& cx = *ai.cx;
  int hn = cx.dim();
  // bar differential: b(x_1..x_L) = sum signs x..m_k(..)..x
  struct Chain {
    std::map<Word, Rat> c;
    void add(const Word& w, const Rat& v) {
      if (v == 0) return;
      c[w] += v;
      if (c[w] == 0) c.erase(w);
    }
  };
  auto bar = [&](const Word& w) {
    Chain out;
    int L = (int)w.size();
    for (int i = 0; i < L; ++i) {
      int pre = 0;
      for (int j = 0; j < i; ++j) pre += cx.degs[w[j]] - 1;
      for (int k = 2; k <= L - i; ++k) {
        auto it = ai.m.find(k);
        if (it == ai.m.end()) continue;
        Word mid(w.begin() + i, w.begin() + i + k);
        auto jt = it->second.find(mid);
        if (jt == it->second.end()) continue;
        for (int t = 0; t < hn; ++t) {
          if (jt->second[t] == 0) continue;
          Word nw(w.begin(), w.begin() + i);
          nw.push_back(t);
          nw.insert(nw.end(), w.begin() + i + k, w.end());
          out.add(nw, (pre & 1) ? Rat(-jt->second[t]) : jt->second[t]);
        }
      }
    }
    return out;
  };
  Word cur;
  std::optional<std::string> bad;
  std::function<void(int, int)> rec = [&](int pos, int len) {
    if (bad) return;
    if (pos == len) {
      Chain b1 = bar(cur);
      Chain b2;
      for (const auto& [w, v] : b1.c) {
        Chain t = bar(w);
        for (const auto& [w2, v2] : t.c) b2.add(w2, v * v2);
      }
      if (!b2.c.empty()) {
        std::ostringstream os;
        os << "Stasheff relation fails on word (";
        for (int a : cur) os << cx.names[a] << " ";
        os << ")";
        bad = os.str();
      }
      return;
    }
    for (int a = 0; a < hn && !bad; ++a) {
      cur[pos] = a;
      rec(pos + 1, len);
    }
  };
  for (int len = 2; len <= max_weight && !bad; ++len) {
    cur.assign(len, 0);
    rec(0, len);
  }
  return bad;
}

std::string format_rank_table(const std::vector<RankRecord>& recs) {
  std::ostringstream os;
  os << "degree weight rank\n";
  for (const auto& r : recs)
    os << r.degree << " " << r.weight << " " << r.rank << "\n";
  return os.str();
}

}  // namespace ribbonmc
