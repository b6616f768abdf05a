#include "ribbonmc/statesum.hpp"

#include <algorithm>
#include <functional>
#include <thread>

namespace ribbonmc {

Rat McContext::plain_triple(int a, int b, int c) const {
  int n = dga->cx.dim();
  return triple[(a * n + b) * n + c];
}

static void fill_context(McContext& ctx) {
  const auto& cx = ctx.dga->cx;
  int n = cx.dim();
  ctx.hcx.n = cx.n;
  ctx.hcx.names.clear();
  ctx.hcx.degs.clear();
  for (size_t i = 0; i < ctx.hvecs.size(); ++i) {
    ctx.hcx.names.push_back("h" + std::to_string(i));
    int dg = INT32_MIN;
    for (int j = 0; j < n; ++j)
      if (ctx.hvecs[i][j] != 0) {
        if (dg != INT32_MIN && dg != cx.degs[j])
          throw DomainError("harmonic basis vector not homogeneous");
        dg = cx.degs[j];
      }
    ctx.hcx.degs.push_back(dg);
  }
  int hn = (int)ctx.hvecs.size();
  ctx.hcx.pairing = zero_mat(hn, hn);
  for (int a = 0; a < hn; ++a)
    for (int b = 0; b < hn; ++b) ctx.hcx.pairing[a][b] = cx.pair_vec(ctx.hvecs[a], ctx.hvecs[b]);
  ctx.hcx.d = zero_mat(hn, hn);

  ctx.p_upper = propagator_upper(cx, ctx.prop.op);
  ctx.p_support.clear();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (ctx.p_upper[a][b] != 0) ctx.p_support.push_back({a, b});

  ctx.triple.assign((size_t)n * n * n, Rat(0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const Vec& ab = ctx.dga->mul[a][b];
      for (int c = 0; c < n; ++c) {
        Rat v(0);
        for (int t = 0; t < n; ++t)
          if (ab[t] != 0 && cx.pairing[t][c] != 0) v += ab[t] * cx.pairing[t][c];
        ctx.triple[((size_t)a * n + b) * n + c] = v;
      }
    }
}

McContext make_context(const CyclicDGA& dga, const Propagator* prop) {
  McContext ctx;
  ctx.dga = &dga;
  ctx.hvecs = default_harmonic_basis(dga.cx);
  ctx.harm = harmonic_decomposition(dga.cx, ctx.hvecs);
  if (prop) {
    ctx.prop = *prop;
  } else {
    ctx.prop = build_propagator(dga.cx, ctx.harm);
    if (!ctx.prop.special || !ctx.prop.symmetric)
      throw DomainError("constructed propagator is not special symmetric");
  }
  fill_context(ctx);
  return ctx;
}

McContext make_context(const CyclicDGA& dga, const Mat& p_op, const HarmonicData& harm) {
  McContext ctx;
  ctx.dga = &dga;
  ctx.harm = harm;
  ctx.hvecs = harm.basis;
  ctx.prop.op = p_op;
  ctx.prop.proj = harm.projection;
  check_propagator(dga.cx, ctx.prop);
  fill_context(ctx);
  return ctx;
}

ContractionPlan make_plan(const McContext& ctx, const LabelledGraph& lg) {
  return make_plan(ctx, lg, reference_extension(lg));
}

ContractionPlan make_plan(const McContext& ctx, const LabelledGraph& lg,
                          const ExtendedLabelling& ext) {
  ContractionPlan p;
  p.lg = lg;
  p.ext = ext;
  p.k = lg.g.num_vertices();
  p.e = lg.g.num_edges();
  p.s = lg.g.num_leaves();
  p.ell = lg.ell();
  p.s_vec = lg.s_vec();
  if (!lg.g.trivalent()) throw DomainError("state sums need trivalent graphs");

  auto oe = edge_order_flags(lg, ext);
  auto ov = vertex_order_flags(lg, ext);
  int nf = lg.g.flag_count;
  p.slot_of_flag.assign(nf, -1);
  for (int i = 0; i < nf; ++i) p.slot_of_flag[oe[i]] = i;
  for (int vi = 0; vi < p.k; ++vi) {
    std::array<int, 3> tri;
    for (int j = 0; j < 3; ++j) tri[j] = p.slot_of_flag[ov[3 * vi + j]];
    p.vertex_slots.push_back(tri);
  }
  // inversion pairs of the reordering (one-sided masks on the larger slot)
  Perm perm(nf);
  for (int i = 0; i < nf; ++i) perm[i] = p.slot_of_flag[ov[i]];
  p.inv_mask.assign(nf, 0);
  int rbar = 0;
  for (int i = 0; i < nf; ++i)
    for (int j = i + 1; j < nf; ++j)
      if (perm[i] > perm[j]) {
        p.inv_mask[perm[i]] |= (1u << perm[j]);
        rbar ^= 1;
      }
  int eta = eta3(lg, ext);
  int expo = rbar + (ctx.dga->cx.n - 1) * eta;
  p.base_sign = (expo & 1) ? -1 : 1;
  return p;
}

namespace {

struct SlotVec {
  // a slot carries either a unit A-basis vector or a harmonic vector
  const Vec* vec = nullptr;  // null: unit
  int unit = -1;
  int deg = 0;
};

// (x ^ y, z) for slot contents
Rat slot_triple(const McContext& ctx, const SlotVec& x, const SlotVec& y, const SlotVec& z) {
  int n = ctx.dga->cx.dim();
  Rat acc(0);
  auto each = [&](const SlotVec& s, auto&& fn) {
    if (s.vec == nullptr) {
      fn(s.unit, Rat(1));
    } else {
      for (int i = 0; i < n; ++i)
        if ((*s.vec)[i] != 0) fn(i, (*s.vec)[i]);
    }
  };
  each(x, [&](int a, Rat ca) {
    each(y, [&](int b, Rat cb) {
      each(z, [&](int c, Rat cc) {
        Rat t = ctx.plain_triple(a, b, c);
        if (t != 0) acc += ca * cb * cc * t;
      });
    });
  });
  return acc;
}

// Shared recursion: enumerate interior assignments (and, when alpha is null,
// leaf assignments too), calling sink(alpha, value) per completed assignment.
// Values include the koszul reordering sign but not base_sign or s_Gamma.
void contract_enumerate(const McContext& ctx, const ContractionPlan& plan,
                        const WordTuple* alpha,
                        const std::function<void(const WordTuple&, const Rat&)>& sink) {
  const auto& acx = ctx.dga->cx;
  int nf = 3 * plan.k;
  int ne = plan.e;
  std::vector<SlotVec> slot(nf);
  std::vector<int> leaf_assign(plan.s, -1);  // H indices for leaf slots
  // prefill leaves when alpha given
  if (alpha) {
    if ((int)alpha->size() != plan.ell) return;
    for (int b = 0; b < plan.ell; ++b)
      if ((int)(*alpha)[b].size() != plan.s_vec[b]) return;  // not adapted
    int q = 0;
    for (int b = 0; b < plan.ell; ++b)
      for (int x : (*alpha)[b]) leaf_assign[q++] = x;
  }
  for (int q = 0; q < plan.s; ++q) {
    if (leaf_assign[q] >= 0) {
      slot[2 * ne + q].vec = &ctx.hvecs[leaf_assign[q]];
      slot[2 * ne + q].deg = ctx.hcx.degs[leaf_assign[q]];
    }
  }

  std::vector<char> edge_done(ne, 0);
  Rat coef(1);

  std::function<void(int, int, Rat)> rec = [&](int vi, int si, Rat acc) {
    if (vi == plan.k) {
      // koszul sign from slot degree parities
      uint32_t odd = 0;
      for (int i = 0; i < nf; ++i)
        if (slot[i].deg & 1) odd |= (1u << i);
      int kos = 0;
      for (int i = 0; i < nf; ++i)
        if (odd >> i & 1) kos ^= __builtin_popcount(plan.inv_mask[i] & odd) & 1;
      if (kos) acc = -acc;
      WordTuple a(plan.ell);
      int q = 0;
      for (int b = 0; b < plan.ell; ++b)
        for (int j = 0; j < plan.s_vec[b]; ++j) a[b].push_back(leaf_assign[q++]);
      sink(a, acc);
      return;
    }
    if (si == 3) {
      // vertex complete: multiply its factor
      auto [s0, s1, s2] = plan.vertex_slots[vi];
      Rat f = slot_triple(ctx, slot[s0], slot[s1], slot[s2]);
      if (f == 0) return;
      rec(vi + 1, 0, acc * f);
      return;
    }
    int sl = plan.vertex_slots[vi][si];
    if (sl >= 2 * ne) {
      // leaf slot
      int q = sl - 2 * ne;
      if (leaf_assign[q] >= 0) {
        rec(vi, si + 1, acc);
      } else {
        for (int h = 0; h < (int)ctx.hvecs.size(); ++h) {
          leaf_assign[q] = h;
          slot[sl].vec = &ctx.hvecs[h];
          slot[sl].unit = -1;
          slot[sl].deg = ctx.hcx.degs[h];
          rec(vi, si + 1, acc);
          leaf_assign[q] = -1;
          slot[sl].vec = nullptr;
        }
      }
      return;
    }
    int eidx = sl / 2;
    if (edge_done[eidx]) {
      rec(vi, si + 1, acc);
      return;
    }
    int tail = 2 * eidx, head = 2 * eidx + 1;
    for (auto [a, b] : ctx.p_support) {
      edge_done[eidx] = 1;
      slot[tail].unit = a;
      slot[tail].vec = nullptr;
      slot[tail].deg = acx.degs[a];
      slot[head].unit = b;
      slot[head].vec = nullptr;
      slot[head].deg = acx.degs[b];
      rec(vi, si + 1, acc * ctx.p_upper[a][b]);
      edge_done[eidx] = 0;
    }
  };
  rec(0, 0, Rat(1));
}

}  // namespace

Rat contract(const McContext& ctx, const ContractionPlan& plan, const WordTuple& alpha) {
  Rat total(0);
  contract_enumerate(ctx, plan, &alpha,
                     [&](const WordTuple&, const Rat& v) { total += v; });
  if (plan.base_sign < 0) total = -total;
  return total;
}

int s_gamma_exponent(const McContext& ctx, const ContractionPlan& plan,
                     const WordTuple& alpha) {
  int n = ctx.dga->cx.n;
  int s = plan.s, ell = plan.ell;
  std::vector<int> flat;
  for (const auto& w : alpha)
    for (int x : w) flat.push_back(ctx.hcx.degs[x]);
  int p = p_exponent(flat);
  std::vector<int> blocks;
  for (const auto& w : alpha) blocks.push_back(word_sdeg(ctx.hcx, w));
  int pb = pb_exponent(blocks);
  int se = (ell + 1) * (s + 1);
  return (n * ell + (s * (s + 1)) / 2 + p + (n - 1) * (se + pb)) & 1;
}

Rat m_gamma(const McContext& ctx, const ContractionPlan& plan, const WordTuple& alpha) {
  Rat v = contract(ctx, plan, alpha);
  if (v == 0) return v;
  return s_gamma_exponent(ctx, plan, alpha) ? Rat(-v) : v;
}

namespace {

// compositions of totals <= max into `parts` positive integers
std::vector<std::vector<int>> compositions(int parts, int max_total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(parts, 1);
  std::function<void(int, int)> rec = [&](int pos, int used) {
    if (pos == parts) {
      out.push_back(cur);
      return;
    }
    for (int v = 1; used + v + (parts - pos - 1) <= max_total; ++v) {
      cur[pos] = v;
      rec(pos + 1, used + v);
    }
  };
  if (parts >= 1 && parts <= max_total) rec(0, 0);
  return out;
}

}  // namespace

BarTensor assemble_mc_level(const McContext& ctx, int ell, int g, int max_weight,
                            int workers) {
  BarTensor level;
  level.ell = ell;
  std::vector<const LabelledGraph*> graphs;
  for (const auto& sv : compositions(ell, max_weight)) {
    int k = trivalent_k(ell, g, [&] {
      int t = 0;
      for (int x : sv) t += x;
      return t;
    }());
    if (k < 0) continue;
    if (k > ctx.max_k) throw ResourceError("assemble_mc: vertex count over bound");
    for (const auto& lg : enumerate_cached(ell, g, sv, ctx.max_k)) graphs.push_back(&lg);
  }
  Rat inv_fact(1);
  for (int i = 2; i <= ell; ++i) inv_fact /= i;

  auto work = [&](size_t from, size_t to, BarTensor& out) {
    for (size_t gi = from; gi < to; ++gi) {
      ContractionPlan plan = make_plan(ctx, *graphs[gi]);
      std::map<WordTuple, Rat> raw;
      contract_enumerate(ctx, plan, nullptr, [&](const WordTuple& a, const Rat& v) {
        raw[a] += v;
      });
      for (auto& [a, v] : raw) {
        if (v == 0) continue;
        // keep canonical representatives only; the level tensor derives the
        // rest by cyclicity
        bool canon = true;
        for (const auto& w : a) {
          auto [cw, sg] = canonical_rotation(ctx.hcx, w);
          if (sg == 0 || cw != w) {
            canon = false;
            break;
          }
        }
        if (!canon) continue;
        Rat val = plan.base_sign < 0 ? Rat(-v) : v;
        if (s_gamma_exponent(ctx, plan, a)) val = -val;
        Rat& slot = out.c[a];
        slot += inv_fact * val;
        if (slot == 0) out.c.erase(a);
      }
    }
  };

  if (workers <= 1 || graphs.size() < 2) {
    work(0, graphs.size(), level);
  } else {
    int w = std::min<int>(workers, (int)graphs.size());
    std::vector<BarTensor> parts(w);
    for (auto& p : parts) p.ell = ell;
    std::vector<std::thread> threads;
    size_t chunk = (graphs.size() + w - 1) / w;
    for (int i = 0; i < w; ++i) {
      size_t from = i * chunk, to = std::min(graphs.size(), (i + 1) * chunk);
      threads.emplace_back([&, from, to, i] { work(from, to, parts[i]); });
    }
    for (auto& t : threads) t.join();
    for (const auto& p : parts) level = bt_sum(level, p);
  }
  return level;
}

McElement assemble_mc(const McContext& ctx, const Cutoff& cut, int workers) {
  McElement m;
  for (int ell = 1; ell <= cut.max_ell; ++ell)
    for (int g = 0; g <= cut.max_genus; ++g)
      m[{ell, g}] = assemble_mc_level(ctx, ell, g, cut.max_weight, workers);
  return m;
}

BarTensor bt_truncate_weight(const BarTensor& t, int w) {
  BarTensor out;
  out.ell = t.ell;
  for (const auto& [k, v] : t.c) {
    int total = 0;
    for (const auto& word : k) total += (int)word.size();
    if (total <= w) out.c[k] = v;
  }
  return out;
}

BarTensor mc_residual(const McContext& ctx, const McElement& m, int ell, int g,
                      int max_weight) {
  DiblOps ops(ctx.hcx);
  BarTensor acc;
  acc.ell = ell;
  auto get = [&](int l, int gg) -> const BarTensor& {
    auto it = m.find({l, gg});
    if (it == m.end()) throw DomainError("mc_residual: missing level");
    return it->second;
  };
  if (g >= 1) acc = bt_sum(acc, ops.hat_p210(get(ell + 1, g - 1)));
  for (int l1 = 1; l1 <= ell; ++l1) {
    int l2 = ell + 1 - l1;
    if (l2 < 1) continue;
    for (int g1 = 0; g1 <= g; ++g1) {
      int g2 = g - g1;
      auto t = ops.hat_p210_conn(get(l1, g1), get(l2, g2));
      acc = bt_sum(acc, bt_scale(Rat(1, 2), t));
    }
  }
  if (ell >= 2) acc = bt_sum(acc, ops.hat_p120(get(ell - 1, g)));
  return bt_truncate_weight(acc, max_weight);
}

}  // namespace ribbonmc
