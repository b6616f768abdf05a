#include "ribbonmc/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>

namespace ribbonmc {

int trivalent_k(int ell, int g, int s) {
  if (ell < 1 || g < 0 || s < 1) return -1;
  int k = 2 * (2 * g + ell - 2) + s;
  if (k < 1) return -1;
  if ((3 * k - s) % 2 != 0 || 3 * k - s < 0) return -1;
  return k;
}

namespace {

// Generate all pairings/leaf assignments of the 3k flags, vertices fixed as
// consecutive triples.  With reduce=true, partners inside untouched vertices
// are restricted to the least untouched vertex's first flag (rotations and
// permutations of untouched vertices are isomorphisms of the partial graph).
void generate_structures(int k, int e, int s, bool reduce,
                         const std::function<void(const RibbonGraph&)>& emit) {
  const int nf = 3 * k;
  std::vector<int> match(nf, -2);  // -2 unassigned, -1 leaf, >=0 partner
  std::vector<int> touched(k, 0);
  int leaves_left = s;

  std::function<void(int)> rec = [&](int f) {
    if (f == nf) {
      RibbonGraph g;
      g.flag_count = nf;
      for (int v = 0; v < k; ++v) g.vertices.push_back({3 * v, 3 * v + 1, 3 * v + 2});
      for (int x = 0; x < nf; ++x) {
        if (match[x] == -1) g.leaves.push_back(x);
        else if (match[x] > x) g.edges.push_back({x, match[x]});
      }
      g.finalize();
      emit(g);
      return;
    }
    if (match[f] != -2) {
      rec(f + 1);
      return;
    }
    int v = f / 3;
    ++touched[v];
    // leaf option
    if (leaves_left > 0) {
      match[f] = -1;
      --leaves_left;
      rec(f + 1);
      ++leaves_left;
      match[f] = -2;
    }
    // match options
    int first_untouched = -1;
    if (reduce) {
      for (int w = v + 1; w < k; ++w)
        if (!touched[w]) {
          first_untouched = w;
          break;
        }
    }
    for (int p = f + 1; p < nf; ++p) {
      if (match[p] != -2) continue;
      int w = p / 3;
      if (w == v) continue;  // no self-loops
      if (reduce && !touched[w]) {
        if (w != first_untouched || p != 3 * w) continue;
      }
      ++touched[w];
      match[f] = p;
      match[p] = f;
      rec(f + 1);
      match[f] = match[p] = -2;
      --touched[w];
    }
    --touched[v];
  };
  rec(0);
}

}  // namespace

std::vector<LabelledGraph> enumerate_graphs(int ell, int g,
                                            const std::vector<int>& s_vec,
                                            const EnumOptions& opts) {
  if ((int)s_vec.size() != ell) throw DomainError("s_vec size != ell");
  for (int s : s_vec)
    if (s < 1) throw DomainError("boundary without leaf requested");
  int s = 0;
  for (int x : s_vec) s += x;
  int k = trivalent_k(ell, g, s);
  std::vector<LabelledGraph> out;
  if (k < 0) return out;
  if (k > opts.max_k) throw ResourceError("vertex count exceeds configured bound");
  int e = (3 * k - s) / 2;

  std::map<std::string, LabelledGraph> seen;
  generate_structures(k, e, s, !opts.brute, [&](const RibbonGraph& rg) {
    if (num_components(rg) != 1) return;
    std::vector<Boundary> bds;
    try {
      bds = trace_boundaries(rg);
    } catch (const StructuralError&) {
      return;  // leafless boundary: excluded by eq (one-boundary-vertex)
    }
    if ((int)bds.size() != ell) return;
    RibbonGraph copy = rg;
    Signature sig = signature(copy);
    if (sig.g != g) return;
    // all boundary numberings matching s_vec, all first-leaf rotations
    std::vector<int> idx(ell);
    for (int i = 0; i < ell; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end());
    do {
      bool ok = true;
      for (int b = 0; b < ell && ok; ++b)
        if ((int)bds[idx[b]].leaf_cycle.size() != s_vec[b]) ok = false;
      if (!ok) continue;
      std::vector<int> choice(ell, 0);
      for (;;) {
        LabelledGraph lg;
        lg.g = rg;
        for (int b = 0; b < ell; ++b)
          lg.first_leaf.push_back(bds[idx[b]].leaf_cycle[choice[b]]);
        lg.finalize();
        std::string key = canonical_form(lg);
        seen.emplace(std::move(key), std::move(lg));
        int b = ell - 1;
        while (b >= 0 && ++choice[b] == (int)bds[idx[b]].leaf_cycle.size())
          choice[b--] = 0;
        if (b < 0) break;
      }
    } while (std::next_permutation(idx.begin(), idx.end()));
  });

  out.reserve(seen.size());
  for (auto& [kk, lg] : seen) out.push_back(std::move(lg));
  return out;
}

std::vector<std::string> enumerate_canonical(int ell, int g,
                                             const std::vector<int>& s_vec,
                                             const EnumOptions& opts) {
  std::vector<std::string> keys;
  for (const auto& lg : enumerate_graphs(ell, g, s_vec, opts))
    keys.push_back(canonical_form(lg));
  return keys;
}

const std::vector<LabelledGraph>& enumerate_cached(int ell, int g,
                                                   const std::vector<int>& s_vec,
                                                   int max_k) {
  static std::map<std::tuple<int, int, std::vector<int>>, std::vector<LabelledGraph>> memo;
  static std::mutex mu;
  std::lock_guard<std::mutex> lk(mu);
  auto key = std::make_tuple(ell, g, s_vec);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  EnumOptions opts;
  opts.max_k = max_k;
  auto res = enumerate_graphs(ell, g, s_vec, opts);
  return memo.emplace(key, std::move(res)).first->second;
}

std::vector<std::tuple<int, int, std::vector<int>>> feasible_signatures(int max_k) {
  std::vector<std::tuple<int, int, std::vector<int>>> out;
  for (int ell = 1; ell <= max_k + 2; ++ell)
    for (int g = 0; g <= max_k; ++g)
      for (int s = ell; s <= 3 * max_k; ++s) {
        int k = trivalent_k(ell, g, s);
        if (k < 1 || k > max_k) continue;
        std::vector<int> comp(ell, 1);
        std::function<void(int, int)> gen = [&](int pos, int rem) {
          if (pos == ell - 1) {
            comp[pos] = rem;
            out.push_back({ell, g, comp});
            return;
          }
          for (int v = 1; v <= rem - (ell - 1 - pos); ++v) {
            comp[pos] = v;
            gen(pos + 1, rem - v);
          }
        };
        gen(0, s);
      }
  return out;
}

}  // namespace ribbonmc
