#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ribbonmc/fixtures.hpp"
#include "ribbonmc/homology.hpp"

using namespace ribbonmc;

namespace {
const McContext& ctx_for(const std::string& name) {
  static std::map<std::string, McContext> memo;
  auto it = memo.find(name);
  if (it == memo.end()) it = memo.emplace(name, make_context(fixture(name))).first;
  return it->second;
}
}  // namespace

TEST_CASE("zero MC element with d = 0 gives the zero differential") {
  const auto& ctx = ctx_for("formal-s2");
  BarTensor zero;
  zero.ell = 1;
  auto tc = twisted_differential(ctx.hcx, zero, 4);
  for (const auto& col : tc.d_columns) CHECK(col.empty());
  // ranks = space dimensions
  for (const auto& r : homology_ranks(tc)) {
    int dim = 0;
    for (size_t i = 0; i < tc.basis.size(); ++i)
      if (tc.weight[i] <= r.weight && tc.degree[i] == r.degree) ++dim;
    CHECK(r.rank == dim);
  }
}

TEST_CASE("twisted differential squares to zero (weight 6)") {
  for (const auto& nm : {"formal-s2", "formal-s3", "heisenberg"}) {
    const auto& ctx = ctx_for(nm);
    auto m10 = assemble_mc_level(ctx, 1, 0, 8);
    auto tc = twisted_differential(ctx.hcx, m10, 6);
    auto bad = twisted_square_check(tc);
    CAPTURE(nm);
    CAPTURE(bad ? *bad : "ok");
    CHECK(!bad);
  }
}

TEST_CASE("formal fixtures: m2 is the cup product, higher operations vanish") {
  for (const auto& nm : {"formal-s2", "formal-s3"}) {
    const auto& ctx = ctx_for(nm);
    auto m10 = assemble_mc_level(ctx, 1, 0, 6);
    auto ai = extract_ainfty(ctx, m10, 4);
    // desuspended m2(x,y) = (-1)^{deg x} b2(x,y) equals the cup product
    for (int x = 0; x < ctx.hcx.dim(); ++x)
      for (int y = 0; y < ctx.hcx.dim(); ++y) {
        Vec prod = ctx.dga->product(ctx.hvecs[x], ctx.hvecs[y]);
        auto it = ai.m[2].find({x, y});
        Vec got(ctx.hcx.dim(), Rat(0));
        if (it != ai.m[2].end()) got = it->second;
        Vec got_in_a(ctx.dga->cx.dim(), Rat(0));
        for (int i = 0; i < ctx.hcx.dim(); ++i)
          for (int j = 0; j < ctx.dga->cx.dim(); ++j)
            got_in_a[j] += got[i] * ctx.hvecs[i][j];
        if (ctx.hcx.degs[x] & 1)
          for (auto& t : got_in_a) t = -t;
        CAPTURE(nm);
        CHECK(got_in_a == prod);
      }
    // m_k = 0 for k >= 3
    for (int k = 3; k <= 4; ++k) CHECK(ai.m[k].empty());
    CHECK(!stasheff_check(ai, 5));
  }
}

TEST_CASE("heisenberg: nonzero m3 (Massey product) and Stasheff relations") {
  const auto& ctx = ctx_for("heisenberg");
  auto m10 = assemble_mc_level(ctx, 1, 0, 7);
  auto ai = extract_ainfty(ctx, m10, 5);
  CHECK(!ai.m[3].empty());
  auto bad = stasheff_check(ai, 6);
  CAPTURE(bad ? *bad : "ok");
  CHECK(!bad);
  // desuspended m2 is graded commutative (the fixture is graded commutative)
  for (const auto& [w, v] : ai.m[2]) {
    Word sw{w[1], w[0]};
    auto it = ai.m[2].find(sw);
    Vec other = (it == ai.m[2].end()) ? Vec(ctx.hcx.dim(), Rat(0)) : it->second;
    int dx = ctx.hcx.degs[w[0]], dy = ctx.hcx.degs[w[1]];
    // m2(x,y) = (-1)^{dx} b2(x,y); m2(x,y) = (-1)^{dx dy} m2(y,x)
    int sgn = ((dx + dy + dx * dy) & 1) ? -1 : 1;
    for (int i = 0; i < ctx.hcx.dim(); ++i) CHECK(v[i] == Rat(sgn) * other[i]);
  }
}

TEST_CASE("weight-1 Connes piece is the cohomology of (A, d)") {
  const auto& hb = fixture("heisenberg");
  auto recs = cyclic_cohomology(hb, 1);
  // dim H^p(A): 1,2,2,1 at degrees p = 0..3; bar degree = p - 1
  std::map<int, int> expect{{-1, 1}, {0, 2}, {1, 2}, {2, 1}};
  for (const auto& r : recs) {
    CAPTURE(r.degree);
    CHECK(r.rank == expect[r.degree]);
  }
}

TEST_CASE("hand-computed cyclic ranks for a trivial-product algebra") {
  // A with d = 0 and only unit products: 1 (deg 0), x (deg 1), y (deg 2),
  // z (deg 3) with pairing <1,z>, <x,y>; products: unit only
  CyclicDGA a;
  a.cx.n = 3;
  a.cx.names = {"one", "x", "y", "z"};
  a.cx.degs = {0, 1, 2, 3};
  a.cx.pairing = zero_mat(4, 4);
  a.cx.pairing[0][3] = 1;
  a.cx.pairing[3][0] = 1;
  a.cx.pairing[1][2] = 1;
  a.cx.pairing[2][1] = -1;
  a.cx.d = zero_mat(4, 4);
  a.mul.assign(4, std::vector<Vec>(4, Vec(4, Rat(0))));
  for (int i = 0; i < 4; ++i) {
    a.mul[0][i][i] = 1;
    a.mul[i][0][i] = 1;
  }
  a.mul[0][0][0] = 1;
  // the Connes complex only uses d and the product (no pairing axioms);
  // trivial products make everything computable by hand
  auto recs = cyclic_cohomology(a, 2);
  std::map<std::pair<int, int>, int> got;
  for (const auto& r : recs) got[{r.degree, r.weight}] = r.rank;
  // weight 1: one class per basis element, degrees -1..2
  CHECK(got[{-1, 1}] == 1);
  CHECK(got[{0, 1}] == 1);
  CHECK(got[{1, 1}] == 1);
  CHECK(got[{2, 1}] == 1);
  // weight 2, hand count: classes {1x},{1y},{1z},{xx},{xy},{xz},{yz},{zz}
  // ({1|1} and {y|y} are sign-inconsistent); b vanishes on all of them
  // (unit terms cancel, other products are zero), so ranks are dimensions
  CHECK(got[{-1, 2}] == 2);
  CHECK(got[{0, 2}] == 3);
  CHECK(got[{1, 2}] == 3);
  CHECK(got[{2, 2}] == 2);
  CHECK(got[{3, 2}] == 1);
  CHECK(got[{4, 2}] == 1);
}

TEST_CASE("twisted homology ranks match Connes ranks (heisenberg, shared cutoff)") {
  const auto& ctx = ctx_for("heisenberg");
  auto m10 = assemble_mc_level(ctx, 1, 0, 7);
  auto tc = twisted_differential(ctx.hcx, m10, 5);
  REQUIRE(!twisted_square_check(tc));
  auto tw = homology_ranks(tc);
  auto cc = cyclic_cohomology(fixture("heisenberg"), 5);
  std::map<std::pair<int, int>, int> a, b;
  for (const auto& r : tw)
    if (r.rank != 0) a[{r.degree, r.weight}] = r.rank;
  for (const auto& r : cc)
    if (r.rank != 0) b[{r.degree, r.weight}] = r.rank;
  CAPTURE(format_rank_table(tw));
  CAPTURE(format_rank_table(cc));
  CHECK(a == b);
}
