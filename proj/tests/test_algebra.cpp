#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ribbonmc/algebra.hpp"
#include "ribbonmc/fixtures.hpp"
#include "ribbonmc/io.hpp"
#include "ribbonmc/perm.hpp"

using namespace ribbonmc;

TEST_CASE("all built-in fixtures validate") {
  for (const auto& nm : fixture_names()) {
    auto rep = validate_dga(fixture(nm));
    CAPTURE(nm);
    for (const auto& v : rep.violations) CAPTURE(v);
    CHECK(rep.ok);
  }
}

TEST_CASE("S2 model validates; flipped pairing is caught") {
  CyclicDGA a = fixture("formal-s2");
  CHECK(validate_dga(a).ok);
  CyclicDGA bad = a;
  bad.cx.pairing[1][0] = -1;  // (om,one) must be +1 by graded symmetry
  auto rep = validate_dga(bad);
  CHECK(!rep.ok);
  bool found = false;
  for (const auto& v : rep.violations)
    if (v.find("graded symmetry") != std::string::npos) found = true;
  CHECK(found);
}

TEST_CASE("constructed DiffCyclic violation is reported") {
  // dx = y with a pairing incompatible with the differential
  CyclicDGA a;
  a.cx.n = 1;
  a.cx.names = {"x", "y", "u", "v"};
  a.cx.degs = {0, 1, 0, 1};
  a.cx.pairing = zero_mat(4, 4);
  a.cx.pairing[0][1] = a.cx.pairing[1][0] = 1;
  a.cx.pairing[2][3] = a.cx.pairing[3][2] = 1;
  a.cx.d = zero_mat(4, 4);
  a.cx.d[1][0] = 1;  // dx = y, and d(everything else) = 0: breaks (dx,x)=..(x,dx)
  a.mul.assign(4, std::vector<Vec>(4, Vec(4, Rat(0))));
  auto rep = validate_complex(a.cx);
  CHECK(!rep.ok);
}

TEST_CASE("triple products") {
  auto& s2 = fixture("formal-s2");
  // m^can(1,1,om) = (-1)^{0+2}(1^1,om) = +1
  CHECK(s2.triple_product(0, 0, 1) == 1);
  auto& s3 = fixture("formal-s3");
  // m^can(1,1,v) = (-1)^{0+3}(1,v) = -1
  CHECK(s3.triple_product(0, 0, 1) == -1);
}

TEST_CASE("triple product is cyclic under t_alg") {
  std::mt19937 rng(3);
  for (const auto& nm : fixture_names()) {
    const auto& a = fixture(nm);
    int n = a.cx.dim();
    for (int it = 0; it < 50; ++it) {
      int x = (int)(rng() % n), y = (int)(rng() % n), z = (int)(rng() % n);
      // t_alg(x(x0,x1,x2)) = +- (x2,x0,x1); functional invariance means
      // m(x0,x1,x2) = sign * m(x2,x0,x1) with the shifted koszul sign
      Perm rot{2, 0, 1};
      std::vector<int> degs{a.cx.degs[x], a.cx.degs[y], a.cx.degs[z]};
      int sgn = koszul_sign(rot, degs, true);
      CHECK(a.triple_product(x, y, z) == Rat(sgn) * a.triple_product(z, x, y));
    }
  }
}

TEST_CASE("harmonic decomposition: d=0 gives identity projection") {
  const auto& s2 = fixture("formal-s2");
  std::vector<Vec> h = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
  auto hd = harmonic_decomposition(s2.cx, h);
  CHECK(hd.projection == identity_mat(2));
}

TEST_CASE("harmonic decomposition on the heisenberg fixture") {
  const auto& hb = fixture("heisenberg");
  auto h = default_harmonic_basis(hb.cx);
  CHECK(h.size() == 6);  // H^0=1, H^1=2, H^2=2, H^3=1
  auto hd = harmonic_decomposition(hb.cx, h);
  // pi^2 = pi
  CHECK(mat_mul(hd.projection, hd.projection) == hd.projection);
  // symmetric: (pi x, y) = (x, pi y)
  int n = hb.cx.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec ei(n, Rat(0)), ej(n, Rat(0));
      ei[i] = 1;
      ej[j] = 1;
      CHECK(hb.cx.pair_vec(mat_apply(hd.projection, ei), ej) ==
            hb.cx.pair_vec(ei, mat_apply(hd.projection, ej)));
    }
  // independent oracle: pi is the unique linear map with pi|_H = id,
  // pi|_{H perp} = 0.  Build it by solving on the joint basis.
  Mat sysH;
  for (const auto& v : h) {
    Vec row(n, Rat(0));
    for (int j = 0; j < n; ++j) {
      Vec ej(n, Rat(0));
      ej[j] = 1;
      row[j] = hb.cx.pair_vec(v, ej);
    }
    sysH.push_back(std::move(row));
  }
  auto hperp = null_space(sysH);
  Mat B = zero_mat(n, n);
  int col = 0;
  for (const auto& v : h) {
    for (int i = 0; i < n; ++i) B[i][col] = v[i];
    ++col;
  }
  for (const auto& v : hperp) {
    for (int i = 0; i < n; ++i) B[i][col] = v[i];
    ++col;
  }
  REQUIRE(col == n);
  Mat img = zero_mat(n, n);
  for (size_t a = 0; a < h.size(); ++a)
    for (int i = 0; i < n; ++i) img[i][(int)a] = h[a][i];
  auto binv = mat_inverse(B);
  REQUIRE(binv);
  Mat oracle = mat_mul(img, *binv);
  CHECK(oracle == hd.projection);
}

TEST_CASE("acyclic two-step piece has zero projection") {
  // (x,y) pairs of degrees (p, p+1) need p odd for DiffCyclic + symmetry
  CyclicDGA a;
  a.cx.n = 3;
  a.cx.names = {"x", "y"};
  a.cx.degs = {1, 2};
  a.cx.pairing = zero_mat(2, 2);
  a.cx.pairing[0][1] = 1;
  a.cx.pairing[1][0] = 1;
  a.cx.d = zero_mat(2, 2);
  a.cx.d[1][0] = 1;  // dx = y
  a.mul.assign(2, std::vector<Vec>(2, Vec(2, Rat(0))));
  auto rep = validate_complex(a.cx);
  CAPTURE(rep.violations.empty() ? "" : rep.violations[0]);
  CHECK(rep.ok);
  auto hd = harmonic_decomposition(a.cx, {});
  CHECK(mat_is_zero(hd.projection));
  auto p = build_propagator(a.cx, hd);
  CHECK(p.homotopy);
  CHECK(p.symmetric);
  CHECK(p.special);
}

TEST_CASE("propagators on every fixture: all identities exact") {
  for (const auto& nm : fixture_names()) {
    const auto& a = fixture(nm);
    auto h = default_harmonic_basis(a.cx);
    auto hd = harmonic_decomposition(a.cx, h);
    auto p = build_propagator(a.cx, hd);
    CAPTURE(nm);
    CHECK(p.homotopy);
    CHECK(p.symmetric);
    CHECK(p.special);
    // P pi = pi P = 0 (eq P4)
    CHECK(mat_is_zero(mat_mul(p.op, p.proj)));
    CHECK(mat_is_zero(mat_mul(p.proj, p.op)));
    // d=0 fixtures force P = 0
    if (mat_is_zero(a.cx.d)) CHECK(mat_is_zero(p.op));
    // keyortho: H perp im P
    int n = a.cx.dim();
    for (const auto& v : h)
      for (int j = 0; j < n; ++j) {
        Vec ej(n, Rat(0));
        ej[j] = 1;
        CHECK(a.cx.pair_vec(v, mat_apply(p.op, ej)) == 0);
      }
  }
}

TEST_CASE("specialize fixes a symmetric non-special homotopy operator") {
  const auto& a = fixture("heisenberg");
  auto hd = harmonic_decomposition(a.cx, default_harmonic_basis(a.cx));
  auto p = build_propagator(a.cx, hd);
  int n = a.cx.dim();
  // perturb by dS - Sd with S plain-symmetric of degree -2: keeps the
  // homotopy property and symmetry, generally destroys specialness
  std::mt19937 rng(5);
  Mat s = zero_mat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (a.cx.degs[i] != a.cx.degs[j] - 2) continue;
      // (S e_j = sum_i s[i][j] e_i); plain symmetry (Sx,y)=(x,Sy) imposed below
      s[i][j] = (int)(rng() % 5) - 2;
    }
  // symmetrize: S := 1/2 (S + S^dagger) with (S^dagger x, y) := (x, S y)
  auto pinv = mat_inverse(a.cx.pairing);
  REQUIRE(pinv);
  // S^dagger = Pr^{-1} S^T Pr
  Mat st = zero_mat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) st[i][j] = s[j][i];
  Mat sdag = mat_mul(*pinv, mat_mul(st, a.cx.pairing));
  Mat ssym = mat_scale(Rat(1, 2), mat_add(s, sdag));
  Mat q = mat_sub(mat_mul(a.cx.d, ssym), mat_mul(ssym, a.cx.d));
  Propagator pp;
  pp.op = mat_add(p.op, q);
  pp.proj = p.proj;
  check_propagator(a.cx, pp);
  CHECK(pp.homotopy);
  CHECK(pp.symmetric);

  auto sp = specialize(a.cx, pp);
  CHECK(sp.homotopy);
  CHECK(sp.symmetric);
  CHECK(sp.special);
  CHECK(mat_is_zero(mat_mul(sp.op, sp.proj)));
  CHECK(mat_is_zero(mat_mul(sp.proj, sp.op)));
  // P2 := (pi-1) P (pi-1) satisfies P pi = pi P = 0
  Mat pim1 = mat_sub(pp.proj, identity_mat(n));
  Mat p2 = mat_mul(pim1, mat_mul(pp.op, pim1));
  CHECK(mat_is_zero(mat_mul(p2, pp.proj)));
  CHECK(mat_is_zero(mat_mul(pp.proj, p2)));
}

TEST_CASE("fixture file round trip") {
  for (const auto& nm : fixture_names()) {
    const auto& a = fixture(nm);
    std::string text = serialize_dga(a);
    CyclicDGA b = parse_dga(text);
    CHECK(b.cx.n == a.cx.n);
    CHECK(b.cx.names == a.cx.names);
    CHECK(b.cx.pairing == a.cx.pairing);
    CHECK(b.cx.d == a.cx.d);
    CHECK(b.mul == a.mul);
  }
  CHECK_THROWS_AS(parse_dga("basis x deg 0\npair x x 1\n"), ParseError);  // no n
  CHECK_THROWS_AS(parse_dga("n 2\nbasis x deg 0\npair x zz 1\n"), ParseError);
}
