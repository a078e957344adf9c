#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cisupport/ci_ring.hpp"
#include "cisupport/error.hpp"

using namespace cisupport;

namespace {

Polynomial P(const PolyRing& r, const std::string& s) { return parse_polynomial(r, s); }

CIRing example_a() {
  PolyRing q = make_ring(Field::rationals(), {"x", "y"});
  return make_ci_ring(q, {P(q, "x*y")});
}

CIRing two_squares() {
  PolyRing q = make_ring(Field::rationals(), {"x", "y"});
  return make_ci_ring(q, {P(q, "x^2"), P(q, "y^2")});
}

CIRing example_d() {
  PolyRing q = make_ring(Field::rationals(), {"a", "b", "c"});
  return make_ci_ring(q, {P(q, "a^2"), P(q, "b^2"), P(q, "c^2")});
}

}  // namespace

TEST_CASE("make_ci_ring validation") {
  CIRing a = example_a();
  CHECK(a.codim() == 1);
  CHECK(a.dim() == 1);

  CIRing d = example_d();
  CHECK(d.codim() == 3);
  CHECK(d.dim() == 0);

  PolyRing q = make_ring(Field::rationals(), {"x", "y"});
  CHECK_THROWS_AS(make_ci_ring(q, {P(q, "x"), P(q, "x")}), error);
  CHECK_THROWS_AS(make_ci_ring(q, {P(q, "x^2"), P(q, "x^2")}), error);
  CHECK_THROWS_AS(make_ci_ring(q, {P(q, "x^2+x")}), error);
}

TEST_CASE("present_module forms") {
  CIRing d = example_d();
  RMod cyclic = present_cyclic(d, {P(d.ambient(), "b")});
  CHECK(cyclic.gens() == 1);

  RMod k = present_residue_field(d);
  CHECK(k.gens() == 1);
  CHECK(k.presentation().cols() == 3);

  RMod f2 = present_free(d, 2);
  CHECK(f2.gens() == 2);
  CHECK(f2.presentation().cols() == 0);

  // a presentation with a unit entry minimalizes away
  PolyMatrix m(d.ambient(), 2, 1);
  m.set(0, 0, P(d.ambient(), "1"));
  m.set(1, 0, P(d.ambient(), "a"));
  RMod red = present_cokernel(d, m, {1, 0});
  CHECK(red.gens() == 1);
  CHECK(red.presentation().cols() == 0);
}

TEST_CASE("residue field over k[x,y]/(xy): betti 1,2,2,2,...") {
  CIRing a = example_a();
  RMod k = present_residue_field(a);
  auto [res, betti] = minimal_free_resolution(k, 5);
  REQUIRE(betti.total.size() == 6);
  CHECK(betti.total[0] == 1);
  for (int i = 1; i <= 5; ++i) CHECK(betti.total[i] == 2);
  CHECK(!res->finite);
}

TEST_CASE("residue field over k[x,y]/(x^2,y^2): betti 1,2,3,4,5,6") {
  CIRing r = two_squares();
  RMod k = present_residue_field(r);
  auto [res, betti] = minimal_free_resolution(k, 5);
  for (int i = 0; i <= 5; ++i) CHECK(betti.total[i] == i + 1);
  // cross-check against the Poincare series (1+t)^2/(1-t^2)^2 of the
  // complete intersection: expand and compare coefficients
  ZPoly num = ZPoly{0, {1, 2, 1}};
  HilbertSeries poincare{{2, 2}, num};
  auto coef = poincare.expand(0, 5);
  for (int i = 0; i <= 5; ++i) CHECK(coef[i] == betti.total[i]);
}

TEST_CASE("free module resolves to length zero") {
  CIRing a = example_a();
  RMod f = present_free(a, 3);
  auto [res, betti] = minimal_free_resolution(f, 4);
  CHECK(res->finite);
  CHECK(res->length() == 0);
  CHECK(betti.total[0] == 3);
  CHECK(betti.total[1] == 0);
}

TEST_CASE("resolution over the ambient ring") {
  CIRing a = example_a();
  // R itself as a Q-module: Koszul on xy, length 1, betti (1,1)
  RMod r_free = present_free(a, 1);
  const Resolution& q1 = r_free.ambient_resolution();
  CHECK(q1.finite);
  CHECK(q1.length() == 1);
  CHECK(q1.betti(0) == 1);
  CHECK(q1.betti(1) == 1);

  // k as a Q-module: Koszul complex on x, y: betti (1,2,1)
  RMod k = present_residue_field(a);
  const Resolution& q2 = k.ambient_resolution();
  CHECK(q2.finite);
  CHECK(q2.length() == 2);
  CHECK(q2.betti(0) == 1);
  CHECK(q2.betti(1) == 2);
  CHECK(q2.betti(2) == 1);
}

TEST_CASE("depth, dim, CM and MCM flags") {
  CIRing a = example_a();
  RMod k = present_residue_field(a);
  DepthDim dk = depth_and_dim(k);
  CHECK(dk.depth == 0);
  CHECK(dk.dim == 0);
  CHECK(dk.cohen_macaulay);
  CHECK(!dk.maximal_cohen_macaulay);

  RMod rx = present_cyclic(a, {P(a.ambient(), "x")});
  DepthDim dx = depth_and_dim(rx);
  CHECK(dx.depth == 1);
  CHECK(dx.dim == 1);
  CHECK(dx.maximal_cohen_macaulay);

  RMod fr = present_free(a, 1);
  DepthDim df = depth_and_dim(fr);
  CHECK(df.depth == 1);
  CHECK(df.dim == 1);
  CHECK(df.maximal_cohen_macaulay);

  RMod zero = present_free(a, 0);
  CHECK(module_dim(zero) == -1);
  CHECK_THROWS_AS(depth_and_dim(zero), error);
}

TEST_CASE("syzygy modules") {
  CIRing a = example_a();
  RMod k = present_residue_field(a);
  RMod omega1 = syzygy_module(k, 1);
  CHECK(omega1.gens() == 2);

  RMod fr = present_free(a, 2);
  RMod oz = syzygy_module(fr, 1);
  CHECK(oz.is_zero());

  // R/(x) is periodic with alternating differentials [y], [x]
  RMod rx = present_cyclic(a, {P(a.ambient(), "x")});
  const Resolution& res = rx.resolution(4);
  CHECK(res.betti(1) == 1);
  CHECK(res.betti(2) == 1);
  CHECK(res.betti(3) == 1);
  CHECK(res.diff(1).at(0, 0).equals(P(a.ambient(), "x")));
  CHECK(res.diff(2).at(0, 0).equals(P(a.ambient(), "y")));
  CHECK(res.diff(3).at(0, 0).equals(P(a.ambient(), "x")));
  RMod omega2 = syzygy_module(rx, 2);
  CHECK(omega2.gens() == 1);
  CHECK(omega2.presentation().at(0, 0).equals(P(a.ambient(), "x")));
}

TEST_CASE("grade") {
  CIRing a = example_a();
  CHECK(grade_of(present_residue_field(a)) == 1);
  CHECK(grade_of(present_free(a, 1)) == 0);
  CHECK(grade_of(present_cyclic(a, {P(a.ambient(), "x")})) == 0);
}

TEST_CASE("betti shift under syzygy") {
  CIRing r = two_squares();
  RMod k = present_residue_field(r);
  auto [res, bk] = minimal_free_resolution(k, 6);
  RMod o1 = syzygy_module(k, 1);
  auto [res2, bo] = minimal_free_resolution(o1, 5);
  for (int i = 0; i <= 5; ++i) CHECK(bo.total[i] == bk.total[i + 1]);
}

TEST_CASE("auslander-buchsbaum on random cyclic modules") {
  std::mt19937_64 rng(2024);
  PolyRing q = make_ring(Field::prime(32003), {"x", "y"});
  CIRing r = make_ci_ring(q, {P(q, "x*y")});
  std::uniform_int_distribution<int> cdist(0, 32002);
  for (int trial = 0; trial < 50; ++trial) {
    // random homogeneous cyclic module R/(h) with h of degree 1 or 2
    int deg = 1 + (int)(rng() % 2);
    std::vector<Term> ts;
    for (int32_t i = 0; i <= deg; ++i) {
      std::vector<int32_t> e = {i, (int32_t)deg - i};
      ts.push_back({q.monomial(e), Scalar::from_int(q.field(), cdist(rng))});
    }
    Polynomial h = Polynomial::from_terms(q, std::move(ts));
    if (h.is_zero()) continue;
    RMod m = present_cyclic(r, {h});
    if (m.is_zero()) continue;
    DepthDim dd = depth_and_dim(m);
    int pd = projective_dimension_over_ambient(m);
    CHECK(dd.depth + pd == 2);
  }
}

TEST_CASE("resolution differentials compose to zero and are minimal") {
  CIRing d = example_d();
  RMod m = present_cyclic(d, {P(d.ambient(), "b"), P(d.ambient(), "a*c")});
  const Resolution& res = m.resolution(5);
  const Field& f = d.ambient().field();
  for (int i = 2; i <= res.length(); ++i) {
    PolyMatrix prod = res.diff(i - 1).mul(res.diff(i));
    for (int a = 0; a < prod.rows(); ++a)
      for (int b = 0; b < prod.cols(); ++b)
        CHECK(d.reduce(prod.at(a, b)).is_zero());
  }
  for (int i = 1; i <= res.length(); ++i) {
    const PolyMatrix& dm = res.diff(i);
    for (int a = 0; a < dm.rows(); ++a)
      for (int b = 0; b < dm.cols(); ++b) CHECK(dm.at(a, b).constant_coeff().is_zero(f));
  }
}

TEST_CASE("module hilbert series") {
  CIRing a = example_a();
  RMod k = present_residue_field(a);
  auto ck = k.hilbert().expand(0, 4);
  CHECK(ck[0] == 1);
  CHECK(ck[1] == 0);

  RMod fr = present_free(a, 1);
  auto cf = fr.hilbert().expand(0, 4);
  CHECK(cf[0] == 1);
  for (int i = 1; i <= 4; ++i) CHECK(cf[i] == 2);  // H of k[x,y]/(xy)

  RMod rx = present_cyclic(a, {P(a.ambient(), "x")});
  auto cx = rx.hilbert().expand(0, 4);
  for (int i = 0; i <= 4; ++i) CHECK(cx[i] == 1);  // k[y]
}
