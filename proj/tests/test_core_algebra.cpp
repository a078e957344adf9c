#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cisupport/error.hpp"
#include "cisupport/groebner.hpp"
#include "cisupport/hilbert.hpp"

using namespace cisupport;

namespace {

PolyRing qq_xy() { return make_ring(Field::rationals(), {"x", "y"}); }

Polynomial P(const PolyRing& r, const std::string& s) { return parse_polynomial(r, s); }

Polynomial random_poly(const PolyRing& r, std::mt19937_64& rng, int maxdeg, int nterms) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> deg(0, maxdeg);
  std::vector<Term> ts;
  for (int t = 0; t < nterms; ++t) {
    std::vector<int32_t> e(r.nvars(), 0);
    for (int i = 0; i < r.nvars(); ++i) e[i] = deg(rng);
    ts.push_back({r.monomial(e), Scalar::from_int(r.field(), coef(rng))});
  }
  return Polynomial::from_terms(r, std::move(ts));
}

}  // namespace

TEST_CASE("make_ring basics and errors") {
  PolyRing r = qq_xy();
  CHECK(r.nvars() == 2);
  CHECK(r.describe() == "QQ[x,y]");

  PolyRing fp = make_ring(Field::prime(32003), {"a", "b", "c", "d"});
  CHECK(fp.nvars() == 4);
  CHECK(fp.field().p == 32003);

  CHECK_THROWS_AS(make_ring(Field::rationals(), {"x", "x"}), error);
  CHECK_THROWS_AS(make_ring(Field::rationals(), {"x"}, MonomialOrder::grevlex(), {0}),
                  error);
}

TEST_CASE("polynomial arithmetic in canonical form") {
  PolyRing r = qq_xy();
  Polynomial p = P(r, "(x+y)*(x-y)");
  CHECK(p.equals(P(r, "x^2-y^2")));
  CHECK(P(r, "x^2-y^2+y^2").equals(P(r, "x^2")));
  CHECK(P(r, "x^2-x^2").is_zero());

  PolyRing other = make_ring(Field::rationals(), {"u", "v"});
  CHECK_THROWS_AS(P(r, "x").add(P(other, "u")), error);
}

TEST_CASE("ring arithmetic laws on random polynomials") {
  PolyRing r = qq_xy();
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial p = random_poly(r, rng, 3, 4);
    Polynomial q = random_poly(r, rng, 3, 4);
    Polynomial s = random_poly(r, rng, 3, 4);
    CHECK(p.add(q).equals(q.add(p)));
    CHECK(p.mul(q.add(s)).equals(p.mul(q).add(p.mul(s))));
  }
}

TEST_CASE("parse-print round trip is the identity") {
  PolyRing r = qq_xy();
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial p = random_poly(r, rng, 4, 5);
    CHECK(parse_polynomial(r, p.str()).equals(p));
  }
  PolyRing fp = make_ring(Field::prime(5), {"x", "y"});
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial p = random_poly(fp, rng, 4, 5);
    CHECK(parse_polynomial(fp, p.str()).equals(p));
  }
}

TEST_CASE("monomial order laws") {
  for (auto ord : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
    PolyRing r = make_ring(Field::rationals(), {"x", "y", "z"}, ord);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> deg(0, 4);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<int32_t> ea(3), eb(3), en(3);
      for (int i = 0; i < 3; ++i) {
        ea[i] = deg(rng);
        eb[i] = deg(rng);
        en[i] = deg(rng);
      }
      Monomial a = r.monomial(ea), b = r.monomial(eb), n = r.monomial(en);
      // 1 <= m
      CHECK(r.compare(r.one(), a) <= 0);
      int c = r.compare(a, b);
      // multiplicative compatibility
      CHECK(r.compare(PolyRing::mul(a, n), PolyRing::mul(b, n)) == c);
    }
  }
}

TEST_CASE("homogeneity check") {
  PolyRing r = make_ring(Field::rationals(), {"a", "b", "c"});
  CHECK(*P(r, "a^2-b^2").homogeneous_degree() == 2);
  CHECK(!P(r, "a^2+a").homogeneous_degree().has_value());
  CHECK(*Polynomial::zero(r).homogeneous_degree() == -1);
}

TEST_CASE("groebner basis: lex example and trivial cases") {
  PolyRing r = make_ring(Field::rationals(), {"x", "y"}, MonomialOrder::lex());
  GroebnerBasis gb(r, {P(r, "x*y-1"), P(r, "y^2-1")});
  REQUIRE(gb.generators().size() == 2);
  // reduced basis {x - y, y^2 - 1}
  CHECK(gb.generators()[0].equals(P(r, "y^2-1")));
  CHECK(gb.generators()[1].equals(P(r, "x-y")));

  PolyRing g = qq_xy();
  GroebnerBasis triv(g, {P(g, "x"), P(g, "y")});
  CHECK(triv.generators().size() == 2);
  GroebnerBasis empty(g, {});
  CHECK(empty.generators().empty());
  CHECK(empty.normal_form(P(g, "x+1")).equals(P(g, "x+1")));
}

TEST_CASE("division identity on random inputs") {
  PolyRing r = qq_xy();
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial f = random_poly(r, rng, 4, 5);
    std::vector<Polynomial> divs;
    int nd = 1 + (int)(rng() % 3);
    for (int i = 0; i < nd; ++i) {
      Polynomial d = random_poly(r, rng, 2, 3);
      if (!d.is_zero()) divs.push_back(d);
    }
    if (divs.empty()) continue;
    DivisionResult dr = normal_form_with_quotients(f, divs);
    Polynomial sum = dr.remainder;
    for (size_t i = 0; i < divs.size(); ++i) sum = sum.add(dr.quotients[i].mul(divs[i]));
    CHECK(sum.equals(f));
    // no remainder term divisible by a divisor lead
    for (const auto& t : dr.remainder.terms())
      for (const auto& d : divs) CHECK(!PolyRing::divides(d.lead_monomial(), t.m));
  }
}

TEST_CASE("normal form is idempotent") {
  PolyRing r = qq_xy();
  std::mt19937_64 rng(5);
  GroebnerBasis gb(r, {P(r, "x^2-y"), P(r, "y^3")});
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial f = random_poly(r, rng, 5, 6);
    Polynomial nf = gb.normal_form(f);
    CHECK(gb.normal_form(nf).equals(nf));
  }
}

TEST_CASE("buchberger postcondition: s-polynomials reduce to zero") {
  PolyRing r = make_ring(Field::prime(32003), {"x", "y", "z"});
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < 3; ++i) {
      Polynomial g = random_poly(r, rng, 3, 3);
      if (!g.is_zero()) gens.push_back(g);
    }
    GroebnerBasis gb(r, gens);
    const auto& b = gb.generators();
    for (size_t i = 0; i < b.size(); ++i)
      for (size_t j = i + 1; j < b.size(); ++j) {
        Monomial l = r.lcm(b[i].lead_monomial(), b[j].lead_monomial());
        Polynomial s =
            b[i].mul_term(PolyRing::div(l, b[i].lead_monomial()), Scalar::one(r.field()));
        s = s.axpy(Scalar::one(r.field()), PolyRing::div(l, b[j].lead_monomial()), b[j]);
        CHECK(gb.normal_form(s).is_zero());
      }
  }
}

TEST_CASE("membership expression tracking") {
  PolyRing r = qq_xy();
  GroebnerBasis gb(r, {P(r, "x^2+y"), P(r, "x*y-1")}, true);
  Polynomial f = P(r, "(x^2+y)*(x+3) + (x*y-1)*y^2");
  auto expr = gb.express(f);
  REQUIRE(expr.has_value());
  Polynomial sum = Polynomial::zero(r);
  for (size_t i = 0; i < expr->size(); ++i)
    sum = sum.add((*expr)[i].mul(gb.original_generators()[i]));
  CHECK(sum.equals(f));
  CHECK(!gb.express(P(r, "x")).has_value());
}

TEST_CASE("eliminate: parabola, zero ideal, irrelevant ideal") {
  PolyRing r = make_ring(Field::rationals(), {"t", "x", "y"});
  auto out = eliminate({P(r, "x-t"), P(r, "y-t^2")}, {0}, r);
  REQUIRE(out.size() == 1);
  CHECK(radical_membership(P(r, "y-x^2"), out, r));
  CHECK(radical_membership(out[0], {P(r, "y-x^2")}, r));

  CHECK(eliminate({}, {0}, r).empty());

  auto irr = eliminate({P(r, "x"), P(r, "y"), P(r, "t")}, {0}, r);
  GroebnerBasis gb(r, irr);
  CHECK(gb.member(P(r, "x")));
  CHECK(gb.member(P(r, "y")));
  CHECK(!gb.member(P(r, "t")));
}

TEST_CASE("module syzygies: koszul relation, quotient ring, unit") {
  PolyRing r = qq_xy();
  PolyMatrix m(r, 1, 2);
  m.set(0, 0, P(r, "x"));
  m.set(0, 1, P(r, "y"));
  m.row_degrees = {0};
  m.col_degrees = {1, 1};
  PolyMatrix syz = module_syzygies(m, {});
  // the syzygy module of (x, y) is generated by (y, -x)
  REQUIRE(syz.cols() >= 1);
  ModuleGB span(r, 2, {VecPoly::from_column(syz, 0)}, {}, false);
  for (int j = 0; j < syz.cols(); ++j) CHECK(span.member(VecPoly::from_column(syz, j)));
  std::vector<VecTerm> koszul = {{0, r.var(1), Scalar::one(r.field())},
                                 {1, r.var(0), Scalar::from_int(r.field(), -1)}};
  ModuleGB full(r, 2, {VecPoly::from_column(syz, 0)}, {}, false);
  CHECK(full.member(VecPoly::from_terms(r, koszul)));

  // over R = Q/(xy): syzygies of [x] are generated by (y)
  PolyMatrix mx(r, 1, 1);
  mx.set(0, 0, P(r, "x"));
  mx.row_degrees = {0};
  mx.col_degrees = {1};
  PolyMatrix s2 = module_syzygies(mx, {P(r, "x*y")});
  bool found = false;
  for (int j = 0; j < s2.cols(); ++j)
    if (s2.at(0, j).equals(P(r, "y"))) found = true;
  CHECK(found);

  // syzygies of [1] vanish
  PolyMatrix one(r, 1, 1);
  one.set(0, 0, P(r, "1"));
  one.row_degrees = {0};
  one.col_degrees = {0};
  PolyMatrix s3 = module_syzygies(one, {});
  for (int j = 0; j < s3.cols(); ++j) CHECK(s3.at(0, j).is_zero());
}

TEST_CASE("krull dimension") {
  PolyRing r3 = make_ring(Field::rationals(), {"x", "y", "z"});
  CHECK(krull_dimension({}, r3) == 3);
  PolyRing r2 = qq_xy();
  CHECK(krull_dimension({P(r2, "x*y")}, r2) == 1);
  CHECK(krull_dimension({P(r2, "x^2"), P(r2, "y^2")}, r2) == 0);
  CHECK(krull_dimension({P(r2, "1")}, r2) == -1);
}

TEST_CASE("krull dimension of random monomial complete intersections") {
  std::mt19937_64 rng(77);
  PolyRing r = make_ring(Field::prime(5), {"x", "y", "z", "w"});
  for (int trial = 0; trial < 200; ++trial) {
    // a regular sequence of pure variable powers on distinct variables
    int c = 1 + (int)(rng() % 4);
    std::vector<int> vars = {0, 1, 2, 3};
    std::shuffle(vars.begin(), vars.end(), rng);
    std::vector<Polynomial> f;
    for (int i = 0; i < c; ++i)
      f.push_back(Polynomial::variable(r, vars[i], 1 + (int)(rng() % 3)));
    CHECK(krull_dimension(f, r) == 4 - c);
  }
}

TEST_CASE("hilbert series") {
  PolyRing r1 = make_ring(Field::rationals(), {"x"});
  auto h1 = hilbert_series_quotient({P(r1, "x^2")}, r1);
  // (1 - t^2)/(1 - t) = 1 + t
  CHECK(h1.is_polynomial());
  CHECK(h1.total() == 2);
  auto coeffs = h1.expand(0, 3);
  CHECK(coeffs[0] == 1);
  CHECK(coeffs[1] == 1);
  CHECK(coeffs[2] == 0);

  PolyRing r2 = qq_xy();
  auto h2 = hilbert_series_quotient({P(r2, "x*y")}, r2);
  // (1+t)/(1-t): coefficients 1,2,2,2,...
  auto c2 = h2.expand(0, 5);
  CHECK(c2[0] == 1);
  for (int d = 1; d <= 5; ++d) CHECK(c2[d] == 2);
  CHECK(h2.pole_order_at_one() == 1);

  auto hfree = hilbert_series_quotient({}, r2);
  auto c3 = hfree.expand(0, 5);
  for (int d = 0; d <= 5; ++d) CHECK(c3[d] == d + 1);
  CHECK(hfree.pole_order_at_one() == 2);

  CHECK_THROWS_AS(hilbert_series_quotient({P(r2, "x+x^2")}, r2), error);
}

TEST_CASE("radical membership") {
  PolyRing r = qq_xy();
  CHECK(radical_membership(P(r, "x"), {P(r, "x^2")}, r));
  CHECK(!radical_membership(P(r, "y"), {P(r, "x^2")}, r));
  CHECK(radical_membership(Polynomial::zero(r), {P(r, "x^2")}, r));
}

TEST_CASE("ideal intersection via elimination") {
  PolyRing r = qq_xy();
  auto inter = ideal_intersection({P(r, "x")}, {P(r, "y")}, r);
  GroebnerBasis gb(r, inter);
  CHECK(gb.member(P(r, "x*y")));
  CHECK(!gb.member(P(r, "x")));
  CHECK(!gb.member(P(r, "y")));
}
