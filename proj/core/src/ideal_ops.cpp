#include <algorithm>

#include "cisupport/error.hpp"
#include "cisupport/groebner.hpp"

namespace cisupport {

GroebnerBasis groebner_basis(const std::vector<Polynomial>& gens, const PolyRing& ring) {
  return GroebnerBasis(ring, gens);
}

namespace {

// permute variables so that `drop` comes first; returns the map old->new
std::vector<int> elimination_permutation(const PolyRing& ring, const std::vector<int>& drop) {
  std::vector<bool> dropped(ring.nvars(), false);
  for (int d : drop) {
    check(d >= 0 && d < ring.nvars(), errc::internal, "eliminate: bad variable index");
    dropped[d] = true;
  }
  std::vector<int> perm(ring.nvars(), -1);
  int pos = 0;
  for (int i = 0; i < ring.nvars(); ++i)
    if (dropped[i]) perm[i] = pos++;
  for (int i = 0; i < ring.nvars(); ++i)
    if (!dropped[i]) perm[i] = pos++;
  return perm;
}

Polynomial permute_vars(const Polynomial& p, const PolyRing& target,
                        const std::vector<int>& perm) {
  std::vector<Term> ts;
  ts.reserve(p.term_count());
  for (const auto& t : p.terms()) {
    std::vector<int32_t> e(perm.size(), 0);
    for (size_t i = 0; i < perm.size(); ++i) e[perm[i]] = t.m.e[i];
    ts.push_back({target.monomial(e), t.c});
  }
  return Polynomial::from_terms(target, std::move(ts));
}

}  // namespace

std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens,
                                  const std::vector<int>& drop, const PolyRing& ring) {
  if (drop.empty()) {
    GroebnerBasis gb(ring, gens);
    return gb.generators();
  }
  auto perm = elimination_permutation(ring, drop);
  std::vector<std::string> vars(ring.nvars());
  std::vector<int> weights(ring.nvars());
  for (int i = 0; i < ring.nvars(); ++i) {
    vars[perm[i]] = ring.vars()[i];
    weights[perm[i]] = ring.weights()[i];
  }
  PolyRing elim = make_ring(ring.field(), vars, MonomialOrder::block((int)drop.size()),
                            weights);
  std::vector<Polynomial> mapped;
  mapped.reserve(gens.size());
  for (const auto& g : gens) mapped.push_back(permute_vars(g, elim, perm));
  GroebnerBasis gb(elim, mapped);

  std::vector<bool> keep_elim(ring.nvars(), true);
  for (size_t i = 0; i < drop.size(); ++i) keep_elim[i] = false;  // permuted: drop first
  std::vector<int> inverse(ring.nvars());
  for (int i = 0; i < ring.nvars(); ++i) inverse[perm[i]] = i;
  std::vector<Polynomial> out;
  for (const auto& b : gb.generators()) {
    if (!b.supported_on(keep_elim)) continue;
    out.push_back(permute_vars(b, ring, inverse));
  }
  return out;
}

PolyMatrix module_syzygies(const PolyMatrix& m, const std::vector<Polynomial>& modulus) {
  const PolyRing& ring = m.ring();
  std::vector<VecPoly> cols;
  cols.reserve(m.cols());
  for (int j = 0; j < m.cols(); ++j) cols.push_back(VecPoly::from_column(m, j));
  ModuleGB gb(ring, m.rows(), std::move(cols), modulus, true);
  auto syz = gb.syzygies();
  PolyMatrix out(ring, m.cols(), (int)syz.size());
  for (size_t j = 0; j < syz.size(); ++j)
    for (int i = 0; i < m.cols(); ++i) out.set(i, (int)j, syz[j].component(i));
  if (!m.col_degrees.empty()) {
    out.row_degrees = m.col_degrees;
    for (size_t j = 0; j < syz.size(); ++j) {
      int64_t d = 0;
      for (int i = 0; i < m.cols(); ++i) {
        const Polynomial& p = out.at(i, (int)j);
        if (!p.is_zero()) {
          auto hd = p.homogeneous_degree();
          check(hd.has_value(), errc::internal, "syzygy entry not homogeneous");
          d = *hd + m.col_degrees[i];
          break;
        }
      }
      out.col_degrees.push_back(d);
    }
  }
  return out;
}

int krull_dimension(const std::vector<Polynomial>& gens, const PolyRing& ring) {
  GroebnerBasis gb(ring, gens);
  if (gb.contains_unit()) return -1;
  const auto leads = gb.lead_monomials();
  const int n = ring.nvars();
  check(n <= 24, errc::internal, "dimension search limited to 24 variables");
  int best = 0;
  for (uint32_t s = 0; s < (1u << n); ++s) {
    int size = __builtin_popcount(s);
    if (size <= best) continue;
    bool independent = true;
    for (const auto& m : leads) {
      bool contained = true;
      for (int i = 0; i < n && contained; ++i)
        if (m.e[i] > 0 && !(s & (1u << i))) contained = false;
      if (contained) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

bool radical_membership(const Polynomial& g, const std::vector<Polynomial>& gens,
                        const PolyRing& ring) {
  if (g.is_zero()) return true;
  std::string zname = "zz_rad";
  while (ring.var_index(zname) >= 0) zname += "_";
  std::vector<std::string> vars = ring.vars();
  vars.push_back(zname);
  std::vector<int> weights(ring.weights().begin(), ring.weights().end());
  weights.push_back(1);
  PolyRing ext = make_ring(ring.field(), vars, MonomialOrder::grevlex(), weights);

  auto lift = [&](const Polynomial& p) {
    std::vector<Term> ts;
    for (const auto& t : p.terms()) {
      std::vector<int32_t> e = t.m.e;
      e.push_back(0);
      ts.push_back({ext.monomial(e), t.c});
    }
    return Polynomial::from_terms(ext, std::move(ts));
  };

  std::vector<Polynomial> sys;
  for (const auto& p : gens) sys.push_back(lift(p));
  Polynomial z = Polynomial::variable(ext, ext.nvars() - 1);
  sys.push_back(Polynomial::from_int(ext, 1).sub(z.mul(lift(g))));
  GroebnerBasis gb(ext, sys);
  return gb.contains_unit();
}

std::vector<Polynomial> ideal_intersection(const std::vector<Polynomial>& a,
                                           const std::vector<Polynomial>& b,
                                           const PolyRing& ring) {
  std::string tname = "tt_int";
  while (ring.var_index(tname) >= 0) tname += "_";
  // t goes first so the block order can eliminate it
  std::vector<std::string> vars;
  vars.push_back(tname);
  for (const auto& v : ring.vars()) vars.push_back(v);
  std::vector<int> weights;
  weights.push_back(1);
  for (int w : ring.weights()) weights.push_back(w);
  PolyRing ext = make_ring(ring.field(), vars, MonomialOrder::block(1), weights);

  auto lift = [&](const Polynomial& p) {
    std::vector<Term> ts;
    for (const auto& t : p.terms()) {
      std::vector<int32_t> e;
      e.push_back(0);
      e.insert(e.end(), t.m.e.begin(), t.m.e.end());
      ts.push_back({ext.monomial(e), t.c});
    }
    return Polynomial::from_terms(ext, std::move(ts));
  };

  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::from_int(ext, 1).sub(t);
  std::vector<Polynomial> sys;
  for (const auto& p : a) sys.push_back(t.mul(lift(p)));
  for (const auto& p : b) sys.push_back(one_minus_t.mul(lift(p)));
  GroebnerBasis gb(ext, sys);

  std::vector<bool> keep(ext.nvars(), true);
  keep[0] = false;
  std::vector<Polynomial> out;
  for (const auto& g : gb.generators()) {
    if (!g.supported_on(keep)) continue;
    std::vector<Term> ts;
    for (const auto& tm : g.terms()) {
      std::vector<int32_t> e(tm.m.e.begin() + 1, tm.m.e.end());
      ts.push_back({ring.monomial(e), tm.c});
    }
    out.push_back(Polynomial::from_terms(ring, std::move(ts)));
  }
  return out;
}

Polynomial substitute(const Polynomial& p, const PolyRing& image_ring,
                      const std::vector<Polynomial>& images) {
  check((int)images.size() == p.ring().nvars(), errc::internal,
        "substitute: wrong image count");
  Polynomial out(image_ring);
  for (const auto& t : p.terms()) {
    Polynomial term = Polynomial::constant(
        image_ring, Scalar::from_mpq(image_ring.field(),
                                     p.ring().field().is_prime_field()
                                         ? mpq_class(t.c.residue())
                                         : t.c.rat()));
    for (size_t i = 0; i < images.size(); ++i)
      for (int32_t k = 0; k < t.m.e[i]; ++k) term = term.mul(images[i]);
    out = out.add(term);
  }
  return out;
}

}  // namespace cisupport
