#include "cisupport/module_gb.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cisupport/error.hpp"

namespace cisupport {

// ---------------------------------------------------------------------------
// VecPoly

int VecPoly::compare_terms(const PolyRing& r, int ca, const Monomial& ma, int cb,
                           const Monomial& mb) {
  // position over term: lower component index is greater
  if (ca != cb) return ca < cb ? 1 : -1;
  return r.compare(ma, mb);
}

VecPoly VecPoly::from_column(const PolyMatrix& m, int col) {
  VecPoly v(m.ring());
  for (int i = 0; i < m.rows(); ++i) {
    const Polynomial& p = m.at(i, col);
    for (const auto& t : p.terms()) v.m_terms.push_back({i, t.m, t.c});
  }
  // columns are emitted in component-major, in-component-descending order,
  // which is already canonical
  return v;
}

VecPoly VecPoly::unit(const PolyRing& r, int comp, const Polynomial& p) {
  VecPoly v(r);
  for (const auto& t : p.terms()) v.m_terms.push_back({comp, t.m, t.c});
  return v;
}

VecPoly VecPoly::from_terms(const PolyRing& r, std::vector<VecTerm> terms) {
  std::sort(terms.begin(), terms.end(), [&](const VecTerm& a, const VecTerm& b) {
    return compare_terms(r, a.comp, a.m, b.comp, b.m) > 0;
  });
  VecPoly v(r);
  const Field& f = r.field();
  for (auto& t : terms) {
    if (!v.m_terms.empty() && v.m_terms.back().comp == t.comp &&
        PolyRing::equal(v.m_terms.back().m, t.m)) {
      v.m_terms.back().c = v.m_terms.back().c.add(f, t.c);
    } else {
      v.m_terms.push_back(std::move(t));
    }
  }
  std::vector<VecTerm> out;
  out.reserve(v.m_terms.size());
  for (auto& t : v.m_terms)
    if (!t.c.is_zero(f)) out.push_back(std::move(t));
  v.m_terms = std::move(out);
  return v;
}

static std::vector<VecTerm> vec_merge(const PolyRing& r, const std::vector<VecTerm>& a,
                                      const std::vector<VecTerm>& b, const Scalar& bscale,
                                      const Monomial* bshift) {
  const Field& f = r.field();
  std::vector<VecTerm> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  auto bterm = [&](size_t jj) {
    VecTerm t = b[jj];
    if (bshift) t.m = PolyRing::mul(t.m, *bshift);
    t.c = t.c.mul(f, bscale);
    return t;
  };
  while (i < a.size() && j < b.size()) {
    VecTerm tb = bterm(j);
    int c = VecPoly::compare_terms(r, a[i].comp, a[i].m, tb.comp, tb.m);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(tb);
      ++j;
    } else {
      Scalar s = a[i].c.add(f, tb.c);
      if (!s.is_zero(f)) out.push_back({a[i].comp, a[i].m, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(bterm(j));
  return out;
}

VecPoly VecPoly::sub(const VecPoly& o) const {
  VecPoly v(m_ring);
  v.m_terms = vec_merge(m_ring, m_terms, o.m_terms,
                        Scalar::one(m_ring.field()).neg(m_ring.field()), nullptr);
  return v;
}

VecPoly VecPoly::axpy(const Scalar& c, const Monomial& m, const VecPoly& g) const {
  VecPoly v(m_ring);
  v.m_terms = vec_merge(m_ring, m_terms, g.m_terms, c.neg(m_ring.field()), &m);
  return v;
}

VecPoly VecPoly::scale(const Scalar& c) const {
  const Field& f = m_ring.field();
  VecPoly v(m_ring);
  if (c.is_zero(f)) return v;
  v.m_terms.reserve(m_terms.size());
  for (const auto& t : m_terms) v.m_terms.push_back({t.comp, t.m, t.c.mul(f, c)});
  return v;
}

VecPoly VecPoly::monic() const {
  if (is_zero()) return *this;
  return scale(lead().c.inv(m_ring.field()));
}

Polynomial VecPoly::component(int comp) const {
  std::vector<Term> ts;
  for (const auto& t : m_terms)
    if (t.comp == comp) ts.push_back({t.m, t.c});
  return Polynomial::from_terms(m_ring, std::move(ts));
}

int VecPoly::max_component() const {
  int m = -1;
  for (const auto& t : m_terms) m = std::max(m, t.comp);
  return m;
}

std::string VecPoly::str() const {
  if (is_zero()) return "0";
  std::string s;
  int last = -1;
  for (const auto& t : m_terms) {
    if (t.comp != last) {
      if (last != -1) s += " | ";
      s += "e" + std::to_string(t.comp) + ":(";
      last = t.comp;
    }
    s += t.c.str(m_ring.field()) + "*" + m_ring.monomial_str(t.m) + " ";
  }
  return s;
}

// ---------------------------------------------------------------------------
// expression-vector helpers

namespace {

std::vector<Polynomial> expr_zero(const PolyRing& r, size_t n) {
  return std::vector<Polynomial>(n, Polynomial(r));
}

std::vector<Polynomial> expr_unit(const PolyRing& r, size_t n, size_t i) {
  auto e = expr_zero(r, n);
  e[i] = Polynomial::from_int(r, 1);
  return e;
}

void expr_axpy(std::vector<Polynomial>& e, const Scalar& c, const Monomial& m,
               const std::vector<Polynomial>& o) {
  for (size_t i = 0; i < e.size(); ++i)
    if (!o[i].is_zero()) e[i] = e[i].axpy(c, m, o[i]);
}

void expr_scale(std::vector<Polynomial>& e, const Scalar& c) {
  for (auto& p : e) p = p.scale(c);
}

}  // namespace

// ---------------------------------------------------------------------------
// ModuleGB

ModuleGB::ModuleGB(PolyRing ring, int ncomps, std::vector<VecPoly> gens,
                   std::vector<Polynomial> quotient, bool track)
    : m_ring(std::move(ring)), m_ncomps(ncomps), m_track(track), m_gens(std::move(gens)),
      m_quotient(std::move(quotient)) {
  // reduced GB of the quotient ideal (plain polynomial Buchberger via a
  // rank-one untracked ModuleGB)
  std::vector<Polynomial> qnz;
  for (const auto& q : m_quotient)
    if (!q.is_zero()) qnz.push_back(q);
  if (!qnz.empty()) {
    std::vector<VecPoly> qv;
    qv.reserve(qnz.size());
    for (const auto& q : qnz) qv.push_back(VecPoly::unit(m_ring, 0, q));
    ModuleGB qgb(m_ring, 1, std::move(qv), {}, false);
    for (const auto& b : qgb.basis()) m_quotient_gb.push_back(b.component(0));
  }
  run_buchberger();
}

// Full normal form with optional expression tracking: on return,
// input = sum expr_i * gen_i + result (mod quotient * Q^p), where expr
// accumulates on top of its entry value.
VecPoly ModuleGB::reduce_tracked(VecPoly v, std::vector<Polynomial>* expr) const {
  const Field& f = m_ring.field();
  std::vector<VecTerm> done;  // irreducible prefix, already canonical order
  while (!v.is_zero()) {
    const VecTerm& lt = v.lead();
    bool reduced = false;
    // quotient reducers first: keeps pure-ideal elements on pure paths
    for (const auto& q : m_quotient_gb) {
      if (PolyRing::divides(q.lead_monomial(), lt.m)) {
        Scalar c = lt.c.div(f, q.lead_coeff());
        Monomial m = PolyRing::div(lt.m, q.lead_monomial());
        v = v.axpy(c, m, VecPoly::unit(m_ring, lt.comp, q));
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      for (size_t k = 0; k < m_gb.size(); ++k) {
        const VecPoly& b = m_gb[k];
        const VecTerm& bl = b.lead();
        if (bl.comp == lt.comp && PolyRing::divides(bl.m, lt.m)) {
          Scalar c = lt.c.div(f, bl.c);
          Monomial m = PolyRing::div(lt.m, bl.m);
          v = v.axpy(c, m, b);
          if (expr) expr_axpy(*expr, c.neg(f), m, m_expr[k]);  // expr += c*m*expr_k
          reduced = true;
          break;
        }
      }
    }
    if (!reduced) {
      done.push_back(lt);
      std::vector<VecTerm> rest(v.terms().begin() + 1, v.terms().end());
      VecPoly w(m_ring);
      w = VecPoly::from_terms(m_ring, std::move(rest));
      v = std::move(w);
    }
  }
  return VecPoly::from_terms(m_ring, std::move(done));
}

void ModuleGB::run_buchberger() {
  const Field& f = m_ring.field();
  const size_t ngens = m_gens.size();

  // Working-basis invariant: each element v carries expr with
  //   v == sum_i expr[i] * gens[i]   (mod quotient * Q^p)
  // so a tag whose element reduces to zero is literally a syzygy.
  struct Pair {
    int64_t deg;
    int i;   // basis index
    int j;   // basis index, or -(q+1) for quotient element q
    Monomial lcm;
  };
  struct PairLess {
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.deg != b.deg) return a.deg < b.deg;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    }
  };
  std::set<Pair, PairLess> queue;
  std::set<std::pair<int, int>> processed;

  struct Work {
    VecPoly v;
    std::vector<Polynomial> expr;
  };
  std::vector<Work> basis;

  auto nf_mod_quotient = [&](const Polynomial& p) {
    if (m_quotient_gb.empty()) return p;
    return normal_form_with_quotients(p, m_quotient_gb).remainder;
  };

  // reduction against the working basis (same algorithm as reduce_tracked,
  // but over `basis`)
  auto reduce_work = [&](VecPoly v, std::vector<Polynomial>* expr) {
    std::vector<VecTerm> done;
    while (!v.is_zero()) {
      const VecTerm& lt = v.lead();
      bool reduced = false;
      for (const auto& q : m_quotient_gb) {
        if (PolyRing::divides(q.lead_monomial(), lt.m)) {
          Scalar c = lt.c.div(f, q.lead_coeff());
          Monomial m = PolyRing::div(lt.m, q.lead_monomial());
          v = v.axpy(c, m, VecPoly::unit(m_ring, lt.comp, q));
          reduced = true;
          break;
        }
      }
      if (!reduced) {
        for (size_t k = 0; k < basis.size(); ++k) {
          if (basis[k].v.is_zero()) continue;
          const VecTerm& bl = basis[k].v.lead();
          if (bl.comp == lt.comp && PolyRing::divides(bl.m, lt.m)) {
            Scalar c = lt.c.div(f, bl.c);
            Monomial m = PolyRing::div(lt.m, bl.m);
            v = v.axpy(c, m, basis[k].v);
            if (expr) expr_axpy(*expr, c, m, basis[k].expr);
            reduced = true;
            break;
          }
        }
      }
      if (!reduced) {
        done.push_back(lt);
        std::vector<VecTerm> rest(v.terms().begin() + 1, v.terms().end());
        v = VecPoly::from_terms(m_ring, std::move(rest));
      }
    }
    return VecPoly::from_terms(m_ring, std::move(done));
  };

  // v is "pure" when all terms sit in its lead component (the polynomial
  // case, where the coprimality criterion is valid)
  auto is_pure = [](const VecPoly& v) {
    int c0 = v.lead().comp;
    for (const auto& t : v.terms())
      if (t.comp != c0) return false;
    return true;
  };

  auto collect_syzygy = [&](std::vector<Polynomial> tag) {
    if (!m_track) return;
    bool nz = false;
    for (auto& p : tag) {
      p = nf_mod_quotient(p);
      nz = nz || !p.is_zero();
    }
    if (nz) m_syz.push_back(std::move(tag));
  };

  auto push_pairs_for = [&](int t) {
    const VecTerm& lt = basis[t].v.lead();
    for (int i = 0; i < t; ++i) {
      if (basis[i].v.is_zero()) continue;
      const VecTerm& li = basis[i].v.lead();
      if (li.comp != lt.comp) continue;
      if (PolyRing::coprime(li.m, lt.m) && is_pure(basis[i].v) && is_pure(basis[t].v)) {
        // product criterion (single-component case). The S-pair reduces to
        // zero through the pair itself and its syzygy is the Koszul one,
        // which must still be recorded.
        if (m_track) {
          Polynomial pi = basis[i].v.component(li.comp);
          Polynomial pt = basis[t].v.component(lt.comp);
          auto tag = expr_zero(m_ring, ngens);
          for (size_t g = 0; g < ngens; ++g) {
            tag[g] = pt.mul(basis[i].expr[g]).sub(pi.mul(basis[t].expr[g]));
          }
          collect_syzygy(std::move(tag));
        }
        continue;
      }
      Monomial l = m_ring.lcm(li.m, lt.m);
      queue.insert({l.wdeg, i, t, l});
    }
    for (size_t q = 0; q < m_quotient_gb.size(); ++q) {
      const Monomial& qm = m_quotient_gb[q].lead_monomial();
      // coprime case: the Koszul syzygy is a quotient multiple, zero over R
      if (PolyRing::coprime(qm, lt.m) && is_pure(basis[t].v)) continue;
      Monomial l = m_ring.lcm(qm, lt.m);
      queue.insert({l.wdeg, t, -(int)q - 1, l});
    }
  };

  auto add_element = [&](VecPoly v, std::vector<Polynomial> expr) {
    Scalar lc = v.lead().c;
    if (!lc.is_one(f)) {
      Scalar inv = lc.inv(f);
      v = v.scale(inv);
      if (m_track) expr_scale(expr, inv);
    }
    basis.push_back({std::move(v), std::move(expr)});
    push_pairs_for((int)basis.size() - 1);
  };

  // seed with the nonzero generators; zero generators contribute unit syzygies
  for (size_t i = 0; i < ngens; ++i) {
    std::vector<Polynomial> expr =
        m_track ? expr_unit(m_ring, ngens, i) : std::vector<Polynomial>{};
    if (m_gens[i].is_zero()) {
      if (m_track) m_syz.push_back(expr_unit(m_ring, ngens, i));
      continue;
    }
    VecPoly nf = reduce_work(m_gens[i], m_track ? &expr : nullptr);
    if (nf.is_zero()) {
      // generator already in the span: its reduced expression is a syzygy
      if (m_track) collect_syzygy(std::move(expr));
      continue;
    }
    add_element(std::move(nf), std::move(expr));
  }

  while (!queue.empty()) {
    Pair p = *queue.begin();
    queue.erase(queue.begin());
    if (processed.count({p.i, p.j})) continue;
    processed.insert({p.i, p.j});

    // chain criterion: some other element's lead divides the lcm and both
    // sub-pairs are already done
    bool skip = false;
    int comp = basis[p.i].v.lead().comp;
    for (size_t k = 0; k < basis.size() && !skip; ++k) {
      if ((int)k == p.i || (p.j >= 0 && (int)k == p.j)) continue;
      if (basis[k].v.is_zero()) continue;
      const VecTerm& lk = basis[k].v.lead();
      if (lk.comp != comp || !PolyRing::divides(lk.m, p.lcm)) continue;
      auto key1 = std::make_pair(std::min<int>(p.i, k), std::max<int>(p.i, k));
      std::pair<int, int> key2;
      if (p.j >= 0)
        key2 = {std::min<int>(p.j, k), std::max<int>(p.j, k)};
      else
        key2 = {(int)k, p.j};
      if (processed.count(key1) && processed.count(key2)) skip = true;
    }
    if (skip) continue;

    const Work& wi = basis[p.i];
    if (wi.v.is_zero()) continue;
    VecPoly spoly(m_ring);
    std::vector<Polynomial> tag =
        m_track ? expr_zero(m_ring, ngens) : std::vector<Polynomial>{};
    Monomial mi = PolyRing::div(p.lcm, wi.v.lead().m);
    if (p.j >= 0) {
      const Work& wj = basis[p.j];
      if (wj.v.is_zero()) continue;
      Monomial mj = PolyRing::div(p.lcm, wj.v.lead().m);
      // both monic: spair = mi*vi - mj*vj
      VecPoly a = VecPoly(m_ring).axpy(Scalar::one(f).neg(f), mi, wi.v);
      spoly = a.axpy(Scalar::one(f), mj, wj.v);
      if (m_track) {
        expr_axpy(tag, Scalar::one(f).neg(f), mi, wi.expr);  // tag += mi*expr_i
        expr_axpy(tag, Scalar::one(f), mj, wj.expr);         // tag -= mj*expr_j
      }
    } else {
      const Polynomial& q = m_quotient_gb[-p.j - 1];
      Monomial mq = PolyRing::div(p.lcm, q.lead_monomial());
      VecPoly a = VecPoly(m_ring).axpy(Scalar::one(f).neg(f), mi, wi.v);
      Scalar qinv = q.lead_coeff().inv(f);
      spoly = a.axpy(qinv, mq, VecPoly::unit(m_ring, comp, q));
      if (m_track) expr_axpy(tag, Scalar::one(f).neg(f), mi, wi.expr);
    }
    VecPoly nf = reduce_work(std::move(spoly), m_track ? &tag : nullptr);
    if (nf.is_zero()) {
      // 0 == sum tag_j gen_j (mod quotient): a syzygy
      if (m_track) collect_syzygy(std::move(tag));
      continue;
    }
    add_element(std::move(nf), std::move(tag));
  }

  // interreduce: full tail reduction of each element against the others
  for (size_t k = 0; k < basis.size(); ++k) {
    Work w = std::move(basis[k]);
    basis[k].v = VecPoly(m_ring);  // mask self
    if (w.v.is_zero()) continue;
    std::vector<Polynomial> expr = w.expr;
    VecPoly nf = reduce_work(w.v, m_track ? &expr : nullptr);
    if (nf.is_zero()) {
      // redundant basis element; its reduced expression is a syzygy
      if (m_track) collect_syzygy(std::move(expr));
      basis[k].expr.clear();
      continue;
    }
    Scalar lc = nf.lead().c;
    if (!lc.is_one(f)) {
      Scalar inv = lc.inv(f);
      nf = nf.scale(inv);
      if (m_track) expr_scale(expr, inv);
    }
    basis[k].v = std::move(nf);
    basis[k].expr = std::move(expr);
  }

  // deterministic order: ascending by lead term
  std::vector<int> idx;
  for (size_t k = 0; k < basis.size(); ++k)
    if (!basis[k].v.is_zero()) idx.push_back((int)k);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    const VecTerm& la = basis[a].v.lead();
    const VecTerm& lb = basis[b].v.lead();
    return VecPoly::compare_terms(m_ring, la.comp, la.m, lb.comp, lb.m) < 0;
  });
  for (int k : idx) {
    m_gb.push_back(std::move(basis[k].v));
    if (m_track) {
      for (auto& p : basis[k].expr) p = nf_mod_quotient(p);
      m_expr.push_back(std::move(basis[k].expr));
    }
  }

  // re-express the original generators through the final basis; the
  // difference between the trivial and computed expressions is a syzygy
  if (m_track) {
    for (size_t i = 0; i < ngens; ++i) {
      if (m_gens[i].is_zero()) continue;
      auto expr = expr_zero(m_ring, ngens);
      VecPoly nf = reduce_tracked(m_gens[i], &expr);
      check(nf.is_zero(), errc::internal, "generator does not reduce to zero");
      auto tag = expr_unit(m_ring, ngens, i);
      for (size_t j = 0; j < ngens; ++j) tag[j] = tag[j].sub(expr[j]);
      collect_syzygy(std::move(tag));
    }
  }
}

VecPoly ModuleGB::normal_form(const VecPoly& v) const {
  require_same_ring(m_ring, v.ring());
  return reduce_tracked(v, nullptr);
}

bool ModuleGB::contains_unit() const {
  for (const auto& b : m_gb)
    if (b.lead().m.is_one()) return true;
  return false;
}

std::optional<std::vector<Polynomial>> ModuleGB::express(const VecPoly& v) const {
  check(m_track, errc::internal, "express requires a tracked basis");
  auto expr = expr_zero(m_ring, m_gens.size());
  VecPoly nf = reduce_tracked(v, &expr);
  if (!nf.is_zero()) return std::nullopt;
  if (!m_quotient_gb.empty())
    for (auto& p : expr) p = normal_form_with_quotients(p, m_quotient_gb).remainder;
  return expr;
}

std::vector<VecPoly> ModuleGB::syzygies() const {
  check(m_track, errc::internal, "syzygies require a tracked basis");
  std::vector<VecPoly> out;
  for (const auto& tag : m_syz) {
    std::vector<VecTerm> ts;
    for (size_t i = 0; i < tag.size(); ++i)
      for (const auto& t : tag[i].terms()) ts.push_back({(int)i, t.m, t.c});
    VecPoly v = VecPoly::from_terms(m_ring, std::move(ts));
    if (!v.is_zero()) out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), [&](const VecPoly& a, const VecPoly& b) {
    const VecTerm& la = a.lead();
    const VecTerm& lb = b.lead();
    int c = VecPoly::compare_terms(m_ring, la.comp, la.m, lb.comp, lb.m);
    if (c != 0) return c < 0;
    return a.terms().size() < b.terms().size();
  });
  return out;
}

std::vector<Monomial> ModuleGB::lead_monomials(int comp) const {
  std::vector<Monomial> out;
  for (const auto& b : m_gb)
    if (b.lead().comp == comp) out.push_back(b.lead().m);
  return out;
}

// ---------------------------------------------------------------------------
// GroebnerBasis (ideal wrapper)

GroebnerBasis::GroebnerBasis(PolyRing ring, std::vector<Polynomial> gens, bool track)
    : m_ring(std::move(ring)), m_original(std::move(gens)) {
  std::vector<VecPoly> v;
  for (const auto& g : m_original) {
    require_same_ring(m_ring, g.ring());
    if (!g.is_zero()) v.push_back(VecPoly::unit(m_ring, 0, g));
  }
  std::vector<Polynomial> originals_nonzero;
  for (const auto& g : m_original)
    if (!g.is_zero()) originals_nonzero.push_back(g);
  // track against the nonzero originals only; expression vectors are padded
  // back to the full index set by express()
  auto engine = std::make_shared<ModuleGB>(m_ring, 1, std::move(v),
                                           std::vector<Polynomial>{}, track);
  for (const auto& b : engine->basis()) m_basis.push_back(b.component(0));
  m_engine = std::move(engine);
  for (const auto& g : m_original)
    check(member(g), errc::internal, "original generator escaped its own basis");
}

bool GroebnerBasis::contains_unit() const {
  for (const auto& b : m_basis)
    if (b.has_unit_lead()) return true;
  return false;
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  if (m_basis.empty()) return f;
  return m_engine->normal_form(VecPoly::unit(m_ring, 0, f)).component(0);
}

std::optional<std::vector<Polynomial>> GroebnerBasis::express(const Polynomial& f) const {
  auto sub = m_engine->express(VecPoly::unit(m_ring, 0, f));
  if (!sub) return std::nullopt;
  // repad to the original index set (zero generators got skipped)
  std::vector<Polynomial> out(m_original.size(), Polynomial(m_ring));
  size_t k = 0;
  for (size_t i = 0; i < m_original.size(); ++i) {
    if (m_original[i].is_zero()) continue;
    out[i] = (*sub)[k++];
  }
  return out;
}

std::vector<Monomial> GroebnerBasis::lead_monomials() const {
  std::vector<Monomial> out;
  for (const auto& b : m_basis) out.push_back(b.lead_monomial());
  return out;
}

// ---------------------------------------------------------------------------
// plain division

DivisionResult normal_form_with_quotients(const Polynomial& f,
                                          const std::vector<Polynomial>& divisors) {
  const PolyRing& r = f.ring();
  const Field& fld = r.field();
  DivisionResult res;
  res.remainder = Polynomial(r);
  res.quotients.assign(divisors.size(), Polynomial(r));
  Polynomial cur = f;
  std::vector<Term> rem;
  while (!cur.is_zero()) {
    const Term& lt = cur.lead();
    bool reduced = false;
    for (size_t i = 0; i < divisors.size(); ++i) {
      const Polynomial& d = divisors[i];
      if (d.is_zero()) continue;
      if (PolyRing::divides(d.lead_monomial(), lt.m)) {
        Scalar c = lt.c.div(fld, d.lead_coeff());
        Monomial m = PolyRing::div(lt.m, d.lead_monomial());
        res.quotients[i] =
            res.quotients[i].add(Polynomial::monomial_term(r, m, c));
        cur = cur.axpy(c, m, d);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.push_back(lt);
      std::vector<Term> rest(cur.terms().begin() + 1, cur.terms().end());
      cur = Polynomial::from_terms(r, std::move(rest));
    }
  }
  res.remainder = Polynomial::from_terms(r, std::move(rem));
  return res;
}

}  // namespace cisupport
