#include "cisupport/ci_ring.hpp"

#include <algorithm>

#include "cisupport/error.hpp"

namespace cisupport {

bool CIRing::compatible(const CIRing& o) const {
  if (m_d == o.m_d) return true;
  if (!m_d || !o.m_d) return false;
  if (!m_d->ambient.compatible(o.m_d->ambient)) return false;
  if (m_d->f.size() != o.m_d->f.size()) return false;
  for (size_t i = 0; i < m_d->f.size(); ++i)
    if (!m_d->f[i].equals(o.m_d->f[i])) return false;
  return true;
}

Polynomial CIRing::reduce(const Polynomial& p) const { return m_d->fgb.normal_form(p); }

std::string CIRing::describe() const {
  std::string s = m_d->ambient.describe() + "/(";
  for (size_t i = 0; i < m_d->f.size(); ++i) {
    if (i) s += ",";
    s += m_d->f[i].str();
  }
  return s + ")";
}

CIRing make_ci_ring(const PolyRing& Q, const std::vector<Polynomial>& f) {
  check(!f.empty(), errc::not_regular_sequence, "a complete intersection needs c >= 1");
  for (const auto& p : f) {
    require_same_ring(Q, p.ring());
    check(!p.is_zero(), errc::not_regular_sequence, "zero element in the sequence");
    check(p.homogeneous_degree().has_value(), errc::non_homogeneous_input,
          "sequence elements must be homogeneous");
    for (const auto& t : p.terms())
      check(t.m.wdeg >= 2, errc::not_regular_sequence,
            "sequence elements must have all terms of degree >= 2");
  }
  int d = krull_dimension(f, Q);
  check(d == Q.nvars() - (int)f.size(), errc::not_regular_sequence,
        "codimension certificate failed: dim Q/(f) = " + std::to_string(d) +
            ", expected " + std::to_string(Q.nvars() - (int)f.size()));
  auto data = std::make_shared<CIRing::Data>(
      CIRing::Data{Q, f, GroebnerBasis(Q, f, true)});
  CIRing r;
  r.m_d = std::move(data);
  return r;
}

std::string BettiTable::str() const {
  std::string s = "(";
  for (size_t i = 0; i < total.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(total[i]);
  }
  return s + ")";
}

BettiTable Resolution::betti_table(int upto) const {
  BettiTable b;
  for (int i = 0; i <= upto; ++i) {
    b.total.push_back(betti(i));
    std::map<int64_t, int> g;
    if (i <= length())
      for (int64_t d : degrees[i]) g[d]++;
    b.graded.push_back(std::move(g));
  }
  return b;
}

// ---------------------------------------------------------------------------
// presentation canonicalization

namespace {

// Reduce entries mod (f) and pivot away degree-zero (scalar) entries. Each
// pivot deletes one generator/relation pair; the result presents the same
// module with a minimal generator set.
void minimalize_presentation(const CIRing& ring, PolyMatrix& pres,
                             std::vector<int64_t>& gen_degrees) {
  const PolyRing& Q = ring.ambient();
  const Field& fld = Q.field();
  int rows = pres.rows(), cols = pres.cols();
  std::vector<std::vector<Polynomial>> a(rows, std::vector<Polynomial>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a[i][j] = ring.reduce(pres.at(i, j));
  std::vector<int64_t> rdeg = gen_degrees;
  std::vector<int64_t> cdeg = pres.col_degrees;
  check((int)cdeg.size() == cols || cols == 0, errc::internal,
        "presentation lacks column degrees");

  std::vector<bool> row_live(rows, true), col_live(cols, true);
  while (true) {
    int pi = -1, pj = -1;
    for (int i = 0; i < rows && pi < 0; ++i) {
      if (!row_live[i]) continue;
      for (int j = 0; j < cols; ++j) {
        if (!col_live[j]) continue;
        const Polynomial& p = a[i][j];
        if (!p.is_zero() && p.lead_monomial().is_one()) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi < 0) break;
    // scale pivot column to make the pivot 1
    Scalar inv = a[pi][pj].lead_coeff().inv(fld);
    for (int i = 0; i < rows; ++i)
      if (row_live[i]) a[i][pj] = a[i][pj].scale(inv);
    // clear the pivot row across columns
    for (int j = 0; j < cols; ++j) {
      if (!col_live[j] || j == pj) continue;
      Polynomial c = a[pi][j];
      if (c.is_zero()) continue;
      for (int i = 0; i < rows; ++i) {
        if (!row_live[i]) continue;
        a[i][j] = ring.reduce(a[i][j].sub(c.mul(a[i][pj])));
      }
    }
    // clear the pivot column across rows (generator change of basis)
    for (int i = 0; i < rows; ++i) {
      if (!row_live[i] || i == pi) continue;
      Polynomial c = a[i][pj];
      if (c.is_zero()) continue;
      for (int j = 0; j < cols; ++j) {
        if (!col_live[j]) continue;
        a[i][j] = ring.reduce(a[i][j].sub(c.mul(a[pi][j])));
      }
    }
    row_live[pi] = false;
    col_live[pj] = false;
  }

  // drop dead rows/cols and zero columns
  std::vector<int> rkeep, ckeep;
  for (int i = 0; i < rows; ++i)
    if (row_live[i]) rkeep.push_back(i);
  for (int j = 0; j < cols; ++j) {
    if (!col_live[j]) continue;
    bool nz = false;
    for (int i : rkeep) nz = nz || !a[i][j].is_zero();
    if (nz) ckeep.push_back(j);
  }
  PolyMatrix out(Q, (int)rkeep.size(), (int)ckeep.size());
  for (size_t i = 0; i < rkeep.size(); ++i)
    for (size_t j = 0; j < ckeep.size(); ++j) out.set((int)i, (int)j, a[rkeep[i]][ckeep[j]]);
  std::vector<int64_t> nrdeg, ncdeg;
  for (int i : rkeep) nrdeg.push_back(rdeg[i]);
  for (int j : ckeep) ncdeg.push_back(cdeg[j]);
  out.row_degrees = nrdeg;
  out.col_degrees = ncdeg;
  pres = std::move(out);
  gen_degrees = std::move(nrdeg);
}

}  // namespace

RMod make_rmod(const CIRing& ring, PolyMatrix pres, std::vector<int64_t> gen_degrees) {
  check((int)gen_degrees.size() == pres.rows(), errc::internal,
        "generator degree count mismatch");
  pres.row_degrees = gen_degrees;
  if (pres.cols() > 0) pres.validate_graded();
  minimalize_presentation(ring, pres, gen_degrees);
  auto d = std::make_shared<RMod::Data>();
  d->ring = ring;
  d->pres = std::move(pres);
  d->gen_degrees = std::move(gen_degrees);
  RMod m;
  m.m_d = std::move(d);
  return m;
}

PolyMatrix RMod::ambient_presentation() const {
  const CIRing& R = ring();
  const PolyRing& Q = R.ambient();
  const PolyMatrix& P = presentation();
  int g = gens();
  int extra = g * R.codim();
  PolyMatrix out(Q, g, P.cols() + extra);
  out.row_degrees = gen_degrees();
  out.col_degrees = P.col_degrees;
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < P.cols(); ++j) out.set(i, j, P.at(i, j));
  int col = P.cols();
  for (int j = 0; j < R.codim(); ++j) {
    const Polynomial& f = R.sequence()[j];
    int64_t fd = *f.homogeneous_degree();
    for (int i = 0; i < g; ++i) {
      out.set(i, col, f);
      out.col_degrees.push_back(gen_degrees()[i] + fd);
      ++col;
    }
  }
  return out;
}

const HilbertSeries& RMod::hilbert() const {
  if (!m_d->hs) {
    std::vector<VecPoly> cols;
    for (int j = 0; j < m_d->pres.cols(); ++j)
      cols.push_back(VecPoly::from_column(m_d->pres, j));
    auto hs = hilbert_series_module(ring().ambient(), gen_degrees(), cols,
                                    ring().sequence());
    m_d->hs = std::make_shared<HilbertSeries>(std::move(hs));
  }
  return *m_d->hs;
}

std::string RMod::describe() const {
  return "module(" + std::to_string(gens()) + " gens, " +
         std::to_string(presentation().cols()) + " relations)";
}

// ---------------------------------------------------------------------------
// builders

RMod present_cokernel(const CIRing& ring, const PolyMatrix& relations,
                      const std::vector<int64_t>& gen_degrees) {
  require_same_ring(ring.ambient(), relations.ring());
  PolyMatrix pres = relations;
  pres.row_degrees = gen_degrees;
  if (pres.col_degrees.empty()) {
    // infer column degrees from the first nonzero entry of each column
    for (int j = 0; j < pres.cols(); ++j) {
      int64_t d = 0;
      bool found = false;
      for (int i = 0; i < pres.rows() && !found; ++i) {
        Polynomial p = ring.reduce(pres.at(i, j));
        if (p.is_zero()) continue;
        auto hd = p.homogeneous_degree();
        check(hd.has_value(), errc::non_homogeneous_input,
              "cokernel entry is not homogeneous");
        d = *hd + gen_degrees[i];
        found = true;
      }
      pres.col_degrees.push_back(d);
    }
  }
  return make_rmod(ring, pres, gen_degrees);
}

RMod present_cyclic(const CIRing& ring, const std::vector<Polynomial>& ideal_gens) {
  PolyMatrix pres(ring.ambient(), 1, (int)ideal_gens.size());
  pres.row_degrees = {0};
  for (size_t j = 0; j < ideal_gens.size(); ++j) {
    require_same_ring(ring.ambient(), ideal_gens[j].ring());
    Polynomial p = ring.reduce(ideal_gens[j]);
    auto hd = p.homogeneous_degree();
    check(hd.has_value(), errc::non_homogeneous_input,
          "cyclic module ideal generator is not homogeneous");
    pres.set(0, (int)j, p);
    pres.col_degrees.push_back(p.is_zero() ? 0 : *hd);
  }
  return make_rmod(ring, pres, {0});
}

RMod present_residue_field(const CIRing& ring) {
  std::vector<Polynomial> vars;
  for (int i = 0; i < ring.ambient().nvars(); ++i)
    vars.push_back(Polynomial::variable(ring.ambient(), i));
  return present_cyclic(ring, vars);
}

RMod present_free(const CIRing& ring, int rank, const std::vector<int64_t>& degrees) {
  std::vector<int64_t> d = degrees.empty() ? std::vector<int64_t>(rank, 0) : degrees;
  check((int)d.size() == rank, errc::internal, "free module degree count mismatch");
  PolyMatrix pres(ring.ambient(), rank, 0);
  pres.row_degrees = d;
  return make_rmod(ring, pres, d);
}

RMod present_ideal_module(const CIRing& ring, const std::vector<Polynomial>& gens) {
  check(!gens.empty(), errc::internal, "ideal module needs generators");
  PolyMatrix row(ring.ambient(), 1, (int)gens.size());
  row.row_degrees = {0};
  std::vector<int64_t> gdeg;
  for (size_t j = 0; j < gens.size(); ++j) {
    Polynomial p = ring.reduce(gens[j]);
    auto hd = p.homogeneous_degree();
    check(hd.has_value(), errc::non_homogeneous_input,
          "ideal generator is not homogeneous");
    row.set(0, (int)j, p);
    row.col_degrees.push_back(p.is_zero() ? 0 : *hd);
    gdeg.push_back(p.is_zero() ? 0 : *hd);
  }
  // relations among the generators over R
  PolyMatrix syz = module_syzygies(row, ring.sequence());
  return make_rmod(ring, syz, gdeg);
}

}  // namespace cisupport
