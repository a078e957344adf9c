#include <algorithm>
#include <map>

#include "cisupport/ci_ring.hpp"
#include "cisupport/error.hpp"

namespace cisupport {

namespace {

// total deterministic order on vector polynomials
int vec_compare(const PolyRing& r, const VecPoly& a, const VecPoly& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  size_t n = std::min(ta.size(), tb.size());
  for (size_t i = 0; i < n; ++i) {
    int c = VecPoly::compare_terms(r, ta[i].comp, ta[i].m, tb[i].comp, tb[i].m);
    if (c != 0) return c;
  }
  if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
  return 0;
}

int64_t column_degree(const std::vector<int64_t>& row_degrees, const VecPoly& v) {
  check(!v.is_zero(), errc::internal, "degree of zero column");
  int64_t d = v.lead().m.wdeg + row_degrees[v.lead().comp];
  for (const auto& t : v.terms())
    check(t.m.wdeg + row_degrees[t.comp] == d, errc::non_homogeneous_input,
          "column is not homogeneous");
  return d;
}

/// Minimal generating set of the module spanned by `candidates` inside the
/// graded free module with the given row degrees, over ring/(modulus).
/// Degree-ascending greedy: a candidate is kept iff it is not in the span of
/// lower-degree keeps plus the k-span of same-degree keeps.
std::vector<VecPoly> minimal_generators(const PolyRing& Q,
                                        const std::vector<Polynomial>& modulus,
                                        const std::vector<int64_t>& row_degrees,
                                        std::vector<VecPoly> candidates) {
  const Field& fld = Q.field();
  std::vector<std::pair<int64_t, VecPoly>> graded;
  for (auto& v : candidates) {
    if (v.is_zero()) continue;
    graded.push_back({column_degree(row_degrees, v), std::move(v)});
  }
  std::sort(graded.begin(), graded.end(),
            [&](const std::pair<int64_t, VecPoly>& a, const std::pair<int64_t, VecPoly>& b) {
              if (a.first != b.first) return a.first < b.first;
              return vec_compare(Q, a.second, b.second) < 0;
            });

  std::vector<VecPoly> accepted;
  size_t i = 0;
  while (i < graded.size()) {
    size_t j = i;
    while (j < graded.size() && graded[j].first == graded[i].first) ++j;
    // reducer over everything accepted so far (all lower degrees)
    ModuleGB lower(Q, (int)row_degrees.size(), accepted, modulus, false);
    std::vector<VecPoly> pivots;  // k-echelon of same-degree normal forms
    for (size_t k = i; k < j; ++k) {
      VecPoly nf = lower.normal_form(graded[k].second);
      while (!nf.is_zero()) {
        bool hit = false;
        for (const auto& p : pivots) {
          if (p.lead().comp == nf.lead().comp &&
              PolyRing::equal(p.lead().m, nf.lead().m)) {
            nf = nf.axpy(nf.lead().c.div(fld, p.lead().c), Q.one(), p);
            hit = true;
            break;
          }
        }
        if (!hit) break;
      }
      if (nf.is_zero()) continue;  // redundant
      pivots.push_back(nf);
      accepted.push_back(graded[k].second);
    }
    i = j;
  }
  return accepted;
}

PolyMatrix columns_to_matrix(const PolyRing& Q, const std::vector<int64_t>& row_degrees,
                             const std::vector<VecPoly>& cols) {
  PolyMatrix m(Q, (int)row_degrees.size(), (int)cols.size());
  m.row_degrees = row_degrees;
  for (size_t j = 0; j < cols.size(); ++j) {
    for (int i = 0; i < m.rows(); ++i) m.set(i, (int)j, cols[j].component(i));
    m.col_degrees.push_back(column_degree(row_degrees, cols[j]));
  }
  return m;
}

void assert_minimal(const PolyMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      check(m.at(i, j).constant_coeff().is_zero(m.ring().field()), errc::internal,
            "differential has a unit entry; resolution not minimal");
}

// d_i o d_{i+1} == 0 over ring/(modulus)
void assert_composition_zero(const Resolution& res, const GroebnerBasis& mod_gb) {
  if (res.length() < 2) return;
  const PolyMatrix& a = res.diffs[res.length() - 2];
  const PolyMatrix& b = res.diffs[res.length() - 1];
  PolyMatrix prod = a.mul(b);
  for (int i = 0; i < prod.rows(); ++i)
    for (int j = 0; j < prod.cols(); ++j)
      check(mod_gb.normal_form(prod.at(i, j)).is_zero(), errc::internal,
            "resolution differentials do not compose to zero");
}

void extend_resolution(Resolution& res, const GroebnerBasis& mod_gb, int bound) {
  const PolyRing& Q = res.ambient;
  while (!res.finite && res.length() < bound) {
    std::vector<VecPoly> raw;
    std::vector<int64_t> rows;
    if (res.diffs.empty()) {
      check(false, errc::internal, "resolution not seeded");
    }
    const PolyMatrix& last = res.diffs.back();
    PolyMatrix syz = module_syzygies(last, res.modulus);
    rows = last.col_degrees;
    for (int j = 0; j < syz.cols(); ++j) raw.push_back(VecPoly::from_column(syz, j));
    auto mins = minimal_generators(Q, res.modulus, rows, std::move(raw));
    if (mins.empty()) {
      res.finite = true;
      return;
    }
    PolyMatrix d = columns_to_matrix(Q, rows, mins);
    assert_minimal(d);
    res.degrees.push_back(d.col_degrees);
    res.diffs.push_back(std::move(d));
    assert_composition_zero(res, mod_gb);
  }
}

Resolution seed_resolution(const PolyRing& Q, const std::vector<Polynomial>& modulus,
                           const std::vector<int64_t>& gen_degrees,
                           const PolyMatrix& relations) {
  Resolution res;
  res.ambient = Q;
  res.modulus = modulus;
  res.degrees.push_back(gen_degrees);
  std::vector<VecPoly> cols;
  for (int j = 0; j < relations.cols(); ++j) cols.push_back(VecPoly::from_column(relations, j));
  auto mins = minimal_generators(Q, modulus, gen_degrees, std::move(cols));
  if (mins.empty()) {
    res.finite = true;
    return res;
  }
  PolyMatrix d = columns_to_matrix(Q, gen_degrees, mins);
  assert_minimal(d);
  res.degrees.push_back(d.col_degrees);
  res.diffs.push_back(std::move(d));
  return res;
}

}  // namespace

int default_resolution_bound(const CIRing& ring) { return 2 * ring.dim_ambient() + 4; }

const Resolution& RMod::resolution(int bound) const {
  check(bound >= 0 && bound <= 400, errc::bound_exceeded,
        "resolution bound out of range: " + std::to_string(bound));
  if (!m_d->res) {
    auto r = seed_resolution(ring().ambient(), ring().sequence(), gen_degrees(),
                             presentation());
    m_d->res = std::make_shared<Resolution>(std::move(r));
  }
  extend_resolution(*m_d->res, ring().sequence_basis(), bound);
  return *m_d->res;
}

const Resolution& RMod::ambient_resolution() const {
  if (!m_d->qres) {
    auto r = seed_resolution(ring().ambient(), {}, gen_degrees(), ambient_presentation());
    m_d->qres = std::make_shared<Resolution>(std::move(r));
  }
  int cap = ring().dim_ambient() + 1;
  GroebnerBasis empty_gb(ring().ambient(), {});
  extend_resolution(*m_d->qres, empty_gb, cap);
  check(m_d->qres->finite, errc::internal,
        "resolution over the regular ambient ring failed to terminate");
  return *m_d->qres;
}

std::pair<const Resolution*, BettiTable> minimal_free_resolution(const RMod& m, int bound) {
  const Resolution& res = m.resolution(bound);
  return {&res, res.betti_table(bound)};
}

int projective_dimension_over_ambient(const RMod& m) {
  if (m.is_zero()) return -1;
  return m.ambient_resolution().length();
}

DepthDim depth_and_dim(const RMod& m) {
  check(!m.is_zero(), errc::zero_module, "depth of the zero module is undefined");
  int pd = projective_dimension_over_ambient(m);
  int depth = m.ring().dim_ambient() - pd;
  int dim = m.hilbert().pole_order_at_one();
  return {depth, dim, depth == dim, dim == m.ring().dim()};
}

RMod syzygy_module(const RMod& m, int i) {
  check(i >= 1, errc::bound_exceeded, "syzygy index must be >= 1");
  const Resolution& res = m.resolution(i + 1);
  if (i > res.length()) {
    // resolution already ended: the syzygy is zero
    return present_free(m.ring(), 0);
  }
  std::vector<int64_t> gdeg = res.degrees[i];
  if (i + 1 > res.length()) {
    PolyMatrix none(m.ring().ambient(), (int)gdeg.size(), 0);
    none.row_degrees = gdeg;
    return make_rmod(m.ring(), none, gdeg);
  }
  return make_rmod(m.ring(), res.diff(i + 1), gdeg);
}

int grade_of(const RMod& m) {
  check(!m.is_zero(), errc::zero_module, "grade of the zero module is undefined");
  return m.ring().dim() - depth_and_dim(m).dim;
}

int module_dim(const RMod& m) {
  if (m.is_zero()) return -1;
  return m.hilbert().pole_order_at_one();
}

}  // namespace cisupport
