#include "cisupport/eisenbud.hpp"

#include <algorithm>

#include "cisupport/error.hpp"

namespace cisupport {

PolyRing operator_ring(const CIRing& ring) {
  std::vector<std::string> vars;
  for (int i = 1; i <= ring.codim(); ++i) vars.push_back("x" + std::to_string(i));
  return make_ring(ring.ambient().field(), vars, MonomialOrder::grevlex(),
                   std::vector<int>(ring.codim(), 2));
}

EisenbudOperators::EisenbudOperators(CIRing ring, int bound,
                                     std::vector<std::vector<PolyMatrix>> lifted)
    : m_ring(std::move(ring)), m_bound(bound), m_lift(std::move(lifted)) {}

const PolyMatrix& EisenbudOperators::lifted(int j, int i) const {
  check(j >= 2 && j <= m_bound, errc::internal, "operator degree out of range");
  check(i >= 1 && i <= m_ring.codim(), errc::internal, "operator index out of range");
  return m_lift[j - 2][i - 1];
}

PolyMatrix EisenbudOperators::reduced(int j, int i) const {
  const PolyMatrix& l = lifted(j, i);
  return l.map_entries([&](const Polynomial& p) { return m_ring.reduce(p); });
}

EisenbudOperators extract_operators(const Resolution& res, const CIRing& ring, int bound) {
  check(bound >= 2, errc::bound_exceeded, "operator extraction needs bound >= 2");
  const PolyRing& Q = ring.ambient();
  const int c = ring.codim();
  std::vector<std::vector<PolyMatrix>> lift;
  for (int j = 2; j <= bound; ++j) {
    int rows = j - 2 <= res.length() ? res.betti(j - 2) : 0;
    int cols = j <= res.length() ? res.betti(j) : 0;
    std::vector<PolyMatrix> phis(c, PolyMatrix(Q, rows, cols));
    if (cols > 0 && j - 1 <= res.length()) {
      PolyMatrix square = res.diff(j - 1).mul(res.diff(j));
      for (int r = 0; r < rows; ++r)
        for (int s = 0; s < cols; ++s) {
          const Polynomial& entry = square.at(r, s);
          if (entry.is_zero()) continue;
          auto expr = ring.sequence_basis().express(entry);
          check(expr.has_value(), errc::lift_decomposition_failure,
                "entry of the squared lift is not in the sequence ideal");
          for (int i = 0; i < c; ++i) phis[i].set(r, s, (*expr)[i]);
        }
      // exact reassembly check over the ambient ring
      for (int r = 0; r < rows; ++r)
        for (int s = 0; s < cols; ++s) {
          Polynomial sum(Q);
          for (int i = 0; i < c; ++i)
            sum = sum.add(ring.sequence()[i].mul(phis[i].at(r, s)));
          check(sum.equals(square.at(r, s)), errc::lift_decomposition_failure,
                "lift decomposition does not reassemble");
        }
    }
    lift.push_back(std::move(phis));
  }
  return EisenbudOperators(ring, bound, std::move(lift));
}

ExtSModule::ExtSModule(CIRing ring, PolyRing S, std::vector<int> dims,
                       std::vector<std::vector<KMatrix>> action)
    : m_ring(std::move(ring)), m_S(std::move(S)), m_dims(std::move(dims)),
      m_action(std::move(action)) {
  const Field& f = m_S.field();
  const int c = m_ring.codim();
  // the operators must commute on Ext
  for (int j = 0; j + 4 <= bound(); ++j)
    for (int i = 0; i < c; ++i)
      for (int l = i + 1; l < c; ++l) {
        KMatrix a = action(j + 2, i + 1).mul(action(j, l + 1));
        KMatrix b = action(j + 2, l + 1).mul(action(j, i + 1));
        check(a.equals(b), errc::commutation_failure,
              "cohomology operators fail to commute at degree " + std::to_string(j));
      }
  (void)f;
}

const KMatrix& ExtSModule::action(int j, int i) const {
  check(j >= 0 && j + 2 <= bound(), errc::internal, "action degree out of range");
  return m_action[j][i - 1];
}

bool ExtSModule::is_zero() const {
  for (int d : m_dims)
    if (d > 0) return false;
  return true;
}

ExtSModule ext_s_module(const EisenbudOperators& ops, const Resolution& res) {
  const CIRing& ring = ops.ring();
  const Field& f = ring.ambient().field();
  const int c = ring.codim();
  const int bound = ops.bound();
  std::vector<int> dims;
  for (int j = 0; j <= bound; ++j) dims.push_back(j <= res.length() ? res.betti(j) : 0);
  std::vector<std::vector<KMatrix>> action;
  for (int j = 0; j + 2 <= bound; ++j) {
    std::vector<KMatrix> row;
    for (int i = 1; i <= c; ++i) {
      const PolyMatrix& phi = ops.lifted(j + 2, i);
      KMatrix a(f, phi.cols(), phi.rows());
      for (int r = 0; r < phi.rows(); ++r)
        for (int s = 0; s < phi.cols(); ++s) a.set(s, r, phi.at(r, s).constant_coeff());
      row.push_back(std::move(a));
    }
    action.push_back(std::move(row));
  }
  return ExtSModule(ring, operator_ring(ring), std::move(dims), std::move(action));
}

namespace {

void enumerate_monomials(int nvars, int degree, std::vector<int32_t>& cur, int pos,
                         std::vector<std::vector<int32_t>>& out) {
  if (pos == nvars - 1) {
    cur[pos] = degree;
    out.push_back(cur);
    return;
  }
  for (int e = degree; e >= 0; --e) {
    cur[pos] = e;
    enumerate_monomials(nvars, degree - e, cur, pos + 1, out);
  }
}

// composite action of the monomial alpha starting at component degree j
KMatrix monomial_action(const ExtSModule& E, const std::vector<int32_t>& alpha, int j) {
  const Field& f = E.S().field();
  KMatrix m = KMatrix::identity(f, E.dim(j));
  int cur = j;
  for (size_t i = 0; i < alpha.size(); ++i)
    for (int32_t t = 0; t < alpha[i]; ++t) {
      m = E.action(cur, (int)i + 1).mul(m);
      cur += 2;
    }
  return m;
}

bool ideal_radical_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                         const PolyRing& S) {
  for (const auto& g : a)
    if (!radical_membership(g, b, S)) return false;
  for (const auto& g : b)
    if (!radical_membership(g, a, S)) return false;
  return true;
}

}  // namespace

AnnihilatorReport annihilator_stabilized(const ExtSModule& E, int window) {
  check(window >= 1, errc::internal, "stabilization window must be positive");
  const PolyRing& S = E.S();
  const Field& f = S.field();
  const int c = S.nvars();
  const int bound = E.bound();

  AnnihilatorReport rep;
  if (E.is_zero()) {
    rep.ideal = {Polynomial::from_int(S, 1)};
    rep.stabilized_at = 0;
    rep.generation_degree = -1;
    return rep;
  }

  // observed generation degree: top j where the stacked action does not
  // already cover E_j
  int g0 = -1;
  for (int j = 0; j <= bound; ++j) {
    if (E.dim(j) == 0) continue;
    int prev = j - 2 >= 0 ? E.dim(j - 2) : 0;
    bool surjective = false;
    if (prev > 0) {
      KMatrix stacked(f, E.dim(j), c * prev);
      for (int i = 1; i <= c; ++i) {
        const KMatrix& a = E.action(j - 2, i);
        for (int r = 0; r < a.rows(); ++r)
          for (int s = 0; s < a.cols(); ++s) stacked.set(r, (i - 1) * prev + s, a.at(r, s));
      }
      surjective = stacked.rank() == E.dim(j);
    }
    if (!surjective) g0 = j;
  }
  rep.generation_degree = g0;

  // the annihilator piece of degree d at truncation N: forms vanishing on
  // all components up to g0 (enough data when g0 + 2d <= N)
  auto ideal_at = [&](int N) {
    std::vector<Polynomial> gens;
    int dcap = (N - g0) / 2;
    for (int d = 1; d <= dcap; ++d) {
      std::vector<std::vector<int32_t>> monos;
      std::vector<int32_t> cur(c, 0);
      enumerate_monomials(c, d, cur, 0, monos);
      // evaluation matrix: one row per (start degree j, target entry)
      int rows = 0;
      for (int j = 0; j <= g0; ++j)
        if (E.dim(j) > 0) rows += E.dim(j + 2 * d) * E.dim(j);
      KMatrix eval(f, rows, (int)monos.size());
      for (size_t t = 0; t < monos.size(); ++t) {
        int row = 0;
        for (int j = 0; j <= g0; ++j) {
          if (E.dim(j) == 0) continue;
          KMatrix m = monomial_action(E, monos[t], j);
          for (int r = 0; r < m.rows(); ++r)
            for (int s = 0; s < m.cols(); ++s) eval.set(row + r * m.cols() + s, (int)t,
                                                        m.at(r, s));
          row += m.rows() * m.cols();
        }
      }
      KMatrix ns = eval.nullspace();
      if (ns.cols() == 0) continue;
      for (int k = 0; k < ns.cols(); ++k) {
        std::vector<Term> ts;
        for (size_t t = 0; t < monos.size(); ++t) {
          const Scalar& coef = ns.at((int)t, k);
          if (coef.is_zero(f)) continue;
          ts.push_back({S.monomial(monos[t]), coef});
        }
        Polynomial g = Polynomial::from_terms(S, std::move(ts));
        if (g.is_zero()) continue;
        GroebnerBasis current(S, gens);
        if (!current.member(g)) gens.push_back(g.monic());
      }
    }
    return gens;
  };

  int start = std::max(g0 + 2, 2);
  std::vector<int> levels;
  for (int N = start; N <= bound; N += 2) levels.push_back(N);
  check(!levels.empty(), errc::truncation_insufficient,
        "resolution bound too small to see past the generation degree");

  std::vector<std::vector<Polynomial>> ideals;
  for (int N : levels) {
    ideals.push_back(ideal_at(N));
    rep.history.push_back({N, ideals.back()});
  }
  int run = 0;
  for (size_t k = 0; k + 1 < ideals.size(); ++k) {
    if (ideal_radical_equal(ideals[k], ideals[k + 1], S)) {
      ++run;
      if (run >= window) {
        rep.ideal = ideals[k + 1 - run];
        rep.stabilized_at = levels[k + 1 - run];
        return rep;
      }
    } else {
      run = 0;
    }
  }
  fail(errc::truncation_insufficient,
       "annihilator did not stabilize within the resolution bound");
}

std::vector<Polynomial> apply_coordinate_change(const std::vector<Polynomial>& ideal,
                                                const PolyRing& S, const KMatrix& q) {
  const Field& f = S.field();
  const int c = S.nvars();
  check(q.rows() == c && q.cols() == c, errc::singular_matrix,
        "coordinate change must be square of size codim");
  auto qt_inv = q.transpose().inverse();
  check(qt_inv.has_value(), errc::singular_matrix, "coordinate change is singular");
  // x_i = sum_j (q^T)^{-1}[i][j] x'_j
  std::vector<Polynomial> images;
  for (int i = 0; i < c; ++i) {
    Polynomial img(S);
    for (int j = 0; j < c; ++j) {
      const Scalar& coef = qt_inv->at(i, j);
      if (coef.is_zero(f)) continue;
      img = img.add(Polynomial::monomial_term(S, S.var(j), coef));
    }
    images.push_back(img);
  }
  std::vector<Polynomial> out;
  for (const auto& g : ideal) out.push_back(substitute(g, S, images));
  return out;
}

}  // namespace cisupport
