#include "cisupport/ring.hpp"

#include <algorithm>
#include <set>

#include "cisupport/error.hpp"

namespace cisupport {

std::string MonomialOrder::describe() const {
  switch (kind) {
    case Kind::grevlex: return "grevlex";
    case Kind::lex: return "lex";
    case Kind::block: return "block:" + std::to_string(elim_count);
  }
  return "?";
}

PolyRing make_ring(const Field& field, const std::vector<std::string>& vars,
                   const MonomialOrder& order, const std::vector<int>& weights) {
  auto d = std::make_shared<RingData>();
  d->field = field;
  d->vars = vars;
  d->order = order;
  d->weights = weights.empty() ? std::vector<int>(vars.size(), 1) : weights;
  check(d->weights.size() == vars.size(), errc::bad_weight,
        "weight count does not match variable count");
  for (int w : d->weights)
    check(w >= 1, errc::bad_weight, "weights must be positive");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    check(!v.empty(), errc::duplicate_variable, "empty variable name");
    check(seen.insert(v).second, errc::duplicate_variable, "duplicate variable '" + v + "'");
  }
  if (order.kind == MonomialOrder::Kind::block)
    check(order.elim_count >= 0 && order.elim_count <= (int)vars.size(), errc::bad_weight,
          "block order eliminates more variables than exist");
  PolyRing r;
  r.m_d = std::move(d);
  return r;
}

bool PolyRing::compatible(const PolyRing& o) const {
  if (m_d == o.m_d) return true;
  if (!m_d || !o.m_d) return false;
  return m_d->field == o.m_d->field && m_d->vars == o.m_d->vars &&
         m_d->order == o.m_d->order && m_d->weights == o.m_d->weights;
}

bool PolyRing::same_presentation(const PolyRing& o) const {
  if (m_d == o.m_d) return true;
  if (!m_d || !o.m_d) return false;
  return m_d->field == o.m_d->field && m_d->vars == o.m_d->vars &&
         m_d->weights == o.m_d->weights;
}

int PolyRing::var_index(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if (m_d->vars[i] == name) return i;
  return -1;
}

Monomial PolyRing::one() const { return Monomial{std::vector<int32_t>(nvars(), 0), 0}; }

Monomial PolyRing::var(int i, int power) const {
  Monomial m = one();
  m.e[i] = power;
  m.wdeg = (int64_t)power * m_d->weights[i];
  return m;
}

Monomial PolyRing::monomial(const std::vector<int32_t>& exps) const {
  check((int)exps.size() == nvars(), errc::internal, "exponent vector length mismatch");
  return Monomial{exps, weighted_degree(exps)};
}

int64_t PolyRing::weighted_degree(const std::vector<int32_t>& exps) const {
  int64_t d = 0;
  for (size_t i = 0; i < exps.size(); ++i) d += (int64_t)exps[i] * m_d->weights[i];
  return d;
}

// graded reverse lex on exponent positions [lo, hi)
static int grevlex_range(const Monomial& a, const Monomial& b, const std::vector<int>& w,
                         int lo, int hi) {
  int64_t da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += (int64_t)a.e[i] * w[i];
    db += (int64_t)b.e[i] * w[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (int i = hi - 1; i >= lo; --i) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  }
  return 0;
}

static int lex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
  for (int i = lo; i < hi; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
  return 0;
}

int PolyRing::compare(const Monomial& a, const Monomial& b) const {
  const auto& d = *m_d;
  const int n = d.nvars();
  switch (d.order.kind) {
    case MonomialOrder::Kind::grevlex:
      if (a.wdeg != b.wdeg) return a.wdeg < b.wdeg ? -1 : 1;
      return grevlex_range(a, b, d.weights, 0, n);
    case MonomialOrder::Kind::lex:
      return lex_range(a, b, 0, n);
    case MonomialOrder::Kind::block: {
      int c = grevlex_range(a, b, d.weights, 0, d.order.elim_count);
      if (c != 0) return c;
      return grevlex_range(a, b, d.weights, d.order.elim_count, n);
    }
  }
  return 0;
}

Monomial PolyRing::mul(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.e.resize(a.e.size());
  for (size_t i = 0; i < a.e.size(); ++i) m.e[i] = a.e[i] + b.e[i];
  m.wdeg = a.wdeg + b.wdeg;
  return m;
}

bool PolyRing::divides(const Monomial& a, const Monomial& b) {
  if (a.wdeg > b.wdeg) return false;
  for (size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

Monomial PolyRing::div(const Monomial& b, const Monomial& a) {
  Monomial m;
  m.e.resize(a.e.size());
  for (size_t i = 0; i < a.e.size(); ++i) m.e[i] = b.e[i] - a.e[i];
  m.wdeg = b.wdeg - a.wdeg;
  return m;
}

Monomial PolyRing::lcm(const Monomial& a, const Monomial& b) const {
  Monomial m;
  m.e.resize(a.e.size());
  for (size_t i = 0; i < a.e.size(); ++i) m.e[i] = std::max(a.e[i], b.e[i]);
  m.wdeg = weighted_degree(m.e);
  return m;
}

bool PolyRing::coprime(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > 0 && b.e[i] > 0) return false;
  return true;
}

bool PolyRing::equal(const Monomial& a, const Monomial& b) {
  return a.wdeg == b.wdeg && a.e == b.e;
}

std::string PolyRing::monomial_str(const Monomial& m) const {
  std::string s;
  for (int i = 0; i < nvars(); ++i) {
    if (m.e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += m_d->vars[i];
    if (m.e[i] != 1) s += "^" + std::to_string(m.e[i]);
  }
  return s.empty() ? "1" : s;
}

std::string PolyRing::describe() const {
  std::string s = field().describe() + "[";
  for (int i = 0; i < nvars(); ++i) {
    if (i) s += ",";
    s += vars()[i];
  }
  s += "]";
  return s;
}

}  // namespace cisupport
