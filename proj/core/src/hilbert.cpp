#include "cisupport/hilbert.hpp"

#include <algorithm>
#include <map>

#include "cisupport/error.hpp"

namespace cisupport {

void ZPoly::normalize() {
  size_t lead = 0;
  while (lead < coeffs.size() && coeffs[lead] == 0) ++lead;
  size_t tail = coeffs.size();
  while (tail > lead && coeffs[tail - 1] == 0) --tail;
  if (lead == tail) {
    coeffs.clear();
    shift = 0;
    return;
  }
  if (lead > 0) coeffs.erase(coeffs.begin(), coeffs.begin() + lead);
  coeffs.resize(tail - lead);
  shift += (int64_t)lead;
}

ZPoly ZPoly::add(const ZPoly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  int64_t lo = std::min(shift, o.shift);
  int64_t hi = std::max(shift + (int64_t)coeffs.size(), o.shift + (int64_t)o.coeffs.size());
  ZPoly r;
  r.shift = lo;
  r.coeffs.assign(hi - lo, 0);
  for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[shift - lo + i] += coeffs[i];
  for (size_t i = 0; i < o.coeffs.size(); ++i) r.coeffs[o.shift - lo + i] += o.coeffs[i];
  r.normalize();
  return r;
}

ZPoly ZPoly::sub(const ZPoly& o) const {
  ZPoly n = o;
  for (auto& c : n.coeffs) c = -c;
  return add(n);
}

ZPoly ZPoly::mul(const ZPoly& o) const {
  if (is_zero() || o.is_zero()) return zero();
  ZPoly r;
  r.shift = shift + o.shift;
  r.coeffs.assign(coeffs.size() + o.coeffs.size() - 1, 0);
  for (size_t i = 0; i < coeffs.size(); ++i)
    for (size_t j = 0; j < o.coeffs.size(); ++j) r.coeffs[i + j] += coeffs[i] * o.coeffs[j];
  r.normalize();
  return r;
}

ZPoly ZPoly::shifted(int64_t d) const {
  ZPoly r = *this;
  if (!r.is_zero()) r.shift += d;
  return r;
}

bool ZPoly::equals(const ZPoly& o) const {
  return shift == o.shift && coeffs == o.coeffs;
}

std::optional<ZPoly> ZPoly::divide_one_minus_tw(int64_t w) const {
  // N = (1 - t^w) * Q  =>  Q coefficients by forward recurrence
  if (is_zero()) return zero();
  ZPoly q;
  q.shift = shift;
  if ((int64_t)coeffs.size() < w + 1) {
    // degree too small unless N == 0
    return std::nullopt;
  }
  q.coeffs.assign(coeffs.size() - w, 0);
  for (size_t i = 0; i < q.coeffs.size(); ++i) {
    mpz_class c = coeffs[i];
    if ((int64_t)i >= w) c += q.coeffs[i - w];
    q.coeffs[i] = c;
  }
  // verify the tail cancels
  for (size_t i = q.coeffs.size(); i < coeffs.size(); ++i) {
    mpz_class c = coeffs[i] + q.coeffs[i - w];
    if (c != 0) return std::nullopt;
  }
  q.normalize();
  // re-verify degree bookkeeping: q*(1-t^w) == *this
  return q;
}

mpz_class ZPoly::eval_at_one() const {
  mpz_class s = 0;
  for (const auto& c : coeffs) s += c;
  return s;
}

std::string ZPoly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    int64_t d = shift + (int64_t)i;
    std::string c = coeffs[i].get_str();
    if (!s.empty() && c[0] != '-') s += "+";
    if (d == 0) {
      s += c;
    } else {
      if (c == "1")
        ;
      else if (c == "-1")
        s += "-";
      else
        s += c + "*";
      s += "t";
      if (d != 1) s += "^" + std::to_string(d);
    }
  }
  return s;
}

HilbertSeries HilbertSeries::add(const HilbertSeries& o) const {
  check(denom_weights == o.denom_weights, errc::internal,
        "Hilbert series denominators differ");
  return {denom_weights, num.add(o.num)};
}

HilbertSeries HilbertSeries::sub(const HilbertSeries& o) const {
  check(denom_weights == o.denom_weights, errc::internal,
        "Hilbert series denominators differ");
  return {denom_weights, num.sub(o.num)};
}

bool HilbertSeries::equals(const HilbertSeries& o) const {
  return denom_weights == o.denom_weights && num.equals(o.num);
}

std::vector<mpz_class> HilbertSeries::expand(int64_t lo, int64_t hi) const {
  std::vector<mpz_class> out(hi - lo + 1, 0);
  if (num.is_zero()) return out;
  // series = num * prod 1/(1-t^w); expand iteratively up to hi
  int64_t base = num.shift;
  std::vector<mpz_class> cur = num.coeffs;
  cur.resize(std::max<int64_t>((int64_t)cur.size(), hi - base + 1), 0);
  for (int w : denom_weights) {
    // multiply by 1/(1-t^w): prefix-sum with stride w
    for (size_t i = w; i < cur.size(); ++i) cur[i] += cur[i - w];
  }
  for (int64_t d = lo; d <= hi; ++d) {
    int64_t idx = d - base;
    if (idx >= 0 && idx < (int64_t)cur.size()) out[d - lo] = cur[idx];
  }
  return out;
}

bool HilbertSeries::is_polynomial() const {
  ZPoly q = num;
  for (int w : denom_weights) {
    auto d = q.divide_one_minus_tw(w);
    if (!d) return false;
    q = *d;
  }
  return true;
}

mpz_class HilbertSeries::total() const {
  ZPoly q = num;
  for (int w : denom_weights) {
    auto d = q.divide_one_minus_tw(w);
    check(d.has_value(), errc::not_finite_length, "Hilbert series has a pole at t=1");
    q = *d;
  }
  return q.eval_at_one();
}

int HilbertSeries::pole_order_at_one() const {
  if (num.is_zero()) return 0;
  // pole order = #denominator factors - vanishing order of the numerator at
  // t=1 (each 1-t^w has a simple zero there); division by 1-t is exact
  // whenever the value at 1 is zero
  ZPoly r = num;
  int vanish = 0;
  while (vanish < (int)denom_weights.size() && r.eval_at_one() == 0) {
    auto d = r.divide_one_minus_tw(1);
    check(d.has_value(), errc::internal, "division by 1-t failed despite zero at t=1");
    r = *d;
    ++vanish;
  }
  return (int)denom_weights.size() - vanish;
}

std::string HilbertSeries::str() const {
  std::string s = "(" + num.str() + ")";
  if (!denom_weights.empty()) {
    s += "/(";
    for (size_t i = 0; i < denom_weights.size(); ++i) {
      if (i) s += "*";
      s += "(1-t";
      if (denom_weights[i] != 1) s += "^" + std::to_string(denom_weights[i]);
      s += ")";
    }
    s += ")";
  }
  return s;
}

// ---------------------------------------------------------------------------
// monomial-ideal Hilbert numerator

namespace {

// minimal generating set of a monomial ideal
std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.wdeg < b.wdeg; });
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool divisible = false;
    for (const auto& g : out)
      if (PolyRing::divides(g, m)) {
        divisible = true;
        break;
      }
    if (!divisible) out.push_back(m);
  }
  return out;
}

ZPoly numerator_rec(const PolyRing& ring, std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return ZPoly::one();
  for (const auto& g : gens)
    if (g.is_one()) return ZPoly::zero();

  // pure powers: N = prod (1 - t^{deg gi})
  bool pure = true;
  for (const auto& g : gens) {
    int nz = 0;
    for (int32_t e : g.e) nz += e > 0;
    if (nz > 1) {
      pure = false;
      break;
    }
  }
  if (pure) {
    ZPoly n = ZPoly::one();
    for (const auto& g : gens) n = n.mul(ZPoly::one().sub(ZPoly::monomial(g.wdeg)));
    return n;
  }

  // pivot: most frequent variable among non-pure generators
  std::vector<int> freq(ring.nvars(), 0);
  for (const auto& g : gens) {
    int nz = 0;
    for (int32_t e : g.e) nz += e > 0;
    if (nz <= 1) continue;
    for (int i = 0; i < ring.nvars(); ++i)
      if (g.e[i] > 0) ++freq[i];
  }
  int pivot = 0;
  for (int i = 1; i < ring.nvars(); ++i)
    if (freq[i] > freq[pivot]) pivot = i;

  Monomial p = ring.var(pivot, 1);
  // N(I) = N(I + (p)) + t^{deg p} N(I : p)
  std::vector<Monomial> plus = gens;
  plus.push_back(p);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) {
    Monomial q = g;
    if (q.e[pivot] > 0) {
      q.e[pivot] -= 1;
      q.wdeg -= ring.weights()[pivot];
    }
    colon.push_back(q);
  }
  ZPoly a = numerator_rec(ring, std::move(plus));
  ZPoly b = numerator_rec(ring, std::move(colon));
  return a.add(b.shifted(p.wdeg));
}

}  // namespace

ZPoly hilbert_numerator_monomial(const PolyRing& ring, const std::vector<Monomial>& gens) {
  return numerator_rec(ring, gens);
}

HilbertSeries hilbert_series_quotient(const std::vector<Polynomial>& gens,
                                      const PolyRing& ring) {
  for (const auto& g : gens)
    check(g.homogeneous_degree().has_value(), errc::non_homogeneous_input,
          "Hilbert series requires homogeneous generators");
  GroebnerBasis gb(ring, gens);
  std::vector<int> w(ring.weights().begin(), ring.weights().end());
  return {w, hilbert_numerator_monomial(ring, gb.lead_monomials())};
}

HilbertSeries hilbert_series_module(const PolyRing& ring,
                                    const std::vector<int64_t>& row_degrees,
                                    const std::vector<VecPoly>& columns,
                                    const std::vector<Polynomial>& modulus) {
  for (const auto& m : modulus)
    check(m.homogeneous_degree().has_value(), errc::non_homogeneous_input,
          "modulus must be homogeneous");
  ModuleGB gb(ring, (int)row_degrees.size(), columns, modulus, false);
  std::vector<Monomial> qlead;
  {
    GroebnerBasis qgb(ring, modulus);
    qlead = qgb.lead_monomials();
  }
  std::vector<int> w(ring.weights().begin(), ring.weights().end());
  ZPoly total = ZPoly::zero();
  for (size_t r = 0; r < row_degrees.size(); ++r) {
    std::vector<Monomial> leads = qlead;
    for (const auto& m : gb.lead_monomials((int)r)) leads.push_back(m);
    total = total.add(hilbert_numerator_monomial(ring, leads).shifted(row_degrees[r]));
  }
  return {w, total};
}

}  // namespace cisupport
