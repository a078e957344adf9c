#include "cisupport/poly.hpp"

#include <algorithm>
#include <cctype>

#include "cisupport/error.hpp"

namespace cisupport {

void require_same_ring(const PolyRing& a, const PolyRing& b) {
  check(a.compatible(b), errc::ring_mismatch, "operands live in different rings");
}

Polynomial Polynomial::constant(const PolyRing& r, const Scalar& c) {
  Polynomial p(r);
  if (!c.is_zero(r.field())) p.m_terms.push_back({r.one(), c});
  return p;
}

Polynomial Polynomial::from_int(const PolyRing& r, long v) {
  return constant(r, Scalar::from_int(r.field(), v));
}

Polynomial Polynomial::variable(const PolyRing& r, int i, int power) {
  Polynomial p(r);
  if (power == 0) return from_int(r, 1);
  p.m_terms.push_back({r.var(i, power), Scalar::one(r.field())});
  return p;
}

Polynomial Polynomial::monomial_term(const PolyRing& r, const Monomial& m, const Scalar& c) {
  Polynomial p(r);
  if (!c.is_zero(r.field())) p.m_terms.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(const PolyRing& r, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return r.compare(a.m, b.m) > 0; });
  Polynomial p(r);
  const Field& f = r.field();
  for (auto& t : terms) {
    if (!p.m_terms.empty() && PolyRing::equal(p.m_terms.back().m, t.m)) {
      p.m_terms.back().c = p.m_terms.back().c.add(f, t.c);
    } else {
      p.m_terms.push_back(std::move(t));
    }
  }
  // strip zeros introduced by cancellation
  std::vector<Term> out;
  out.reserve(p.m_terms.size());
  for (auto& t : p.m_terms)
    if (!t.c.is_zero(f)) out.push_back(std::move(t));
  p.m_terms = std::move(out);
  return p;
}

// merge two canonical term lists with +/- sign on the second
static std::vector<Term> merge(const PolyRing& r, const std::vector<Term>& a,
                               const std::vector<Term>& b, bool negate_b) {
  const Field& f = r.field();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = r.compare(a[i].m, b[j].m);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].m, negate_b ? b[j].c.neg(f) : b[j].c});
      ++j;
    } else {
      Scalar s = negate_b ? a[i].c.sub(f, b[j].c) : a[i].c.add(f, b[j].c);
      if (!s.is_zero(f)) out.push_back({a[i].m, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].m, negate_b ? b[j].c.neg(f) : b[j].c});
  return out;
}

Polynomial Polynomial::add(const Polynomial& o) const {
  require_same_ring(m_ring, o.m_ring);
  Polynomial p(m_ring);
  p.m_terms = merge(m_ring, m_terms, o.m_terms, false);
  return p;
}

Polynomial Polynomial::sub(const Polynomial& o) const {
  require_same_ring(m_ring, o.m_ring);
  Polynomial p(m_ring);
  p.m_terms = merge(m_ring, m_terms, o.m_terms, true);
  return p;
}

Polynomial Polynomial::mul(const Polynomial& o) const {
  require_same_ring(m_ring, o.m_ring);
  const Field& f = m_ring.field();
  std::vector<Term> prods;
  prods.reserve(m_terms.size() * o.m_terms.size());
  for (const auto& a : m_terms)
    for (const auto& b : o.m_terms)
      prods.push_back({PolyRing::mul(a.m, b.m), a.c.mul(f, b.c)});
  return from_terms(m_ring, std::move(prods));
}

Polynomial Polynomial::scale(const Scalar& c) const {
  const Field& f = m_ring.field();
  if (c.is_zero(f)) return Polynomial(m_ring);
  Polynomial p(m_ring);
  p.m_terms.reserve(m_terms.size());
  for (const auto& t : m_terms) p.m_terms.push_back({t.m, t.c.mul(f, c)});
  return p;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Scalar& c) const {
  const Field& f = m_ring.field();
  if (c.is_zero(f)) return Polynomial(m_ring);
  Polynomial p(m_ring);
  p.m_terms.reserve(m_terms.size());
  for (const auto& t : m_terms) p.m_terms.push_back({PolyRing::mul(t.m, m), t.c.mul(f, c)});
  return p;
}

Polynomial Polynomial::neg() const {
  const Field& f = m_ring.field();
  Polynomial p(m_ring);
  p.m_terms.reserve(m_terms.size());
  for (const auto& t : m_terms) p.m_terms.push_back({t.m, t.c.neg(f)});
  return p;
}

Polynomial Polynomial::axpy(const Scalar& c, const Monomial& m, const Polynomial& g) const {
  Polynomial scaled = g.mul_term(m, c);
  Polynomial p(m_ring);
  p.m_terms = merge(m_ring, m_terms, scaled.m_terms, true);
  return p;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scale(lead_coeff().inv(m_ring.field()));
}

bool Polynomial::equals(const Polynomial& o) const {
  if (m_terms.size() != o.m_terms.size()) return false;
  const Field& f = m_ring.field();
  for (size_t i = 0; i < m_terms.size(); ++i) {
    if (!PolyRing::equal(m_terms[i].m, o.m_terms[i].m)) return false;
    if (!m_terms[i].c.equals(f, o.m_terms[i].c)) return false;
  }
  return true;
}

int64_t Polynomial::degree() const {
  int64_t d = -1;
  for (const auto& t : m_terms) d = std::max(d, t.m.wdeg);
  return d;
}

std::optional<int64_t> Polynomial::homogeneous_degree() const {
  if (is_zero()) return -1;
  int64_t d = m_terms.front().m.wdeg;
  for (const auto& t : m_terms)
    if (t.m.wdeg != d) return std::nullopt;
  return d;
}

Scalar Polynomial::constant_coeff() const {
  const Field& f = m_ring.field();
  for (const auto& t : m_terms)
    if (t.m.is_one()) return t.c;
  return Scalar::zero(f);
}

bool Polynomial::has_unit_lead() const { return !is_zero() && lead_monomial().is_one(); }

bool Polynomial::supported_on(const std::vector<bool>& keep) const {
  for (const auto& t : m_terms)
    for (size_t i = 0; i < t.m.e.size(); ++i)
      if (t.m.e[i] > 0 && !keep[i]) return false;
  return true;
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  const Field& f = m_ring.field();
  std::string s;
  bool first = true;
  for (const auto& t : m_terms) {
    std::string c = t.c.str(f);
    bool neg = !c.empty() && c[0] == '-';
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? "-" : "+";
    }
    if (neg) c = c.substr(1);
    first = false;
    if (t.m.is_one()) {
      s += c;
    } else {
      if (c != "1") s += c + "*";
      s += m_ring.monomial_str(t.m);
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// expression parser

namespace {

struct PolyParser {
  const PolyRing& ring;
  const std::string& text;
  size_t pos = 0;

  [[noreturn]] void err(const std::string& what) {
    fail(errc::parse_error,
         what + " at offset " + std::to_string(pos) + " in '" + text + "'");
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  long parse_uint() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
    if (pos == start) err("expected integer");
    return std::stol(text.substr(start, pos - start));
  }

  Polynomial parse_atom() {
    skip_ws();
    if (pos >= text.size()) err("unexpected end of expression");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      Polynomial p = parse_sum();
      if (!eat(')')) err("expected ')'");
      return p;
    }
    if (std::isdigit((unsigned char)c)) {
      size_t start = pos;
      while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
      std::string num = text.substr(start, pos - start);
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        size_t dstart = pos;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
        if (pos == dstart) err("expected denominator");
        num += "/" + text.substr(dstart, pos - dstart);
      }
      return Polynomial::constant(ring, Scalar::parse(ring.field(), num));
    }
    if (std::isalpha((unsigned char)c) || c == '_') {
      size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum((unsigned char)text[pos]) || text[pos] == '_'))
        ++pos;
      std::string name = text.substr(start, pos - start);
      int idx = ring.var_index(name);
      if (idx < 0) err("unknown variable '" + name + "'");
      return Polynomial::variable(ring, idx);
    }
    err(std::string("unexpected character '") + c + "'");
  }

  Polynomial parse_power() {
    Polynomial base = parse_atom();
    if (eat('^')) {
      long e = parse_uint();
      Polynomial r = Polynomial::from_int(ring, 1);
      for (long i = 0; i < e; ++i) r = r.mul(base);
      return r;
    }
    return base;
  }

  Polynomial parse_product() {
    Polynomial p = parse_power();
    while (eat('*')) p = p.mul(parse_power());
    return p;
  }

  Polynomial parse_sum() {
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Polynomial p = parse_product();
    if (neg) p = p.neg();
    while (true) {
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos;
        Polynomial q = parse_product();
        p = c == '+' ? p.add(q) : p.sub(q);
      } else {
        break;
      }
    }
    return p;
  }
};

}  // namespace

Polynomial parse_polynomial(const PolyRing& r, const std::string& text) {
  PolyParser p{r, text};
  Polynomial result = p.parse_sum();
  p.skip_ws();
  if (p.pos != text.size()) p.err("trailing input");
  return result;
}

}  // namespace cisupport
