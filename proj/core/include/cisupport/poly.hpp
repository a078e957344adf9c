#ifndef CISUPPORT_POLY_HPP
#define CISUPPORT_POLY_HPP

#include <optional>
#include <string>
#include <vector>

#include "cisupport/ring.hpp"

namespace cisupport {

struct Term {
  Monomial m;
  Scalar c;
};

/// Multivariate polynomial in canonical form: terms strictly descending in
/// the ring's monomial order, no zero coefficients. Canonical form is unique
/// per (ring, mathematical polynomial); all operations preserve it.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(PolyRing ring) : m_ring(std::move(ring)) {}

  static Polynomial zero(const PolyRing& r) { return Polynomial(r); }
  static Polynomial constant(const PolyRing& r, const Scalar& c);
  static Polynomial from_int(const PolyRing& r, long v);
  static Polynomial variable(const PolyRing& r, int i, int power = 1);
  static Polynomial monomial_term(const PolyRing& r, const Monomial& m, const Scalar& c);
  /// Sorts, combines and strips zero terms: the `normal_form_sort` operation.
  static Polynomial from_terms(const PolyRing& r, std::vector<Term> terms);

  const PolyRing& ring() const { return m_ring; }
  const std::vector<Term>& terms() const { return m_terms; }
  bool is_zero() const { return m_terms.empty(); }
  size_t term_count() const { return m_terms.size(); }

  const Term& lead() const { return m_terms.front(); }
  const Monomial& lead_monomial() const { return m_terms.front().m; }
  const Scalar& lead_coeff() const { return m_terms.front().c; }

  Polynomial add(const Polynomial& o) const;
  Polynomial sub(const Polynomial& o) const;
  Polynomial mul(const Polynomial& o) const;
  Polynomial scale(const Scalar& c) const;
  Polynomial mul_term(const Monomial& m, const Scalar& c) const;
  Polynomial neg() const;

  /// this - c * m * g, the reduction step primitive.
  Polynomial axpy(const Scalar& c, const Monomial& m, const Polynomial& g) const;

  Polynomial monic() const;
  bool equals(const Polynomial& o) const;

  /// Degree of the highest term under weighted grading (-1 for zero; the
  /// zero polynomial is homogeneous of every degree).
  int64_t degree() const;
  /// Weighted degree if homogeneous; nullopt otherwise. Zero reports -1.
  std::optional<int64_t> homogeneous_degree() const;

  /// Coefficient of the monomial 1 (the "constant term").
  Scalar constant_coeff() const;
  bool has_unit_lead() const;  // nonzero and leading monomial is 1

  /// True if the polynomial involves only variables with indices in `keep`.
  bool supported_on(const std::vector<bool>& keep) const;

  std::string str() const;

 private:
  PolyRing m_ring;
  std::vector<Term> m_terms;
};

/// Parses "+ - * ^ ( )" expressions with integer or rational literals over
/// the ring's variables. Errors carry offsets into the text.
Polynomial parse_polynomial(const PolyRing& r, const std::string& text);

void require_same_ring(const PolyRing& a, const PolyRing& b);

}  // namespace cisupport

#endif
