#ifndef CISUPPORT_HILBERT_HPP
#define CISUPPORT_HILBERT_HPP

#include <vector>

#include <gmpxx.h>

#include "cisupport/module_gb.hpp"

namespace cisupport {

/// Laurent polynomial over Z: t^shift * sum coeffs[i] t^i.
struct ZPoly {
  int64_t shift = 0;
  std::vector<mpz_class> coeffs;  // coeffs.front() and back() nonzero unless empty

  static ZPoly zero() { return {}; }
  static ZPoly one() { return {0, {1}}; }
  static ZPoly monomial(int64_t d, long c = 1) { return {d, {mpz_class(c)}}; }

  bool is_zero() const { return coeffs.empty(); }
  void normalize();
  ZPoly add(const ZPoly& o) const;
  ZPoly sub(const ZPoly& o) const;
  ZPoly mul(const ZPoly& o) const;
  ZPoly shifted(int64_t d) const;
  bool equals(const ZPoly& o) const;
  /// Exact division by (1 - t^w); nullopt when not divisible.
  std::optional<ZPoly> divide_one_minus_tw(int64_t w) const;
  mpz_class eval_at_one() const;
  std::string str() const;
};

/// Rational function N(t) / prod_i (1 - t^{w_i}) with the denominator fixed
/// by the ambient ring's variable weights.
struct HilbertSeries {
  std::vector<int> denom_weights;
  ZPoly num;

  HilbertSeries add(const HilbertSeries& o) const;
  HilbertSeries sub(const HilbertSeries& o) const;
  bool equals(const HilbertSeries& o) const;  // same denominator shape required
  /// Power series coefficients for degrees [lo, hi] (lo may be negative).
  std::vector<mpz_class> expand(int64_t lo, int64_t hi) const;
  /// Finite length: numerator exactly divisible by the full denominator.
  bool is_polynomial() const;
  /// Sum of all coefficients when is_polynomial(); the module length.
  mpz_class total() const;
  /// Dimension reading: #denominator factors minus cancellable ones; equals
  /// the order of the pole at t=1, i.e. the Krull dimension of the module.
  int pole_order_at_one() const;
  std::string str() const;
};

/// Hilbert numerator of a quotient by a monomial ideal (weighted degrees).
ZPoly hilbert_numerator_monomial(const PolyRing& ring, const std::vector<Monomial>& gens);

/// H of ring/I for a homogeneous ideal.
HilbertSeries hilbert_series_quotient(const std::vector<Polynomial>& gens,
                                      const PolyRing& ring);

/// H of coker(columns) inside the graded free module with the given row
/// degrees, over ring/(modulus). Inputs must be homogeneous.
HilbertSeries hilbert_series_module(const PolyRing& ring,
                                    const std::vector<int64_t>& row_degrees,
                                    const std::vector<VecPoly>& columns,
                                    const std::vector<Polynomial>& modulus);

}  // namespace cisupport

#endif
