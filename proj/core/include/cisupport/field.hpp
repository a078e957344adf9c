#ifndef CISUPPORT_FIELD_HPP
#define CISUPPORT_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace cisupport {

/// Coefficient field: the rationals or a prime field F_p with p < 2^31.
/// All arithmetic in the system is exact; no floating point anywhere.
struct Field {
  enum class Kind { rationals, prime };

  Kind kind = Kind::rationals;
  int64_t p = 0;  // characteristic; 0 for the rationals

  static Field rationals() { return Field{Kind::rationals, 0}; }
  static Field prime(int64_t p);

  bool is_prime_field() const { return kind == Kind::prime; }
  bool operator==(const Field& o) const { return kind == o.kind && p == o.p; }
  std::string describe() const;
};

/// A field element. For the rationals the mpq member is authoritative; for
/// F_p the residue member holds the canonical representative in [0, p).
/// Scalars are plain values; all operations go through the owning Field.
class Scalar {
 public:
  Scalar() : m_res(0) {}

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar from_int(const Field& f, long v);
  static Scalar from_mpq(const Field& f, const mpq_class& q);

  bool is_zero(const Field& f) const;
  bool is_one(const Field& f) const;

  Scalar add(const Field& f, const Scalar& o) const;
  Scalar sub(const Field& f, const Scalar& o) const;
  Scalar mul(const Field& f, const Scalar& o) const;
  Scalar div(const Field& f, const Scalar& o) const;
  Scalar neg(const Field& f) const;
  Scalar inv(const Field& f) const;

  bool equals(const Field& f, const Scalar& o) const;

  /// Canonical text form: "3", "-7/2" over Q; "312" over F_p.
  std::string str(const Field& f) const;
  static Scalar parse(const Field& f, const std::string& text);

  const mpq_class& rat() const { return m_rat; }
  int64_t residue() const { return m_res; }

 private:
  mpq_class m_rat;
  int64_t m_res;
};

/// Modular inverse of a in [1, p); requires gcd(a, p) = 1.
int64_t mod_inverse(int64_t a, int64_t p);

}  // namespace cisupport

#endif
