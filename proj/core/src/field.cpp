#include "cisupport/field.hpp"

#include "cisupport/error.hpp"

namespace cisupport {

const char* errc_name(errc c) {
  switch (c) {
    case errc::duplicate_variable: return "DuplicateVariable";
    case errc::bad_weight: return "BadWeight";
    case errc::ring_mismatch: return "RingMismatch";
    case errc::non_homogeneous_input: return "NonHomogeneousInput";
    case errc::not_regular_sequence: return "NotRegularSequence";
    case errc::zero_module: return "ZeroModule";
    case errc::bound_exceeded: return "BoundExceeded";
    case errc::lift_decomposition_failure: return "LiftDecompositionFailure";
    case errc::commutation_failure: return "CommutationFailure";
    case errc::truncation_insufficient: return "TruncationInsufficient";
    case errc::singular_matrix: return "SingularMatrix";
    case errc::degenerate_form: return "DegenerateForm";
    case errc::complexity_mismatch: return "ComplexityMismatch";
    case errc::not_finite_length: return "NotFiniteLength";
    case errc::eventual_nonvanishing: return "EventualNonvanishing";
    case errc::no_witness: return "NoWitness";
    case errc::parse_error: return "ParseError";
    case errc::name_error: return "NameError";
    case errc::internal: return "InternalError";
  }
  return "UnknownError";
}

static bool is_prime_int(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(int64_t p) {
  check(p >= 2 && p < (int64_t(1) << 31), errc::bad_weight,
        "field characteristic out of range: " + std::to_string(p));
  check(is_prime_int(p), errc::bad_weight,
        "field characteristic must be prime: " + std::to_string(p));
  return Field{Kind::prime, p};
}

std::string Field::describe() const {
  return is_prime_field() ? "Fp:" + std::to_string(p) : "QQ";
}

int64_t mod_inverse(int64_t a, int64_t p) {
  int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  if (new_r < 0) new_r += p;
  check(new_r != 0, errc::internal, "mod_inverse of zero");
  while (new_r != 0) {
    int64_t q = r / new_r;
    int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  check(r == 1, errc::internal, "mod_inverse: not invertible");
  if (t < 0) t += p;
  return t;
}

Scalar Scalar::zero(const Field& f) { return from_int(f, 0); }
Scalar Scalar::one(const Field& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const Field& f, long v) {
  Scalar s;
  if (f.is_prime_field()) {
    s.m_res = v % f.p;
    if (s.m_res < 0) s.m_res += f.p;
  } else {
    s.m_rat = v;
  }
  return s;
}

Scalar Scalar::from_mpq(const Field& f, const mpq_class& q) {
  Scalar s;
  if (f.is_prime_field()) {
    mpz_class num = q.get_num() % f.p;
    mpz_class den = q.get_den() % f.p;
    int64_t n = num.get_si() % f.p;
    if (n < 0) n += f.p;
    int64_t d = den.get_si() % f.p;
    if (d < 0) d += f.p;
    check(d != 0, errc::internal, "denominator divisible by field characteristic");
    s.m_res = (__int128)n * mod_inverse(d, f.p) % f.p;
  } else {
    s.m_rat = q;
    s.m_rat.canonicalize();
  }
  return s;
}

bool Scalar::is_zero(const Field& f) const {
  return f.is_prime_field() ? m_res == 0 : m_rat == 0;
}

bool Scalar::is_one(const Field& f) const {
  return f.is_prime_field() ? m_res == 1 : m_rat == 1;
}

Scalar Scalar::add(const Field& f, const Scalar& o) const {
  Scalar s;
  if (f.is_prime_field()) {
    s.m_res = m_res + o.m_res;
    if (s.m_res >= f.p) s.m_res -= f.p;
  } else {
    s.m_rat = m_rat + o.m_rat;
  }
  return s;
}

Scalar Scalar::sub(const Field& f, const Scalar& o) const {
  Scalar s;
  if (f.is_prime_field()) {
    s.m_res = m_res - o.m_res;
    if (s.m_res < 0) s.m_res += f.p;
  } else {
    s.m_rat = m_rat - o.m_rat;
  }
  return s;
}

Scalar Scalar::mul(const Field& f, const Scalar& o) const {
  Scalar s;
  if (f.is_prime_field()) {
    s.m_res = (__int128)m_res * o.m_res % f.p;
  } else {
    s.m_rat = m_rat * o.m_rat;
  }
  return s;
}

Scalar Scalar::div(const Field& f, const Scalar& o) const {
  Scalar s;
  if (f.is_prime_field()) {
    s.m_res = (__int128)m_res * mod_inverse(o.m_res, f.p) % f.p;
  } else {
    check(o.m_rat != 0, errc::internal, "division by zero scalar");
    s.m_rat = m_rat / o.m_rat;
  }
  return s;
}

Scalar Scalar::neg(const Field& f) const {
  Scalar s;
  if (f.is_prime_field()) {
    s.m_res = m_res == 0 ? 0 : f.p - m_res;
  } else {
    s.m_rat = -m_rat;
  }
  return s;
}

Scalar Scalar::inv(const Field& f) const { return one(f).div(f, *this); }

bool Scalar::equals(const Field& f, const Scalar& o) const {
  return f.is_prime_field() ? m_res == o.m_res : m_rat == o.m_rat;
}

std::string Scalar::str(const Field& f) const {
  if (f.is_prime_field()) return std::to_string(m_res);
  return m_rat.get_str();
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  mpq_class q;
  check(q.set_str(text, 10) == 0, errc::parse_error, "bad scalar literal '" + text + "'");
  q.canonicalize();
  return from_mpq(f, q);
}

}  // namespace cisupport
