#ifndef CISUPPORT_RING_HPP
#define CISUPPORT_RING_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cisupport/field.hpp"

namespace cisupport {

/// Total order on monomials, compatible with multiplication, 1 minimal.
/// Block orders split the variables into an eliminated prefix and a kept
/// suffix; each block is compared by graded reverse lex, prefix first.
struct MonomialOrder {
  enum class Kind { grevlex, lex, block };

  Kind kind = Kind::grevlex;
  int elim_count = 0;  // block only: first elim_count variables are eliminated

  static MonomialOrder grevlex() { return {Kind::grevlex, 0}; }
  static MonomialOrder lex() { return {Kind::lex, 0}; }
  static MonomialOrder block(int elim_count) { return {Kind::block, elim_count}; }

  bool operator==(const MonomialOrder& o) const {
    return kind == o.kind && elim_count == o.elim_count;
  }
  std::string describe() const;
};

/// Exponent vector with cached weighted degree.
struct Monomial {
  std::vector<int32_t> e;
  int64_t wdeg = 0;

  bool is_one() const { return wdeg == 0; }
};

struct RingData {
  Field field;
  std::vector<std::string> vars;
  MonomialOrder order;
  std::vector<int> weights;

  int nvars() const { return (int)vars.size(); }
};

/// Shared, immutable ring handle. Two rings built from equal arguments are
/// interchangeable: compatibility is structural, not pointer identity.
class PolyRing {
 public:
  PolyRing() = default;
  const RingData& data() const { return *m_d; }
  const Field& field() const { return m_d->field; }
  int nvars() const { return m_d->nvars(); }
  const std::vector<std::string>& vars() const { return m_d->vars; }
  const std::vector<int>& weights() const { return m_d->weights; }
  const MonomialOrder& order() const { return m_d->order; }
  bool null() const { return m_d == nullptr; }

  bool compatible(const PolyRing& o) const;
  /// Same variables/field/weights, order may differ.
  bool same_presentation(const PolyRing& o) const;

  int var_index(const std::string& name) const;  // -1 if absent

  Monomial one() const;
  Monomial var(int i, int power = 1) const;
  Monomial monomial(const std::vector<int32_t>& exps) const;

  int64_t weighted_degree(const std::vector<int32_t>& exps) const;

  /// Strict order comparison: negative if a < b, 0 if equal, positive if a > b.
  int compare(const Monomial& a, const Monomial& b) const;

  static Monomial mul(const Monomial& a, const Monomial& b);
  static bool divides(const Monomial& a, const Monomial& b);  // a | b
  static Monomial div(const Monomial& b, const Monomial& a);  // b / a, requires a | b
  Monomial lcm(const Monomial& a, const Monomial& b) const;
  static bool coprime(const Monomial& a, const Monomial& b);
  static bool equal(const Monomial& a, const Monomial& b);

  std::string monomial_str(const Monomial& m) const;

  std::string describe() const;

 private:
  friend PolyRing make_ring(const Field&, const std::vector<std::string>&,
                            const MonomialOrder&, const std::vector<int>&);
  std::shared_ptr<const RingData> m_d;
};

/// Builds a polynomial ring. Weights defaults to all ones when empty.
PolyRing make_ring(const Field& field, const std::vector<std::string>& vars,
                   const MonomialOrder& order = MonomialOrder::grevlex(),
                   const std::vector<int>& weights = {});

}  // namespace cisupport

#endif
