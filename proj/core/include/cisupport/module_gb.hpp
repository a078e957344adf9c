#ifndef CISUPPORT_MODULE_GB_HPP
#define CISUPPORT_MODULE_GB_HPP

#include <optional>
#include <vector>

#include "cisupport/matrix.hpp"
#include "cisupport/poly.hpp"

namespace cisupport {

struct VecTerm {
  int comp;
  Monomial m;
  Scalar c;
};

/// Element of a free module Q^p in canonical form: terms strictly descending
/// under position-over-term (lower component index wins, ring order inside a
/// component).
class VecPoly {
 public:
  VecPoly() = default;
  explicit VecPoly(PolyRing ring) : m_ring(std::move(ring)) {}

  static VecPoly from_column(const PolyMatrix& m, int col);
  static VecPoly unit(const PolyRing& r, int comp, const Polynomial& p);
  static VecPoly from_terms(const PolyRing& r, std::vector<VecTerm> terms);

  const PolyRing& ring() const { return m_ring; }
  const std::vector<VecTerm>& terms() const { return m_terms; }
  bool is_zero() const { return m_terms.empty(); }
  const VecTerm& lead() const { return m_terms.front(); }

  VecPoly sub(const VecPoly& o) const;
  /// this - c * m * g
  VecPoly axpy(const Scalar& c, const Monomial& m, const VecPoly& g) const;
  VecPoly scale(const Scalar& c) const;
  VecPoly monic() const;

  Polynomial component(int comp) const;
  int max_component() const;  // -1 when zero

  /// Position-over-term comparison of terms (shared by all module code).
  static int compare_terms(const PolyRing& r, int ca, const Monomial& ma, int cb,
                           const Monomial& mb);

  std::string str() const;

 private:
  PolyRing m_ring;
  std::vector<VecTerm> m_terms;
};

struct DivisionResult {
  Polynomial remainder;
  std::vector<Polynomial> quotients;
};

/// Gröbner engine for submodules of Q^p, optionally working over a quotient
/// Q/(ideal): the ideal's multiples of every unit vector are implicit
/// generators. Tracks, per basis element, its expression in the original
/// generators (exact over Q, modulo the quotient ideal when one is present),
/// and collects the syzygies among the original generators discovered during
/// the computation.
class ModuleGB {
 public:
  /// gens: generators; ncomps: rank of the ambient free module;
  /// quotient: polynomials cutting out the quotient ring (may be empty; does
  /// not need to be a Gröbner basis); track: record expressions + syzygies.
  ModuleGB(PolyRing ring, int ncomps, std::vector<VecPoly> gens,
           std::vector<Polynomial> quotient, bool track);

  const PolyRing& ring() const { return m_ring; }
  int ncomps() const { return m_ncomps; }
  const std::vector<VecPoly>& basis() const { return m_gb; }
  /// Expression of basis()[k] in the original generators (track only).
  const std::vector<std::vector<Polynomial>>& expressions() const { return m_expr; }

  VecPoly normal_form(const VecPoly& v) const;
  bool member(const VecPoly& v) const { return normal_form(v).is_zero(); }
  bool contains_unit() const;  // some basis element is a unit vector scalar

  /// Writes v = sum_i q_i * gen_i (mod quotient); nullopt when v is not a
  /// member. Requires track.
  std::optional<std::vector<Polynomial>> express(const VecPoly& v) const;

  /// Generators of { q in (Q/(quotient))^gens : sum q_i gen_i = 0 } as
  /// columns. Requires track. Entries are reduced modulo the quotient ideal.
  std::vector<VecPoly> syzygies() const;

  /// Leading monomials of basis elements in component `comp` (for Hilbert
  /// and dimension computations).
  std::vector<Monomial> lead_monomials(int comp) const;

 private:
  struct Entry {
    VecPoly v;
    std::vector<Polynomial> expr;  // in original generators (track only)
  };

  VecPoly reduce_tracked(VecPoly v, std::vector<Polynomial>* expr) const;
  void interreduce();
  void run_buchberger();

  PolyRing m_ring;
  int m_ncomps;
  bool m_track;
  std::vector<VecPoly> m_gens;
  std::vector<Polynomial> m_quotient;      // input quotient generators
  std::vector<Polynomial> m_quotient_gb;   // reduced GB of the quotient ideal
  std::vector<VecPoly> m_gb;
  std::vector<std::vector<Polynomial>> m_expr;
  std::vector<std::vector<Polynomial>> m_syz;  // collected syzygy tags
};

/// Reduced Gröbner basis of the ideal generated by `gens` (monic, sorted,
/// interreduced; the zero ideal yields an empty basis).
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(PolyRing ring, std::vector<Polynomial> gens, bool track = false);

  const PolyRing& ring() const { return m_ring; }
  const std::vector<Polynomial>& generators() const { return m_basis; }
  const std::vector<Polynomial>& original_generators() const { return m_original; }
  bool contains_unit() const;

  Polynomial normal_form(const Polynomial& f) const;
  bool member(const Polynomial& f) const { return normal_form(f).is_zero(); }
  /// Expression of f in the ORIGINAL generators; nullopt if not a member.
  std::optional<std::vector<Polynomial>> express(const Polynomial& f) const;

  std::vector<Monomial> lead_monomials() const;

 private:
  PolyRing m_ring;
  std::vector<Polynomial> m_original;
  std::vector<Polynomial> m_basis;
  std::shared_ptr<const ModuleGB> m_engine;  // kept when tracking
};

/// Division with quotient tracking against an arbitrary divisor list (no GB
/// assumption): f = sum q_i d_i + remainder, no remainder term divisible by
/// any divisor lead.
DivisionResult normal_form_with_quotients(const Polynomial& f,
                                          const std::vector<Polynomial>& divisors);

}  // namespace cisupport

#endif
