#ifndef CISUPPORT_CI_RING_HPP
#define CISUPPORT_CI_RING_HPP

#include <map>
#include <memory>

#include "cisupport/groebner.hpp"
#include "cisupport/hilbert.hpp"

namespace cisupport {

/// Graded complete intersection presentation R = Q/(f_1..f_c): the ambient
/// polynomial ring, a validated homogeneous regular sequence with all terms
/// of degree >= 2, and the cached basis of (f).
class CIRing {
 public:
  CIRing() = default;

  const PolyRing& ambient() const { return m_d->ambient; }
  const std::vector<Polynomial>& sequence() const { return m_d->f; }
  const GroebnerBasis& sequence_basis() const { return m_d->fgb; }
  int codim() const { return (int)m_d->f.size(); }
  int dim_ambient() const { return m_d->ambient.nvars(); }
  int dim() const { return dim_ambient() - codim(); }
  bool null() const { return m_d == nullptr; }

  bool compatible(const CIRing& o) const;
  Polynomial reduce(const Polynomial& p) const;  // normal form mod (f)
  std::string describe() const;

 private:
  friend CIRing make_ci_ring(const PolyRing&, const std::vector<Polynomial>&);
  struct Data {
    PolyRing ambient;
    std::vector<Polynomial> f;
    GroebnerBasis fgb;
  };
  std::shared_ptr<const Data> m_d;
};

/// Validates the sequence: homogeneous, all terms of degree >= 2, and the
/// codimension certificate dim Q/(f) = dim Q - c.
CIRing make_ci_ring(const PolyRing& Q, const std::vector<Polynomial>& f);

struct BettiTable {
  std::vector<int> total;                          // beta_0..beta_n
  std::vector<std::map<int64_t, int>> graded;      // beta_{n,d}
  std::string str() const;
};

/// Chain of free modules with differentials d_1..d_L (d_i: F_i -> F_{i-1}),
/// minimal (every entry in the irrelevant ideal), entries reduced mod (f).
/// `finite` marks a resolution that terminated with a zero kernel.
struct Resolution {
  PolyRing ambient;
  std::vector<Polynomial> modulus;                 // empty = over Q itself
  std::vector<std::vector<int64_t>> degrees;       // degrees of F_0..F_L
  std::vector<PolyMatrix> diffs;                   // d_1..d_L
  bool finite = false;

  int length() const { return (int)diffs.size(); }
  int betti(int i) const { return i <= length() ? (int)degrees[i].size() : 0; }
  BettiTable betti_table(int upto) const;
  const PolyMatrix& diff(int i) const { return diffs[i - 1]; }  // 1-based
};

/// Finitely presented graded module over a CIRing. The presentation matrix
/// lives over the ambient ring with entries reduced mod (f); rows index
/// generators, columns relations; the implicit relations f_j * e_i are not
/// stored. Presentations are minimalized on construction, so generator
/// counts are Betti-0 honest.
class RMod {
 public:
  RMod() = default;

  const CIRing& ring() const { return m_d->ring; }
  const PolyMatrix& presentation() const { return m_d->pres; }
  const std::vector<int64_t>& gen_degrees() const { return m_d->gen_degrees; }
  int gens() const { return (int)m_d->gen_degrees.size(); }
  bool is_zero() const { return gens() == 0; }
  bool null() const { return m_d == nullptr; }

  /// Presentation over Q with the f-block appended (M as a Q-module).
  PolyMatrix ambient_presentation() const;

  /// Minimal graded free resolution over R, extended on demand and cached.
  const Resolution& resolution(int bound) const;
  /// Finite minimal resolution over the ambient regular ring (cached).
  const Resolution& ambient_resolution() const;

  const HilbertSeries& hilbert() const;

  std::string describe() const;

 private:
  friend RMod make_rmod(const CIRing&, PolyMatrix, std::vector<int64_t>);
  struct Data {
    CIRing ring;
    PolyMatrix pres;
    std::vector<int64_t> gen_degrees;
    // lazy caches (single-threaded engine)
    mutable std::shared_ptr<Resolution> res;
    mutable std::shared_ptr<Resolution> qres;
    mutable std::shared_ptr<HilbertSeries> hs;
  };
  std::shared_ptr<Data> m_d;
};

/// Canonicalizes (reduce mod f, minimalize by unit pivoting) and wraps.
RMod make_rmod(const CIRing& ring, PolyMatrix pres, std::vector<int64_t> gen_degrees);

// -- presentation builders ---------------------------------------------------

RMod present_cokernel(const CIRing& ring, const PolyMatrix& relations,
                      const std::vector<int64_t>& gen_degrees);
RMod present_cyclic(const CIRing& ring, const std::vector<Polynomial>& ideal_gens);
RMod present_residue_field(const CIRing& ring);
RMod present_free(const CIRing& ring, int rank, const std::vector<int64_t>& degrees = {});
/// The ideal (gens) of R regarded as an R-module (its syzygies become the
/// relations).
RMod present_ideal_module(const CIRing& ring, const std::vector<Polynomial>& gens);

// -- resolution-level operations ---------------------------------------------

/// Default truncation bound for resolutions over R.
int default_resolution_bound(const CIRing& ring);

struct DepthDim {
  int depth;
  int dim;
  bool cohen_macaulay;
  bool maximal_cohen_macaulay;
};

/// depth via Auslander-Buchsbaum over Q, dim via the Hilbert series pole.
DepthDim depth_and_dim(const RMod& m);

/// Omega^i M presented by d_{i+1} with its grading (i >= 1).
RMod syzygy_module(const RMod& m, int i);

/// dim R - dim M (complete intersections are equidimensional and catenary).
int grade_of(const RMod& m);

/// Krull dimension of the module; -1 for the zero module.
int module_dim(const RMod& m);

/// Minimal free resolution + Betti table to the requested bound.
std::pair<const Resolution*, BettiTable> minimal_free_resolution(const RMod& m, int bound);

int projective_dimension_over_ambient(const RMod& m);

}  // namespace cisupport

#endif
