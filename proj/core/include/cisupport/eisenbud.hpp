#ifndef CISUPPORT_EISENBUD_HPP
#define CISUPPORT_EISENBUD_HPP

#include "cisupport/ci_ring.hpp"
#include "cisupport/kmatrix.hpp"

namespace cisupport {

/// The ring of cohomology operators S = k[x1..xc], one variable of degree 2
/// per element of the regular sequence.
PolyRing operator_ring(const CIRing& ring);

/// The square of the lifted differential decomposed along the regular
/// sequence: for each homological degree j in [2, bound] and each i,
/// phi(j, i): F_j -> F_{j-2} with dtilde_{j-1} dtilde_j = sum_i f_i phi~(j,i)
/// exactly over the ambient ring.
class EisenbudOperators {
 public:
  EisenbudOperators() = default;
  EisenbudOperators(CIRing ring, int bound, std::vector<std::vector<PolyMatrix>> lifted);

  const CIRing& ring() const { return m_ring; }
  int bound() const { return m_bound; }
  /// Lifted witness over Q (2 <= j <= bound, 1 <= i <= c).
  const PolyMatrix& lifted(int j, int i) const;
  /// Reduced operator over R.
  PolyMatrix reduced(int j, int i) const;

 private:
  CIRing m_ring;
  int m_bound = 0;
  std::vector<std::vector<PolyMatrix>> m_lift;  // [j-2][i-1]
};

/// Extracts the operators from a minimal resolution: lift entries as their
/// normal-form representatives, square, and express each entry in the
/// sequence with tracked division. The decomposition identity is re-verified
/// exactly before returning.
EisenbudOperators extract_operators(const Resolution& res, const CIRing& ring, int bound);

/// The graded S-module structure on Ext(M, k): component dimensions are the
/// Betti numbers, the action of x_i from degree j is the transpose of the
/// scalar part of phi(j+2, i). Commutativity is asserted on construction.
class ExtSModule {
 public:
  ExtSModule() = default;
  ExtSModule(CIRing ring, PolyRing S, std::vector<int> dims,
             std::vector<std::vector<KMatrix>> action);

  const CIRing& ci_ring() const { return m_ring; }
  const PolyRing& S() const { return m_S; }
  int bound() const { return (int)m_dims.size() - 1; }
  int dim(int j) const { return j >= 0 && j <= bound() ? m_dims[j] : 0; }
  /// E_j -> E_{j+2}; defined for 0 <= j <= bound-2.
  const KMatrix& action(int j, int i) const;
  bool is_zero() const;

 private:
  CIRing m_ring;
  PolyRing m_S;
  std::vector<int> m_dims;
  std::vector<std::vector<KMatrix>> m_action;  // [j][i-1]
};

ExtSModule ext_s_module(const EisenbudOperators& ops, const Resolution& res);

struct AnnihilatorReport {
  std::vector<Polynomial> ideal;  // in the operator ring
  int stabilized_at = -1;         // truncation level N accepted
  int generation_degree = -1;     // observed top generation degree of Ext
  std::vector<std::pair<int, std::vector<Polynomial>>> history;  // (N, ideal)
};

/// Stabilized annihilator of Ext(M,k) over S: per truncation level N the
/// degree-d piece is the kernel of evaluating degree-d monomials on the
/// components up to the observed generation degree; accepted when radical
/// equality holds across `window` consecutive levels.
AnnihilatorReport annihilator_stabilized(const ExtSModule& E, int window = 2);

/// Change of coordinates on the operator ring per the regeneration theorem:
/// with f_i = sum_j q[i][j] f'_j, the new operators are x'_j = sum_i q[i][j]
/// x_i; rewrites the ideal in the primed coordinates.
std::vector<Polynomial> apply_coordinate_change(const std::vector<Polynomial>& ideal,
                                                const PolyRing& S, const KMatrix& q);

}  // namespace cisupport

#endif
