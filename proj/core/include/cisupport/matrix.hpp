#ifndef CISUPPORT_MATRIX_HPP
#define CISUPPORT_MATRIX_HPP

#include <functional>
#include <vector>

#include "cisupport/poly.hpp"

namespace cisupport {

/// Dense matrix over a polynomial ring. For graded maps the degree vectors
/// are present and every nonzero entry (i,j) is homogeneous of degree
/// col_degrees[j] - row_degrees[i].
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(PolyRing ring, int rows, int cols);

  const PolyRing& ring() const { return m_ring; }
  int rows() const { return m_rows; }
  int cols() const { return m_cols; }

  const Polynomial& at(int i, int j) const { return m_a[(size_t)i * m_cols + j]; }
  void set(int i, int j, Polynomial p);

  std::vector<int64_t> row_degrees;  // empty when ungraded
  std::vector<int64_t> col_degrees;

  bool is_zero() const;
  PolyMatrix mul(const PolyMatrix& o) const;
  PolyMatrix transpose() const;
  PolyMatrix map_entries(const std::function<Polynomial(const Polynomial&)>& fn) const;

  /// Checks every nonzero entry homogeneous of degree coldeg - rowdeg.
  void validate_graded() const;

  std::string str() const;

 private:
  PolyRing m_ring;
  int m_rows = 0, m_cols = 0;
  std::vector<Polynomial> m_a;
};

}  // namespace cisupport

#endif
