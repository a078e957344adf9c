#ifndef CISUPPORT_KMATRIX_HPP
#define CISUPPORT_KMATRIX_HPP

#include <optional>
#include <vector>

#include "cisupport/field.hpp"

namespace cisupport {

/// Dense matrix over the coefficient field, for the scalar linear algebra
/// behind Ext actions, annihilator kernels and spans of points.
class KMatrix {
 public:
  KMatrix() = default;
  KMatrix(Field f, int rows, int cols)
      : m_f(f), m_rows(rows), m_cols(cols), m_a((size_t)rows * cols, Scalar::zero(f)) {}

  static KMatrix identity(const Field& f, int n);

  const Field& field() const { return m_f; }
  int rows() const { return m_rows; }
  int cols() const { return m_cols; }
  const Scalar& at(int i, int j) const { return m_a[(size_t)i * m_cols + j]; }
  void set(int i, int j, const Scalar& s) { m_a[(size_t)i * m_cols + j] = s; }

  KMatrix mul(const KMatrix& o) const;
  KMatrix transpose() const;
  bool equals(const KMatrix& o) const;
  bool is_zero() const;

  int rank() const;
  std::optional<KMatrix> inverse() const;
  /// Columns form a basis of the kernel.
  KMatrix nullspace() const;

  std::string str() const;

 private:
  Field m_f;
  int m_rows = 0, m_cols = 0;
  std::vector<Scalar> m_a;
};

}  // namespace cisupport

#endif
