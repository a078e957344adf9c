#include "cisupport/matrix.hpp"

#include "cisupport/error.hpp"

namespace cisupport {

PolyMatrix::PolyMatrix(PolyRing ring, int rows, int cols)
    : m_ring(std::move(ring)), m_rows(rows), m_cols(cols) {
  m_a.assign((size_t)rows * cols, Polynomial(m_ring));
}

void PolyMatrix::set(int i, int j, Polynomial p) {
  require_same_ring(m_ring, p.ring());
  m_a[(size_t)i * m_cols + j] = std::move(p);
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : m_a)
    if (!p.is_zero()) return false;
  return true;
}

PolyMatrix PolyMatrix::mul(const PolyMatrix& o) const {
  require_same_ring(m_ring, o.m_ring);
  check(m_cols == o.m_rows, errc::internal, "matrix dimension mismatch in product");
  PolyMatrix r(m_ring, m_rows, o.m_cols);
  for (int i = 0; i < m_rows; ++i)
    for (int j = 0; j < o.m_cols; ++j) {
      Polynomial acc(m_ring);
      for (int k = 0; k < m_cols; ++k) {
        const Polynomial& a = at(i, k);
        const Polynomial& b = o.at(k, j);
        if (a.is_zero() || b.is_zero()) continue;
        acc = acc.add(a.mul(b));
      }
      r.set(i, j, std::move(acc));
    }
  r.row_degrees = row_degrees;
  r.col_degrees = o.col_degrees;
  return r;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix r(m_ring, m_cols, m_rows);
  for (int i = 0; i < m_rows; ++i)
    for (int j = 0; j < m_cols; ++j) r.set(j, i, at(i, j));
  for (int64_t d : col_degrees) r.row_degrees.push_back(-d);
  for (int64_t d : row_degrees) r.col_degrees.push_back(-d);
  return r;
}

PolyMatrix PolyMatrix::map_entries(
    const std::function<Polynomial(const Polynomial&)>& fn) const {
  PolyMatrix r = *this;
  for (int i = 0; i < m_rows; ++i)
    for (int j = 0; j < m_cols; ++j) r.set(i, j, fn(at(i, j)));
  return r;
}

void PolyMatrix::validate_graded() const {
  check((int)row_degrees.size() == m_rows && (int)col_degrees.size() == m_cols,
        errc::non_homogeneous_input, "matrix lacks degree data");
  for (int i = 0; i < m_rows; ++i)
    for (int j = 0; j < m_cols; ++j) {
      const Polynomial& p = at(i, j);
      if (p.is_zero()) continue;
      auto d = p.homogeneous_degree();
      check(d.has_value() && *d == col_degrees[j] - row_degrees[i],
            errc::non_homogeneous_input,
            "entry (" + std::to_string(i) + "," + std::to_string(j) +
                ") is not homogeneous of the declared degree");
    }
}

std::string PolyMatrix::str() const {
  std::string s = "[";
  for (int i = 0; i < m_rows; ++i) {
    if (i) s += ", ";
    s += "[";
    for (int j = 0; j < m_cols; ++j) {
      if (j) s += ", ";
      s += at(i, j).str();
    }
    s += "]";
  }
  return s + "]";
}

}  // namespace cisupport
