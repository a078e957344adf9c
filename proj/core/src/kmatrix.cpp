#include "cisupport/kmatrix.hpp"

#include "cisupport/error.hpp"

namespace cisupport {

KMatrix KMatrix::identity(const Field& f, int n) {
  KMatrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, Scalar::one(f));
  return m;
}

KMatrix KMatrix::mul(const KMatrix& o) const {
  check(m_cols == o.m_rows, errc::internal, "kmatrix dimension mismatch");
  KMatrix r(m_f, m_rows, o.m_cols);
  for (int i = 0; i < m_rows; ++i)
    for (int k = 0; k < m_cols; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero(m_f)) continue;
      for (int j = 0; j < o.m_cols; ++j)
        r.set(i, j, r.at(i, j).add(m_f, a.mul(m_f, o.at(k, j))));
    }
  return r;
}

KMatrix KMatrix::transpose() const {
  KMatrix r(m_f, m_cols, m_rows);
  for (int i = 0; i < m_rows; ++i)
    for (int j = 0; j < m_cols; ++j) r.set(j, i, at(i, j));
  return r;
}

bool KMatrix::equals(const KMatrix& o) const {
  if (m_rows != o.m_rows || m_cols != o.m_cols) return false;
  for (size_t i = 0; i < m_a.size(); ++i)
    if (!m_a[i].equals(m_f, o.m_a[i])) return false;
  return true;
}

bool KMatrix::is_zero() const {
  for (const auto& s : m_a)
    if (!s.is_zero(m_f)) return false;
  return true;
}

namespace {

// row echelon in place; returns pivot columns
std::vector<int> echelon(KMatrix& m) {
  const Field& f = m.field();
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int i = row; i < m.rows(); ++i)
      if (!m.at(i, col).is_zero(f)) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) {
        Scalar t = m.at(row, j);
        m.set(row, j, m.at(p, j));
        m.set(p, j, t);
      }
    Scalar inv = m.at(row, col).inv(f);
    for (int j = 0; j < m.cols(); ++j) m.set(row, j, m.at(row, j).mul(f, inv));
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row) continue;
      Scalar c = m.at(i, col);
      if (c.is_zero(f)) continue;
      for (int j = 0; j < m.cols(); ++j)
        m.set(i, j, m.at(i, j).sub(f, c.mul(f, m.at(row, j))));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int KMatrix::rank() const {
  KMatrix m = *this;
  return (int)echelon(m).size();
}

std::optional<KMatrix> KMatrix::inverse() const {
  check(m_rows == m_cols, errc::internal, "inverse of a non-square kmatrix");
  KMatrix aug(m_f, m_rows, 2 * m_cols);
  for (int i = 0; i < m_rows; ++i) {
    for (int j = 0; j < m_cols; ++j) aug.set(i, j, at(i, j));
    aug.set(i, m_cols + i, Scalar::one(m_f));
  }
  auto pivots = echelon(aug);
  if ((int)pivots.size() != m_rows) return std::nullopt;
  for (int k = 0; k < m_rows; ++k)
    if (pivots[k] != k) return std::nullopt;
  KMatrix inv(m_f, m_rows, m_cols);
  for (int i = 0; i < m_rows; ++i)
    for (int j = 0; j < m_cols; ++j) inv.set(i, j, aug.at(i, m_cols + j));
  return inv;
}

KMatrix KMatrix::nullspace() const {
  KMatrix m = *this;
  auto pivots = echelon(m);
  std::vector<bool> is_pivot(m_cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int j = 0; j < m_cols; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  KMatrix ns(m_f, m_cols, (int)free_cols.size());
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    ns.set(fc, (int)k, Scalar::one(m_f));
    for (size_t r = 0; r < pivots.size(); ++r)
      ns.set(pivots[r], (int)k, m.at((int)r, fc).neg(m_f));
  }
  return ns;
}

std::string KMatrix::str() const {
  std::string s = "[";
  for (int i = 0; i < m_rows; ++i) {
    if (i) s += "; ";
    for (int j = 0; j < m_cols; ++j) {
      if (j) s += ",";
      s += at(i, j).str(m_f);
    }
  }
  return s + "]";
}

}  // namespace cisupport
