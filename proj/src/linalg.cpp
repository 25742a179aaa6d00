#include "linalg.hpp"

#include <stdexcept>

namespace coxinv {

Mat Mat::identity(int n, const Field* f) {
  Mat m(n, n, Scalar::zero(f));
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Mat mat_add(const Mat& x, const Mat& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw invalid_operand_error("matrix dimension mismatch");
  Mat r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
  return r;
}

Mat mat_sub(const Mat& x, const Mat& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw invalid_operand_error("matrix dimension mismatch");
  Mat r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
  return r;
}

Mat mat_mul(const Mat& x, const Mat& y) {
  if (x.cols != y.rows) throw invalid_operand_error("matrix dimension mismatch");
  Mat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Scalar& xv = x.at(i, k);
      if (xv.is_zero()) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) += xv * y.at(k, j);
    }
  return r;
}

Vec mat_apply(const Mat& m, const Vec& v) {
  if (m.cols != static_cast<int>(v.size()))
    throw invalid_operand_error("matrix/vector dimension mismatch");
  Vec r(m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r[i] += m.at(i, j) * v[j];
  return r;
}

Vec vec_add(const Vec& u, const Vec& v) {
  if (u.size() != v.size()) throw invalid_operand_error("vector dimension mismatch");
  Vec r = u;
  for (size_t i = 0; i < r.size(); ++i) r[i] += v[i];
  return r;
}

Vec vec_sub(const Vec& u, const Vec& v) {
  if (u.size() != v.size()) throw invalid_operand_error("vector dimension mismatch");
  Vec r = u;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= v[i];
  return r;
}

Vec vec_scale(const Scalar& c, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x *= c;
  return r;
}

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

namespace {

// Row echelon form in place; returns pivot column per pivot row.
std::vector<int> echelonize(Mat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int pr = -1;
    for (int i = row; i < m.rows; ++i)
      if (!m.at(i, col).is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(row, j));
    Scalar inv = Scalar(1) / m.at(row, col);
    for (int j = col; j < m.cols; ++j) m.at(row, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      Scalar f = m.at(i, col);
      for (int j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<Vec> kernel(const Mat& input) {
  if (input.cols == 0) return {};
  const Field* f = input.a.empty() ? Field::rationals() : input.a.front().field();
  Mat m = input;
  std::vector<int> pivots = echelonize(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<Vec> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols, Scalar::zero(f));
    v[free] = Scalar::one(f);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank(const Mat& m) {
  Mat copy = m;
  return static_cast<int>(echelonize(copy).size());
}

Scalar determinant(const Mat& input) {
  if (input.rows != input.cols) throw invalid_operand_error("determinant of non-square");
  if (input.rows == 0) return Scalar(1);
  const Field* f = input.a.front().field();
  Mat m = input;
  Scalar det = Scalar::one(f);
  for (int col = 0; col < m.cols; ++col) {
    int pr = -1;
    for (int i = col; i < m.rows; ++i)
      if (!m.at(i, col).is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) return Scalar::zero(f);
    if (pr != col) {
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(col, j));
      det = -det;
    }
    det *= m.at(col, col);
    Scalar inv = Scalar::one(f) / m.at(col, col);
    for (int i = col + 1; i < m.rows; ++i) {
      if (m.at(i, col).is_zero()) continue;
      Scalar factor = m.at(i, col) * inv;
      for (int j = col; j < m.cols; ++j) m.at(i, j) -= factor * m.at(col, j);
    }
  }
  return det;
}

bool proportional(const Vec& u, const Vec& v) {
  if (u.size() != v.size()) throw invalid_operand_error("vector dimension mismatch");
  for (size_t i = 0; i < u.size(); ++i)
    for (size_t j = i + 1; j < u.size(); ++j)
      if (u[i] * v[j] != u[j] * v[i]) return false;
  return true;
}

}  // namespace coxinv
