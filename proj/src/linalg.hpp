#ifndef COXINV_LINALG_HPP
#define COXINV_LINALG_HPP

#include <vector>

#include "field.hpp"

namespace coxinv {

using Vec = std::vector<Scalar>;

// Dense matrix over one field, row major.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<Scalar> a;

  Mat() = default;
  Mat(int r, int c, const Scalar& fill = Scalar())
      : rows(r), cols(c), a(static_cast<size_t>(r) * c, fill) {}

  Scalar& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Scalar& at(int i, int j) const {
    return a[static_cast<size_t>(i) * cols + j];
  }

  static Mat identity(int n, const Field* f);
};

Mat mat_add(const Mat& x, const Mat& y);
Mat mat_sub(const Mat& x, const Mat& y);
Mat mat_mul(const Mat& x, const Mat& y);
Vec mat_apply(const Mat& m, const Vec& v);

Vec vec_add(const Vec& u, const Vec& v);
Vec vec_sub(const Vec& u, const Vec& v);
Vec vec_scale(const Scalar& c, const Vec& v);
bool vec_is_zero(const Vec& v);

// Exact basis of the null space, via Gaussian elimination over the field.
// Deterministic: free columns taken in increasing order.
std::vector<Vec> kernel(const Mat& m);

int rank(const Mat& m);

Scalar determinant(const Mat& m);

// Rank of the 2 x n stack is <= 1, i.e. u_i v_j = u_j v_i for all i < j.
// The zero vector counts as proportional to everything.
bool proportional(const Vec& u, const Vec& v);

}  // namespace coxinv

#endif
