#include "hecc/matrix.hpp"

#include <cassert>

namespace hecc {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::vector<Sym> Matrix::row(std::size_t i) const {
  std::vector<Sym> r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

std::vector<Sym> Matrix::col(std::size_t j) const {
  std::vector<Sym> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

Matrix Matrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const {
  assert(r0 + nrows <= rows_ && c0 + ncols <= cols_);
  Matrix s(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) s.at(i, j) = at(r0 + i, c0 + j);
  return s;
}

Matrix mat_mul(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(Errc::BadDimensions, "matrix product dimension mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Sym aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c.at(i, j) ^= f.mul(aik, b.at(k, j));
    }
  return c;
}

std::vector<Sym> vec_mat_mul(const Field& f, const std::vector<Sym>& v, const Matrix& a) {
  if (v.size() != a.rows()) throw Error(Errc::BadDimensions, "vector-matrix dimension mismatch");
  std::vector<Sym> out(a.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) out[j] ^= f.mul(v[i], a.at(i, j));
  }
  return out;
}

std::vector<Sym> mat_vec_mul(const Field& f, const Matrix& a, const std::vector<Sym>& v) {
  if (v.size() != a.cols()) throw Error(Errc::BadDimensions, "matrix-vector dimension mismatch");
  std::vector<Sym> out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (v[j] != 0) out[i] ^= f.mul(a.at(i, j), v[j]);
  return out;
}

Matrix mat_transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t.at(j, i) = a.at(i, j);
  return t;
}

Matrix mat_hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error(Errc::BadDimensions, "hstack row mismatch");
  Matrix c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, a.cols() + j) = b.at(i, j);
  }
  return c;
}

Matrix mat_vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw Error(Errc::BadDimensions, "vstack column mismatch");
  Matrix c(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c.at(a.rows() + i, j) = b.at(i, j);
  return c;
}

namespace {

// Forward elimination with first-nonzero pivoting. Returns pivot columns.
std::vector<std::size_t> eliminate(const Field& f, Matrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a.at(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(row, j));
    Sym inv = f.inv(a.at(row, col));
    for (std::size_t j = col; j < a.cols(); ++j) a.at(row, j) = f.mul(a.at(row, j), inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row) continue;
      Sym c = a.at(i, col);
      if (c == 0) continue;
      for (std::size_t j = col; j < a.cols(); ++j)
        a.at(i, j) ^= f.mul(c, a.at(row, j));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

} // namespace

unsigned mat_rank(const Field& f, Matrix a) {
  return static_cast<unsigned>(eliminate(f, a).size());
}

Sym mat_det(const Field& f, Matrix a) {
  if (a.rows() != a.cols()) throw Error(Errc::NotSquare, "determinant of a non-square matrix");
  // Row swaps only flip sign, which is identity in characteristic 2.
  Sym det = 1;
  std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a.at(p, col) == 0) ++p;
    if (p == n) return 0;
    if (p != col)
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(col, j));
    det = f.mul(det, a.at(col, col));
    Sym inv = f.inv(a.at(col, col));
    for (std::size_t i = col + 1; i < n; ++i) {
      Sym c = f.mul(a.at(i, col), inv);
      if (c == 0) continue;
      for (std::size_t j = col; j < n; ++j) a.at(i, j) ^= f.mul(c, a.at(col, j));
    }
  }
  return det;
}

Matrix mat_inverse(const Field& f, const Matrix& a) {
  if (a.rows() != a.cols()) throw Error(Errc::NotSquare, "inverse of a non-square matrix");
  Matrix aug = mat_hstack(a, Matrix::identity(a.rows()));
  auto pivots = eliminate(f, aug);
  if (pivots.size() != a.rows() || pivots.back() >= a.rows())
    throw Error(Errc::RankDeficient, "matrix is singular");
  return aug.submatrix(0, a.cols(), a.rows(), a.cols());
}

LinearSolution solve_linear(const Field& f, const Matrix& a, const std::vector<Sym>& b) {
  if (b.size() != a.rows()) throw Error(Errc::BadDimensions, "rhs length mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  auto pivots = eliminate(f, aug);

  LinearSolution sol;
  if (!pivots.empty() && pivots.back() == a.cols()) return sol;  // 0 = nonzero row
  sol.consistent = true;
  sol.particular.assign(a.cols(), 0);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    is_pivot[pivots[i]] = true;
    sol.particular[pivots[i]] = aug.at(i, a.cols());
  }
  for (std::size_t free_col = 0; free_col < a.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Sym> v(a.cols(), 0);
    v[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = aug.at(i, free_col);  // char 2: negation is identity
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

} // namespace hecc
