#pragma once

#include <cstddef>
#include <vector>

#include "hecc/gf.hpp"

namespace hecc {

/// Dense rectangular matrix over GF(q). Row-major, 0-based.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Sym& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Sym at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Sym> row(std::size_t i) const;
  std::vector<Sym> col(std::size_t j) const;
  Matrix submatrix(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Sym> data_;
};

Matrix mat_mul(const Field& f, const Matrix& a, const Matrix& b);
std::vector<Sym> vec_mat_mul(const Field& f, const std::vector<Sym>& v, const Matrix& a);
std::vector<Sym> mat_vec_mul(const Field& f, const Matrix& a, const std::vector<Sym>& v);
Matrix mat_transpose(const Matrix& a);
Matrix mat_hstack(const Matrix& a, const Matrix& b);
Matrix mat_vstack(const Matrix& a, const Matrix& b);

/// Rank by Gaussian elimination with first-nonzero pivoting.
unsigned mat_rank(const Field& f, Matrix a);
Sym mat_det(const Field& f, Matrix a);
/// Throws RankDeficient when singular.
Matrix mat_inverse(const Field& f, const Matrix& a);

struct LinearSolution {
  bool consistent = false;
  std::vector<Sym> particular;               // one solution when consistent
  std::vector<std::vector<Sym>> nullspace;   // basis of the homogeneous solutions
};

/// Solves A x = b exactly (A may be over- or under-determined).
LinearSolution solve_linear(const Field& f, const Matrix& a, const std::vector<Sym>& b);

} // namespace hecc
