#include <doctest.h>

#include "helpers.hpp"

using namespace hecc;
using namespace hecc::testing;

namespace {

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = static_cast<Sym>(rng() % f.size());
  return m;
}

} // namespace

TEST_CASE("identity, transpose, stacking") {
  Field f = gf16();
  Matrix i3 = Matrix::identity(3);
  CHECK(mat_mul(f, i3, i3) == i3);
  std::mt19937_64 rng(1);
  Matrix a = random_matrix(f, 3, 5, rng);
  CHECK(mat_transpose(mat_transpose(a)) == a);
  Matrix h = mat_hstack(a, a);
  CHECK(h.cols() == 10);
  CHECK(h.at(2, 7) == a.at(2, 2));
  Matrix v = mat_vstack(a, a);
  CHECK(v.rows() == 6);
  CHECK(v.at(4, 1) == a.at(1, 1));
}

TEST_CASE("inverse round trips on random nonsingular matrices") {
  Field f = Field::with_default_poly(8);
  std::mt19937_64 rng(2);
  int done = 0;
  while (done < 50) {
    Matrix a = random_matrix(f, 4, 4, rng);
    if (mat_det(f, a) == 0) continue;
    Matrix inv = mat_inverse(f, a);
    CHECK(mat_mul(f, a, inv) == Matrix::identity(4));
    CHECK(mat_mul(f, inv, a) == Matrix::identity(4));
    ++done;
  }
  Matrix z(3, 3);
  CHECK_THROWS_AS(mat_inverse(f, z), Error);
  CHECK_THROWS_AS(mat_inverse(f, Matrix(2, 3)), Error);
}

TEST_CASE("det is multiplicative and zero iff rank deficient") {
  Field f = Field::with_default_poly(8);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    Matrix a = random_matrix(f, 3, 3, rng);
    Matrix b = random_matrix(f, 3, 3, rng);
    CHECK(mat_det(f, mat_mul(f, a, b)) == f.mul(mat_det(f, a), mat_det(f, b)));
    CHECK((mat_det(f, a) == 0) == (mat_rank(f, a) < 3));
  }
}

TEST_CASE("solve_linear on square, over- and under-determined systems") {
  Field f = Field::with_default_poly(8);
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    Matrix a = random_matrix(f, rows, cols, rng);
    std::vector<Sym> x(cols);
    for (Sym& v : x) v = static_cast<Sym>(rng() % f.size());
    std::vector<Sym> b = mat_vec_mul(f, a, x);
    LinearSolution sol = solve_linear(f, a, b);
    REQUIRE(sol.consistent);
    REQUIRE(mat_vec_mul(f, a, sol.particular) == b);
    for (const auto& null : sol.nullspace)
      REQUIRE(mat_vec_mul(f, a, null) == std::vector<Sym>(rows, 0));
    std::size_t expect_null = cols - mat_rank(f, a);
    REQUIRE(sol.nullspace.size() == expect_null);
  }
}

TEST_CASE("solve_linear flags inconsistent systems") {
  Field f = gf16();
  Matrix a(2, 1);
  a.at(0, 0) = 1;
  a.at(1, 0) = 1;
  LinearSolution sol = solve_linear(f, a, {1, 2});
  CHECK(!sol.consistent);
  Matrix z(2, 2);
  CHECK(!solve_linear(f, z, {0, 1}).consistent);
  CHECK(solve_linear(f, z, {0, 0}).consistent);
}
