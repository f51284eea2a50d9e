#pragma once

#include <optional>
#include <vector>

#include "hecc/matrix.hpp"

namespace hecc {

/// Evaluation points of a (generalized) Cauchy matrix. Empty c/d mean
/// all-ones scalings, i.e. a plain Cauchy matrix.
struct CauchyParams {
  std::vector<Sym> a;  // k distinct points
  std::vector<Sym> b;  // v distinct points, disjoint from a
  std::vector<Sym> c;  // optional row scalings, nonzero
  std::vector<Sym> d;  // optional column scalings, nonzero

  bool is_plain() const { return c.empty() && d.empty(); }
};

/// Entry (i,j) = c_i d_j / (a_i - b_j). Throws PointCollision / ZeroScaling.
Matrix build_cauchy(const Field& f, const CauchyParams& p);

/// Closed-form determinant of the square Cauchy matrix on (a; b):
/// prod_{i<i'}(a_i-a_{i'}) prod_{j<j'}(b_{j'}-b_j) / prod_{i,j}(a_i-b_j).
Sym cauchy_determinant(const Field& f, const std::vector<Sym>& a, const std::vector<Sym>& b);

/// Default evaluation points a_i = beta^i, b_j = beta^{k+j}.
CauchyParams default_points(const Field& f, unsigned k, unsigned v);

/// Extended Cauchy code C(A,k,v,r): parity check H = [A; I_r 0]^T with A a
/// (generalized) Cauchy matrix, v-k < r <= v. Immutable after construction.
class ECCode {
public:
  ECCode(const Field& f, CauchyParams params, unsigned r);

  const Field& field() const { return *field_; }
  const CauchyParams& params() const { return params_; }
  unsigned k() const { return k_; }
  unsigned v() const { return v_; }
  unsigned r() const { return r_; }
  unsigned n() const { return n_; }
  unsigned dim() const { return n_ - v_; }

  /// v x n parity-check matrix per the construction.
  const Matrix& parity_check() const { return h_; }
  /// Row i (0-based) of H^T, as a length-v vector.
  std::vector<Sym> h_row(std::size_t i) const;

  /// (n-v) x n systematic generator [I | X]; message symbols occupy the
  /// first n-v coordinates.
  const Matrix& systematic_generator() const;
  /// The non-identity block X of the systematic generator.
  Matrix systematic_x_block() const;

  std::vector<Sym> encode(const std::vector<Sym>& message) const;

  bool is_plain() const { return params_.is_plain(); }
  /// The scaling-free sibling code (identity when already plain).
  ECCode plain_equivalent() const;

private:
  const Field* field_;
  CauchyParams params_;
  unsigned k_, v_, r_, n_;
  Matrix h_;
  mutable std::optional<Matrix> gen_;
};

struct GrsResult {
  bool is_grs = false;
  int failing_condition = 0;  // 0 = none, else 1|2|3 per the membership criteria
};

/// Classifies the code generated by [I | X] as GRS/GC via the entrywise
/// inverse X^c: (1) all entries nonzero, (2) all 2x2 minors of X^c nonzero,
/// (3) rank(X^c) = 2.
GrsResult grs_membership_test(const Field& f, const Matrix& x);

/// The bijection f of the scaling-removal map:
/// (x_1..x_k, x_{k+1}..x_{k+r}) -> (c_1 x_1,..., d_1^{-1} x_{k+1},...).
std::vector<Sym> gc_to_cauchy_map(const Field& f, const std::vector<Sym>& word,
                                  const std::vector<Sym>& c, const std::vector<Sym>& d);
std::vector<Sym> gc_to_cauchy_map_inverse(const Field& f, const std::vector<Sym>& word,
                                          const std::vector<Sym>& c, const std::vector<Sym>& d);

} // namespace hecc
