#include "hecc/cauchy.hpp"

#include <set>

namespace hecc {

namespace {

void check_params(const CauchyParams& p) {
  std::set<Sym> seen;
  for (Sym x : p.a)
    if (!seen.insert(x).second) throw Error(Errc::PointCollision, "duplicate evaluation point");
  for (Sym x : p.b)
    if (!seen.insert(x).second) throw Error(Errc::PointCollision, "duplicate evaluation point");
  if (!p.c.empty() && p.c.size() != p.a.size())
    throw Error(Errc::BadDimensions, "row scaling count mismatch");
  if (!p.d.empty() && p.d.size() != p.b.size())
    throw Error(Errc::BadDimensions, "column scaling count mismatch");
  for (Sym x : p.c)
    if (x == 0) throw Error(Errc::ZeroScaling, "zero row scaling");
  for (Sym x : p.d)
    if (x == 0) throw Error(Errc::ZeroScaling, "zero column scaling");
}

} // namespace

Matrix build_cauchy(const Field& f, const CauchyParams& p) {
  check_params(p);
  Matrix m(p.a.size(), p.b.size());
  for (std::size_t i = 0; i < p.a.size(); ++i)
    for (std::size_t j = 0; j < p.b.size(); ++j) {
      Sym num = 1;
      if (!p.c.empty()) num = f.mul(num, p.c[i]);
      if (!p.d.empty()) num = f.mul(num, p.d[j]);
      m.at(i, j) = f.div(num, f.sub(p.a[i], p.b[j]));
    }
  return m;
}

Sym cauchy_determinant(const Field& f, const std::vector<Sym>& a, const std::vector<Sym>& b) {
  if (a.size() != b.size()) throw Error(Errc::NotSquare, "Cauchy determinant needs |a| = |b|");
  check_params({a, b, {}, {}});
  Sym num = 1, den = 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      num = f.mul(num, f.sub(a[i], a[j]));
      num = f.mul(num, f.sub(b[j], b[i]));
    }
  for (Sym x : a)
    for (Sym y : b) den = f.mul(den, f.sub(x, y));
  return f.div(num, den);
}

CauchyParams default_points(const Field& f, unsigned k, unsigned v) {
  if (k + v > f.size() - 1)
    throw Error(Errc::BadDimensions, "field too small for k+v distinct nonzero points");
  CauchyParams p;
  for (unsigned i = 1; i <= k; ++i) p.a.push_back(f.alpha_pow(i));
  for (unsigned j = 1; j <= v; ++j) p.b.push_back(f.alpha_pow(k + j));
  return p;
}

ECCode::ECCode(const Field& f, CauchyParams params, unsigned r)
    : field_(&f), params_(std::move(params)) {
  k_ = static_cast<unsigned>(params_.a.size());
  v_ = static_cast<unsigned>(params_.b.size());
  r_ = r;
  n_ = k_ + r_;
  if (!(v_ < k_ + r && r <= v_))
    throw Error(Errc::BadDimensions, "EC code requires v-k < r <= v");
  Matrix a = build_cauchy(f, params_);
  // H = [A; I_r 0]^T, stored v x n. In GF(2^m) the -I_r of the general
  // definition coincides with I_r.
  h_ = Matrix(v_, n_);
  for (unsigned j = 0; j < v_; ++j) {
    for (unsigned i = 0; i < k_; ++i) h_.at(j, i) = a.at(i, j);
    if (j < r_) h_.at(j, k_ + j) = 1;
  }
}

std::vector<Sym> ECCode::h_row(std::size_t i) const {
  return mat_transpose(h_).row(i);
}

const Matrix& ECCode::systematic_generator() const {
  if (!gen_) {
    const Field& f = *field_;
    unsigned dim = n_ - v_;
    Matrix hm = h_.submatrix(0, 0, v_, dim);
    Matrix hx = h_.submatrix(0, dim, v_, v_);
    Matrix x_t;
    try {
      x_t = mat_mul(f, mat_inverse(f, hx), hm);  // v x dim
    } catch (const Error&) {
      throw Error(Errc::RankDeficient, "parity check lost rank; corrupted code spec");
    }
    Matrix g(dim, n_);
    for (unsigned i = 0; i < dim; ++i) {
      g.at(i, i) = 1;
      for (unsigned j = 0; j < v_; ++j) g.at(i, dim + j) = x_t.at(j, i);
    }
    gen_ = std::move(g);
  }
  return *gen_;
}

Matrix ECCode::systematic_x_block() const {
  const Matrix& g = systematic_generator();
  return g.submatrix(0, n_ - v_, n_ - v_, v_);
}

std::vector<Sym> ECCode::encode(const std::vector<Sym>& message) const {
  if (message.size() != dim())
    throw Error(Errc::LengthMismatch, "message length must be n-v");
  return vec_mat_mul(*field_, message, systematic_generator());
}

ECCode ECCode::plain_equivalent() const {
  CauchyParams p = params_;
  p.c.clear();
  p.d.clear();
  return ECCode(*field_, std::move(p), r_);
}

GrsResult grs_membership_test(const Field& f, const Matrix& x) {
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j)
      if (x.at(i, j) == 0) return {false, 1};
  Matrix xc(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) xc.at(i, j) = f.inv(x.at(i, j));
  for (std::size_t i1 = 0; i1 < xc.rows(); ++i1)
    for (std::size_t i2 = i1 + 1; i2 < xc.rows(); ++i2)
      for (std::size_t j1 = 0; j1 < xc.cols(); ++j1)
        for (std::size_t j2 = j1 + 1; j2 < xc.cols(); ++j2) {
          Sym minor = f.sub(f.mul(xc.at(i1, j1), xc.at(i2, j2)),
                            f.mul(xc.at(i1, j2), xc.at(i2, j1)));
          if (minor == 0) return {false, 2};
        }
  if (mat_rank(f, xc) != 2) return {false, 3};
  return {true, 0};
}

std::vector<Sym> gc_to_cauchy_map(const Field& f, const std::vector<Sym>& word,
                                  const std::vector<Sym>& c, const std::vector<Sym>& d) {
  std::size_t k = c.size();
  if (word.size() < k || word.size() - k > d.size())
    throw Error(Errc::LengthMismatch, "word length incompatible with scalings");
  std::vector<Sym> out(word.size());
  for (std::size_t i = 0; i < k; ++i) out[i] = f.mul(word[i], c[i]);
  for (std::size_t j = k; j < word.size(); ++j) out[j] = f.div(word[j], d[j - k]);
  return out;
}

std::vector<Sym> gc_to_cauchy_map_inverse(const Field& f, const std::vector<Sym>& word,
                                          const std::vector<Sym>& c, const std::vector<Sym>& d) {
  std::size_t k = c.size();
  if (word.size() < k || word.size() - k > d.size())
    throw Error(Errc::LengthMismatch, "word length incompatible with scalings");
  std::vector<Sym> out(word.size());
  for (std::size_t i = 0; i < k; ++i) out[i] = f.div(word[i], c[i]);
  for (std::size_t j = k; j < word.size(); ++j) out[j] = f.mul(word[j], d[j - k]);
  return out;
}

} // namespace hecc
