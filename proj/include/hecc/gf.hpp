#pragma once

#include <cstdint>
#include <vector>

#include "hecc/error.hpp"

namespace hecc {

using Sym = std::uint16_t;

/// GF(2^m) with log/antilog tables, 1 <= m <= 16. Immutable after
/// construction; all operations are pure and safe to share across threads.
class Field {
public:
  Field(unsigned degree, std::uint32_t prim_poly);

  /// Field with a shipped default primitive polynomial for this degree.
  static Field with_default_poly(unsigned degree);
  static std::uint32_t default_poly(unsigned degree);

  unsigned degree() const { return m_; }
  std::uint32_t size() const { return q_; }
  std::uint32_t prim_poly() const { return prim_; }

  /// The primitive element beta (the residue of X mod prim_poly).
  Sym alpha() const { return exp_[1 % (q_ - 1)]; }
  Sym alpha_pow(long long e) const;
  unsigned log(Sym x) const;

  Sym add(Sym x, Sym y) const { return x ^ y; }
  Sym sub(Sym x, Sym y) const { return x ^ y; }
  Sym mul(Sym x, Sym y) const {
    if (x == 0 || y == 0) return 0;
    return exp_[log_[x] + log_[y]];
  }
  Sym inv(Sym x) const;
  Sym div(Sym x, Sym y) const;
  Sym pow(Sym x, long long e) const;

private:
  unsigned m_;
  std::uint32_t q_;
  std::uint32_t prim_;
  std::vector<Sym> exp_;       // length 2(q-1), doubled to skip the mod
  std::vector<std::uint16_t> log_;  // length q; log_[0] unused
};

/// Polynomial over GF(q), coefficients low-degree first, always trimmed.
class Poly {
public:
  /// degree() result for the zero polynomial.
  static constexpr int kZeroDegree = INT32_MIN;

  Poly() = default;                       // zero polynomial
  explicit Poly(std::vector<Sym> coeffs); // trims trailing zeros

  static Poly one() { return Poly({1}); }
  static Poly constant(Sym c) { return Poly({c}); }
  /// X - a (char 2: X + a).
  static Poly x_minus(Sym a) { return Poly({a, 1}); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  Sym coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  Sym leading() const { return coeffs_.back(); }
  const std::vector<Sym>& coeffs() const { return coeffs_; }

  bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }

private:
  std::vector<Sym> coeffs_;
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_mul(const Field& f, const Poly& a, const Poly& b);
Poly poly_scale(const Field& f, const Poly& a, Sym c);
/// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Field& f, const Poly& a, const Poly& b);
Poly poly_monic(const Field& f, const Poly& a);
/// Monic gcd; throws BothZero if both inputs are zero.
Poly poly_gcd(const Field& f, Poly a, Poly b);
/// Formal derivative (char 2: even-power terms vanish).
Poly poly_derivative(const Poly& a);
Sym poly_eval(const Field& f, const Poly& p, Sym x);
/// The candidates where p evaluates to zero; throws on the zero polynomial.
std::vector<Sym> poly_roots_in_set(const Field& f, const Poly& p, const std::vector<Sym>& candidates);

} // namespace hecc
