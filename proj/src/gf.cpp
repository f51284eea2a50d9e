#include "hecc/gf.hpp"

#include <algorithm>

namespace hecc {

namespace {

int poly_bit_degree(std::uint32_t p) {
  int d = -1;
  while (p) {
    ++d;
    p >>= 1;
  }
  return d;
}

} // namespace

Field::Field(unsigned degree, std::uint32_t prim_poly) : m_(degree), prim_(prim_poly) {
  if (degree < 1 || degree > 16)
    throw Error(Errc::BadDegree, "field degree must be in [1,16]");
  if (poly_bit_degree(prim_poly) != static_cast<int>(degree))
    throw Error(Errc::BadDegree, "prim_poly degree does not match field degree");
  q_ = 1u << m_;

  exp_.assign(2 * (q_ - 1), 0);
  log_.assign(q_, 0);
  std::uint32_t b = 1;
  for (std::uint32_t i = 0; i < q_ - 1; ++i) {
    if (b == 1 && i > 0)
      throw Error(Errc::NotPrimitive, "polynomial root has multiplicative order < q-1");
    exp_[i] = static_cast<Sym>(b);
    exp_[i + q_ - 1] = static_cast<Sym>(b);
    log_[b] = static_cast<std::uint16_t>(i);
    b <<= 1;
    if (b & q_) b ^= prim_;
    if (b == 0 || b >= q_)
      throw Error(Errc::NotPrimitive, "polynomial is not primitive over GF(2)");
  }
  if (b != 1)
    throw Error(Errc::NotPrimitive, "polynomial root does not generate the multiplicative group");
}

std::uint32_t Field::default_poly(unsigned degree) {
  // Conway-ish primitive polynomials; degree 4 is X^4+X+1, degree 8 is the
  // common 0x11d used throughout storage coding.
  static const std::uint32_t polys[17] = {
      0,       0x3,     0x7,     0xb,     0x13,   0x25,    0x43,    0x89,   0x11d,
      0x211,   0x409,   0x805,   0x1053,  0x201b, 0x4443,  0x8003,  0x1100b};
  if (degree < 1 || degree > 16)
    throw Error(Errc::BadDegree, "no default polynomial for this degree");
  return polys[degree];
}

Field Field::with_default_poly(unsigned degree) {
  return Field(degree, default_poly(degree));
}

Sym Field::alpha_pow(long long e) const {
  long long n = q_ - 1;
  long long r = e % n;
  if (r < 0) r += n;
  return exp_[static_cast<std::size_t>(r)];
}

unsigned Field::log(Sym x) const {
  if (x == 0) throw Error(Errc::DivideByZero, "log of zero");
  return log_[x];
}

Sym Field::inv(Sym x) const {
  if (x == 0) throw Error(Errc::DivideByZero, "inverse of zero");
  return exp_[(q_ - 1) - log_[x]];
}

Sym Field::div(Sym x, Sym y) const {
  if (y == 0) throw Error(Errc::DivideByZero, "division by zero");
  if (x == 0) return 0;
  return exp_[log_[x] + (q_ - 1) - log_[y]];
}

Sym Field::pow(Sym x, long long e) const {
  if (x == 0) {
    if (e < 0) throw Error(Errc::DivideByZero, "negative power of zero");
    return e == 0 ? 1 : 0;
  }
  long long n = q_ - 1;
  long long r = (static_cast<long long>(log_[x]) * (e % n)) % n;
  if (r < 0) r += n;
  return exp_[static_cast<std::size_t>(r)];
}

Poly::Poly(std::vector<Sym> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly poly_add(const Poly& a, const Poly& b) {
  std::vector<Sym> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) ^ b.coeff(i);
  return Poly(std::move(c));
}

Poly poly_mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Sym> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeff(i) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      c[i + j] ^= f.mul(a.coeff(i), b.coeff(j));
  }
  return Poly(std::move(c));
}

Poly poly_scale(const Field& f, const Poly& a, Sym c) {
  std::vector<Sym> out(a.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.mul(a.coeff(i), c);
  return Poly(std::move(out));
}

std::pair<Poly, Poly> poly_divmod(const Field& f, const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(Errc::DivideByZero, "polynomial division by zero");
  if (a.is_zero() || a.degree() < b.degree()) return {Poly(), a};
  std::vector<Sym> rem = a.coeffs();
  std::vector<Sym> quot(a.degree() - b.degree() + 1, 0);
  Sym lead_inv = f.inv(b.leading());
  for (int d = a.degree(); d >= b.degree(); --d) {
    Sym c = rem[d];
    if (c == 0) continue;
    Sym q = f.mul(c, lead_inv);
    quot[d - b.degree()] = q;
    for (std::size_t i = 0; i < b.coeffs().size(); ++i)
      rem[d - b.degree() + i] ^= f.mul(q, b.coeff(i));
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_monic(const Field& f, const Poly& a) {
  if (a.is_zero()) return a;
  return poly_scale(f, a, f.inv(a.leading()));
}

Poly poly_gcd(const Field& f, Poly a, Poly b) {
  if (a.is_zero() && b.is_zero())
    throw Error(Errc::BothZero, "gcd of two zero polynomials");
  while (!b.is_zero()) {
    Poly r = poly_divmod(f, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(f, a);
}

Poly poly_derivative(const Poly& a) {
  if (a.is_zero() || a.degree() == 0) return Poly();
  std::vector<Sym> c(a.coeffs().size() - 1, 0);
  for (std::size_t i = 1; i < a.coeffs().size(); ++i)
    if (i % 2 == 1) c[i - 1] = a.coeff(i);
  return Poly(std::move(c));
}

Sym poly_eval(const Field& f, const Poly& p, Sym x) {
  Sym acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    acc = f.add(f.mul(acc, x), *it);
  return acc;
}

std::vector<Sym> poly_roots_in_set(const Field& f, const Poly& p, const std::vector<Sym>& candidates) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "root search on the zero polynomial");
  std::vector<Sym> roots;
  for (Sym x : candidates)
    if (poly_eval(f, p, x) == 0) roots.push_back(x);
  return roots;
}

} // namespace hecc
