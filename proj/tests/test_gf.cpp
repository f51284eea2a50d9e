#include <doctest.h>

#include "helpers.hpp"

using namespace hecc;
using namespace hecc::testing;

TEST_CASE("GF(2^4) with X^4+X+1 matches the published table") {
  Field f = gf16();
  Pow b{f};
  CHECK(f.size() == 16);
  CHECK(f.alpha() == 2);
  CHECK(b(4) == 3);    // beta^4 = 1 + beta
  CHECK(b(8) == 5);    // 1 + beta^2
  CHECK(b(10) == 7);   // 1 + beta + beta^2
  CHECK(b(15) == 1);
  CHECK(f.add(b(1), b(8)) == b(10));
  CHECK(f.inv(b(10)) == b(5));
  CHECK(f.mul(b(10), b(5)) == 1);
}

TEST_CASE("GF(2) works") {
  Field f(1, 0x3);
  CHECK(f.size() == 2);
  CHECK(f.alpha() == 1);
  CHECK(f.mul(1, 1) == 1);
  CHECK(f.add(1, 1) == 0);
}

TEST_CASE("non-primitive polynomial rejected") {
  // X^4+X^3+X^2+X+1 has a root of order 5
  try {
    Field f(4, 0x1f);
    FAIL("expected NotPrimitive");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotPrimitive);
  }
  CHECK_THROWS_AS(Field(0, 0x3), Error);
  CHECK_THROWS_AS(Field(17, 0x3), Error);
  CHECK_THROWS_AS(Field(4, 0x3), Error);   // degree mismatch
  CHECK_THROWS_AS(Field(4, 0x18), Error);  // reducible, constant term 0
}

TEST_CASE("default polynomials are primitive for all supported degrees") {
  for (unsigned m = 1; m <= 16; ++m) {
    Field f = Field::with_default_poly(m);
    CHECK(f.size() == (1u << m));
  }
  CHECK(Field::default_poly(4) == 0x13);
}

TEST_CASE("division and inversion preconditions") {
  Field f = gf16();
  CHECK_THROWS_AS(f.inv(0), Error);
  CHECK_THROWS_AS(f.div(1, 0), Error);
  CHECK(f.div(0, 3) == 0);
  CHECK(f.pow(0, 0) == 1);
  CHECK(f.pow(5, -1) == f.inv(5));
}

TEST_CASE("field axioms hold on random triples") {
  Field f = Field::with_default_poly(8);
  std::mt19937_64 rng(42);
  for (int i = 0; i < 10000; ++i) {
    Sym x = static_cast<Sym>(rng() % 256), y = static_cast<Sym>(rng() % 256),
        z = static_cast<Sym>(rng() % 256);
    REQUIRE(f.add(x, y) == f.add(y, x));
    REQUIRE(f.mul(x, y) == f.mul(y, x));
    REQUIRE(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
    REQUIRE(f.add(f.add(x, y), z) == f.add(x, f.add(y, z)));
    REQUIRE(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
    REQUIRE(f.mul(x, 1) == x);
    REQUIRE(f.add(x, x) == 0);
    if (x != 0) REQUIRE(f.mul(x, f.inv(x)) == 1);
  }
}

namespace {

Sym clmul_mod(unsigned m, std::uint32_t poly, Sym x, Sym y) {
  std::uint32_t acc = 0;
  for (unsigned i = 0; i < m; ++i)
    if (y >> i & 1) acc ^= static_cast<std::uint32_t>(x) << i;
  for (int i = 2 * m - 2; i >= static_cast<int>(m); --i)
    if (acc >> i & 1) acc ^= poly << (i - m);
  return static_cast<Sym>(acc);
}

} // namespace

TEST_CASE("table multiplication equals carry-less multiplication mod poly") {
  for (unsigned m : {1u, 2u, 3u, 4u, 5u, 8u}) {
    Field f = Field::with_default_poly(m);
    for (std::uint32_t x = 0; x < f.size(); ++x)
      for (std::uint32_t y = 0; y < f.size(); ++y)
        REQUIRE(f.mul(static_cast<Sym>(x), static_cast<Sym>(y)) ==
                clmul_mod(m, f.prim_poly(), static_cast<Sym>(x), static_cast<Sym>(y)));
  }
}

TEST_CASE("polynomial gcd") {
  Field f = gf16();
  Pow b{f};
  Poly p1 = Poly::x_minus(b(2));
  Poly p2 = poly_mul(f, p1, Poly::x_minus(b(9)));
  CHECK(poly_gcd(f, p1, p2) == p1);

  Poly g({b(11), b(11), 1});  // X^2 + b^11 X + b^11
  CHECK(poly_gcd(f, g, Poly::x_minus(b(4))) == Poly::one());

  Poly p({b(3), b(5)});
  CHECK(poly_gcd(f, p, Poly()) == poly_monic(f, p));
  CHECK(poly_gcd(f, Poly(), p) == poly_monic(f, p));
  CHECK_THROWS_AS(poly_gcd(f, Poly(), Poly()), Error);
}

TEST_CASE("gcd scales with a common monic factor") {
  Field f = Field::with_default_poly(8);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto rand_poly = [&](int deg) {
      std::vector<Sym> cs(deg + 1);
      for (Sym& c : cs) c = static_cast<Sym>(rng() % 256);
      cs.back() = random_nonzero(f, rng);
      return Poly(cs);
    };
    Poly a = rand_poly(static_cast<int>(rng() % 3) + 1);
    Poly bb = rand_poly(static_cast<int>(rng() % 3) + 1);
    Poly c = poly_monic(f, rand_poly(static_cast<int>(rng() % 2) + 1));
    Poly lhs = poly_gcd(f, poly_mul(f, a, c), poly_mul(f, bb, c));
    Poly rhs = poly_monic(f, poly_mul(f, c, poly_gcd(f, a, bb)));
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("formal derivative in characteristic 2") {
  Field f = gf16();
  Pow b{f};
  CHECK(poly_derivative(Poly({b(11), b(11), 1})) == Poly::constant(b(11)));
  CHECK(poly_derivative(Poly::constant(b(3))).is_zero());
  // d/dX (X^3 + X) = X^2 + 1
  CHECK(poly_derivative(Poly({0, 1, 0, 1})) == Poly({1, 0, 1}));
}

TEST_CASE("separability detected through gcd with the derivative") {
  Field f = gf16();
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Sym a = random_nonzero(f, rng);
    Poly sq = poly_mul(f, Poly::x_minus(a), Poly::x_minus(a));
    CHECK(poly_gcd(f, sq, poly_derivative(sq)).degree() >= 1);
    Sym a2 = random_nonzero(f, rng);
    if (a2 == a) continue;
    Poly sep = poly_mul(f, Poly::x_minus(a), Poly::x_minus(a2));
    CHECK(poly_gcd(f, sep, poly_derivative(sep)).degree() == 0);
  }
}

TEST_CASE("root search over a candidate set") {
  Field f = gf16();
  Pow b{f};
  Poly g({b(11), b(11), 1});
  std::vector<Sym> cands;
  for (int e : {1, 2, 3, 4, 8, 9, 10, 11}) cands.push_back(b(e));
  CHECK(poly_roots_in_set(f, g, cands) == std::vector<Sym>{b(2), b(9)});
  CHECK(poly_roots_in_set(f, Poly::x_minus(b(2)), {b(1)}).empty());
  CHECK(poly_roots_in_set(f, Poly::one(), cands).empty());
  CHECK_THROWS_AS(poly_roots_in_set(f, Poly(), cands), Error);
}

TEST_CASE("poly divmod and eval") {
  Field f = gf16();
  Pow b{f};
  Poly a({b(3), b(7), 1, b(2)});
  Poly d({b(5), 1});
  auto [q, r] = poly_divmod(f, a, d);
  CHECK(poly_add(poly_mul(f, q, d), r) == a);
  CHECK(r.degree() < d.degree());
  Sym x = b(6);
  Sym direct = f.add(f.add(b(3), f.mul(b(7), x)),
                     f.add(f.pow(x, 2), f.mul(b(2), f.pow(x, 3))));
  CHECK(poly_eval(f, a, x) == direct);
}
