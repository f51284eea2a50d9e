#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "hecc/oracle.hpp"

using namespace hecc;
using namespace hecc::testing;

namespace {

// GF(2^3), k=3, v=3, r=2: n=5, dim 2, 64 codewords
ECCode small_code() {
  static Field f = Field::with_default_poly(3);
  Pow b{f};
  return ECCode(f, {{b(0), b(1), b(2)}, {b(3), b(4), b(5)}, {}, {}}, 2);
}

} // namespace

TEST_CASE("codebook enumeration") {
  ECCode code = small_code();
  auto words = enumerate_codebook(code);
  CHECK(words.size() == 64);
  std::set<std::vector<Sym>> uniq(words.begin(), words.end());
  CHECK(uniq.size() == 64);
  for (const auto& w : words) CHECK(w.size() == 5);
  CHECK_THROWS_AS(enumerate_codebook(code, 10), Error);
}

TEST_CASE("minimum distance is v + 1") {
  CHECK(min_distance(small_code()) == 4);

  Field f = gf16();
  Pow b{f};
  ECCode tiny(f, {{b(1)}, {b(2)}, {}, {}}, 1);
  CHECK(min_distance(tiny) == 2);
}

TEST_CASE("membership equals zero syndrome, exhaustively") {
  ECCode code = small_code();
  auto words = enumerate_codebook(code);
  std::set<std::vector<Sym>> book(words.begin(), words.end());
  std::vector<Sym> w(5, 0);
  std::size_t zero_syndromes = 0;
  for (std::size_t x = 0; x < 8 * 8 * 8 * 8 * 8; ++x) {
    std::size_t rem = x;
    for (unsigned i = 0; i < 5; ++i) {
      w[i] = static_cast<Sym>(rem % 8);
      rem /= 8;
    }
    auto s = compute_syndrome(code, NoisyWord::from_symbols(w));
    bool zero = std::all_of(s.begin(), s.end(), [](Sym v) { return v == 0; });
    if (zero) ++zero_syndromes;
    REQUIRE(zero == (book.count(w) > 0));
  }
  CHECK(zero_syndromes == 64);
}

TEST_CASE("nearest codeword within the unique radius") {
  ECCode code = small_code();
  const Field& f = code.field();
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Sym> msg = {static_cast<Sym>(rng() % 8), static_cast<Sym>(rng() % 8)};
    std::vector<Sym> cw = code.encode(msg);
    NoisyWord w = corrupt(f, cw, 1, 1, rng);  // 2s + t = 3 <= v
    OracleResult res = brute_force_decode(code, w);
    REQUIRE(std::holds_alternative<OracleDecoded>(res));
    REQUIRE(std::get<OracleDecoded>(res).codeword == cw);
  }
}

TEST_CASE("midpoints between codewords report a tie") {
  ECCode code = small_code();
  auto words = enumerate_codebook(code);
  const auto& cw1 = words[1];
  const std::vector<Sym>* cw2 = nullptr;
  for (const auto& w : words) {
    unsigned dist = 0;
    for (unsigned i = 0; i < 5; ++i) dist += (w[i] != cw1[i]);
    if (dist == 4) {
      cw2 = &w;
      break;
    }
  }
  REQUIRE(cw2 != nullptr);
  std::vector<Sym> mid = cw1;
  unsigned moved = 0;
  for (unsigned i = 0; i < 5 && moved < 2; ++i)
    if ((*cw2)[i] != cw1[i]) {
      mid[i] = (*cw2)[i];
      ++moved;
    }
  OracleResult res = brute_force_decode(code, NoisyWord::from_symbols(mid));
  CHECK(std::holds_alternative<OracleAmbiguous>(res));
}

TEST_CASE("erasure-only words complete uniquely") {
  ECCode code = small_code();
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Sym> msg = {static_cast<Sym>(rng() % 8), static_cast<Sym>(rng() % 8)};
    std::vector<Sym> cw = code.encode(msg);
    NoisyWord w = corrupt(code.field(), cw, 0, 3, rng);
    OracleResult res = brute_force_decode(code, w);
    REQUIRE(std::holds_alternative<OracleDecoded>(res));
    const auto& dec = std::get<OracleDecoded>(res);
    REQUIRE(dec.codeword == cw);
    REQUIRE(dec.distance == 0);
  }
}

TEST_CASE("algebraic decoder agrees with the oracle within budget") {
  ECCode code = small_code();
  const Field& f = code.field();
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Sym> msg = {static_cast<Sym>(rng() % 8), static_cast<Sym>(rng() % 8)};
    std::vector<Sym> cw = code.encode(msg);
    unsigned s = rng() % 2, t = rng() % (3 - 2 * s + 1);
    NoisyWord w = corrupt(f, cw, s, t, rng);
    DecodeResult alg = decode(code, w, s);
    OracleResult orc = brute_force_decode(code, w);
    REQUIRE(decode_ok(alg));
    REQUIRE(std::holds_alternative<OracleDecoded>(orc));
    REQUIRE(std::get<Decoded>(alg).codeword == std::get<OracleDecoded>(orc).codeword);
    REQUIRE(std::get<Decoded>(alg).codeword == cw);
  }
}
