#pragma once

#include "hecc/ec_codec.hpp"

namespace hecc {

/// All q^dim codewords from the systematic generator. Throws TooLarge when
/// the codebook would exceed max_words.
std::vector<std::vector<Sym>> enumerate_codebook(const ECCode& code,
                                                 std::size_t max_words = 1u << 20);

/// Exhaustive minimum Hamming distance over the codebook.
unsigned min_distance(const ECCode& code, std::size_t max_words = 1u << 20);

struct OracleDecoded {
  std::vector<Sym> codeword;
  unsigned distance = 0;  // Hamming distance on non-erased positions
};

struct OracleAmbiguous {};
struct OracleFailed {};
using OracleResult = std::variant<OracleDecoded, OracleAmbiguous, OracleFailed>;

/// Nearest-codeword search: erased positions cost nothing, every other
/// mismatch costs one. Ties at the minimum report OracleAmbiguous.
OracleResult brute_force_decode(const ECCode& code, const NoisyWord& word,
                                std::size_t max_words = 1u << 20);

} // namespace hecc
