#include "hecc/oracle.hpp"

namespace hecc {

std::vector<std::vector<Sym>> enumerate_codebook(const ECCode& code, std::size_t max_words) {
  const Field& f = code.field();
  unsigned dim = code.dim();
  double words = 1;
  for (unsigned i = 0; i < dim; ++i) words *= f.size();
  if (words > static_cast<double>(max_words))
    throw Error(Errc::TooLarge, "codebook enumeration over budget");

  std::vector<std::vector<Sym>> out;
  out.reserve(static_cast<std::size_t>(words));
  std::vector<Sym> msg(dim, 0);
  while (true) {
    out.push_back(code.encode(msg));
    unsigned pos = 0;
    while (pos < dim) {
      if (++msg[pos] < f.size()) break;
      msg[pos++] = 0;
    }
    if (pos == dim) break;
  }
  return out;
}

unsigned min_distance(const ECCode& code, std::size_t max_words) {
  // Linear code: minimum distance equals minimum nonzero weight.
  auto book = enumerate_codebook(code, max_words);
  unsigned best = code.n() + 1;
  for (const auto& cw : book) {
    unsigned w = 0;
    for (Sym x : cw) w += (x != 0);
    if (w > 0 && w < best) best = w;
  }
  return best;
}

OracleResult brute_force_decode(const ECCode& code, const NoisyWord& word,
                                std::size_t max_words) {
  if (word.size() != code.n())
    throw Error(Errc::LengthMismatch, "word length must be n");
  auto book = enumerate_codebook(code, max_words);
  unsigned best = code.n() + 1;
  std::size_t best_count = 0;
  const std::vector<Sym>* best_cw = nullptr;
  for (const auto& cw : book) {
    unsigned d = 0;
    for (std::size_t i = 0; i < cw.size(); ++i)
      if (!word.is_erased(i) && cw[i] != word.symbols[i]) ++d;
    if (d < best) {
      best = d;
      best_count = 1;
      best_cw = &cw;
    } else if (d == best) {
      ++best_count;
    }
  }
  if (!best_cw) return OracleFailed{};
  if (best_count > 1) return OracleAmbiguous{};
  return OracleDecoded{*best_cw, best};
}

} // namespace hecc
