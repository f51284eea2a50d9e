#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "hecc/cauchy.hpp"

namespace hecc {

/// Received word over GF(q) with erased positions tracked out of band.
struct NoisyWord {
  std::vector<Sym> symbols;
  std::vector<std::uint8_t> erased;  // same length; nonzero = erased

  static NoisyWord from_symbols(std::vector<Sym> syms);

  std::size_t size() const { return symbols.size(); }
  bool is_erased(std::size_t i) const { return erased[i] != 0; }
  void erase_at(std::size_t i) { erased[i] = 1; symbols[i] = 0; }
  std::size_t erasure_count() const;
  std::vector<std::size_t> erased_positions() const;
  /// z(c'): erasures replaced by zero.
  std::vector<Sym> zero_filled() const;
};

/// S = H z(c')^T, length v.
std::vector<Sym> compute_syndrome(const ECCode& code, const NoisyWord& word);

/// Monic product of (X - a_i) over erased message positions and
/// (X - b_{j-k}) over erased parity positions.
Poly erasure_locator(const ECCode& code, const NoisyWord& word);

/// The linear system recovering the error-locator coefficients: row i uses
/// index set W_i = W0 + {w_i}; entry (i,j) of [u|F] is
/// sum_{w in W_i} S_w e_E(b_w) b_w^{s+1-j} / prod_{i' in W_i \ {w}} (b_w - b_{i'}).
struct FSystem {
  Matrix f;             // rows x s
  std::vector<Sym> u;   // rows
  unsigned s = 0;
  unsigned t = 0;
  std::vector<unsigned> w0;  // 0-based indices into [0, v)
  std::vector<unsigned> wi;  // the extra index per row
};

/// w0 holds 0-based indices; |w0| = s + t. max_rows = 0 means all available.
FSystem build_f_system(const ECCode& code, const std::vector<Sym>& syndrome,
                       const Poly& erasure_loc, unsigned s, unsigned t,
                       const std::vector<unsigned>& w0, unsigned max_rows = 0);

struct SigmaUnique { std::vector<Sym> sigma; };
struct SigmaAmbiguous { std::vector<Sym> sigma1, sigma2; };
struct SigmaInconsistent {};
using SigmaOutcome = std::variant<SigmaUnique, SigmaAmbiguous, SigmaInconsistent>;

SigmaOutcome solve_sigma(const Field& f, const FSystem& sys);

/// g(X; sigma) = X^s + sigma_1 X^{s-1} + ... + sigma_s.
Poly locator_from_sigma(const std::vector<Sym>& sigma);

/// Scans sigma_gamma = gamma sigma1 + (1-gamma) sigma2 over the first
/// 2(s+t)+1 nonzero field elements != 1 (ascending discrete log) for a
/// candidate whose locator is separable and coprime with e_E.
std::optional<std::vector<Sym>> disambiguate_sigma(const Field& f,
                                                   const std::vector<Sym>& sigma1,
                                                   const std::vector<Sym>& sigma2,
                                                   const Poly& erasure_loc);

enum class DecodeFail {
  SigmaInconsistent,
  NoSeparableCandidate,
  TooManyLocations,
  MagnitudeInconsistent,
  ResidualSyndrome,
  InconsistentSiblings,
};

struct Decoded {
  std::vector<Sym> codeword;
  /// Nonzero differences codeword - z(c'), 0-based position -> magnitude.
  std::map<std::size_t, Sym> error;
};

using DecodeResult = std::variant<Decoded, DecodeFail>;

inline bool decode_ok(const DecodeResult& r) { return std::holds_alternative<Decoded>(r); }

/// Exact solve of sum_{i in positions} e_i h_i = S. Zero magnitudes are kept
/// (callers prune). nullopt when inconsistent.
std::optional<std::map<std::size_t, Sym>> solve_magnitudes(const ECCode& code,
                                                           const std::vector<Sym>& syndrome,
                                                           const std::vector<std::size_t>& positions);

/// Full hybrid error-and-erasure decoder; t is taken from the word's
/// erasures. Requires 2 s_budget + t <= v.
DecodeResult decode(const ECCode& code, const NoisyWord& word, unsigned s_budget);

/// Same pipeline with the syndrome supplied by the caller (the word's own
/// syndrome is ignored); used by hierarchical global decoding. The code must
/// be scaling-free.
DecodeResult decode_with_syndrome(const ECCode& code, const NoisyWord& word,
                                  const std::vector<Sym>& syndrome, unsigned s_budget);

} // namespace hecc
