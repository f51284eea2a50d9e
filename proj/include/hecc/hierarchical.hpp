#pragma once

#include <iosfwd>
#include <string>

#include "hecc/ec_codec.hpp"

namespace hecc {

struct BlockSpec {
  unsigned k = 0;
  unsigned r = 0;
  unsigned delta = 0;
  std::vector<Sym> a_points;  // k + delta values
  std::vector<Sym> b_points;  // r + (delta_total - delta) values
  unsigned n() const { return k + r; }
};

struct HierConfig {
  unsigned field_degree = 0;
  std::uint32_t prim_poly = 0;
  std::vector<BlockSpec> blocks;
};

/// Homogeneous config with consecutive powers of beta as points.
HierConfig default_hier_config(unsigned field_degree, unsigned p, unsigned k,
                               unsigned r, unsigned delta);

/// Plain-text key/value round-trippable serialization (points stored as
/// decimal discrete logs).
std::string serialize_config(const HierConfig& cfg);
HierConfig parse_config(const std::string& text);

struct BlockDecoded {
  std::vector<Sym> message;
  std::vector<Sym> codeword;              // the corrected n_i-symbol block
  std::map<std::size_t, Sym> error;       // 0-based positions within the block
};

using BlockResult = std::variant<BlockDecoded, DecodeFail>;

enum class BlockStatus { Clean, CorrectedLocal, CorrectedGlobal, Failed };

struct BlockOutcome {
  BlockStatus status = BlockStatus::Failed;
  std::vector<Sym> message;
  std::vector<Sym> codeword;
  std::map<std::size_t, Sym> error;
};

/// Double-level hierarchical code: per-block Cauchy matrices T_i partitioned
/// into A_{i,i}, B_{i,j}, U_i, Z_i, with coupling A_{i,j} = B_{i,j} U_j.
/// Immutable after construction; block decodes share only read-only state.
class HierCode {
public:
  HierCode(const Field& f, HierConfig cfg);

  const Field& field() const { return *field_; }
  const HierConfig& config() const { return cfg_; }
  unsigned block_count() const { return static_cast<unsigned>(cfg_.blocks.size()); }
  unsigned delta_total() const { return delta_total_; }
  const BlockSpec& block(unsigned i) const { return cfg_.blocks[i]; }

  const Matrix& T(unsigned i) const { return t_[i]; }
  const Matrix& A(unsigned i, unsigned j) const;  // diagonal or coupling block
  Matrix B(unsigned i, unsigned j) const;         // i != j
  const Matrix& U(unsigned i) const { return u_[i]; }
  Matrix Z(unsigned i) const;

  /// Assembled generator matrix, (sum k_i) x (sum n_i).
  const Matrix& generator() const { return g_; }
  Matrix local_pcm(unsigned i) const { return local_code(i).parity_check(); }
  Matrix global_pcm(unsigned i) const { return global_code(i).parity_check(); }

  /// EC view behind H_i^L: k = k_i + delta_i, v = r = r_i.
  const ECCode& local_code(unsigned i) const { return local_codes_[i]; }
  /// EC view behind H_i^G: k = k_i, v = r_i + delta - delta_i, r = r_i.
  const ECCode& global_code(unsigned i) const { return global_codes_[i]; }

  std::vector<std::vector<Sym>> encode(const std::vector<std::vector<Sym>>& messages) const;

  /// Local decode: the coupling vector p_i is treated as delta_i erasures
  /// in the extended word (m_i, *^{delta_i}, s_i).
  BlockResult local_decode(unsigned i, const NoisyWord& block_word) const;

  /// Global decode using sibling blocks. `others[j]` must hold the corrected
  /// codeword of every block j != i (entry i is ignored). When
  /// strict_no_erasures is set, erasures in the target are rejected and t = 0.
  BlockResult global_decode(unsigned i, const NoisyWord& target,
                            const std::vector<std::vector<Sym>>& others,
                            bool strict_no_erasures = false) const;

  /// Local-first, global-fallback orchestration over one full stripe.
  std::vector<BlockOutcome> decode_all(const std::vector<NoisyWord>& words) const;

private:
  const Field* field_;
  HierConfig cfg_;
  unsigned delta_total_ = 0;
  std::vector<Matrix> t_;
  std::vector<Matrix> u_;
  std::vector<std::vector<Matrix>> a_;  // a_[i][j]: A_{i,i} on diagonal, B_{i,j} U_j off it
  Matrix g_;
  std::vector<ECCode> local_codes_;
  std::vector<ECCode> global_codes_;

  unsigned coupling_col_offset(unsigned i, unsigned j) const;  // start of B_{i,j} in T_i
};

} // namespace hecc
