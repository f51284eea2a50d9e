#include "hecc/hierarchical.hpp"

#include <algorithm>
#include <sstream>

namespace hecc {

HierConfig default_hier_config(unsigned field_degree, unsigned p, unsigned k,
                               unsigned r, unsigned delta) {
  Field f = Field::with_default_poly(field_degree);
  HierConfig cfg;
  cfg.field_degree = field_degree;
  cfg.prim_poly = f.prim_poly();
  unsigned delta_total = p * delta;
  unsigned need = k + delta + r + (delta_total - delta);
  if (need > f.size() - 1)
    throw Error(Errc::ConfigInvalid, "field too small for the requested block shape");
  BlockSpec spec;
  spec.k = k;
  spec.r = r;
  spec.delta = delta;
  for (unsigned i = 1; i <= k + delta; ++i) spec.a_points.push_back(f.alpha_pow(i));
  for (unsigned j = 1; j <= r + delta_total - delta; ++j)
    spec.b_points.push_back(f.alpha_pow(k + delta + j));
  cfg.blocks.assign(p, spec);
  return cfg;
}

std::string serialize_config(const HierConfig& cfg) {
  Field f(cfg.field_degree, cfg.prim_poly);
  std::ostringstream out;
  out << "field_degree " << cfg.field_degree << "\n";
  out << "prim_poly " << cfg.prim_poly << "\n";
  out << "blocks " << cfg.blocks.size() << "\n";
  for (const BlockSpec& b : cfg.blocks) {
    out << "block\n";
    out << "k " << b.k << "\n";
    out << "r " << b.r << "\n";
    out << "delta " << b.delta << "\n";
    out << "a_logs";
    for (Sym x : b.a_points) {
      if (x == 0) throw Error(Errc::ConfigInvalid, "zero point has no discrete log");
      out << ' ' << f.log(x);
    }
    out << "\n";
    out << "b_logs";
    for (Sym x : b.b_points) {
      if (x == 0) throw Error(Errc::ConfigInvalid, "zero point has no discrete log");
      out << ' ' << f.log(x);
    }
    out << "\n";
  }
  return out.str();
}

HierConfig parse_config(const std::string& text) {
  HierConfig cfg;
  std::istringstream in(text);
  std::string key;
  std::size_t block_count = 0;
  std::optional<Field> f;
  BlockSpec* cur = nullptr;
  auto read_logs = [&](std::istringstream& line) {
    std::vector<Sym> out;
    unsigned lg;
    while (line >> lg) out.push_back(f->alpha_pow(lg));
    return out;
  };
  std::string line_text;
  while (std::getline(in, line_text)) {
    std::istringstream line(line_text);
    if (!(line >> key)) continue;
    if (key == "field_degree") {
      line >> cfg.field_degree;
    } else if (key == "prim_poly") {
      line >> cfg.prim_poly;
      f.emplace(cfg.field_degree, cfg.prim_poly);
    } else if (key == "blocks") {
      line >> block_count;
    } else if (key == "block") {
      cfg.blocks.emplace_back();
      cur = &cfg.blocks.back();
    } else if (cur && key == "k") {
      line >> cur->k;
    } else if (cur && key == "r") {
      line >> cur->r;
    } else if (cur && key == "delta") {
      line >> cur->delta;
    } else if (cur && key == "a_logs") {
      if (!f) throw Error(Errc::ConfigInvalid, "points listed before prim_poly");
      cur->a_points = read_logs(line);
    } else if (cur && key == "b_logs") {
      if (!f) throw Error(Errc::ConfigInvalid, "points listed before prim_poly");
      cur->b_points = read_logs(line);
    } else {
      throw Error(Errc::ConfigInvalid, "unknown config key: " + key);
    }
  }
  if (cfg.blocks.size() != block_count)
    throw Error(Errc::ConfigInvalid, "block count mismatch");
  return cfg;
}

HierCode::HierCode(const Field& f, HierConfig cfg)
    : field_(&f), cfg_(std::move(cfg)) {
  if (cfg_.field_degree != f.degree() ||
      (cfg_.prim_poly != 0 && cfg_.prim_poly != f.prim_poly()))
    throw Error(Errc::ConfigInvalid, "config field does not match the supplied field");
  unsigned p = block_count();
  if (p == 0) throw Error(Errc::ConfigInvalid, "need at least one block");
  delta_total_ = 0;
  for (const BlockSpec& b : cfg_.blocks) {
    if (!(b.delta > 0 && b.r > b.delta))
      throw Error(Errc::ConfigInvalid, "each block needs r > delta > 0");
    delta_total_ += b.delta;
  }
  for (const BlockSpec& b : cfg_.blocks) {
    if (b.a_points.size() != b.k + b.delta)
      throw Error(Errc::ConfigInvalid, "a point count must be k + delta");
    if (b.b_points.size() != b.r + delta_total_ - b.delta)
      throw Error(Errc::ConfigInvalid, "b point count must be r + (delta_total - delta)");
    for (Sym x : b.a_points)
      if (x == 0) throw Error(Errc::ConfigInvalid, "evaluation points must be nonzero");
    for (Sym x : b.b_points)
      if (x == 0) throw Error(Errc::ConfigInvalid, "evaluation points must be nonzero");
    if (static_cast<std::size_t>(b.n()) + delta_total_ > f.size() - 1)
      throw Error(Errc::ConfigInvalid, "field too small for n + delta_total distinct points");
  }

  for (const BlockSpec& b : cfg_.blocks)
    t_.push_back(build_cauchy(f, {b.a_points, b.b_points, {}, {}}));

  for (unsigned i = 0; i < p; ++i) {
    const BlockSpec& b = cfg_.blocks[i];
    u_.push_back(t_[i].submatrix(b.k, 0, b.delta, b.r));
  }
  a_.assign(p, std::vector<Matrix>(p));
  for (unsigned i = 0; i < p; ++i) {
    const BlockSpec& bi = cfg_.blocks[i];
    a_[i][i] = t_[i].submatrix(0, 0, bi.k, bi.r);
    for (unsigned j = 0; j < p; ++j)
      if (j != i) a_[i][j] = mat_mul(f, B(i, j), u_[j]);
  }

  unsigned total_k = 0, total_n = 0;
  for (const BlockSpec& b : cfg_.blocks) {
    total_k += b.k;
    total_n += b.n();
  }
  g_ = Matrix(total_k, total_n);
  unsigned row0 = 0;
  for (unsigned i = 0; i < p; ++i) {
    unsigned col0 = 0;
    for (unsigned j = 0; j < p; ++j) {
      const BlockSpec& bj = cfg_.blocks[j];
      if (j == i)
        for (unsigned row = 0; row < cfg_.blocks[i].k; ++row)
          g_.at(row0 + row, col0 + row) = 1;
      const Matrix& aij = a_[i][j];
      for (unsigned row = 0; row < aij.rows(); ++row)
        for (unsigned col = 0; col < aij.cols(); ++col)
          g_.at(row0 + row, col0 + bj.k + col) = aij.at(row, col);
      col0 += bj.n();
    }
    row0 += cfg_.blocks[i].k;
  }

  for (unsigned i = 0; i < p; ++i) {
    const BlockSpec& b = cfg_.blocks[i];
    CauchyParams local{b.a_points,
                       {b.b_points.begin(), b.b_points.begin() + b.r},
                       {}, {}};
    local_codes_.emplace_back(f, std::move(local), b.r);
    CauchyParams global{{b.a_points.begin(), b.a_points.begin() + b.k},
                        b.b_points, {}, {}};
    global_codes_.emplace_back(f, std::move(global), b.r);
  }
}

unsigned HierCode::coupling_col_offset(unsigned i, unsigned j) const {
  unsigned off = cfg_.blocks[i].r;
  for (unsigned j2 = 0; j2 < j; ++j2)
    if (j2 != i) off += cfg_.blocks[j2].delta;
  return off;
}

const Matrix& HierCode::A(unsigned i, unsigned j) const { return a_[i][j]; }

Matrix HierCode::B(unsigned i, unsigned j) const {
  if (i == j) throw Error(Errc::OutOfRange, "coupling block needs i != j");
  const BlockSpec& bi = cfg_.blocks[i];
  return t_[i].submatrix(0, coupling_col_offset(i, j), bi.k, cfg_.blocks[j].delta);
}

Matrix HierCode::Z(unsigned i) const {
  const BlockSpec& b = cfg_.blocks[i];
  return t_[i].submatrix(b.k, b.r, b.delta, delta_total_ - b.delta);
}

std::vector<std::vector<Sym>> HierCode::encode(const std::vector<std::vector<Sym>>& messages) const {
  unsigned p = block_count();
  if (messages.size() != p)
    throw Error(Errc::LengthMismatch, "one message per block expected");
  for (unsigned i = 0; i < p; ++i)
    if (messages[i].size() != cfg_.blocks[i].k)
      throw Error(Errc::LengthMismatch, "message length must be k");
  std::vector<std::vector<Sym>> out(p);
  for (unsigned i = 0; i < p; ++i) {
    std::vector<Sym> parity = vec_mat_mul(*field_, messages[i], a_[i][i]);
    for (unsigned j = 0; j < p; ++j) {
      if (j == i) continue;
      std::vector<Sym> contrib = vec_mat_mul(*field_, messages[j], a_[j][i]);
      for (unsigned w = 0; w < parity.size(); ++w) parity[w] ^= contrib[w];
    }
    out[i] = messages[i];
    out[i].insert(out[i].end(), parity.begin(), parity.end());
  }
  return out;
}

BlockResult HierCode::local_decode(unsigned i, const NoisyWord& block_word) const {
  const BlockSpec& b = cfg_.blocks[i];
  if (block_word.size() != b.n())
    throw Error(Errc::LengthMismatch, "block word length must be k + r");
  unsigned t_extra = static_cast<unsigned>(block_word.erasure_count());
  unsigned t = b.delta + t_extra;
  if (t > b.r) return DecodeFail::TooManyLocations;
  unsigned s = (b.r - t) / 2;

  NoisyWord ext;
  ext.symbols.assign(b.k + b.delta + b.r, 0);
  ext.erased.assign(b.k + b.delta + b.r, 0);
  for (unsigned w = 0; w < b.k; ++w) {
    ext.symbols[w] = block_word.symbols[w];
    ext.erased[w] = block_word.erased[w];
  }
  for (unsigned w = 0; w < b.delta; ++w) ext.erased[b.k + w] = 1;
  for (unsigned w = 0; w < b.r; ++w) {
    ext.symbols[b.k + b.delta + w] = block_word.symbols[b.k + w];
    ext.erased[b.k + b.delta + w] = block_word.erased[b.k + w];
  }

  DecodeResult res = decode(local_codes_[i], ext, s);
  if (auto* fail = std::get_if<DecodeFail>(&res)) return *fail;
  const Decoded& dec = std::get<Decoded>(res);
  BlockDecoded out;
  out.message.assign(dec.codeword.begin(), dec.codeword.begin() + b.k);
  out.codeword = out.message;
  out.codeword.insert(out.codeword.end(),
                      dec.codeword.begin() + b.k + b.delta, dec.codeword.end());
  for (const auto& [pos, mag] : dec.error) {
    if (pos < b.k)
      out.error[pos] = mag;
    else if (pos >= b.k + b.delta)
      out.error[pos - b.delta] = mag;
    // positions inside [k, k+delta) are the recovered coupling symbols
  }
  return out;
}

BlockResult HierCode::global_decode(unsigned i, const NoisyWord& target,
                                    const std::vector<std::vector<Sym>>& others,
                                    bool strict_no_erasures) const {
  const Field& f = *field_;
  unsigned p = block_count();
  const BlockSpec& bi = cfg_.blocks[i];
  if (target.size() != bi.n())
    throw Error(Errc::LengthMismatch, "target length must be k + r");
  if (others.size() != p)
    throw Error(Errc::LengthMismatch, "one sibling codeword slot per block expected");
  for (unsigned j = 0; j < p; ++j)
    if (j != i && others[j].size() != cfg_.blocks[j].n())
      throw Error(Errc::LengthMismatch, "sibling codeword length must be k + r");

  auto msg_of = [&](unsigned j) {
    return std::vector<Sym>(others[j].begin(), others[j].begin() + cfg_.blocks[j].k);
  };
  auto par_of = [&](unsigned j) {
    return std::vector<Sym>(others[j].begin() + cfg_.blocks[j].k, others[j].end());
  };
  std::vector<Sym> z = target.zero_filled();
  std::vector<Sym> mi(z.begin(), z.begin() + bi.k);
  std::vector<Sym> si(z.begin() + bi.k, z.end());

  // Syndrome over the target's own parities: m'_i A_{i,i} - s'_i plus every
  // sibling's coupling contribution (char 2, so subtraction is xor).
  std::vector<Sym> syndrome = vec_mat_mul(f, mi, a_[i][i]);
  for (unsigned w = 0; w < bi.r; ++w) syndrome[w] ^= si[w];
  for (unsigned j = 0; j < p; ++j) {
    if (j == i) continue;
    std::vector<Sym> contrib = vec_mat_mul(f, msg_of(j), a_[j][i]);
    for (unsigned w = 0; w < bi.r; ++w) syndrome[w] ^= contrib[w];
  }

  // Each sibling k exposes x U_k = m_k A_{k,k} - s_k + sum_j m_j A_{j,k},
  // where x is the error's image through the coupling block B_{i,k}.
  for (unsigned kk = 0; kk < p; ++kk) {
    if (kk == i) continue;
    const BlockSpec& bk = cfg_.blocks[kk];
    std::vector<Sym> rhs = vec_mat_mul(f, msg_of(kk), a_[kk][kk]);
    std::vector<Sym> sk = par_of(kk);
    for (unsigned w = 0; w < bk.r; ++w) rhs[w] ^= sk[w];
    for (unsigned j = 0; j < p; ++j) {
      if (j == kk) continue;
      std::vector<Sym> contrib =
          vec_mat_mul(f, j == i ? mi : msg_of(j), a_[j][kk]);
      for (unsigned w = 0; w < bk.r; ++w) rhs[w] ^= contrib[w];
    }
    LinearSolution sol = solve_linear(f, mat_transpose(u_[kk]), rhs);
    if (!sol.consistent) return DecodeFail::InconsistentSiblings;
    syndrome.insert(syndrome.end(), sol.particular.begin(), sol.particular.end());
  }

  unsigned v = bi.r + delta_total_ - bi.delta;
  unsigned t = static_cast<unsigned>(target.erasure_count());
  if (strict_no_erasures) {
    if (t != 0)
      throw Error(Errc::ConfigInvalid, "erasures not supported with strict_no_erasures");
  }
  if (t > v) return DecodeFail::TooManyLocations;
  unsigned s = (v - t) / 2;

  DecodeResult res = decode_with_syndrome(global_codes_[i], target, syndrome, s);
  if (auto* fail = std::get_if<DecodeFail>(&res)) return *fail;
  const Decoded& dec = std::get<Decoded>(res);
  BlockDecoded out;
  out.codeword = dec.codeword;
  out.message.assign(dec.codeword.begin(), dec.codeword.begin() + bi.k);
  out.error = dec.error;
  return out;
}

std::vector<BlockOutcome> HierCode::decode_all(const std::vector<NoisyWord>& words) const {
  unsigned p = block_count();
  if (words.size() != p)
    throw Error(Errc::LengthMismatch, "one word per block expected");
  std::vector<BlockOutcome> out(p);
  std::vector<unsigned> failed;
  for (unsigned i = 0; i < p; ++i) {
    BlockResult res = local_decode(i, words[i]);
    if (auto* ok = std::get_if<BlockDecoded>(&res)) {
      out[i].status = ok->error.empty() ? BlockStatus::Clean : BlockStatus::CorrectedLocal;
      out[i].message = ok->message;
      out[i].codeword = ok->codeword;
      out[i].error = ok->error;
    } else {
      failed.push_back(i);
    }
  }
  if (failed.size() == 1) {
    unsigned i = failed.front();
    std::vector<std::vector<Sym>> others(p);
    for (unsigned j = 0; j < p; ++j)
      if (j != i) others[j] = out[j].codeword;
    BlockResult res = global_decode(i, words[i], others);
    if (auto* ok = std::get_if<BlockDecoded>(&res)) {
      out[i].status = BlockStatus::CorrectedGlobal;
      out[i].message = ok->message;
      out[i].codeword = ok->codeword;
      out[i].error = ok->error;
    }
  }
  return out;
}

} // namespace hecc
