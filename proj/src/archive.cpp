#include "hecc/archive.hpp"

#include <algorithm>
#include <sstream>

namespace hecc {

namespace {

constexpr char kMagic[5] = {'H', 'E', 'C', 'C', '1'};

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t x) {
  out.push_back(static_cast<std::uint8_t>(x >> 8));
  out.push_back(static_cast<std::uint8_t>(x));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t x) {
  put_u16(out, static_cast<std::uint16_t>(x >> 16));
  put_u16(out, static_cast<std::uint16_t>(x));
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t x) {
  put_u32(out, static_cast<std::uint32_t>(x >> 32));
  put_u32(out, static_cast<std::uint32_t>(x));
}

struct Reader {
  const std::vector<std::uint8_t>& bytes;
  std::size_t pos = 0;

  std::uint8_t u8() {
    if (pos >= bytes.size()) throw Error(Errc::BadArchive, "truncated archive");
    return bytes[pos++];
  }
  std::uint16_t u16() { std::uint16_t x = u8(); return static_cast<std::uint16_t>(x << 8 | u8()); }
  std::uint32_t u32() { std::uint32_t x = u16(); return x << 16 | u16(); }
  std::uint64_t u64() { std::uint64_t x = u32(); return x << 32 | u32(); }
};

} // namespace

std::size_t Archive::stripe_symbols() const {
  std::size_t n = 0;
  for (const BlockSpec& b : config.blocks) n += b.n();
  return n;
}

std::size_t Archive::message_symbols() const {
  std::size_t k = 0;
  for (const BlockSpec& b : config.blocks) k += b.k;
  return k;
}

std::size_t Archive::stripes() const {
  std::size_t per = stripe_symbols();
  return per == 0 ? 0 : symbols.size() / per;
}

std::vector<std::uint8_t> pack_symbols(const std::vector<Sym>& syms, unsigned m) {
  std::vector<std::uint8_t> out;
  out.reserve((syms.size() * m + 7) / 8);
  std::uint32_t acc = 0;
  unsigned bits = 0;
  for (Sym s : syms) {
    acc = acc << m | s;
    bits += m;
    while (bits >= 8) {
      bits -= 8;
      out.push_back(static_cast<std::uint8_t>(acc >> bits));
    }
    acc &= (1u << bits) - 1;
  }
  if (bits > 0) out.push_back(static_cast<std::uint8_t>(acc << (8 - bits)));
  return out;
}

std::vector<Sym> unpack_symbols(const std::vector<std::uint8_t>& bytes, unsigned m,
                                std::size_t count) {
  if (bytes.size() * 8 < count * m)
    throw Error(Errc::BadArchive, "not enough bytes for the symbol count");
  std::vector<Sym> out;
  out.reserve(count);
  std::uint32_t acc = 0;
  unsigned bits = 0;
  std::size_t pos = 0;
  while (out.size() < count) {
    while (bits < m) {
      acc = acc << 8 | bytes[pos++];
      bits += 8;
    }
    bits -= m;
    out.push_back(static_cast<Sym>(acc >> bits));
    acc &= (1u << bits) - 1;
  }
  return out;
}

std::vector<std::uint8_t> write_archive(const Archive& ar) {
  Field f(ar.config.field_degree, ar.config.prim_poly);
  std::vector<std::uint8_t> out(kMagic, kMagic + 5);
  out.push_back(static_cast<std::uint8_t>(ar.config.field_degree));
  put_u32(out, ar.config.prim_poly);
  put_u16(out, static_cast<std::uint16_t>(ar.config.blocks.size()));
  for (const BlockSpec& b : ar.config.blocks) {
    put_u16(out, static_cast<std::uint16_t>(b.k));
    put_u16(out, static_cast<std::uint16_t>(b.r));
    put_u16(out, static_cast<std::uint16_t>(b.delta));
  }
  for (const BlockSpec& b : ar.config.blocks) {
    for (Sym x : b.a_points) put_u16(out, static_cast<std::uint16_t>(f.log(x)));
    for (Sym x : b.b_points) put_u16(out, static_cast<std::uint16_t>(f.log(x)));
  }
  put_u64(out, ar.payload_bytes);
  put_u32(out, static_cast<std::uint32_t>(ar.stripes()));
  for (const BlockSpec& b : ar.config.blocks)
    put_u16(out, static_cast<std::uint16_t>(b.n()));
  std::vector<std::uint8_t> packed = pack_symbols(ar.symbols, f.degree());
  out.insert(out.end(), packed.begin(), packed.end());
  return out;
}

Archive read_archive(const std::vector<std::uint8_t>& bytes) {
  Reader rd{bytes};
  for (char c : kMagic)
    if (rd.u8() != static_cast<std::uint8_t>(c))
      throw Error(Errc::BadArchive, "bad magic");
  Archive ar;
  ar.config.field_degree = rd.u8();
  ar.config.prim_poly = rd.u32();
  if (ar.config.field_degree == 0 || ar.config.field_degree > 16)
    throw Error(Errc::BadArchive, "bad field degree");
  Field f(ar.config.field_degree, ar.config.prim_poly);
  unsigned p = rd.u16();
  if (p == 0) throw Error(Errc::BadArchive, "no blocks");
  unsigned delta_total = 0;
  for (unsigned i = 0; i < p; ++i) {
    BlockSpec b;
    b.k = rd.u16();
    b.r = rd.u16();
    b.delta = rd.u16();
    delta_total += b.delta;
    ar.config.blocks.push_back(std::move(b));
  }
  for (BlockSpec& b : ar.config.blocks) {
    for (unsigned w = 0; w < b.k + b.delta; ++w) b.a_points.push_back(f.alpha_pow(rd.u16()));
    unsigned nb = b.r + delta_total - b.delta;
    for (unsigned w = 0; w < nb; ++w) b.b_points.push_back(f.alpha_pow(rd.u16()));
  }
  ar.payload_bytes = rd.u64();
  std::size_t stripes = rd.u32();
  std::size_t per = ar.stripe_symbols();
  for (const BlockSpec& b : ar.config.blocks)
    if (rd.u16() != b.n()) throw Error(Errc::BadArchive, "layout table disagrees with block shapes");
  unsigned m = f.degree();
  std::vector<std::uint8_t> body(bytes.begin() + rd.pos, bytes.end());
  ar.symbols = unpack_symbols(body, m, stripes * per);
  for (Sym s : ar.symbols)
    if (s >= f.size()) throw Error(Errc::BadArchive, "symbol out of field range");
  return ar;
}

Archive encode_payload(const HierCode& code, const std::vector<std::uint8_t>& payload) {
  const Field& f = code.field();
  unsigned m = f.degree();
  unsigned p = code.block_count();
  Archive ar;
  ar.config = code.config();
  ar.payload_bytes = payload.size();

  std::size_t payload_syms = (payload.size() * 8 + m - 1) / m;
  std::vector<Sym> msg_syms = unpack_symbols(
      [&] {
        std::vector<std::uint8_t> padded = payload;
        padded.resize((payload_syms * m + 7) / 8, 0);
        return padded;
      }(),
      m, payload_syms);

  std::size_t per_stripe = ar.message_symbols();
  std::size_t stripes = (payload_syms + per_stripe - 1) / per_stripe;
  msg_syms.resize(stripes * per_stripe, 0);

  ar.symbols.reserve(stripes * ar.stripe_symbols());
  std::size_t pos = 0;
  for (std::size_t st = 0; st < stripes; ++st) {
    std::vector<std::vector<Sym>> messages(p);
    for (unsigned i = 0; i < p; ++i) {
      unsigned k = code.block(i).k;
      messages[i].assign(msg_syms.begin() + pos, msg_syms.begin() + pos + k);
      pos += k;
    }
    for (auto& block : code.encode(messages))
      ar.symbols.insert(ar.symbols.end(), block.begin(), block.end());
  }
  return ar;
}

std::string format_erasure_list(const ErasureList& erasures) {
  std::ostringstream out;
  for (const auto& [block, sym] : erasures)
    out << block + 1 << ':' << sym + 1 << "\n";
  return out.str();
}

ErasureList parse_erasure_list(const std::string& text) {
  ErasureList out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    std::size_t colon = tok.find(':');
    if (colon == std::string::npos)
      throw Error(Errc::BadArchive, "erasure entries must look like B:S");
    auto number = [&](const std::string& part) {
      if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
        throw Error(Errc::BadArchive, "erasure entries must look like B:S");
      return std::stoull(part);
    };
    std::size_t block = number(tok.substr(0, colon));
    std::size_t sym = number(tok.substr(colon + 1));
    if (block == 0 || sym == 0)
      throw Error(Errc::BadArchive, "erasure entries are 1-based");
    out.emplace_back(block - 1, sym - 1);
  }
  return out;
}

namespace {

std::vector<BlockOutcome> decode_stripe(const HierCode& code,
                                        const std::vector<NoisyWord>& words,
                                        DecodeMode mode) {
  if (mode == DecodeMode::Auto) return code.decode_all(words);
  unsigned p = code.block_count();
  std::vector<BlockOutcome> out(p);
  std::vector<BlockResult> local(p, DecodeFail::TooManyLocations);
  for (unsigned i = 0; i < p; ++i) local[i] = code.local_decode(i, words[i]);
  for (unsigned i = 0; i < p; ++i) {
    if (mode == DecodeMode::Local) {
      if (auto* ok = std::get_if<BlockDecoded>(&local[i])) {
        out[i].status = ok->error.empty() ? BlockStatus::Clean : BlockStatus::CorrectedLocal;
        out[i].message = ok->message;
        out[i].codeword = ok->codeword;
        out[i].error = ok->error;
      }
      continue;
    }
    bool siblings_ok = true;
    std::vector<std::vector<Sym>> others(p);
    for (unsigned j = 0; j < p; ++j) {
      if (j == i) continue;
      if (auto* ok = std::get_if<BlockDecoded>(&local[j])) others[j] = ok->codeword;
      else siblings_ok = false;
    }
    bool done = false;
    if (siblings_ok) {
      BlockResult res = code.global_decode(i, words[i], others);
      if (auto* ok = std::get_if<BlockDecoded>(&res)) {
        out[i].status = ok->error.empty() ? BlockStatus::Clean : BlockStatus::CorrectedGlobal;
        out[i].message = ok->message;
        out[i].codeword = ok->codeword;
        out[i].error = ok->error;
        done = true;
      }
    }
    // global needs every sibling; keep the local result when it cannot run
    if (!done) {
      if (auto* ok = std::get_if<BlockDecoded>(&local[i])) {
        out[i].status = ok->error.empty() ? BlockStatus::Clean : BlockStatus::CorrectedLocal;
        out[i].message = ok->message;
        out[i].codeword = ok->codeword;
        out[i].error = ok->error;
      }
    }
  }
  return out;
}

} // namespace

ArchiveDecodeReport decode_payload(const HierCode& code, const Archive& ar,
                                   const ErasureList& erasures, DecodeMode mode) {
  const Field& f = code.field();
  unsigned m = f.degree();
  unsigned p = code.block_count();
  std::size_t per = ar.stripe_symbols();
  std::size_t stripes = ar.stripes();
  if (ar.symbols.size() != stripes * per)
    throw Error(Errc::BadArchive, "symbol count is not a whole number of stripes");

  // erasures grouped by (stripe, block)
  std::vector<std::vector<std::size_t>> per_block(stripes * p);
  for (const auto& [ordinal, sym] : erasures) {
    if (ordinal >= stripes * p)
      throw Error(Errc::BadArchive, "erasure block ordinal out of range");
    if (sym >= code.block(ordinal % p).n())
      throw Error(Errc::BadArchive, "erasure symbol index out of range");
    per_block[ordinal].push_back(sym);
  }

  ArchiveDecodeReport report;
  std::vector<Sym> msg_syms;
  msg_syms.reserve(stripes * ar.message_symbols());
  std::size_t pos = 0;
  report.ok = true;
  for (std::size_t st = 0; st < stripes; ++st) {
    std::vector<NoisyWord> words(p);
    for (unsigned i = 0; i < p; ++i) {
      unsigned n = code.block(i).n();
      words[i] = NoisyWord::from_symbols(
          {ar.symbols.begin() + pos, ar.symbols.begin() + pos + n});
      for (std::size_t sym : per_block[st * p + i]) words[i].erase_at(sym);
      pos += n;
    }
    StripeReport sr;
    for (BlockOutcome& out : decode_stripe(code, words, mode)) {
      sr.blocks.push_back(out.status);
      sr.corrected += out.error.size();
      if (out.status == BlockStatus::Failed) report.ok = false;
      else msg_syms.insert(msg_syms.end(), out.message.begin(), out.message.end());
    }
    report.stripes.push_back(std::move(sr));
  }
  if (report.ok) {
    std::vector<std::uint8_t> bytes = pack_symbols(msg_syms, m);
    if (bytes.size() < ar.payload_bytes)
      throw Error(Errc::BadArchive, "payload length exceeds stored symbols");
    bytes.resize(ar.payload_bytes);
    report.payload = std::move(bytes);
  }
  return report;
}

} // namespace hecc
