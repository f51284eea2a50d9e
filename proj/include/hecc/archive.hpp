#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "hecc/hierarchical.hpp"

namespace hecc {

/// Container format, all integers big endian:
///   "HECC1"  magic
///   u8       field degree m
///   u32      primitive polynomial
///   u16      block count p
///   per block: u16 k, u16 r, u16 delta,
///              (k+delta) u16 a point logs, (r+delta_total-delta) u16 b point logs
///   u64      payload byte length
///   u32      stripe count, then per block u16 n_i (chunk layout table)
///   coded symbols, stripe major, packed m bits each big endian
struct Archive {
  HierConfig config;
  std::uint64_t payload_bytes = 0;
  std::vector<Sym> symbols;  // stripes * (sum n_i) coded symbols

  std::size_t stripe_symbols() const;   // sum n_i
  std::size_t message_symbols() const;  // sum k_i
  std::size_t stripes() const;
};

std::vector<std::uint8_t> pack_symbols(const std::vector<Sym>& syms, unsigned m);
std::vector<Sym> unpack_symbols(const std::vector<std::uint8_t>& bytes, unsigned m,
                                std::size_t count);

std::vector<std::uint8_t> write_archive(const Archive& ar);
Archive read_archive(const std::vector<std::uint8_t>& bytes);

/// Splits the payload bitstream into m-bit message symbols, zero pads the
/// final stripe, and encodes every stripe.
Archive encode_payload(const HierCode& code, const std::vector<std::uint8_t>& payload);

/// (global block ordinal, symbol index within the block), both 0-based; the
/// ordinal counts blocks stripe major across the whole archive.
using ErasureList = std::vector<std::pair<std::size_t, std::size_t>>;

/// Sidecar text: one "B:S" line per erasure, both 1-based.
std::string format_erasure_list(const ErasureList& erasures);
ErasureList parse_erasure_list(const std::string& text);

struct StripeReport {
  std::vector<BlockStatus> blocks;
  std::size_t corrected = 0;  // corrupted symbols repaired in this stripe
};

struct ArchiveDecodeReport {
  bool ok = false;
  std::vector<std::uint8_t> payload;
  std::vector<StripeReport> stripes;
};

/// Auto: local first, global fallback for a single failing block.
/// Local: per-block local decoding only.
/// Global: cross-block decoding for every block, siblings repaired locally.
enum class DecodeMode { Auto, Local, Global };

ArchiveDecodeReport decode_payload(const HierCode& code, const Archive& ar,
                                   const ErasureList& erasures = {},
                                   DecodeMode mode = DecodeMode::Auto);

} // namespace hecc
