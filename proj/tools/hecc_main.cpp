#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "hecc/archive.hpp"

using namespace hecc;
using nlohmann::json;

namespace {

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::IoError, "cannot open " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(Errc::IoError, "write failed: " + path);
}

std::string read_text(const std::string& path) {
  auto bytes = read_file(path);
  return {bytes.begin(), bytes.end()};
}

// "B:N" entries, 1-based block index within a stripe.
std::vector<std::pair<unsigned, unsigned>> parse_pairs(const std::vector<std::string>& specs) {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (const std::string& spec : specs) {
    std::size_t colon = spec.find(':');
    if (colon == std::string::npos)
      throw Error(Errc::OutOfRange, "expected B:N, got " + spec);
    unsigned block = static_cast<unsigned>(std::stoul(spec.substr(0, colon)));
    unsigned n = static_cast<unsigned>(std::stoul(spec.substr(colon + 1)));
    if (block == 0) throw Error(Errc::OutOfRange, "block indices are 1-based");
    out.emplace_back(block - 1, n);
  }
  return out;
}

const char* status_name(BlockStatus s) {
  switch (s) {
    case BlockStatus::Clean: return "clean";
    case BlockStatus::CorrectedLocal: return "corrected-local";
    case BlockStatus::CorrectedGlobal: return "corrected-global";
    default: return "failed";
  }
}

int cmd_encode(const std::string& input, const std::string& output,
               const std::string& config_path) {
  HierConfig cfg = parse_config(read_text(config_path));
  Field f(cfg.field_degree, cfg.prim_poly);
  HierCode code(f, cfg);
  Archive ar = encode_payload(code, read_file(input));
  write_file(output, write_archive(ar));
  return 0;
}

int cmd_corrupt(const std::string& input, const std::string& output,
                const std::vector<std::string>& error_specs,
                const std::vector<std::string>& erasure_specs,
                std::uint64_t seed, bool enforce_budget,
                const std::string& sidecar_path) {
  Archive ar = read_archive(read_file(input));
  Field f(ar.config.field_degree, ar.config.prim_poly);
  HierCode code(f, ar.config);
  unsigned p = code.block_count();

  auto errors = parse_pairs(error_specs);    // (block, count per stripe)
  auto erasures = parse_pairs(erasure_specs);  // (block, 1-based symbol)
  for (auto& [block, n] : errors)
    if (block >= p) throw Error(Errc::OutOfRange, "error block index out of range");
  for (auto& [block, sym] : erasures) {
    if (block >= p) throw Error(Errc::OutOfRange, "erasure block index out of range");
    if (sym == 0 || sym > code.block(block).n())
      throw Error(Errc::OutOfRange, "erasure symbol index out of range");
  }

  if (enforce_budget) {
    unsigned over_local = 0;
    for (unsigned i = 0; i < p; ++i) {
      const BlockSpec& b = code.block(i);
      unsigned e = 0, t = 0;
      for (auto& [block, n] : errors)
        if (block == i) e += n;
      for (auto& [block, sym] : erasures)
        if (block == i) ++t;
      if (2 * e + t + b.delta > b.r) {
        ++over_local;
        if (2 * e + t > b.r + code.delta_total() - b.delta)
          throw Error(Errc::OutOfRange, "corruption exceeds the global budget");
      }
    }
    if (over_local > 1)
      throw Error(Errc::OutOfRange, "more than one block exceeds the local budget");
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Sym> nonzero(1, static_cast<Sym>(f.size() - 1));
  ErasureList sidecar;
  for (std::size_t st = 0; st < ar.stripes(); ++st) {
    std::size_t base = st * ar.stripe_symbols();
    std::size_t block_off = 0;
    for (unsigned i = 0; i < p; ++i) {
      unsigned n = code.block(i).n();
      std::vector<std::uint8_t> taken(n, 0);
      for (auto& [block, sym] : erasures)
        if (block == i) {
          taken[sym - 1] = 1;
          ar.symbols[base + block_off + sym - 1] = nonzero(rng);
          sidecar.emplace_back(st * p + i, sym - 1);
        }
      for (auto& [block, count] : errors) {
        if (block != i) continue;
        for (unsigned done = 0; done < count;) {
          unsigned pos = static_cast<unsigned>(rng() % n);
          if (taken[pos]) continue;
          taken[pos] = 1;
          ar.symbols[base + block_off + pos] ^= nonzero(rng);
          ++done;
        }
      }
      block_off += n;
    }
  }

  write_file(output, write_archive(ar));
  std::string sidecar_text = format_erasure_list(sidecar);
  write_file(sidecar_path, {sidecar_text.begin(), sidecar_text.end()});
  return 0;
}

int cmd_decode(const std::string& input, const std::string& output,
               const std::string& erasure_map, const std::string& mode_name,
               const std::string& report_fmt) {
  Archive ar = read_archive(read_file(input));
  Field f(ar.config.field_degree, ar.config.prim_poly);
  HierCode code(f, ar.config);

  ErasureList erasures;
  if (!erasure_map.empty()) erasures = parse_erasure_list(read_text(erasure_map));
  DecodeMode mode = DecodeMode::Auto;
  if (mode_name == "local") mode = DecodeMode::Local;
  else if (mode_name == "global") mode = DecodeMode::Global;
  else if (mode_name != "auto") throw Error(Errc::ConfigInvalid, "mode must be auto, local or global");

  ArchiveDecodeReport report = decode_payload(code, ar, erasures, mode);
  if (report_fmt == "json") {
    json j;
    j["ok"] = report.ok;
    j["stripes"] = json::array();
    for (const StripeReport& sr : report.stripes) {
      json js;
      js["corrected"] = sr.corrected;
      js["blocks"] = json::array();
      for (BlockStatus st : sr.blocks) js["blocks"].push_back(status_name(st));
      j["stripes"].push_back(std::move(js));
    }
    std::cout << j.dump(2) << "\n";
  } else {
    for (std::size_t st = 0; st < report.stripes.size(); ++st) {
      std::cout << "stripe " << st << ":";
      for (BlockStatus s : report.stripes[st].blocks) std::cout << ' ' << status_name(s);
      std::cout << " (corrected " << report.stripes[st].corrected << ")\n";
    }
    std::cout << (report.ok ? "decode ok" : "decode FAILED") << "\n";
  }
  if (!report.ok) return 2;
  write_file(output, report.payload);
  return 0;
}

int cmd_inspect(const std::string& input, const std::string& report_fmt) {
  Archive ar = read_archive(read_file(input));
  Field f(ar.config.field_degree, ar.config.prim_poly);
  HierCode code(f, ar.config);  // validates the parameters
  if (report_fmt == "json") {
    json j;
    j["field_degree"] = ar.config.field_degree;
    j["prim_poly"] = ar.config.prim_poly;
    j["payload_bytes"] = ar.payload_bytes;
    j["stripes"] = ar.stripes();
    j["blocks"] = json::array();
    for (unsigned i = 0; i < code.block_count(); ++i) {
      const BlockSpec& b = code.block(i);
      json jb;
      jb["k"] = b.k;
      jb["r"] = b.r;
      jb["delta"] = b.delta;
      jb["local_budget"] = b.r - b.delta;       // 2s + extra erasures
      jb["global_budget"] = b.r + code.delta_total() - b.delta;  // 2s + t
      j["blocks"].push_back(std::move(jb));
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "field: GF(2^" << ar.config.field_degree << "), poly 0x" << std::hex
              << ar.config.prim_poly << std::dec << "\n";
    std::cout << "payload bytes: " << ar.payload_bytes << ", stripes: " << ar.stripes() << "\n";
    for (unsigned i = 0; i < code.block_count(); ++i) {
      const BlockSpec& b = code.block(i);
      std::cout << "block " << i + 1 << ": k=" << b.k << " r=" << b.r << " delta=" << b.delta
                << " local budget 2s+t<=" << b.r - b.delta
                << " global budget 2s+t<=" << b.r + code.delta_total() - b.delta << "\n";
    }
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"hierarchical Cauchy code archive tool"};
  app.require_subcommand(1);

  std::string input, output, config_path, erasure_map, sidecar_path;
  std::string mode_name = "auto", report_fmt = "text";
  std::vector<std::string> error_specs, erasure_specs;
  std::uint64_t seed = 0;
  bool enforce_budget = false;

  auto* enc = app.add_subcommand("encode", "encode a file into an archive");
  enc->add_option("input", input)->required();
  enc->add_option("output", output)->required();
  enc->add_option("--config", config_path, "code config file")->required();

  auto* cor = app.add_subcommand("corrupt", "inject errors and erasures");
  cor->add_option("input", input)->required();
  cor->add_option("output", output)->required();
  cor->add_option("--errors", error_specs, "B:COUNT errors per stripe in block B (1-based)");
  cor->add_option("--erasures", erasure_specs, "B:S erase symbol S of block B (1-based)");
  cor->add_option("--seed", seed);
  cor->add_flag("--enforce-budget", enforce_budget, "reject corruption beyond decode budgets");
  cor->add_option("--erasure-map", sidecar_path, "sidecar output path");

  auto* dec = app.add_subcommand("decode", "decode an archive back to the file");
  dec->add_option("input", input)->required();
  dec->add_option("output", output)->required();
  dec->add_option("--erasure-map", erasure_map, "erasure sidecar path");
  dec->add_option("--mode", mode_name, "auto|local|global");
  dec->add_option("--report", report_fmt, "text|json");

  auto* ins = app.add_subcommand("inspect", "print archive parameters");
  ins->add_option("input", input)->required();
  ins->add_option("--report", report_fmt, "text|json");

  CLI11_PARSE(app, argc, argv);

  try {
    if (enc->parsed()) return cmd_encode(input, output, config_path);
    if (cor->parsed()) {
      if (sidecar_path.empty()) sidecar_path = output + ".erasures";
      return cmd_corrupt(input, output, error_specs, erasure_specs, seed,
                         enforce_budget, sidecar_path);
    }
    if (dec->parsed()) return cmd_decode(input, output, erasure_map, mode_name, report_fmt);
    if (ins->parsed()) return cmd_inspect(input, report_fmt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
