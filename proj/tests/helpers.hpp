#pragma once

#include <random>

#include "hecc/hierarchical.hpp"

namespace hecc::testing {

inline Field gf16() { return Field(4, 0x13); }

/// beta^e in the given field, with b(0)=1; shorthand for table-driven tests.
struct Pow {
  const Field& f;
  Sym operator()(long long e) const { return f.alpha_pow(e); }
};

/// Matrix from a row-major list of discrete logs; -1 stands for 0.
inline Matrix from_logs(const Field& f, std::size_t rows, std::size_t cols,
                        const std::vector<int>& logs) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      int e = logs[i * cols + j];
      m.at(i, j) = e < 0 ? 0 : f.alpha_pow(e);
    }
  return m;
}

inline std::vector<Sym> syms_from_logs(const Field& f, const std::vector<int>& logs) {
  std::vector<Sym> out;
  for (int e : logs) out.push_back(e < 0 ? 0 : f.alpha_pow(e));
  return out;
}

/// Distinct nonzero points drawn without replacement.
inline std::vector<Sym> random_points(const Field& f, std::size_t count, std::mt19937_64& rng) {
  std::vector<Sym> pool;
  for (std::uint32_t x = 1; x < f.size(); ++x) pool.push_back(static_cast<Sym>(x));
  for (std::size_t i = 0; i < count; ++i)
    std::swap(pool[i], pool[i + rng() % (pool.size() - i)]);
  pool.resize(count);
  return pool;
}

inline Sym random_nonzero(const Field& f, std::mt19937_64& rng) {
  return static_cast<Sym>(1 + rng() % (f.size() - 1));
}

/// Injects s random errors and t erasures at distinct positions.
inline NoisyWord corrupt(const Field& f, const std::vector<Sym>& codeword, unsigned s,
                         unsigned t, std::mt19937_64& rng) {
  NoisyWord w = NoisyWord::from_symbols(codeword);
  std::vector<std::size_t> pos(codeword.size());
  for (std::size_t i = 0; i < pos.size(); ++i) pos[i] = i;
  for (std::size_t i = 0; i < s + t && i < pos.size(); ++i)
    std::swap(pos[i], pos[i + rng() % (pos.size() - i)]);
  for (unsigned i = 0; i < s; ++i) w.symbols[pos[i]] ^= random_nonzero(f, rng);
  for (unsigned i = 0; i < t; ++i) w.erase_at(pos[s + i]);
  return w;
}

} // namespace hecc::testing
