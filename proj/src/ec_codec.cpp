#include "hecc/ec_codec.hpp"

#include <algorithm>

namespace hecc {

NoisyWord NoisyWord::from_symbols(std::vector<Sym> syms) {
  NoisyWord w;
  w.erased.assign(syms.size(), 0);
  w.symbols = std::move(syms);
  return w;
}

std::size_t NoisyWord::erasure_count() const {
  return static_cast<std::size_t>(std::count(erased.begin(), erased.end(), 1));
}

std::vector<std::size_t> NoisyWord::erased_positions() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < erased.size(); ++i)
    if (erased[i]) out.push_back(i);
  return out;
}

std::vector<Sym> NoisyWord::zero_filled() const {
  std::vector<Sym> z = symbols;
  for (std::size_t i = 0; i < z.size(); ++i)
    if (erased[i]) z[i] = 0;
  return z;
}

std::vector<Sym> compute_syndrome(const ECCode& code, const NoisyWord& word) {
  if (word.size() != code.n())
    throw Error(Errc::LengthMismatch, "word length must be n");
  return mat_vec_mul(code.field(), code.parity_check(), word.zero_filled());
}

Poly erasure_locator(const ECCode& code, const NoisyWord& word) {
  const Field& f = code.field();
  Poly e = Poly::one();
  for (std::size_t i : word.erased_positions()) {
    Sym point = i < code.k() ? code.params().a[i] : code.params().b[i - code.k()];
    e = poly_mul(f, e, Poly::x_minus(point));
  }
  return e;
}

FSystem build_f_system(const ECCode& code, const std::vector<Sym>& syndrome,
                       const Poly& erasure_loc, unsigned s, unsigned t,
                       const std::vector<unsigned>& w0, unsigned max_rows) {
  const Field& f = code.field();
  unsigned v = code.v();
  if (syndrome.size() != v) throw Error(Errc::LengthMismatch, "syndrome length must be v");
  if (w0.size() != s + t) throw Error(Errc::BadIndexSet, "|W0| must be s+t");
  std::vector<bool> in_w0(v, false);
  for (unsigned w : w0) {
    if (w >= v || in_w0[w]) throw Error(Errc::BadIndexSet, "W0 indices must be distinct and < v");
    in_w0[w] = true;
  }
  std::vector<unsigned> rest;
  for (unsigned w = 0; w < v; ++w)
    if (!in_w0[w]) rest.push_back(w);

  unsigned rows = static_cast<unsigned>(rest.size());
  if (max_rows > 0) rows = std::min(rows, max_rows);

  FSystem sys;
  sys.s = s;
  sys.t = t;
  sys.w0 = w0;
  sys.f = Matrix(rows, s);
  sys.u.assign(rows, 0);
  const auto& b = code.params().b;
  for (unsigned row = 0; row < rows; ++row) {
    sys.wi.push_back(rest[row]);
    std::vector<unsigned> wset = w0;
    wset.push_back(rest[row]);
    for (unsigned w : wset) {
      if (syndrome[w] == 0) continue;
      Sym denom = 1;
      for (unsigned w2 : wset)
        if (w2 != w) denom = f.mul(denom, f.sub(b[w], b[w2]));
      Sym factor = f.div(f.mul(syndrome[w], poly_eval(f, erasure_loc, b[w])), denom);
      if (factor == 0) continue;
      // column 0 of [u|F] carries b_w^s (the monic leading term of g).
      sys.u[row] ^= f.mul(factor, f.pow(b[w], s));
      for (unsigned j = 0; j < s; ++j)
        sys.f.at(row, j) ^= f.mul(factor, f.pow(b[w], s - 1 - j));
    }
  }
  return sys;
}

SigmaOutcome solve_sigma(const Field& f, const FSystem& sys) {
  // char 2: -u = u, so F sigma = -u is F sigma = u.
  LinearSolution sol = solve_linear(f, sys.f, sys.u);
  if (!sol.consistent) return SigmaInconsistent{};
  if (sol.nullspace.empty()) return SigmaUnique{sol.particular};
  std::vector<Sym> second = sol.particular;
  for (std::size_t i = 0; i < second.size(); ++i) second[i] ^= sol.nullspace.front()[i];
  return SigmaAmbiguous{sol.particular, second};
}

Poly locator_from_sigma(const std::vector<Sym>& sigma) {
  std::vector<Sym> coeffs(sigma.size() + 1);
  coeffs.back() = 1;
  for (std::size_t j = 0; j < sigma.size(); ++j)
    coeffs[sigma.size() - 1 - j] = sigma[j];
  return Poly(std::move(coeffs));
}

std::optional<std::vector<Sym>> disambiguate_sigma(const Field& f,
                                                   const std::vector<Sym>& sigma1,
                                                   const std::vector<Sym>& sigma2,
                                                   const Poly& erasure_loc) {
  unsigned s = static_cast<unsigned>(sigma1.size());
  unsigned t = erasure_loc.is_zero() ? 0 : static_cast<unsigned>(erasure_loc.degree());
  unsigned count = 2 * (s + t) + 1;
  for (unsigned i = 1, tried = 0; i < f.size() - 1 && tried < count; ++i) {
    Sym gamma = f.alpha_pow(i);
    if (gamma == 1) continue;
    ++tried;
    std::vector<Sym> sigma(s);
    Sym one_minus = f.add(1, gamma);
    for (unsigned j = 0; j < s; ++j)
      sigma[j] = f.add(f.mul(gamma, sigma1[j]), f.mul(one_minus, sigma2[j]));
    Poly g = locator_from_sigma(sigma);
    Poly h1 = poly_gcd(f, g, poly_derivative(g));
    if (h1.degree() != 0) continue;
    Poly h2 = poly_gcd(f, g, erasure_loc);
    if (h2.degree() != 0) continue;
    return sigma;
  }
  return std::nullopt;
}

std::optional<std::map<std::size_t, Sym>> solve_magnitudes(const ECCode& code,
                                                           const std::vector<Sym>& syndrome,
                                                           const std::vector<std::size_t>& positions) {
  const Field& f = code.field();
  Matrix ht = mat_transpose(code.parity_check());  // n x v; row i = h_i
  Matrix m(code.v(), positions.size());
  for (std::size_t col = 0; col < positions.size(); ++col)
    for (unsigned row = 0; row < code.v(); ++row)
      m.at(row, col) = ht.at(positions[col], row);
  LinearSolution sol = solve_linear(f, m, syndrome);
  if (!sol.consistent) return std::nullopt;
  std::map<std::size_t, Sym> out;
  for (std::size_t i = 0; i < positions.size(); ++i) out[positions[i]] = sol.particular[i];
  return out;
}

namespace {

DecodeResult decode_attempt(const ECCode& code, const NoisyWord& word,
                            const std::vector<Sym>& syndrome, unsigned s_budget) {
  const Field& f = code.field();
  unsigned v = code.v();
  unsigned t = static_cast<unsigned>(word.erasure_count());
  Poly e_loc = erasure_locator(code, word);
  std::vector<std::size_t> erased = word.erased_positions();
  Matrix ht = mat_transpose(code.parity_check());

  // Any candidate whose correction cancels the whole syndrome touches at most
  // s + t positions, and two such codewords would differ in at most 2s + t <= v
  // places, below the minimum distance v + 1. So a verified candidate is the
  // unique answer.
  auto finish = [&](const std::vector<std::size_t>& positions) -> std::optional<Decoded> {
    if (positions.size() > v) return std::nullopt;
    auto mags = solve_magnitudes(code, syndrome, positions);
    if (!mags) return std::nullopt;
    Decoded result;
    result.codeword = word.zero_filled();
    std::vector<Sym> residual = syndrome;
    for (auto& [pos, mag] : *mags) {
      result.codeword[pos] ^= mag;
      if (mag != 0) {
        result.error[pos] = mag;
        for (unsigned w = 0; w < v; ++w) residual[w] ^= f.mul(mag, ht.at(pos, w));
      }
    }
    for (Sym x : residual)
      if (x != 0) return std::nullopt;
    return result;
  };

  auto locate = [&](const std::vector<Sym>& sigma) {
    Poly g = locator_from_sigma(sigma);
    std::vector<std::size_t> positions = erased;
    for (unsigned i = 0; i < code.k(); ++i)
      if (!word.is_erased(i) && poly_eval(f, g, code.params().a[i]) == 0)
        positions.push_back(i);
    for (unsigned j = 0; j < code.r(); ++j)
      if (!word.is_erased(code.k() + j) && poly_eval(f, g, code.params().b[j]) == 0)
        positions.push_back(code.k() + j);
    std::sort(positions.begin(), positions.end());
    return positions;
  };

  if (s_budget == 0) {
    auto done = finish(erased);
    if (!done) return DecodeFail::MagnitudeInconsistent;
    return *done;
  }

  std::vector<unsigned> w0(s_budget + t);
  for (unsigned i = 0; i < w0.size(); ++i) w0[i] = i;
  unsigned rows = std::min(2 * s_budget + t, v - (s_budget + t));
  FSystem sys = build_f_system(code, syndrome, e_loc, s_budget, t, w0, rows);
  SigmaOutcome outcome = solve_sigma(f, sys);

  if (std::holds_alternative<SigmaInconsistent>(outcome))
    return DecodeFail::SigmaInconsistent;

  if (auto* uniq = std::get_if<SigmaUnique>(&outcome)) {
    auto done = finish(locate(uniq->sigma));
    if (!done) return DecodeFail::MagnitudeInconsistent;
    return *done;
  }

  // Underdetermined locator system: scan the candidate line and take the
  // first separable blend whose full correction checks out.
  auto& amb = std::get<SigmaAmbiguous>(outcome);
  bool any_separable = false;
  for (std::size_t i = 0; i < f.size(); ++i) {
    Sym gamma = static_cast<Sym>(i);
    if (gamma == 1) continue;
    std::vector<Sym> sigma(s_budget);
    Sym one_minus = f.add(1, gamma);
    for (unsigned j = 0; j < s_budget; ++j)
      sigma[j] = f.add(f.mul(gamma, amb.sigma1[j]), f.mul(one_minus, amb.sigma2[j]));
    Poly g = locator_from_sigma(sigma);
    if (poly_gcd(f, g, poly_derivative(g)).degree() != 0) continue;
    if (poly_gcd(f, g, e_loc).degree() != 0) continue;
    any_separable = true;
    auto done = finish(locate(sigma));
    if (done) return *done;
  }
  if (!any_separable) return DecodeFail::NoSeparableCandidate;
  return DecodeFail::MagnitudeInconsistent;
}

DecodeResult decode_plain(const ECCode& code, const NoisyWord& word,
                          const std::vector<Sym>& syndrome, unsigned s_budget) {
  unsigned v = code.v();
  unsigned t = static_cast<unsigned>(word.erasure_count());
  if (2 * s_budget + t > v)
    throw Error(Errc::OutOfRange, "budget violates 2s + t <= v");

  // Search the locator degree from the full budget downward. Any verified
  // correction with s' <= s errors is within the unique decoding radius, so
  // the first hit is the answer. The full budget normally succeeds in one
  // attempt; smaller degrees cover words whose underdetermined locator
  // systems resist the blend scan.
  DecodeResult first = decode_attempt(code, word, syndrome, s_budget);
  if (std::holds_alternative<Decoded>(first)) return first;
  for (unsigned s_try = s_budget; s_try-- > 0;) {
    DecodeResult res = decode_attempt(code, word, syndrome, s_try);
    if (std::holds_alternative<Decoded>(res)) return res;
  }
  return first;
}

} // namespace

DecodeResult decode(const ECCode& code, const NoisyWord& word, unsigned s_budget) {
  if (word.size() != code.n())
    throw Error(Errc::LengthMismatch, "word length must be n");
  if (code.is_plain())
    return decode_plain(code, word, compute_syndrome(code, word), s_budget);

  // Strip the scalings, decode the plain sibling, then map back.
  const Field& f = code.field();
  ECCode plain = code.plain_equivalent();
  const auto& c = code.params().c;
  const auto& d = code.params().d;
  std::vector<Sym> cs = c.empty() ? std::vector<Sym>(code.k(), 1) : c;
  std::vector<Sym> ds = d.empty() ? std::vector<Sym>(code.v(), 1) : d;
  NoisyWord mapped = word;
  mapped.symbols = gc_to_cauchy_map(f, word.zero_filled(), cs, ds);
  DecodeResult res = decode_plain(plain, mapped, compute_syndrome(plain, mapped), s_budget);
  if (auto* ok = std::get_if<Decoded>(&res)) {
    Decoded out;
    out.codeword = gc_to_cauchy_map_inverse(f, ok->codeword, cs, ds);
    std::vector<Sym> z = word.zero_filled();
    for (std::size_t i = 0; i < z.size(); ++i)
      if (out.codeword[i] != z[i]) out.error[i] = f.sub(out.codeword[i], z[i]);
    return out;
  }
  return res;
}

DecodeResult decode_with_syndrome(const ECCode& code, const NoisyWord& word,
                                  const std::vector<Sym>& syndrome, unsigned s_budget) {
  if (!code.is_plain())
    throw Error(Errc::BadDimensions, "syndrome-supplied decoding requires a plain Cauchy code");
  if (word.size() != code.n())
    throw Error(Errc::LengthMismatch, "word length must be n");
  if (syndrome.size() != code.v())
    throw Error(Errc::LengthMismatch, "syndrome length must be v");
  return decode_plain(code, word, syndrome, s_budget);
}

} // namespace hecc
