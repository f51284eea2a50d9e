#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hecc/archive.hpp"
#include "hecc/oracle.hpp"

namespace py = pybind11;
using namespace hecc;

namespace {

const char* fail_name(DecodeFail f) {
  switch (f) {
    case DecodeFail::SigmaInconsistent: return "sigma-inconsistent";
    case DecodeFail::NoSeparableCandidate: return "no-separable-candidate";
    case DecodeFail::TooManyLocations: return "too-many-locations";
    case DecodeFail::MagnitudeInconsistent: return "magnitude-inconsistent";
    case DecodeFail::ResidualSyndrome: return "residual-syndrome";
    default: return "inconsistent-siblings";
  }
}

const char* status_name(BlockStatus s) {
  switch (s) {
    case BlockStatus::Clean: return "clean";
    case BlockStatus::CorrectedLocal: return "corrected-local";
    case BlockStatus::CorrectedGlobal: return "corrected-global";
    default: return "failed";
  }
}

py::dict decode_result_to_dict(const DecodeResult& res) {
  py::dict out;
  if (auto* ok = std::get_if<Decoded>(&res)) {
    out["ok"] = true;
    out["codeword"] = ok->codeword;
    out["error"] = ok->error;
  } else {
    out["ok"] = false;
    out["reason"] = fail_name(std::get<DecodeFail>(res));
  }
  return out;
}

py::dict block_result_to_dict(const BlockResult& res) {
  py::dict out;
  if (auto* ok = std::get_if<BlockDecoded>(&res)) {
    out["ok"] = true;
    out["message"] = ok->message;
    out["codeword"] = ok->codeword;
    out["error"] = ok->error;
  } else {
    out["ok"] = false;
    out["reason"] = fail_name(std::get<DecodeFail>(res));
  }
  return out;
}

std::vector<std::vector<Sym>> matrix_to_rows(const Matrix& m) {
  std::vector<std::vector<Sym>> out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row(i));
  return out;
}

Matrix rows_to_matrix(const std::vector<std::vector<Sym>>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols())
      throw Error(Errc::BadDimensions, "ragged matrix rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

NoisyWord make_word(const std::vector<Sym>& symbols, const std::vector<std::size_t>& erasures) {
  NoisyWord w = NoisyWord::from_symbols(symbols);
  for (std::size_t i : erasures) {
    if (i >= w.size()) throw Error(Errc::OutOfRange, "erasure index out of range");
    w.erase_at(i);
  }
  return w;
}

} // namespace

PYBIND11_MODULE(_hecc, m) {
  m.doc() = "extended Cauchy and hierarchical code core";

  py::register_exception<Error>(m, "HeccError");

  py::class_<Field>(m, "Field")
      .def(py::init<unsigned, std::uint32_t>(), py::arg("degree"), py::arg("prim_poly"))
      .def_static("with_default_poly", &Field::with_default_poly)
      .def_static("default_poly", &Field::default_poly)
      .def_property_readonly("degree", &Field::degree)
      .def_property_readonly("size", &Field::size)
      .def_property_readonly("prim_poly", &Field::prim_poly)
      .def("alpha_pow", &Field::alpha_pow)
      .def("log", &Field::log)
      .def("add", &Field::add)
      .def("mul", &Field::mul)
      .def("inv", &Field::inv)
      .def("div", &Field::div)
      .def("pow", &Field::pow);

  py::class_<CauchyParams>(m, "CauchyParams")
      .def(py::init([](std::vector<Sym> a, std::vector<Sym> b,
                       std::vector<Sym> c, std::vector<Sym> d) {
             return CauchyParams{std::move(a), std::move(b), std::move(c), std::move(d)};
           }),
           py::arg("a"), py::arg("b"), py::arg("c") = std::vector<Sym>{},
           py::arg("d") = std::vector<Sym>{})
      .def_readonly("a", &CauchyParams::a)
      .def_readonly("b", &CauchyParams::b)
      .def_readonly("c", &CauchyParams::c)
      .def_readonly("d", &CauchyParams::d);

  m.def("build_cauchy", [](const Field& f, const CauchyParams& p) {
    return matrix_to_rows(build_cauchy(f, p));
  });
  m.def("cauchy_determinant", &cauchy_determinant);
  m.def("default_points", &default_points);
  m.def("grs_membership_test", [](const Field& f, const std::vector<std::vector<Sym>>& x) {
    GrsResult r = grs_membership_test(f, rows_to_matrix(x));
    return py::make_tuple(r.is_grs, r.failing_condition);
  });

  py::class_<ECCode>(m, "ECCode")
      .def(py::init<const Field&, CauchyParams, unsigned>(), py::arg("field"),
           py::arg("params"), py::arg("r"), py::keep_alive<1, 2>())
      .def_property_readonly("k", &ECCode::k)
      .def_property_readonly("v", &ECCode::v)
      .def_property_readonly("r", &ECCode::r)
      .def_property_readonly("n", &ECCode::n)
      .def_property_readonly("dim", &ECCode::dim)
      .def("parity_check", [](const ECCode& c) { return matrix_to_rows(c.parity_check()); })
      .def("systematic_generator",
           [](const ECCode& c) { return matrix_to_rows(c.systematic_generator()); })
      .def("systematic_x_block",
           [](const ECCode& c) { return matrix_to_rows(c.systematic_x_block()); })
      .def("encode", &ECCode::encode);

  m.def(
      "syndrome",
      [](const ECCode& code, const std::vector<Sym>& symbols,
         const std::vector<std::size_t>& erasures) {
        return compute_syndrome(code, make_word(symbols, erasures));
      },
      py::arg("code"), py::arg("symbols"), py::arg("erasures") = std::vector<std::size_t>{});
  m.def(
      "decode",
      [](const ECCode& code, const std::vector<Sym>& symbols,
         const std::vector<std::size_t>& erasures, unsigned s_budget) {
        return decode_result_to_dict(decode(code, make_word(symbols, erasures), s_budget));
      },
      py::arg("code"), py::arg("symbols"), py::arg("erasures"), py::arg("s_budget"));

  m.def("min_distance", &min_distance, py::arg("code"), py::arg("max_words") = 1u << 20);
  m.def(
      "brute_force_decode",
      [](const ECCode& code, const std::vector<Sym>& symbols,
         const std::vector<std::size_t>& erasures) -> py::object {
        OracleResult r = brute_force_decode(code, make_word(symbols, erasures));
        py::dict out;
        if (auto* ok = std::get_if<OracleDecoded>(&r)) {
          out["ok"] = true;
          out["codeword"] = ok->codeword;
          out["distance"] = ok->distance;
        } else {
          out["ok"] = false;
          out["reason"] = std::holds_alternative<OracleAmbiguous>(r) ? "ambiguous" : "failed";
        }
        return out;
      },
      py::arg("code"), py::arg("symbols"), py::arg("erasures") = std::vector<std::size_t>{});

  py::class_<BlockSpec>(m, "BlockSpec")
      .def(py::init([](unsigned k, unsigned r, unsigned delta, std::vector<Sym> a_points,
                       std::vector<Sym> b_points) {
             BlockSpec b;
             b.k = k;
             b.r = r;
             b.delta = delta;
             b.a_points = std::move(a_points);
             b.b_points = std::move(b_points);
             return b;
           }),
           py::arg("k"), py::arg("r"), py::arg("delta"), py::arg("a_points"),
           py::arg("b_points"))
      .def_readonly("k", &BlockSpec::k)
      .def_readonly("r", &BlockSpec::r)
      .def_readonly("delta", &BlockSpec::delta)
      .def_readonly("a_points", &BlockSpec::a_points)
      .def_readonly("b_points", &BlockSpec::b_points);

  py::class_<HierConfig>(m, "HierConfig")
      .def(py::init([](unsigned degree, std::uint32_t poly, std::vector<BlockSpec> blocks) {
             return HierConfig{degree, poly, std::move(blocks)};
           }),
           py::arg("field_degree"), py::arg("prim_poly"), py::arg("blocks"))
      .def_readonly("field_degree", &HierConfig::field_degree)
      .def_readonly("prim_poly", &HierConfig::prim_poly)
      .def_readonly("blocks", &HierConfig::blocks);

  m.def("default_hier_config", &default_hier_config, py::arg("field_degree"), py::arg("p"),
        py::arg("k"), py::arg("r"), py::arg("delta"));
  m.def("serialize_config", &serialize_config);
  m.def("parse_config", &parse_config);

  py::class_<HierCode>(m, "HierCode")
      .def(py::init<const Field&, HierConfig>(), py::arg("field"), py::arg("config"),
           py::keep_alive<1, 2>())
      .def_property_readonly("block_count", &HierCode::block_count)
      .def_property_readonly("delta_total", &HierCode::delta_total)
      .def("generator", [](const HierCode& c) { return matrix_to_rows(c.generator()); })
      .def("local_pcm", [](const HierCode& c, unsigned i) { return matrix_to_rows(c.local_pcm(i)); })
      .def("global_pcm",
           [](const HierCode& c, unsigned i) { return matrix_to_rows(c.global_pcm(i)); })
      .def("encode", &HierCode::encode)
      .def(
          "local_decode",
          [](const HierCode& c, unsigned i, const std::vector<Sym>& symbols,
             const std::vector<std::size_t>& erasures) {
            return block_result_to_dict(c.local_decode(i, make_word(symbols, erasures)));
          },
          py::arg("i"), py::arg("symbols"), py::arg("erasures") = std::vector<std::size_t>{})
      .def(
          "global_decode",
          [](const HierCode& c, unsigned i, const std::vector<Sym>& symbols,
             const std::vector<std::size_t>& erasures,
             const std::vector<std::vector<Sym>>& others) {
            return block_result_to_dict(c.global_decode(i, make_word(symbols, erasures), others));
          },
          py::arg("i"), py::arg("symbols"), py::arg("erasures"), py::arg("others"))
      .def("decode_all",
           [](const HierCode& c, const std::vector<std::vector<Sym>>& symbols,
              const std::vector<std::vector<std::size_t>>& erasures) {
             std::vector<NoisyWord> words;
             for (std::size_t i = 0; i < symbols.size(); ++i)
               words.push_back(make_word(
                   symbols[i], i < erasures.size() ? erasures[i] : std::vector<std::size_t>{}));
             py::list out;
             for (const BlockOutcome& o : c.decode_all(words)) {
               py::dict d;
               d["status"] = status_name(o.status);
               d["message"] = o.message;
               d["codeword"] = o.codeword;
               d["error"] = o.error;
               out.append(std::move(d));
             }
             return out;
           },
           py::arg("symbols"), py::arg("erasures") = std::vector<std::vector<std::size_t>>{});

  m.def("encode_archive", [](const HierCode& code, const py::bytes& payload) {
    std::string data = payload;
    Archive ar = encode_payload(code, {data.begin(), data.end()});
    std::vector<std::uint8_t> bytes = write_archive(ar);
    return py::bytes(reinterpret_cast<const char*>(bytes.data()), bytes.size());
  });
  m.def(
      "decode_archive",
      [](const py::bytes& archive, const std::string& erasure_text) {
        std::string data = archive;
        Archive ar = read_archive({data.begin(), data.end()});
        Field f(ar.config.field_degree, ar.config.prim_poly);
        HierCode code(f, ar.config);
        ArchiveDecodeReport rep = decode_payload(code, ar, parse_erasure_list(erasure_text));
        py::dict out;
        out["ok"] = rep.ok;
        if (rep.ok)
          out["payload"] =
              py::bytes(reinterpret_cast<const char*>(rep.payload.data()), rep.payload.size());
        py::list stripes;
        for (const StripeReport& sr : rep.stripes) {
          py::list blocks;
          for (BlockStatus s : sr.blocks) blocks.append(status_name(s));
          stripes.append(std::move(blocks));
        }
        out["stripes"] = std::move(stripes);
        return out;
      },
      py::arg("archive"), py::arg("erasures") = std::string{});
}
