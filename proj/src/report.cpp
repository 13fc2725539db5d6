#include "blk/report.hpp"

#include <sstream>

#include "blk/error.hpp"
#include "blk/pipeline.hpp"

namespace blk {

using json = nlohmann::ordered_json;

std::optional<Command> parse_command(std::string_view name) {
  static const std::pair<std::string_view, Command> table[] = {
      {"milnor", Command::Milnor},       {"tmatrix-jet", Command::TMatrixJet},
      {"saturate", Command::Saturate},   {"vfilt", Command::VFilt},
      {"tmatrix", Command::TMatrix},     {"spectrum", Command::Spectrum},
      {"spectral-pairs", Command::SpectralPairs}, {"monodromy", Command::Monodromy},
      {"all", Command::All}};
  for (const auto& [n, c] : table)
    if (n == name) return c;
  return std::nullopt;
}

namespace {

json rat(const Rational& q) { return to_string(q); }

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json series_json(const SeriesMatrix& a) {
  json coeffs = json::array();
  for (int k = 0; k < a.precision(); ++k) coeffs.push_back(matrix_json(a.coeff(k)));
  return coeffs;
}

json spectrum_json(const SpectralData& sd) {
  json out = json::array();
  for (const auto& [a, m] : sd.numbers) out.push_back({{"alpha", rat(a)}, {"mult", m}});
  return out;
}

json pairs_json(const SpectralData& sd) {
  json out = json::array();
  for (const auto& p : sd.pairs) out.push_back({{"alpha", rat(p.alpha)}, {"l", p.l}, {"mult", p.mult}});
  return out;
}

json monodromy_json(const SpectralData& sd) {
  json out = json::array();
  for (const auto& m : sd.monodromy) out.push_back({{"alpha_class", rat(m.alpha_class)}, {"jordan_blocks", m.jordan_blocks}});
  return out;
}

json hodge_json(const SpectralData& sd) {
  json out = json::array();
  for (const auto& [key, m] : sd.hodge_numbers) {
    const auto& [cls, p, q] = key;
    out.push_back({{"alpha_class", rat(cls)}, {"p", p}, {"q", q}, {"h", m}});
  }
  return out;
}

json audit_json(const PipelineResult& r) {
  const Audit& a = *r.audit;
  return {{"saturation_kappa", r.sat.kappa},
          {"kappa", r.v.lattice.kappa},
          {"shifts", r.v.lattice.offset},
          {"exponent", a.exponent},
          {"degree", a.degree},
          {"steps", a.steps},
          {"conjugation_ok", a.conjugation_ok},
          {"s2_coefficient_zero", a.s2_zero}};
}

}  // namespace

json build_report(const JobConfig& cfg) {
  if (cfg.jet_degree < 1) fail(ErrorKind::SyntaxError, "--degree must be at least 1");
  ParsedPoly p = parse_input(cfg.poly);
  json out;
  switch (cfg.command) {
    case Command::Milnor: {
      out["mu"] = milnor_data(p.f).mu;
      return out;
    }
    case Command::TMatrixJet: {
      MilnorData md = milnor_data(p.f);
      out["mu"] = md.mu;
      out["degree"] = cfg.jet_degree;
      out["A"] = series_json(t_matrix_jet(md, cfg.jet_degree));
      return out;
    }
    case Command::Saturate: {
      SaturationStage st = run_saturation(p, {}, cfg.jet_degree);
      out["mu"] = st.md.mu;
      out["kappa"] = st.sat.kappa;
      out["H"] = series_json(st.sat.H_inf.matrix());
      out["A"] = series_json(st.A_h);
      return out;
    }
    default:
      break;
  }
  PipelineOptions opt;
  PipelineResult r = run_pipeline(cfg.poly, opt);
  out["mu"] = r.md.mu;
  const bool all = cfg.command == Command::All;
  if (cfg.command == Command::VFilt) {
    out["kappa"] = r.v.lattice.kappa;
    out["shifts"] = r.v.lattice.offset;
    json eig = json::array();
    for (const auto& a : r.ed.alphas) eig.push_back(rat(a));
    out["eigenvalues"] = eig;
  }
  if (all) out["variables"] = r.input.names;
  if (all || cfg.command == Command::TMatrix) {
    out["A0"] = matrix_json(r.sb.A0);
    out["A1"] = matrix_json(r.sb.A1);
  }
  if (all || cfg.command == Command::SpectralPairs) out["spectral_pairs"] = pairs_json(r.sd);
  if (all || cfg.command == Command::Spectrum) out["spectrum"] = spectrum_json(r.sd);
  if (all || cfg.command == Command::Monodromy) out["monodromy"] = monodromy_json(r.sd);
  if (all) out["hodge_numbers"] = hodge_json(r.sd);
  if (cfg.audit) out["audit"] = audit_json(r);
  return out;
}

namespace {

std::string text_value(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array() && !v.empty() && v[0].is_array()) {
    std::string s;
    for (const auto& row : v) {
      s += "\n  ";
      for (std::size_t j = 0; j < row.size(); ++j) s += (j ? " " : "") + text_value(row[j]);
    }
    return s;
  }
  return v.dump();
}

std::string render_text(const json& report) {
  std::ostringstream os;
  for (const auto& [key, value] : report.items()) {
    if (key == "spectrum") {
      os << "spectrum:";
      for (const auto& e : value) os << " " << e["alpha"].get<std::string>() << "^" << e["mult"].get<int>();
      os << "\n";
    } else if (key == "spectral_pairs") {
      os << "spectral pairs:";
      for (const auto& e : value)
        os << " (" << e["alpha"].get<std::string>() << "," << e["l"].get<int>() << ")^" << e["mult"].get<int>();
      os << "\n";
    } else if (key == "monodromy") {
      os << "monodromy:\n";
      for (const auto& e : value) os << "  alpha = " << e["alpha_class"].get<std::string>() << " mod 1, Jordan blocks " << e["jordan_blocks"].dump() << "\n";
    } else if (key == "hodge_numbers") {
      os << "hodge numbers:\n";
      for (const auto& e : value)
        os << "  h^{" << e["p"].get<int>() << "," << e["q"].get<int>() << "} at alpha = " << e["alpha_class"].get<std::string>() << ": " << e["h"].get<int>() << "\n";
    } else if (key == "A" || key == "H") {
      for (std::size_t k = 0; k < value.size(); ++k) os << key << "_" << k << ":" << text_value(value[k]) << "\n";
    } else if (key == "audit") {
      os << "audit:\n";
      for (const auto& [k, v] : value.items()) os << "  " << k << ": " << text_value(v) << "\n";
    } else {
      os << key << ": " << text_value(value) << "\n";
    }
  }
  return os.str();
}

}  // namespace

Report run(const JobConfig& cfg) {
  Report rep;
  try {
    json report = build_report(cfg);
    rep.out = cfg.format == Format::Json ? report.dump() + "\n" : render_text(report);
  } catch (const Error& e) {
    rep.exit_code = exit_code(e.kind());
    if (cfg.format == Format::Json)
      rep.err = json{{"error", std::string(kind_name(e.kind()))}, {"message", e.what()}}.dump() + "\n";
    else
      rep.err = "error: " + std::string(kind_name(e.kind())) + ": " + e.what() + "\n";
  } catch (const std::exception& e) {
    rep.exit_code = 4;
    rep.err = std::string("error: internal: ") + e.what() + "\n";
  }
  return rep;
}

}  // namespace blk
