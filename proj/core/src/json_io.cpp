#include "hermite2d/json_io.hpp"

#include "hermite2d/errors.hpp"

namespace hermite2d {

std::string to_json_line(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["identity"] = r.identity;
  j["params"] = r.params;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["pi_power"] = r.pi_power;
  j["pass"] = r.pass;
  return j.dump();
}

nlohmann::ordered_json poly_to_json(const SparsePoly& p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [e, c] : p.terms()) {
    nlohmann::ordered_json exp = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < kNumVars; ++i)
      if (e[i] > 0) exp[std::string(var_name(static_cast<Var>(i)))] = e[i];
    terms.push_back({{"exp", std::move(exp)}, {"coeff", to_string(c)}});
  }
  return {{"terms", std::move(terms)}};
}

SparsePoly poly_from_json(const nlohmann::ordered_json& j) {
  SparsePoly p;
  if (!j.contains("terms") || !j["terms"].is_array())
    throw ParseError("polynomial JSON needs a 'terms' array");
  try {
    for (const auto& term : j["terms"]) {
      ExpVec e{};
      for (const auto& [key, val] : term.at("exp").items()) {
        const auto v = var_from_name(key);
        if (!v) throw ParseError("unknown variable '" + key + "'");
        if (!val.is_number_unsigned()) throw ParseError("exponent of '" + key + "' must be >= 0");
        exp_of(e, *v) = val.get<std::uint16_t>();
      }
      p.add_term(e, parse_scalar(term.at("coeff").get<std::string>()));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed polynomial JSON: ") + e.what());
  }
  return p;
}

nlohmann::ordered_json gmatrix_to_json(const GMatrix& g) {
  return nlohmann::ordered_json::array(
      {to_string(g.g11), to_string(g.g12), to_string(g.g21), to_string(g.g22)});
}

nlohmann::ordered_json matrix_to_json(const DeformationMatrix& m, const GMatrix* g) {
  nlohmann::ordered_json j;
  j["kind"] = m.kind == DeformationMatrix::Kind::deformation ? "M(g,L)" : "M(L)";
  j["L"] = m.L;
  if (g != nullptr) j["g"] = gmatrix_to_json(*g);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : m.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const auto& entry : row) r.push_back(to_string(entry));
    rows.push_back(std::move(r));
  }
  j["entries"] = std::move(rows);
  return j;
}

nlohmann::ordered_json det_to_json(const HankelSpec& spec, const PositivityResult& res) {
  nlohmann::ordered_json j;
  j["N"] = spec.N;
  j["s"] = spec.s;
  j["z"] = to_string(GaussianRational(spec.x0, spec.y0));
  j["g"] = gmatrix_to_json(spec.g);
  j["delta"] = to_string(res.value.coeff);
  j["pi_power"] = res.value.pi_power;
  j["positive"] = res.positive;
  return j;
}

namespace {

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    quoted += c;
    if (c == '"') quoted += '"';
  }
  quoted += '"';
  return quoted;
}

}  // namespace

std::string report_to_csv_line(const VerificationReport& r) {
  return csv_escape(r.identity) + "," + csv_escape(r.params.dump()) + "," + csv_escape(r.lhs) +
         "," + csv_escape(r.rhs) + "," + std::to_string(r.pi_power) + "," +
         (r.pass ? "true" : "false");
}

std::string report_to_pretty_line(const VerificationReport& r) {
  std::string line = r.pass ? "PASS " : "FAIL ";
  line += r.identity + " " + r.params.dump();
  if (!r.pass) line += "  lhs=" + r.lhs + " rhs=" + r.rhs;
  return line;
}

}  // namespace hermite2d
