#include "geomgamma/config.hpp"

#include <fstream>

namespace gg {

using nlohmann::json;

Rational parse_rational(const json& v) {
  if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
  if (v.is_string()) return rat_from_string(v.get<std::string>());
  throw std::invalid_argument("config: expected integer or \"p/q\" string");
}

JobConfig JobConfig::from_json(const json& doc) {
  JobConfig cfg;
  if (!doc.contains("field") || !doc["field"].contains("minpoly"))
    throw std::invalid_argument("config: missing field.minpoly");
  IntVec minpoly;
  for (const auto& c : doc["field"]["minpoly"])
    minpoly.push_back(Rational(parse_rational(c)).get_num());
  FieldPtr field = NumberField::create(minpoly);
  cfg.input.field = field;
  const int n = field->degree();

  if (!doc.contains("lattice_basis"))
    throw std::invalid_argument("config: missing lattice_basis");
  for (const auto& row : doc["lattice_basis"]) {
    RatVec coeffs;
    for (const auto& c : row) coeffs.push_back(parse_rational(c));
    if (static_cast<int>(coeffs.size()) != n)
      throw std::invalid_argument("config: lattice basis row has wrong length");
    cfg.input.lattice_basis.emplace_back(field, std::move(coeffs));
  }
  if (doc.contains("units")) {
    for (const auto& row : doc["units"]) {
      RatVec coeffs;
      for (const auto& c : row) coeffs.push_back(parse_rational(c));
      if (static_cast<int>(coeffs.size()) != n)
        throw std::invalid_argument("config: unit row has wrong length");
      cfg.input.units.emplace_back(field, std::move(coeffs));
    }
  }
  cfg.input.label_f = doc.value("label_f", std::string());
  cfg.input.label_b = doc.value("label_b", std::string());
  if (doc.contains("precision")) cfg.prec_digits = doc["precision"].get<long>();
  if (doc.contains("trials")) cfg.trials = doc["trials"].get<int>();
  if (doc.contains("seed")) cfg.seed = doc["seed"].get<unsigned long>();
  if (doc.contains("max_sign_prec"))
    cfg.input.max_sign_prec = doc["max_sign_prec"].get<long>();
  return cfg;
}

JobConfig JobConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path);
  json doc = json::parse(in);
  return from_json(doc);
}

json rational_json(const Rational& r) { return rat_to_string(r); }

json nf_json(const NFElement& x) {
  json arr = json::array();
  for (const Rational& c : x.coeffs()) arr.push_back(rat_to_string(c));
  return arr;
}

json form_json(const LinearForm& a) {
  json arr = json::array();
  for (const Int& c : a.c) arr.push_back(c.get_str());
  return arr;
}

namespace {

std::string perm_name(const std::vector<int>& perm) {
  // cycle-free label: identity -> "Id", otherwise one-line word
  bool ident = true;
  for (size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != static_cast<int>(i)) ident = false;
  if (ident) return "Id";
  std::string s = "(";
  for (size_t i = 0; i < perm.size(); ++i) {
    s += std::to_string(perm[i] + 1);
    if (i + 1 < perm.size()) s += " ";
  }
  s += ")";
  return s;
}

}  // namespace

json signed_domain_json(const SignedDomain& dom) {
  json blocks = json::array();
  for (const auto& blk : dom.blocks) {
    json b;
    b["perm"] = perm_name(blk.perm);
    b["in_S"] = blk.in_s;
    if (blk.in_s) {
      b["mu"] = blk.mu;
      b["w"] = blk.w;
      b["nu"] = blk.nu;
      json forms = json::array();
      for (const auto& a : blk.a) forms.push_back(form_json(a));
      b["a"] = forms;
      json generators = json::array();
      for (const auto& f : blk.f) generators.push_back(nf_json(f));
      b["f"] = generators;
    }
    blocks.push_back(std::move(b));
  }
  json out;
  out["s0"] = dom.s0;
  out["blocks"] = std::move(blocks);
  return out;
}

json zeta_result_json(const ZetaResult& res, const JobConfig& cfg) {
  json out;
  out["label_f"] = cfg.input.label_f;
  out["label_b"] = cfg.input.label_b;
  out["zeta0"] = rational_json(res.value);
  json v = json::array();
  for (const auto& c : res.v.c) v.push_back(rat_to_string(c));
  out["v"] = std::move(v);
  json blocks = json::array();
  size_t idx = 0;
  for (const auto& blk : res.domain.blocks) {
    if (!blk.in_s) continue;
    json b;
    b["perm"] = perm_name(blk.perm);
    b["nu"] = res.blocks[idx].nu;
    b["R"] = rational_json(res.blocks[idx].r_value);
    b["trace_arg"] = nf_json(res.blocks[idx].trace_arg);
    blocks.push_back(std::move(b));
    ++idx;
  }
  out["blocks"] = std::move(blocks);
  out["signed_domain"] = signed_domain_json(res.domain);
  return out;
}

}  // namespace gg
