#pragma once

#include <string>

#include <json.hpp>

#include "geomgamma/shintani.hpp"

namespace gg {

// Schema-checked job parameters: field minimal polynomial (integer
// coefficients, ascending), lattice basis rows (power-basis coordinates,
// rationals as "p/q" strings or integers), unit rows, optional labels and
// numeric knobs.
struct JobConfig {
  RayClassInput input;
  long prec_digits = 40;
  int trials = 100;
  unsigned long seed = 1;
  int threads = 1;

  static JobConfig from_json(const nlohmann::json& doc);
  static JobConfig from_file(const std::string& path);
};

Rational parse_rational(const nlohmann::json& v);

// lossless serializers used by every report
nlohmann::json rational_json(const Rational& r);
nlohmann::json nf_json(const NFElement& x);
nlohmann::json form_json(const LinearForm& a);
nlohmann::json signed_domain_json(const SignedDomain& dom);
nlohmann::json zeta_result_json(const ZetaResult& res, const JobConfig& cfg);

}  // namespace gg
