#include <cmath>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "geomgamma/config.hpp"
#include "geomgamma/verify.hpp"

using nlohmann::json;
using namespace gg;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitComputation = 2;
constexpr int kExitVerification = 3;

long digits_to_bits(long digits) {
  return static_cast<long>(std::ceil(digits * 3.3219280948873623)) + 16;
}

std::string resolve_config(const std::string& config, const std::string& field) {
  if (!config.empty()) return config;
  if (field.empty())
    throw std::invalid_argument("need --config PATH or --field NAME");
  std::string base = GEOMGAMMA_CONFIG_DIR;
  if (field == "quad" || field == "sqrt19") return base + "/quad_sqrt19_f13.json";
  if (field == "cubic1") return base + "/cubic1_f5.json";
  if (field == "cubic2") return base + "/cubic2_f1mz.json";
  return base + "/" + field + ".json";
}

int print_suite(const SuiteResult& res, bool as_json) {
  if (as_json) {
    json out;
    out["suite"] = res.name;
    out["passed"] = res.passed;
    out["total"] = res.total;
    out["failures"] = res.failures;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << res.name << ": " << res.passed << "/" << res.total
              << (res.ok() ? " pass" : " FAIL") << "\n";
    for (const auto& f : res.failures) std::cout << "  failed: " << f << "\n";
  }
  return res.ok() ? kExitOk : kExitVerification;
}

int cmd_zeta0(const std::string& path, bool as_json) {
  JobConfig cfg = JobConfig::from_file(path);
  ZetaResult res = zeta_at_zero(cfg.input);
  if (as_json) {
    std::cout << zeta_result_json(res, cfg).dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "zeta_f(b, 0) = " << rat_to_string(res.value) << "\n";
  size_t idx = 0;
  for (const auto& blk : res.domain.blocks) {
    if (!blk.in_s) {
      std::cout << "  rho #" << idx << ": not in S (nu = 0)\n";
      continue;
    }
    const auto& rep = res.blocks[idx];
    std::cout << "  rho perm(";
    for (size_t i = 0; i < blk.perm.size(); ++i)
      std::cout << blk.perm[i] + 1 << (i + 1 < blk.perm.size() ? " " : "");
    std::cout << "): nu = " << rep.nu << ", R = " << rat_to_string(rep.r_value)
              << ", mu =";
    for (int m : blk.mu) std::cout << " " << m;
    std::cout << ", w = " << blk.w << "\n";
    ++idx;
  }
  return kExitOk;
}

int cmd_gr_eval(const std::string& path, bool as_json, long prec_digits) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json doc = json::parse(in);
  long prec = digits_to_bits(doc.value("precision", prec_digits));
  json out;
  if (doc.contains("taus")) {
    // plain G_r evaluation: z and taus as [re, im] rational pairs
    auto cxof = [&](const json& v) {
      return BigComplex(parse_rational(v.at(0)), parse_rational(v.at(1)),
                        prec + 32);
    };
    GrArgs args;
    args.z = cxof(doc.at("z"));
    for (const auto& t : doc.at("taus")) args.taus.push_back(cxof(t));
    BigComplex val = gr_value(args, prec);
    out["kind"] = "G_r";
    out["r"] = args.r();
    out["value"] = val.to_string(static_cast<int>(prec / 4));
    out["certified_error_exponent"] = -(prec - 8);
  } else {
    // geometric family evaluation
    GeomGammaSpec spec;
    spec.prec = prec;
    for (const auto& row : doc.at("forms")) {
      IntVec c;
      for (const auto& x : row) c.push_back(Rational(parse_rational(x)).get_num());
      spec.forms.emplace_back(std::move(c));
    }
    RatVec vc;
    for (const auto& x : doc.at("v")) vc.push_back(parse_rational(x));
    spec.v = RatPoint(std::move(vc)).reduced_mod_lattice();
    auto cxof = [&](const json& v) {
      return BigComplex(parse_rational(v.at(0)), parse_rational(v.at(1)),
                        prec + 32);
    };
    spec.w = cxof(doc.at("w"));
    for (const auto& x : doc.at("x")) spec.x_basis.push_back(cxof(x));
    BigComplex val = geometric_G(spec);
    out["kind"] = "geometric_G";
    out["value"] = val.to_string(static_cast<int>(prec / 4));
    out["certified_error_exponent"] = -(prec - 8);
  }
  out["input"] = doc;
  if (as_json)
    std::cout << out.dump(2) << "\n";
  else
    std::cout << out["kind"].get<std::string>() << " = "
              << out["value"].get<std::string>() << "  (error < 2^"
              << out["certified_error_exponent"].get<long>() << ")\n";
  return kExitOk;
}

int cmd_unit_example(long prec_digits, bool as_json) {
  long bits = std::max(digits_to_bits(prec_digits), 200L);
  QuarticUnitResult res = quartic_unit_example(bits);
  json out;
  out["value"] = res.value.to_string(24);
  out["matched_digits"] = res.matched_digits;
  out["poly_residual"] = res.poly_residual.to_string(6);
  bool pass = res.matched_digits >= 8;
  if (as_json)
    std::cout << out.dump(2) << "\n";
  else {
    std::cout << "product = " << res.value.to_string(24) << "\n"
              << "digits matching 4.1210208 - 5.0617720i: "
              << res.matched_digits << "\n"
              << "|P(product)| = " << res.poly_residual.to_string(6) << "\n";
  }
  return pass ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multiple elliptic Gamma families, Bernoulli cone cocycles, and "
               "partial zeta values at s = 0"};
  app.require_subcommand(1);

  std::string config, field, suite;
  bool as_json = false;
  long prec_digits = 40;
  int trials = 100;
  unsigned long seed = 1;
  int threads = 1;
  long max_sign_prec = 1L << 14;
  int dim_n = 3;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config, "JSON job configuration");
    sub->add_flag("--json", as_json, "machine-readable output");
    sub->add_option("--prec", prec_digits, "working precision (decimal digits)");
    sub->add_option("--trials", trials, "randomized trial count");
    sub->add_option("--seed", seed, "PRNG seed");
    sub->add_option("--threads", threads, "worker threads for verification");
    sub->add_option("--max-sign-prec", max_sign_prec,
                    "embedding precision cap in bits for exact sign queries");
  };

  CLI::App* zeta0 = app.add_subcommand("zeta0", "exact partial zeta value at s=0");
  add_common(zeta0);
  zeta0->add_option("--field", field, "bundled config shorthand");

  CLI::App* greval = app.add_subcommand("gr-eval", "evaluate G_r or a geometric family");
  add_common(greval);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify);
  verify->add_option("suite", suite,
                     "one of: modular, distribution, cocycle, kappa, sampling, oracle")
      ->required();
  verify->add_option("--field", field, "bundled config shorthand");
  verify->add_option("--n", dim_n, "lattice rank for the modular suite");

  CLI::App* unitex = app.add_subcommand("unit-example",
                                        "quartic-field G_2 product from the series");
  add_common(unitex);

  CLI11_PARSE(app, argc, argv);

  try {
    if (zeta0->parsed()) return cmd_zeta0(resolve_config(config, field), as_json);
    if (greval->parsed()) return cmd_gr_eval(config, as_json, prec_digits);
    if (unitex->parsed())
      return cmd_unit_example(prec_digits == 40 ? 60 : prec_digits, as_json);
    if (verify->parsed()) {
      long bits = digits_to_bits(prec_digits);
      if (suite == "kappa") return print_suite(verify_kappa(trials, seed), as_json);
      if (suite == "oracle")
        return print_suite(verify_oracle({2, 3, 4}, trials, seed), as_json);
      if (suite == "modular") {
        SuiteResult r = verify_modular(dim_n, std::min(trials, 50), std::max(bits, 128L), seed);
        return print_suite(r, as_json);
      }
      if (suite == "distribution")
        return print_suite(verify_distribution(std::max(bits, 128L), seed), as_json);
      if (suite == "cocycle") {
        JobConfig cfg = JobConfig::from_file(resolve_config(config, field));
        cfg.input.max_sign_prec = max_sign_prec;
        return print_suite(verify_cocycle(cfg.input, trials, seed), as_json);
      }
      if (suite == "sampling") {
        JobConfig cfg = JobConfig::from_file(resolve_config(config, field));
        cfg.input.max_sign_prec = max_sign_prec;
        return print_suite(verify_sampling(cfg.input, trials, seed, true), as_json);
      }
      throw std::invalid_argument("unknown suite: " + suite);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return kExitComputation;
  }
  return kExitOk;
}
