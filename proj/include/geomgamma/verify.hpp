#pragma once

#include <random>
#include <string>
#include <vector>

#include "geomgamma/gammaeval.hpp"
#include "geomgamma/shintani.hpp"

namespace gg {

struct SuiteResult {
  std::string name;
  int passed = 0;
  int total = 0;
  std::vector<std::string> failures;  // one line per failed case
  bool ok() const { return passed == total; }
  void case_result(bool pass, const std::string& label);
};

// kappa = delta_SV on the 8 determinant-sign rows plus random triples
SuiteResult verify_kappa(int random_trials, unsigned long seed);

// exact cocycle vanishing on unit-orbit families (a, u a, u^2 a, u^3 a)
SuiteResult verify_cocycle(const RayClassInput& input, int trials,
                           unsigned long seed, Int index_budget = 60000);

// Prop 3.5 second bullet: the standard-basis family with the all-ones form
SuiteResult verify_prop35_bullet(int max_dim);

// h0 against the series oracle on random simplicial configurations
SuiteResult verify_oracle(const std::vector<int>& dims, int per_dim,
                          unsigned long seed, Int index_budget = 4000);

// modular identity residuals at the given precision
SuiteResult verify_modular(int n, int count, long prec_bits, unsigned long seed);

// Felder-Varchenko three-Gamma identity against P3
SuiteResult verify_felder_varchenko(long prec_bits, unsigned long seed);

// distribution relations for the plain and geometric families
SuiteResult verify_distribution(long prec_bits, unsigned long seed);

// signed-domain sampling identity, with the mutation cross-check
SuiteResult verify_sampling(const RayClassInput& input, int trials,
                            unsigned long seed, bool include_mutation);

// parallelepiped counts against brute-force box scans
SuiteResult verify_parallelepiped_counts(int trials, unsigned long seed,
                                         long max_index);

// random SL_n(Z) word built from elementary matrices
UnimodularMatrix random_sl_matrix(size_t n, int word_len, std::mt19937_64& rng);

// multiplication-by-u matrix on the lattice, as an SL_n(Z) element
UnimodularMatrix unit_lattice_matrix(const RayClassInput& input,
                                     const NFElement& u);

// small totally positive units for orbit tests: squares of short unit words
std::vector<NFElement> orbit_unit_pool(const RayClassInput& input);

}  // namespace gg
