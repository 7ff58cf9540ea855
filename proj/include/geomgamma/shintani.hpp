#pragma once

#include <string>
#include <vector>

#include "geomgamma/bernoulli.hpp"
#include "geomgamma/numfield.hpp"

namespace gg {

// Arithmetic data of one partial zeta computation: the lattice L = f b^{-1}
// given by a totally positive basis, and a fundamental system of totally
// positive units congruent to 1 mod f. Unit and ideal bookkeeping is the
// caller's: only what the cone machinery needs is validated here.
struct RayClassInput {
  FieldPtr field;
  std::vector<NFElement> lattice_basis;  // n elements, Q-independent
  std::vector<NFElement> units;          // n-1 units
  std::string label_f, label_b;
  long max_sign_prec = 1L << 14;

  void validate() const;  // throws std::invalid_argument with hints
  int degree() const { return field->degree(); }
  // coordinates of x in the lattice basis
  RatVec lattice_coords(const NFElement& x) const;
  NFElement from_lattice_coords(const RatVec& c) const;
};

struct RhoBlock {
  std::vector<int> perm;         // permutation of the unit indices, 0-based
  int sign_perm = 1;
  bool in_s = false;             // f_{1..n} linearly independent
  std::vector<NFElement> f;      // f_{i,rho} = prod_{j<i} eps_{rho(j)}
  std::vector<int> mu;           // boundary signs, rho in S only
  RatMat b;                      // rows: dual forms b_{i,rho} in lattice coords
  std::vector<LinearForm> a;     // primitive integral a_{i,rho}
  std::vector<int> i_set, j_set; // indices with mu > 0 / mu < 0
  int w = 0;                     // w_rho
  int nu = 0;                    // nu_rho
};

struct SignedDomain {
  std::vector<RhoBlock> blocks;  // lexicographic permutation order, Id first
  int s0 = 1;                    // global sign fixed by the sampling witness
};

SignedDomain signed_domain(const RayClassInput& input);

// zeta(C, L, v, 0) for the full-dimensional cone C = c-dual(a_1..a_n),
// validated to lie in the totally positive orthant.
Rational zeta_cone_at_zero(const std::vector<LinearForm>& forms,
                           const RayClassInput& input, const RatPoint& v);

struct ZetaBlockReport {
  int nu = 0;
  NFElement trace_arg;  // E with R = trace(E)
  Rational r_value;
};

struct ZetaResult {
  Rational value;
  SignedDomain domain;
  std::vector<ZetaBlockReport> blocks;  // aligned with domain.blocks, rho in S
  RatPoint v;                           // reduced representative of 1_F
};

ZetaResult zeta_at_zero(const RayClassInput& input);

struct QuadShintaniResult {
  Rational value;
  LinearForm a_plus, a_minus;  // trace((eps - 1).) and trace((eps^{-1} - 1).)
  NFElement trace_arg;
};

// n = 2 pipeline through the Shintani domain c-dual(a_1)(1 - c-dual(a_-1)).
QuadShintaniResult quadratic_shintani(const RayClassInput& input);

// Checks sum_rho w_rho sum_u [u p in C_rho] = 1 on random totally positive
// points; flip_w negates every w_rho (mutation check hook).
bool verify_signed_domain_sampling(const RayClassInput& input, int trials,
                                   unsigned long seed, bool flip_w = false,
                                   std::string* fail_reason = nullptr);

}  // namespace gg
