#pragma once

#include <stdexcept>
#include <vector>

#include "geomgamma/bernoulli.hpp"
#include "geomgamma/bigfloat.hpp"
#include "geomgamma/exactcore.hpp"

namespace gg {

struct NearPoleError : std::runtime_error {
  NearPoleError() : std::runtime_error("near pole") {}
};
struct OutsideDomainError : std::runtime_error {
  explicit OutsideDomainError(const std::string& what) : std::runtime_error(what) {}
};
struct PrecisionError : std::runtime_error {
  explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

struct GrArgs {
  BigComplex z;
  std::vector<BigComplex> taus;  // r+1 parameters, all with Im != 0
  int r() const { return static_cast<int>(taus.size()) - 1; }
};

struct GrValue {
  BigComplex value;
  // set when a forward factor nearly vanished: the result is a certified
  // absolute-error value but the relative error claim no longer holds
  bool near_zero = false;
};

// Infinite-product route. Flips parameters into the upper half-plane via the
// inversion relation, reduces z, truncates with a certified tail bound.
GrValue gr_product(const GrArgs& args, long prec, long leaf_cap = 6'000'000);
// Exponential sine/cosine sum route; requires
// |Im(2z - sum tau_j)| < sum |Im tau_j|.
BigComplex gr_expsum(const GrArgs& args, long prec);
// Route dispatcher: product when affordable, otherwise the exponential sum.
BigComplex gr_value(const GrArgs& args, long prec);

GrValue theta_full(const BigComplex& z, const BigComplex& tau, long prec);
BigComplex theta(const BigComplex& z, const BigComplex& tau, long prec);
BigComplex elliptic_gamma(const BigComplex& z, const BigComplex& tau,
                          const BigComplex& sigma, long prec);

BigComplex P2(const BigComplex& z, const BigComplex& tau);
BigComplex P3(const BigComplex& z, const BigComplex& tau, const BigComplex& sigma);

struct GeomGammaSpec {
  std::vector<LinearForm> forms;  // r+1 forms on a lattice of rank r+2
  RatPoint v;
  BigComplex w;
  std::vector<BigComplex> x_basis;  // x(e_1) .. x(e_n)
  long prec = 128;
};

// G_{r,abar}(v)(w,x); the constant 1 for dependent families.
BigComplex geometric_G(const GeomGammaSpec& spec);

// | prod_j G_{n-2, omit j}^{(-1)^{j+1}} * exp(-2 pi i B_{n,abar}) - 1 |
BigFloat check_modular(const std::vector<LinearForm>& forms, const RatPoint& v,
                       const BigComplex& w, const std::vector<BigComplex>& x_basis,
                       long prec);

enum class DistKind { InZ, InTau, Geometric };

// Residual of the requested distribution relation. For InZ / InTau the plain
// GrArgs are used (tau_index selects the parameter for InTau); for Geometric
// the GeomGammaSpec is used.
BigFloat check_distribution_plain(DistKind kind, int n_div, const GrArgs& args,
                                  int tau_index, long prec);
BigFloat check_distribution_geometric(int n_div, const GeomGammaSpec& spec);

struct QuarticUnitResult {
  BigComplex value;
  BigFloat poly_residual;
  int matched_digits;
};
// The two introductory G_2 quotients over the quartic field, their product,
// and the residual of the degree-8 palindromic polynomial at that product.
QuarticUnitResult quartic_unit_example(long prec);

}  // namespace gg
