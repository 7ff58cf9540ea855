#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "geomgamma/gammaeval.hpp"
#include "geomgamma/verify.hpp"

using namespace gg;

namespace {

constexpr long kPrec = 128;
constexpr long kWp = kPrec + 64;

BigComplex cx(const Rational& re, const Rational& im, long wp = kWp) {
  return BigComplex(re, im, wp);
}

BigFloat tol(long bits, long wp = kWp) { return BigFloat::pow2(bits, wp); }

BigFloat rel_diff(const BigComplex& a, const BigComplex& b) {
  return abs(a - b) / abs(b);
}

LinearForm lf(std::initializer_list<long> v) {
  IntVec c;
  for (long x : v) c.emplace_back(x);
  return LinearForm(std::move(c));
}

}  // namespace

TEST_CASE("theta translation relations") {
  BigComplex z = cx(rat(1, 5), rat(1, 7));
  BigComplex tau = cx(rat(1, 3), rat(4, 5));
  BigComplex one(1, kWp);

  CHECK(rel_diff(theta(z + one, tau, kPrec), theta(z, tau, kPrec)) < tol(-kPrec + 10));
  CHECK(rel_diff(theta(z, tau + one, kPrec), theta(z, tau, kPrec)) < tol(-kPrec + 10));

  // theta(z + tau, tau) = -e^{-2 pi i z} theta(z, tau)
  BigFloat two_pi = BigFloat::pi(kWp) * 2;
  BigComplex factor = -exp(BigComplex(two_pi * z.imag(), -(two_pi * z.real())));
  CHECK(rel_diff(theta(z + tau, tau, kPrec), factor * theta(z, tau, kPrec)) <
        tol(-kPrec + 12));
}

TEST_CASE("theta modular relation via P2") {
  BigComplex z = cx(rat(2, 7), rat(1, 9));
  BigComplex tau = cx(rat(1, 4), rat(6, 5));
  BigFloat two_pi = BigFloat::pi(kWp) * 2;
  BigComplex arg = P2(z, tau) / tau;
  BigComplex factor = exp(BigComplex(-(two_pi * arg.imag()), two_pi * arg.real()));
  BigComplex lhs = theta(z / tau, -inverse(tau), kPrec);
  BigComplex rhs = theta(z, tau, kPrec) * factor;
  CHECK(rel_diff(lhs, rhs) < tol(-kPrec + 14));
}

TEST_CASE("P2 at z = 0") {
  BigComplex tau = cx(rat(3, 7), rat(5, 4));
  BigComplex expect = tau * BigComplex(rat(-1, 4), kWp) +
                      (tau * tau - BigComplex(1, kWp)) * BigComplex(rat(1, 12), kWp);
  CHECK(abs(P2(BigComplex(0, kWp), tau) - expect) < tol(-kPrec - 20));
}

TEST_CASE("elliptic gamma relations") {
  BigComplex z = cx(rat(1, 6), rat(1, 8));
  BigComplex tau = cx(rat(1, 5), rat(3, 4));
  BigComplex sigma = cx(rat(-1, 7), rat(5, 6));

  // symmetry
  CHECK(rel_diff(elliptic_gamma(z, tau, sigma, kPrec),
                 elliptic_gamma(z, sigma, tau, kPrec)) < tol(-kPrec + 10));
  // shift: Gamma(z + tau) = theta(z, sigma) Gamma(z)
  CHECK(rel_diff(elliptic_gamma(z + tau, tau, sigma, kPrec),
                 theta(z, sigma, kPrec) * elliptic_gamma(z, tau, sigma, kPrec)) <
        tol(-kPrec + 12));
  // reflection: Gamma(z + tau + sigma) * Gamma(-z) = 1
  BigComplex prod = elliptic_gamma(z + tau + sigma, tau, sigma, kPrec) *
                    elliptic_gamma(-z, tau, sigma, kPrec);
  CHECK(abs(prod - BigComplex(1, kWp)) < tol(-kPrec + 12));
}

TEST_CASE("G_0 and G_1 recover theta and Gamma") {
  BigComplex z = cx(rat(2, 9), rat(-1, 11));
  BigComplex tau = cx(rat(1, 3), rat(2, 3));
  BigComplex sigma = cx(rat(2, 5), rat(4, 7));
  CHECK(rel_diff(gr_product(GrArgs{z, {tau}}, kPrec).value, theta(z, tau, kPrec)) <
        tol(-kPrec + 8));
  CHECK(rel_diff(gr_product(GrArgs{z, {tau, sigma}}, kPrec).value,
                 elliptic_gamma(z, tau, sigma, kPrec)) < tol(-kPrec + 8));
}

TEST_CASE("product and exponential-sum routes agree") {
  std::mt19937_64 rng(404);
  std::uniform_int_distribution<long> num(-20, 20), den(7, 23), iden(2, 5);
  int done = 0;
  while (done < 100) {
    int r = done % 3;
    GrArgs args;
    args.z = cx(rat(num(rng), 4 * den(rng)), rat(num(rng), 8 * den(rng)));
    for (int j = 0; j <= r; ++j) {
      Rational im = 0;
      while (sgn(im) == 0) im = rat(num(rng), iden(rng) * 10);
      args.taus.push_back(cx(rat(num(rng), den(rng)), im));
    }
    try {
      BigComplex via_sum = gr_expsum(args, kPrec);
      BigComplex via_product = gr_product(args, kPrec).value;
      CHECK(rel_diff(via_product, via_sum) < tol(16 - kPrec));
      ++done;
    } catch (const OutsideDomainError&) {
      continue;
    } catch (const NearPoleError&) {
      continue;
    } catch (const PrecisionError&) {
      continue;
    }
  }
}

TEST_CASE("exponential sum r=0 agrees with theta") {
  BigComplex z = cx(rat(1, 9), rat(1, 50));
  BigComplex tau = cx(rat(2, 7), rat(1, 2));
  CHECK(rel_diff(gr_expsum(GrArgs{z, {tau}}, kPrec), theta(z, tau, kPrec)) <
        tol(16 - kPrec));
}

TEST_CASE("exponential sum rejects arguments outside its domain") {
  // |Im(2z - tau)| = 3 > |Im tau| = 1
  GrArgs args{cx(rat(0), rat(2)), {cx(rat(0), rat(1))}};
  CHECK_THROWS_AS(gr_expsum(args, kPrec), OutsideDomainError);
}

TEST_CASE("G_r inversion and reflection identities") {
  for (int r = 0; r <= 2; ++r) {
    GrArgs args;
    args.z = cx(rat(1, 8), rat(1, 10));
    for (int j = 0; j <= r; ++j)
      args.taus.push_back(cx(rat(2 * j - 1, 5 + j), rat(2 + j, 3 + j)));
    BigComplex g = gr_product(args, kPrec).value;

    // total inversion: G_r(-z, -tau) * G_r(z, tau) = 1
    GrArgs neg{-args.z, {}};
    for (const auto& t : args.taus) neg.taus.push_back(-t);
    BigComplex gi = gr_product(neg, kPrec).value;
    CHECK(abs(g * gi - BigComplex(1, kWp)) < tol(-kPrec + 16));

    // reflection: G_r(z + sum tau, tau) = G_r(-z, tau)^{(-1)^r}
    GrArgs shifted = args;
    for (const auto& t : args.taus) shifted.z = shifted.z + t;
    BigComplex lhs = gr_product(shifted, kPrec).value;
    GrArgs refl{-args.z, args.taus};
    BigComplex rhs = gr_product(refl, kPrec).value;
    if (r % 2 == 1) rhs = inverse(rhs);
    CHECK(rel_diff(lhs, rhs) < tol(-kPrec + 16));

    // shift by tau_j: G_r(z + tau_j) = G_{r-1}(omit j) G_r(z)
    if (r >= 1) {
      GrArgs sh = args;
      sh.z = sh.z + args.taus[r];
      GrArgs lower{args.z, {}};
      for (int j = 0; j < r; ++j) lower.taus.push_back(args.taus[j]);
      BigComplex expect = gr_product(lower, kPrec).value * g;
      CHECK(rel_diff(gr_product(sh, kPrec).value, expect) < tol(-kPrec + 16));
    }

    // 1-periodicity in z and in each tau_j
    GrArgs zper = args;
    zper.z = zper.z + BigComplex(1, kWp);
    CHECK(rel_diff(gr_product(zper, kPrec).value, g) < tol(-kPrec + 16));
    GrArgs tper = args;
    tper.taus[0] = tper.taus[0] + BigComplex(1, kWp);
    CHECK(rel_diff(gr_product(tper, kPrec).value, g) < tol(-kPrec + 16));
  }
}

TEST_CASE("near-pole guard raises for odd r") {
  // z on the pole lattice of G_1 (z = 0)
  GrArgs args{BigComplex(0, kWp), {cx(rat(1, 3), rat(1, 2)), cx(rat(1, 5), rat(2, 3))}};
  CHECK_THROWS_AS(gr_product(args, kPrec), NearPoleError);
}

TEST_CASE("theta near a zero flags absolute-error semantics") {
  GrValue v = theta_full(BigComplex(0, kWp), cx(rat(0), rat(1)), kPrec);
  CHECK(v.near_zero);
  CHECK(abs(v.value) < tol(-20));
}

TEST_CASE("doubling precision moves the value less than the error claim") {
  GrArgs args{cx(rat(3, 11), rat(1, 13)),
              {cx(rat(1, 3), rat(1, 2)), cx(rat(-2, 7), rat(3, 5)), cx(rat(1, 9), rat(2, 7))}};
  BigComplex lo = gr_product(args, 96).value;
  BigComplex hi = gr_product(args, 192).value;
  CHECK(rel_diff(lo, hi) < BigFloat::pow2(-88, 256));
}

TEST_CASE("geometric G: dependent family gives 1") {
  GeomGammaSpec spec;
  spec.forms = {lf({1, 0, 0}), lf({2, 0, 0})};
  spec.v = RatPoint({Rational(0), Rational(0), Rational(0)});
  spec.prec = kPrec;
  spec.w = cx(rat(1, 3), rat(0));
  spec.x_basis = {cx(rat(1, 2), rat(1, 3)), cx(rat(1, 5), rat(2, 3)), cx(rat(1, 7), rat(1, 2))};
  BigComplex g = geometric_G(spec);
  CHECK(abs(g - BigComplex(1, kWp)) < tol(-kPrec));
}

TEST_CASE("geometric G at a standard form matches a direct theta product") {
  // n = 2, a = f_1: G_{0,a}(v)(w,x) = theta((w + x(v))/x(e2), x(e1)/x(e2))
  GeomGammaSpec spec;
  spec.forms = {lf({1, 0})};
  spec.v = RatPoint({rat(1, 3), rat(1, 2)});
  spec.prec = kPrec;
  spec.w = cx(rat(1, 5), rat(1, 11));
  spec.x_basis = {cx(rat(1, 3), rat(3, 4)), cx(rat(-1, 6), rat(5, 7))};
  BigComplex got = geometric_G(spec);
  BigComplex xv = spec.x_basis[0] * BigComplex(rat(1, 3), kWp) +
                  spec.x_basis[1] * BigComplex(rat(1, 2), kWp);
  BigComplex expect =
      theta((spec.w + xv) / spec.x_basis[1], spec.x_basis[0] / spec.x_basis[1], kPrec);
  CHECK(rel_diff(got, expect) < tol(-kPrec + 16));
}

TEST_CASE("geometric G equivariance under SL_n(Z)") {
  std::mt19937_64 rng(777);
  int done = 0;
  while (done < 6) {
    UnimodularMatrix g = random_sl_matrix(3, 4, rng);
    GeomGammaSpec spec;
    spec.forms = {lf({1, 0, 0}), lf({1, 2, -1})};
    if (rank_forms(spec.forms) != 2) continue;
    spec.v = RatPoint({rat(1, 2), rat(1, 3), rat(2, 5)});
    spec.prec = kPrec;
    spec.w = cx(rat(1, 7), rat(1, 13));
    spec.x_basis = {cx(rat(1, 3), rat(2, 3)), cx(rat(-1, 4), rat(3, 5)),
                    cx(rat(1, 6), rat(-4, 7))};
    GeomGammaSpec moved = spec;
    moved.forms.clear();
    for (const auto& a : spec.forms) moved.forms.push_back(g.act(a));
    moved.v = g.act(spec.v);
    moved.x_basis = g.act_functional(spec.x_basis);
    try {
      BigComplex lhs = geometric_G(moved);
      BigComplex rhs = geometric_G(spec);
      CHECK(rel_diff(lhs, rhs) < tol(-kPrec + 20));
      ++done;
    } catch (const std::exception&) {
      continue;
    }
  }
}

TEST_CASE("modular identity residuals at small rank") {
  SuiteResult r2 = verify_modular(2, 4, kPrec, 91);
  CHECK(r2.ok());
  SuiteResult r3 = verify_modular(3, 3, kPrec, 92);
  CHECK(r3.ok());
}

TEST_CASE("Felder-Varchenko three-Gamma identity") {
  SuiteResult res = verify_felder_varchenko(160, 93);
  CHECK(res.ok());
}

TEST_CASE("distribution relations at reduced precision") {
  SuiteResult res = verify_distribution(96, 95);
  CHECK(res.ok());
}
