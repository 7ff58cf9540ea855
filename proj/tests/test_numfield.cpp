#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "geomgamma/numfield.hpp"

using namespace gg;

namespace {

FieldPtr sqrt19() { return NumberField::create({-19, 0, 1}); }
FieldPtr cubic1() { return NumberField::create({-1, -4, -1, 1}); }   // x^3-x^2-4x-1
FieldPtr cubic2() { return NumberField::create({3, -6, -1, 1}); }    // x^3-x^2-6x+3
FieldPtr quartic() { return NumberField::create({1, -3, -1, -6, 1}); }

NFElement el(const FieldPtr& K, std::initializer_list<long> coeffs) {
  RatVec c;
  for (long x : coeffs) c.push_back(Rational(x));
  return NFElement(K, std::move(c));
}

}  // namespace

TEST_CASE("field creation rejects bad minimal polynomials") {
  CHECK_THROWS_AS(NumberField::create({1, 2, 1}), std::invalid_argument);   // (x+1)^2
  CHECK_THROWS_AS(NumberField::create({-4, 0, 1}), std::invalid_argument);  // (x-2)(x+2)
  CHECK_THROWS_AS(NumberField::create({2, 3}), std::invalid_argument);     // degree 1
  CHECK_THROWS_AS(NumberField::create({-19, 0, 2}), std::invalid_argument);  // not monic
  CHECK_THROWS_AS(NumberField::create({1, 0, 2, 0, 1}), std::invalid_argument);  // (x^2+1)^2
}

TEST_CASE("arithmetic in Q(sqrt(19))") {
  FieldPtr K = sqrt19();
  NFElement z = nf_generator(K);
  CHECK((z * z).rational_value() == 19);
  NFElement eps = el(K, {170, 39});
  NFElement inv = eps.inverse();
  CHECK((eps * inv).rational_value() == 1);
  CHECK(inv == el(K, {170, -39}));  // norm-1 unit: inverse is the conjugate
}

TEST_CASE("inverse on random nonzero elements") {
  FieldPtr K = cubic1();
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-9, 9);
  for (int t = 0; t < 30; ++t) {
    RatVec c{rat(d(rng), 1 + std::abs(d(rng))), rat(d(rng), 2), rat(d(rng), 3)};
    NFElement x(K, c);
    if (x.is_zero()) continue;
    CHECK((x * x.inverse()).rational_value() == 1);
  }
  CHECK_THROWS_AS(nf_from_rational(K, 0).inverse(), std::runtime_error);
}

TEST_CASE("(1-z) inverse in the second cubic field") {
  FieldPtr K = cubic2();
  NFElement one_minus_z = el(K, {1, -1, 0});
  CHECK((one_minus_z * one_minus_z.inverse()).rational_value() == 1);
}

TEST_CASE("trace values") {
  CHECK(trace(nf_from_rational(sqrt19(), 1)) == 2);
  CHECK(trace(nf_from_rational(cubic1(), 1)) == 3);
  // paper quadratic example: trace(33/104) = 33/52
  CHECK(trace(nf_from_rational(sqrt19(), rat(33, 104))) == rat(33, 52));
  // paper cubic example: trace((3z^2 - 7)/6) = 3 in x^3 - x^2 - 6x + 3
  FieldPtr K = cubic2();
  NFElement x(K, {rat(-7, 6), Rational(0), rat(3, 6)});
  CHECK(trace(x) == 3);
  // trace of z equals minus the x^{n-1} coefficient of the minimal polynomial
  CHECK(trace(nf_generator(cubic1())) == 1);
  CHECK(trace(nf_generator(cubic2())) == 1);
  CHECK(trace(nf_generator(quartic())) == 6);
}

TEST_CASE("trace is Q-linear and matches embedding sums") {
  FieldPtr K = cubic1();
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> d(-7, 7);
  auto sigmas = real_embeddings(K);
  REQUIRE(sigmas.size() == 3);
  for (int t = 0; t < 10; ++t) {
    NFElement x(K, {rat(d(rng), 2), rat(d(rng), 3), rat(d(rng), 5)});
    NFElement y(K, {rat(d(rng), 2), rat(d(rng), 3), rat(d(rng), 5)});
    CHECK(trace(x + y) == trace(x) + trace(y));
    CHECK(trace(x * rat(3, 7)) == trace(x) * rat(3, 7));
    // numeric cross-check at 128 bits
    const long prec = 128;
    BigFloat acc(0L, prec + 32);
    for (auto& s : sigmas) acc = acc + embed(x, s, prec).real();
    BigFloat diff = abs(acc - BigFloat(trace(x), prec + 32));
    CHECK(diff < BigFloat::pow2(-(prec - 8), prec + 32));
  }
}

TEST_CASE("real embeddings: counts and ordering") {
  CHECK(real_embeddings(sqrt19()).size() == 2);
  CHECK(real_embeddings(cubic1()).size() == 3);
  CHECK(real_embeddings(cubic2()).size() == 3);
  CHECK(real_embeddings(quartic()).size() == 2);

  auto sig = real_embeddings(sqrt19());
  RatInterval lo = sig[0].root_interval(40);
  RatInterval hi = sig[1].root_interval(40);
  CHECK(sgn(lo.hi) < 0);
  CHECK(sgn(hi.lo) > 0);
  // sqrt(19) = 4.35889894...
  BigComplex v = embed(nf_generator(sqrt19()), sig[1], 64);
  CHECK(abs(v.real() - BigFloat(4.35889894354, 96)) < BigFloat(1e-9, 96));
}

TEST_CASE("embedding handles refine monotonically") {
  auto sig = real_embeddings(cubic1());
  RatInterval coarse = sig[0].root_interval(10);
  RatInterval fine = sig[0].root_interval(80);
  CHECK(fine.lo >= coarse.lo);
  CHECK(fine.hi <= coarse.hi);
  CHECK(fine.width() <= rat_pow2(-80));
}

TEST_CASE("sign_under_embedding") {
  FieldPtr K = sqrt19();
  auto sig = real_embeddings(K);
  NFElement z = nf_generator(K);
  CHECK(sign_under_embedding(z, sig[0]) == -1);
  CHECK(sign_under_embedding(z, sig[1]) == 1);
  CHECK(sign_under_embedding(nf_from_rational(K, 0), sig[0]) == 0);
  NFElement eps = el(K, {170, 39});
  CHECK(sign_under_embedding(eps, sig[0]) == 1);
  CHECK(sign_under_embedding(eps, sig[1]) == 1);
  CHECK(is_totally_positive(eps));
  CHECK_FALSE(is_totally_positive(z));
  CHECK(is_totally_positive(nf_from_rational(K, 1)));
}

TEST_CASE("totally positive fundamental unit of the second cubic") {
  FieldPtr K = cubic2();
  CHECK(is_totally_positive(el(K, {22, 3, -3})));   // -3z^2 + 3z + 22
  CHECK(is_totally_positive(el(K, {28, 1, -4})));   // -4z^2 + z + 28
}

TEST_CASE("signs survive multiplication by totally positive elements") {
  FieldPtr K = cubic1();
  auto sigmas = real_embeddings(K);
  NFElement u = el(K, {6, 25, 15});  // totally positive unit
  REQUIRE(is_totally_positive(u));
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<long> d(-9, 9);
  for (int t = 0; t < 20; ++t) {
    NFElement x(K, {rat(d(rng), 2), rat(d(rng), 3), rat(d(rng), 2)});
    if (x.is_zero()) continue;
    for (auto& s : sigmas) {
      int sx = sign_under_embedding(x, s);
      CHECK(sx != 0);
      CHECK(sign_under_embedding(x * u, s) == sx);
    }
  }
}

TEST_CASE("complex embeddings of the quartic field") {
  FieldPtr K = quartic();
  auto cplx = complex_embeddings(K);
  REQUIRE(cplx.size() == 2);
  BigComplex up = cplx[0].root_approx(128);
  CHECK(up.imag().sign() > 0);
  CHECK(cplx[1].root_approx(128).imag().sign() < 0);
  // residual check: |m(root)| tiny
  NFElement z = nf_generator(K);
  BigComplex zv = embed(z, cplx[0], 160);
  BigComplex acc(1, 192);
  const long mp[5] = {1, -3, -1, -6, 1};
  BigComplex pv(0, 192);
  for (int i = 4; i >= 0; --i) pv = pv * zv + BigComplex(mp[i], 192);
  (void)acc;
  CHECK(abs(pv) < BigFloat::pow2(-120, 192));
}

TEST_CASE("embed accuracy scales with requested precision") {
  FieldPtr K = cubic2();
  auto sig = real_embeddings(K);
  NFElement x = el(K, {22, 3, -3});
  BigComplex lo = embed(x, sig[2], 64);
  BigComplex hi = embed(x, sig[2], 256);
  CHECK(abs(lo - hi) < BigFloat::pow2(-60, 256) * (BigFloat(1L, 256) + abs(hi)));
}
