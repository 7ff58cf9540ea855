#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "geomgamma/bernoulli.hpp"
#include "geomgamma/verify.hpp"

using namespace gg;

namespace {

LinearForm lf(std::initializer_list<long> v) {
  IntVec c;
  for (long x : v) c.emplace_back(x);
  return LinearForm(std::move(c));
}

// independent route: series division of t by (e^t - 1), coefficients * k!
Rational bernoulli_by_series(unsigned k) {
  // e^t - 1 = sum_{j>=1} t^j / j!; divide t by it as truncated power series
  size_t ord = k + 2;
  RatVec den(ord, Rational(0));
  Rational fact = 1;
  for (size_t j = 1; j < ord; ++j) {
    fact *= static_cast<long>(j);
    den[j] = 1 / fact;
  }
  // quotient q with den * q = num, num = t
  RatVec num(ord, Rational(0));
  num[1] = 1;
  RatVec q(ord, Rational(0));
  // den starts at t^1 with coefficient 1: shift-divide
  for (size_t j = 0; j + 1 < ord; ++j) {
    Rational c = num[j + 1];
    for (size_t i = 0; i < j; ++i) c -= den[j + 1 - i] * q[i];
    q[j] = c;  // den[1] = 1
  }
  Rational f = 1;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return q[k] * f;
}

std::vector<LinearForm> standard_forms(size_t n) {
  std::vector<LinearForm> forms;
  for (size_t j = 0; j < n; ++j) {
    IntVec c(n, Int(0));
    c[j] = 1;
    forms.emplace_back(std::move(c));
  }
  return forms;
}

ValueAssignment<Rational> fixed_assignment(size_t n) {
  ValueAssignment<Rational> a;
  a.w = rat(1, 7);
  const long nums[] = {3, 5, 7, 11, 13, 17};
  const long dens[] = {2, 3, 5, 7, 11, 13};
  for (size_t i = 0; i < n; ++i) a.x_basis.push_back(rat(nums[i], dens[i]));
  return a;
}

}  // namespace

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli_number(0) == 1);
  CHECK(bernoulli_number(1) == rat(-1, 2));
  CHECK(bernoulli_number(2) == rat(1, 6));
  CHECK(bernoulli_number(3) == 0);
  CHECK(bernoulli_number(12) == rat(-691, 2730));
  for (unsigned k = 0; k <= 16; ++k)
    CHECK(bernoulli_number(k) == bernoulli_by_series(k));
}

TEST_CASE("multiple Bernoulli polynomial B*_{2,2}") {
  // B*_{2,2}(z, w1, w2) = z^2 - z(w1+w2) + (w1^2 + w2^2 + 3 w1 w2)/6
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-9, 9);
  for (int t = 0; t < 30; ++t) {
    Rational z = rat(d(rng), 2), w1 = 0, w2 = 0;
    while (sgn(w1) == 0) w1 = rat(d(rng), 3);
    while (sgn(w2) == 0) w2 = rat(d(rng), 5);
    Rational got = multiple_bernoulli_star<Rational>(2, 2, z, {w1, w2});
    Rational want = z * z - z * (w1 + w2) +
                    (w1 * w1 + w2 * w2 + 3 * w1 * w2) / 6;
    CHECK(got == want);
  }
}

TEST_CASE("B*_{n,0} = 1 and zero omega rejected") {
  Rational z = rat(5, 3);
  CHECK(multiple_bernoulli_star<Rational>(3, 0, z, {rat(1), rat(2), rat(3)}) == 1);
  CHECK_THROWS_AS(
      multiple_bernoulli_star<Rational>(2, 2, z, {rat(0), rat(1)}),
      std::invalid_argument);
}

TEST_CASE("B*_{n,m} homogeneity against the generating-function oracle") {
  // scale invariance B*(l z, l omega) = l^m B*(z, omega), checked against an
  // independent truncated-series expansion of e^{zt} prod omega t/(e^{omega t}-1)
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-6, 6);
  auto series_value = [](int n, int m, const Rational& z, const RatVec& omega) {
    size_t ord = m + 1;
    // factor series: omega t / (e^{omega t} - 1) = 1 / sum_k omega^k t^k/(k+1)!
    RatVec acc(ord, Rational(0));
    acc[0] = 1;
    auto mul = [&](const RatVec& a, const RatVec& b) {
      RatVec out(ord, Rational(0));
      for (size_t i = 0; i < ord; ++i)
        for (size_t j = 0; i + j < ord; ++j) out[i + j] += a[i] * b[j];
      return out;
    };
    for (int f = 0; f < n; ++f) {
      RatVec g(ord, Rational(0));
      Rational fact = 1, pw = 1;
      for (size_t k = 0; k < ord; ++k) {
        if (k > 0) {
          fact *= static_cast<long>(k + 1);
          pw *= omega[f];
        } else {
          fact = 1;
          pw = 1;
        }
        g[k] = pw / ((k == 0) ? Rational(1) : fact);
      }
      // recompute cleanly: g[k] = omega^k/(k+1)!
      Rational fct = 1;
      Rational p = 1;
      for (size_t k = 0; k < ord; ++k) {
        if (k > 0) {
          fct *= static_cast<long>(k + 1);
          p *= omega[f];
          g[k] = p / fct;
        } else {
          g[0] = 1;
        }
      }
      // invert g
      RatVec inv(ord, Rational(0));
      inv[0] = 1;
      for (size_t k = 1; k < ord; ++k) {
        Rational s = 0;
        for (size_t i = 1; i <= k; ++i) s += g[i] * inv[k - i];
        inv[k] = -s;
      }
      acc = mul(acc, inv);
    }
    RatVec ez(ord, Rational(0));
    Rational fct = 1, pw = 1;
    ez[0] = 1;
    for (size_t k = 1; k < ord; ++k) {
      fct *= static_cast<long>(k);
      pw *= z;
      ez[k] = pw / fct;
    }
    acc = mul(acc, ez);
    Rational mfact = 1;
    for (int i = 2; i <= m; ++i) mfact *= i;
    return acc[m] * mfact;
  };
  for (int t = 0; t < 20; ++t) {
    int n = 2 + t % 3;
    Rational z = rat(d(rng), 3);
    RatVec omega;
    for (int i = 0; i < n; ++i) {
      Rational w = 0;
      while (sgn(w) == 0) w = rat(d(rng), 2);
      omega.push_back(w);
    }
    Rational direct = multiple_bernoulli_star<Rational>(n, n, z, omega);
    Rational via_series = series_value(n, n, z, omega);
    CHECK(direct == via_series);
    Rational lam = rat(3, 4);
    RatVec scaled;
    for (const auto& w : omega) scaled.push_back(Rational(w * lam));
    Rational pow_lam = 1;
    for (int i = 0; i < n; ++i) pow_lam *= lam;
    Rational z_scaled = z * lam;
    Rational rescaled = multiple_bernoulli_star<Rational>(n, n, z_scaled, scaled);
    Rational expected = direct * pow_lam;
    CHECK(rescaled == expected);
  }
}

TEST_CASE("enum_parallelepiped standard and shifted lattices") {
  // standard dual basis, v = 0: the single point 0
  ParallelepipedSet f = enum_parallelepiped(standard_forms(2),
                                            RatPoint({Rational(0), Rational(0)}));
  CHECK(f.index == 1);
  REQUIRE(f.points.size() == 1);
  CHECK(f.points[0].c == RatVec{0, 0});

  // alpha-lattice (2e1, e2) arises from forms (f1, 2 f2)? use forms whose dual
  // family spans index 2: a1 = (1,0), a2 = (0,1) scaled lattice via a1' = (1,0),
  // a2' = (-1,2): alphas (2,1),(0,1) have det 2
  std::vector<LinearForm> forms{lf({1, 0}), lf({-1, 2})};
  ParallelepipedSet g = enum_parallelepiped(forms, RatPoint({Rational(0), Rational(0)}));
  CHECK(g.index == 2);
  CHECK(g.points.size() == 2);
  for (const auto& p : g.points) {
    for (size_t j = 0; j < 2; ++j) {
      Rational v = pair(forms[j], p);
      CHECK(sgn(v) >= 0);
    }
  }
}

TEST_CASE("parallelepiped counts match brute force") {
  SuiteResult res = verify_parallelepiped_counts(50, 2024, 20);
  CHECK(res.ok());
}

TEST_CASE("parallelepiped count is independent of v") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long> d(-4, 4);
  int done = 0;
  while (done < 20) {
    std::vector<LinearForm> forms;
    for (int j = 0; j < 2; ++j) {
      IntVec c{Int(d(rng)), Int(d(rng))};
      if (vec_gcd(c) == 0) break;
      forms.emplace_back(std::move(c));
    }
    if (forms.size() != 2 || signdet_forms(forms) == 0) continue;
    if (parallelepiped_index(forms) > 30) continue;
    RatPoint v1({rat(d(rng), 3), rat(d(rng), 5)});
    RatPoint v2({rat(d(rng), 7), rat(d(rng), 2)});
    CHECK(enum_parallelepiped(forms, v1).points.size() ==
          enum_parallelepiped(forms, v2).points.size());
    ++done;
  }
}

TEST_CASE("geometric Bernoulli: conventions and the standard example") {
  const size_t n = 3;
  auto assign = fixed_assignment(n);
  // dependent family: zero by convention
  Rational dep = geometric_bernoulli<Rational>(
      {lf({1, 0, 0}), lf({2, 0, 0}), lf({0, 1, 0})},
      RatPoint({Rational(0), Rational(0), Rational(0)}), assign);
  CHECK(sgn(dep) == 0);

  // standard dual basis at v = 0: (-1)^n/n! B*_{n,n}(w, tau) / prod tau
  Rational got = geometric_bernoulli<Rational>(
      standard_forms(n), RatPoint({Rational(0), Rational(0), Rational(0)}), assign);
  Rational bstar = multiple_bernoulli_star<Rational>(3, 3, assign.w, assign.x_basis);
  Rational want = -bstar / 6;  // (-1)^3/3!
  for (const auto& x : assign.x_basis) want /= x;
  CHECK(got == want);
}

TEST_CASE("geometric Bernoulli: permutation antisymmetry") {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<long> d(-4, 4);
  int done = 0;
  while (done < 15) {
    std::vector<LinearForm> forms;
    for (int j = 0; j < 3; ++j) {
      IntVec c{Int(d(rng)), Int(d(rng)), Int(d(rng))};
      if (vec_gcd(c) == 0) break;
      auto [g, prim] = primitive_part(c);
      forms.emplace_back(std::move(prim));
    }
    if (forms.size() != 3 || signdet_forms(forms) == 0) continue;
    if (parallelepiped_index(forms) > 400) continue;
    auto assign = fixed_assignment(3);
    RatPoint v({rat(d(rng), 3), rat(d(rng), 2), rat(d(rng), 5)});
    try {
      Rational base = geometric_bernoulli<Rational>(forms, v, assign);
      std::vector<LinearForm> swapped{forms[1], forms[0], forms[2]};
      CHECK(geometric_bernoulli<Rational>(swapped, v, assign) == -base);
      std::vector<LinearForm> cycled{forms[1], forms[2], forms[0]};
      CHECK(geometric_bernoulli<Rational>(cycled, v, assign) == base);
    } catch (const std::runtime_error&) {
      continue;
    }
    ++done;
  }
}

TEST_CASE("geometric Bernoulli: degree-zero homogeneity in (w, x)") {
  auto forms = standard_forms(2);
  std::vector<LinearForm> family{lf({2, 1}), lf({-1, 3})};
  auto assign = fixed_assignment(2);
  RatPoint v({rat(1, 2), rat(1, 3)});
  Rational base = geometric_bernoulli<Rational>(family, v, assign);
  Rational lam = rat(5, 9);
  ValueAssignment<Rational> scaled{
      {assign.x_basis[0] * lam, assign.x_basis[1] * lam}, assign.w * lam};
  CHECK(geometric_bernoulli<Rational>(family, v, scaled) == base);
}

TEST_CASE("geometric Bernoulli: SL_n equivariance") {
  std::mt19937_64 rng(67);
  std::uniform_int_distribution<long> d(-3, 3);
  int done = 0;
  while (done < 12) {
    UnimodularMatrix g = random_sl_matrix(3, 5, rng);
    std::vector<LinearForm> forms;
    for (int j = 0; j < 3; ++j) {
      IntVec c{Int(d(rng)), Int(d(rng)), Int(d(rng))};
      if (vec_gcd(c) == 0) break;
      auto [s, prim] = primitive_part(c);
      forms.emplace_back(std::move(prim));
    }
    if (forms.size() != 3 || signdet_forms(forms) == 0) continue;
    if (parallelepiped_index(forms) > 200) continue;
    auto assign = fixed_assignment(3);
    RatPoint v({rat(d(rng), 2), rat(d(rng), 3), rat(d(rng), 4)});
    std::vector<LinearForm> gforms;
    for (const auto& a : forms) gforms.push_back(g.act(a));
    ValueAssignment<Rational> gassign{g.act_functional(assign.x_basis), assign.w};
    try {
      Rational lhs = geometric_bernoulli<Rational>(gforms, g.act(v), gassign);
      Rational rhs = geometric_bernoulli<Rational>(forms, v, assign);
      CHECK(lhs == rhs);
    } catch (const std::runtime_error&) {
      continue;  // pole locus for one of the two assignments
    }
    ++done;
  }
}

TEST_CASE("pole locus raises") {
  auto forms = standard_forms(2);
  ValueAssignment<Rational> assign{{Rational(0), Rational(1)}, rat(1, 3)};
  CHECK_THROWS_WITH_AS(
      geometric_bernoulli<Rational>(forms, RatPoint({Rational(0), Rational(0)}), assign),
      "assignment on pole locus", std::runtime_error);
}

TEST_CASE("h0 equals the series oracle") {
  SuiteResult res = verify_oracle({2, 3, 4}, 25, 555);
  CHECK(res.ok());
}

TEST_CASE("h0 of the standard orthant matches the oracle with w-dependence") {
  auto forms = standard_forms(2);
  auto assign = fixed_assignment(2);
  RatPoint v({Rational(0), Rational(0)});
  // both routes are degree-n polynomials in w: compare at n+2 points
  for (long wnum = 0; wnum <= 4; ++wnum) {
    ValueAssignment<Rational> a = assign;
    a.w = rat(wnum, 3);
    CHECK(h0_dual_cone(forms, v, a) == h0_series_oracle(forms, v, a));
  }
}

TEST_CASE("h0 linearity over cone expression combinations") {
  auto assign = fixed_assignment(2);
  RatPoint v({rat(1, 2), Rational(0)});
  std::vector<LinearForm> f1{lf({1, 0}), lf({0, 1})};
  std::vector<LinearForm> f2{lf({1, 1}), lf({-1, 2})};
  ConeExpr combo;
  combo.terms.push_back({rat(2, 3), {{f1[0], false, false}, {f1[1], false, false}}});
  combo.terms.push_back({rat(-5, 7), {{f2[0], false, false}, {f2[1], false, false}}});
  Rational direct = h0_dual_cone(f1, v, assign) * rat(2, 3) +
                    h0_dual_cone(f2, v, assign) * rat(-5, 7);
  CHECK(h0_cone_expr(combo, v, assign) == direct);
}

TEST_CASE("cocycle combination evaluates through h0 to the Dirac value") {
  // Theorem 2(i) family: all-positive relation
  std::vector<LinearForm> fam{lf({1, 0}), lf({0, 1}), lf({-1, -1})};
  auto assign = fixed_assignment(2);
  ConeExpr combo = cocycle_combo(fam);
  auto e = eps_signs(fam);
  RatPoint v0({Rational(0), Rational(0)});
  CHECK(h0_cone_expr(combo, v0, assign) == Rational(e[0]));
  RatPoint v3({rat(1, 3), rat(1, 3)});
  CHECK(sgn(h0_cone_expr(combo, v3, assign)) == 0);
}

TEST_CASE("Prop 3.5: mixed-sign relation families sum to zero") {
  // (f1, f2, f1 - f2): relation with one negative coefficient
  std::vector<LinearForm> fam{lf({1, 0}), lf({0, 1}), lf({1, -1})};
  auto assign = fixed_assignment(2);
  for (auto v : {RatPoint({Rational(0), Rational(0)}),
                 RatPoint({rat(1, 3), rat(2, 5)})}) {
    CHECK(sgn(cocycle_sum(fam, v, assign)) == 0);
  }
}

TEST_CASE("Prop 3.5 second bullet at n = 2 and 3") {
  SuiteResult res = verify_prop35_bullet(3);
  CHECK(res.ok());
}

TEST_CASE("rank-deficient cocycle families vanish") {
  std::vector<LinearForm> fam{lf({1, 0}), lf({2, 0}), lf({3, 0})};
  auto assign = fixed_assignment(2);
  CHECK(sgn(cocycle_sum(fam, RatPoint({rat(1, 2), Rational(0)}), assign)) == 0);
}
