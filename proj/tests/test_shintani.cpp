#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "geomgamma/config.hpp"
#include "geomgamma/verify.hpp"

using namespace gg;

namespace {

RayClassInput load(const std::string& name) {
  return JobConfig::from_file(std::string(GEOMGAMMA_CONFIG_DIR) + "/" + name).input;
}

NFElement el(const FieldPtr& K, std::initializer_list<long> coeffs) {
  RatVec c;
  for (long x : coeffs) c.push_back(Rational(x));
  return NFElement(K, std::move(c));
}

}  // namespace

TEST_CASE("input validation catches broken data") {
  RayClassInput quad = load("quad_sqrt19_f13.json");
  CHECK_NOTHROW(quad.validate());

  RayClassInput bad = quad;
  bad.lattice_basis[1] = -bad.lattice_basis[1];  // not totally positive
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  RayClassInput bad2 = quad;
  bad2.units[0] = nf_generator(quad.field);  // not a totally positive unit
  CHECK_THROWS_AS(bad2.validate(), std::invalid_argument);

  RayClassInput bad3 = quad;
  bad3.units[0] = el(quad.field, {1, 13});  // stabilization fails
  CHECK_THROWS_AS(bad3.validate(), std::invalid_argument);
}

TEST_CASE("quadratic signed domain and zeta value") {
  RayClassInput quad = load("quad_sqrt19_f13.json");
  ZetaResult res = zeta_at_zero(quad);
  CHECK(res.value == rat(33, 52));
  REQUIRE(res.domain.blocks.size() == 1);
  CHECK(res.domain.blocks[0].in_s);
  CHECK(res.domain.blocks[0].w == 1);
}

TEST_CASE("quadratic Shintani pipeline agrees") {
  RayClassInput quad = load("quad_sqrt19_f13.json");
  QuadShintaniResult res = quadratic_shintani(quad);
  CHECK(res.value == rat(33, 52));
  // the primitive trace forms of the paper, with the 338 factored out
  CHECK(res.a_plus.c == IntVec{Int(13), Int(122)});
  CHECK(res.a_minus.c == IntVec{Int(13), Int(8)});
  CHECK(res.value == zeta_at_zero(quad).value);
  CHECK(trace(res.trace_arg) == res.value);
}

TEST_CASE("quadratic_shintani rejects non-quadratic input") {
  RayClassInput cubic = load("cubic1_f5.json");
  CHECK_THROWS_AS(quadratic_shintani(cubic), std::invalid_argument);
}

TEST_CASE("first cubic field: signed domain table") {
  RayClassInput input = load("cubic1_f5.json");
  SignedDomain dom = signed_domain(input);
  REQUIRE(dom.blocks.size() == 2);
  const RhoBlock& id = dom.blocks[0];
  const RhoBlock& tr = dom.blocks[1];
  REQUIRE(id.perm == std::vector<int>{0, 1});
  REQUIRE(tr.perm == std::vector<int>{1, 0});
  CHECK(id.in_s);
  CHECK(tr.in_s);
  CHECK(id.mu == std::vector<int>{-1, 1, -1});
  CHECK(tr.mu == std::vector<int>{1, -1, 1});
  CHECK(id.w == 1);
  CHECK(tr.w == 1);
  CHECK(id.nu == -1);
  CHECK(tr.nu == 1);
  CHECK(id.j_set == std::vector<int>{0, 2});
  CHECK(tr.j_set == std::vector<int>{1});
}

TEST_CASE("first cubic field: a-forms match the printed table up to scale") {
  RayClassInput input = load("cubic1_f5.json");
  SignedDomain dom = signed_domain(input);
  const RhoBlock& id = dom.blocks[0];
  // a_{1,Id} = 7 mu_1 b_1 with b_1 = (1/7)[35, 22, 114]
  CHECK(id.a[0].c == IntVec{Int(-35), Int(-22), Int(-114)});
  CHECK(id.a[1].c == IntVec{Int(0), Int(-10), Int(29)});
  CHECK(id.a[2].c == IntVec{Int(0), Int(-3), Int(8)});
}

TEST_CASE("first cubic field: zeta and the trace arguments") {
  RayClassInput input = load("cubic1_f5.json");
  ZetaResult res = zeta_at_zero(input);
  CHECK(res.value == rat(1, 5));
  REQUIRE(res.blocks.size() == 2);
  CHECK(res.blocks[0].r_value == rat(4489, 60));
  CHECK(res.blocks[1].r_value == rat(-4453, 60));
  // trace arguments (1975 z^2 - 4525 z - 1424)/120 and its partner
  NFElement want1(input.field, {rat(-1424, 120), rat(-4525, 120), rat(1975, 120)});
  NFElement want2(input.field, {rat(1448, 120), rat(4525, 120), rat(-1975, 120)});
  CHECK(res.blocks[0].trace_arg == want1);
  CHECK(res.blocks[1].trace_arg == want2);
}

TEST_CASE("second cubic field: signs and zeta") {
  RayClassInput input = load("cubic2_f1mz.json");
  ZetaResult res = zeta_at_zero(input);
  CHECK(res.value == rat(2, 3));
  REQUIRE(res.domain.blocks.size() == 2);
  CHECK(res.domain.blocks[0].nu == 1);
  CHECK(res.domain.blocks[1].nu == -1);
  CHECK(res.blocks[0].r_value == 3);
  CHECK(res.blocks[1].r_value == -1);
  // trace arguments (3z^2 - 7)/6 and (-3z^2 + 11)/6
  NFElement want1(input.field, {rat(-7, 6), Rational(0), rat(3, 6)});
  NFElement want2(input.field, {rat(11, 6), Rational(0), rat(-3, 6)});
  CHECK(res.blocks[0].trace_arg == want1);
  CHECK(res.blocks[1].trace_arg == want2);
}

TEST_CASE("zeta_cone_at_zero validates the cone and the twist") {
  RayClassInput quad = load("quad_sqrt19_f13.json");
  QuadShintaniResult q = quadratic_shintani(quad);
  RatPoint v = RatPoint({rat(1, 13), Rational(0)});
  // contributes trace(33/104): the full domain reduction equals -value
  Rational z = zeta_cone_at_zero({q.a_plus, q.a_minus}, quad, v);
  CHECK(z == -rat(33, 52));

  // a cone leaving the positive orthant is rejected
  CHECK_THROWS_WITH_AS(
      zeta_cone_at_zero({LinearForm({Int(1), Int(0)}), LinearForm({Int(0), Int(1)})},
                        quad, v),
      "cone leaves the totally positive orthant", std::invalid_argument);
  // v = 0 unsupported
  CHECK_THROWS_AS(
      zeta_cone_at_zero({q.a_plus, q.a_minus}, quad,
                        RatPoint({Rational(0), Rational(0)})),
      std::invalid_argument);
}

TEST_CASE("zeta invariant under unimodular change of lattice basis") {
  RayClassInput input = load("cubic1_f5.json");
  Rational base = zeta_at_zero(input).value;
  // replace e2 by e2 + 2 e1 and e3 by e3 - e1: same lattice
  RayClassInput moved = input;
  moved.lattice_basis[1] =
      input.lattice_basis[1] + input.lattice_basis[0] * Rational(2);
  moved.lattice_basis[2] =
      input.lattice_basis[2] + input.lattice_basis[0] * Rational(3);
  CHECK(is_totally_positive(moved.lattice_basis[1]));
  CHECK(is_totally_positive(moved.lattice_basis[2]));
  CHECK(zeta_at_zero(moved).value == base);
}

TEST_CASE("zeta invariant under change of fundamental system") {
  for (const char* name : {"cubic1_f5.json", "cubic2_f1mz.json"}) {
    RayClassInput input = load(name);
    Rational base = zeta_at_zero(input).value;
    RayClassInput moved = input;
    moved.units[0] = input.units[0] * input.units[1];  // (e1 e2, e2)
    CHECK(zeta_at_zero(moved).value == base);
  }
}

TEST_CASE("sampling identity and mutation detection") {
  for (const char* name :
       {"quad_sqrt19_f13.json", "cubic1_f5.json", "cubic2_f1mz.json"}) {
    RayClassInput input = load(name);
    SuiteResult res = verify_sampling(input, 25, 4242, true);
    CHECK(res.ok());
  }
}

TEST_CASE("unit orbit cocycle families vanish exactly") {
  RayClassInput input = load("cubic1_f5.json");
  SuiteResult res = verify_cocycle(input, 25, 31337);
  CHECK(res.ok());
}
