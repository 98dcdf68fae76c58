#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quinfield/oracle.hpp"
#include "quinfield/resultant.hpp"

using namespace quinfield;

namespace {
Rational q(long n, long d = 1) { return ratio(n, d); }
}  // namespace

TEST_CASE("D5 orbit of a point") {
  auto o = d5_orbit<Rational>(2, 3);
  CHECK(o == std::array<Rational, 5>{2, 3, -1, q(2, 3), q(-1, 3)});
  auto p = params_from_xy<Rational>(2, 3);
  CHECK(p.t == q(-4, 3));
  CHECK(p.d == q(-140, 9));
  CHECK(p.d * p.d == delta(p.s, p.t));
  PolyQ prod = PolyQ::constant(1);
  for (const auto& v : o) prod = prod * PolyQ({-v, 1});
  CHECK(prod == brumer_d5(p.s, p.t));

  // sigma rotates the orbit by one place
  auto sp = act_sigma<Rational>({2, 3});
  auto o2 = d5_orbit(sp.x, sp.y);
  for (int i = 0; i < 5; ++i) CHECK(o2[i] == o[(i + 1) % 5]);

  // tau fixes (s, t) and negates d
  auto tp = act_tau<Rational>({2, 3});
  auto pt = params_from_xy(tp.x, tp.y);
  CHECK(pt.s == p.s);
  CHECK(pt.t == p.t);
  CHECK(pt.d == -p.d);

  CHECK(d5_point_orbit<Rational>({2, 3}).size() == 10);
  CHECK_THROWS(d5_orbit<Rational>(0, 3));
}

TEST_CASE("F^1 from the coset product") {
  XY<Rational> a{2, 3}, b{q(-1, 2), 5};
  auto pa = params_from_xy(a.x, a.y), pb = params_from_xy(b.x, b.y);
  PolyQ o = f1_from_xy(a, b);
  CHECK(o.degree() == 10);
  CHECK(o == f1(pa.s, pa.t, pb.s, pb.t));
  PolyQ self = f1_from_xy(a, a);
  CHECK(self.eval(invariant_P(a, a)) == 0);
}

TEST_CASE("F20 resolvent from the coset product") {
  auto p = params_from_xy<Rational>(2, 3);
  Rational pp = p.t - 1 / p.t, qq = p.s + (p.s + 5 * p.t) / (p.t * p.t);
  CHECK(pp == q(-7, 12));
  PolyQ o = f20_resolvent_from_xy<Rational>(2, 3);
  CHECK(o.degree() == 5);
  CHECK(o == f20_f(pp, qq));
}

TEST_CASE("characteristic 2 invariants") {
  const auto& F = GF2mField::get(8);
  GF2m x(0x53, F), y(0xCA, F);
  auto p = params_from_xy(x, y);
  REQUIRE(p.e.has_value());
  CHECK(*p.e * *p.e + *p.e + epsilon_char2(p.s, p.t) == GF2m(0, F));
  GF2m x1(0x17, F), y1(0x2B, F);
  auto p1 = params_from_xy(x1, y1);
  CHECK(f1_from_xy<GF2m>({x, y}, {x1, y1}) == f1_char2(p.s, p.t, p1.s, p1.t));
}

TEST_CASE("identity suite") {
  SuiteOptions o;
  o.seed = 1;
  o.trials = 60;
  o.char2_bits = 16;
  auto r = identity_suite(o);
  for (const auto& id : r.identities) {
    INFO(id.name);
    CHECK(id.checked > 0);
    CHECK(id.passed == id.checked);
  }
  CHECK(r.all_passed());
  CHECK(r.to_json()["all_passed"] == true);

  SuiteOptions bad = o;
  bad.trials = 3;
  bad.char2_bits = 0;
  bad.mutate_c2 = true;
  auto rb = identity_suite(bad);
  CHECK_FALSE(rb.all_passed());
  for (const auto& id : rb.identities) {
    if (id.name == "f1_formula_vs_oracle") {
      REQUIRE(id.first_failure.has_value());
      CHECK(id.first_failure->rfind("trial 1 ", 0) == 0);
    }
  }

  SuiteOptions prod = o;
  prod.trials = 2;
  prod.char2_trials = 20;
  prod.coupling = Char2Coupling::Product;
  CHECK_FALSE(identity_suite(prod).all_passed());
}
