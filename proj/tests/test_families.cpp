#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "quinfield/factor.hpp"
#include "quinfield/families.hpp"
#include "quinfield/poly_io.hpp"
#include "quinfield/resultant.hpp"

using namespace quinfield;

namespace {

Rational q(long n, long d = 1) { return ratio(n, d); }

Rational random_rational(std::mt19937_64& rng, long bound = 30) {
  std::uniform_int_distribution<long> num(-bound, bound), den(1, 9);
  return ratio(num(rng), den(rng));
}

}  // namespace

TEST_CASE("brumer quintic") {
  CHECK(brumer_d5(0, 1) == parse_poly("X^5 - 2X^4 + 2X^3 - X^2 + 1"));
  CHECK(brumer_d5(5, -1) == parse_poly("X^5 - 4X^4 + 9X^3 - 9X^2 + 5X - 1"));
  CHECK(brumer_d5(-20, -7) == parse_poly("X^5 - 10X^4 - 10X^3 + 95X^2 - 20X - 7"));
}

TEST_CASE("delta and the Brumer discriminant") {
  auto d01 = delta_d5(0, 1);
  CHECK(d01.value == -47);
  CHECK_FALSE(d01.is_square);
  CHECK(delta_d5(-1, 1).value == -47);
  CHECK(delta_d5(2, 1).value == -239);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 30; ++i) {
    Rational s = random_rational(rng), t = random_rational(rng);
    if (t == 0) continue;
    Rational dl = delta_d5(s, t).value;
    CHECK(discriminant(brumer_d5(s, t)) == t * t * dl * dl);
  }
}

TEST_CASE("quadratic invariant square detection") {
  auto sq = quadratic_invariant(q(9, 4));
  CHECK(sq.is_square);
  REQUIRE(sq.root.has_value());
  CHECK(*sq.root == q(3, 2));
  CHECK_FALSE(quadratic_invariant(q(-4)).is_square);
  CHECK_FALSE(quadratic_invariant(q(8, 9)).root.has_value());
}

TEST_CASE("Hashimoto-Tsunogai chart") {
  auto p = ht_params_from_AB(3, 1);
  CHECK(p.t == -7);
  CHECK(p.s == -20);
  CHECK(p.d == -625);
  CHECK(p.d * p.d == delta_d5(p.s, p.t).value);

  auto m = ht_params_from_AB(3, -1);
  CHECK(m.s == p.s);
  CHECK(m.t == p.t);
  CHECK(m.d == -p.d);

  CHECK(ht_c5_f(3, 1) == brumer_d5(-20, -7));

  std::mt19937_64 rng(11);
  int checked = 0;
  while (checked < 25) {
    Rational A = random_rational(rng, 12), B = random_rational(rng, 12);
    if (B == 0) continue;
    HTParams h;
    try {
      h = ht_params_from_AB(A, B);
    } catch (const DegenerateParameter&) {
      continue;
    }
    CHECK(h.d * h.d == delta_d5(h.s, h.t).value);
    CHECK(ht_c5_f(A, B) == ht_c5_f(A, -B));
    if (ht_Q(A, B) != 0) CHECK(ht_c5_h(A, B) == g_c5(h.s, h.t, -h.d));
    Rational expected = ht_c5_discriminant(A, B);
    if (expected != 0) CHECK(discriminant(ht_c5_f(A, B)) == expected);
    ++checked;
  }
}

TEST_CASE("f^{C5} at B = 0 is inseparable") {
  for (long a : {2L, 3L, -5L, 7L}) {
    Rational A(a);
    PolyQ x = PolyQ::x(Rational(1));
    PolyQ expected = pow(x + PolyQ::constant(A), 2) * (x + PolyQ::constant(A * A - 1)) *
                     pow(x + PolyQ::constant(1 / (A - 1)), 2);
    CHECK(ht_c5_f(A, 0) == expected);
    CHECK(ht_params_from_AB(A, 0).d == 0);
  }
}

TEST_CASE("h form at the Lehmer specialization") {
  // h_{2n+3,1} = X^5 - R(n^2+2n+5)X^3 - R^2(X^2+(n+1)X-1)
  for (long n = -4; n <= 4; ++n) {
    Rational N(n);
    Rational R = N * N * N * N + 5 * N * N * N + 15 * N * N + 25 * N + 25;
    PolyQ lehmer_form({R * R, -R * R * (N + 1), -R * R, -R * (N * N + 2 * N + 5), 0, 1});
    if (ht_Q(2 * N + 3, 1) == 0) continue;
    // that display is -h(-X) of the general one, i.e. g^{C5} with +d
    PolyQ h = ht_c5_h(2 * N + 3, 1);
    CHECK(-h.compose(polyq({0, -1})) == lehmer_form);
    auto p = ht_params_from_AB(2 * N + 3, 1);
    CHECK(g_c5(p.s, p.t, p.d) == lehmer_form);
  }
}

TEST_CASE("F20 forms") {
  CHECK(f20_q_from_r(1, 1) == q(-15, 2));
  CHECK(f20_f(1, q(-15, 2)) == f20_g(1, 1));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    Rational p = random_rational(rng), r = random_rational(rng);
    CHECK(f20_r_from_q(p, f20_q_from_r(p, r)) == r);
    CHECK(f20_g(p, r) == f20_f(p, f20_q_from_r(p, r)));
  }
  for (long pv : {-7L, -1L, 0L, 2L, 9L}) {
    Rational p(pv);
    PolyQ g = f20_g(p, 2);
    CHECK(g.eval(q(1, 4)) == 0);
    PolyQ quartic({-4, -4 * (p - 2), 2 * (4 * p * p + 3 * p + 16), 2 * (2 * p * p - p + 6), 1});
    CHECK(g == PolyQ({q(-1, 4), 1}) * quartic);
  }
}

TEST_CASE("F20 to D5 transfer") {
  auto z = f20_to_d5(0, 3);
  CHECK(z.rational);
  CHECK(z.t_rat == 1);
  CHECK(z.s_rat == q(-17, 2));  // -(4r+5)/2

  auto h = f20_to_d5(3, 1);
  CHECK_FALSE(h.rational);
  CHECK(h.s.D == 13);
  // p = t - 1/t and q = s + (s+5t)/t^2 recover the F20 parameters
  QuadNum one = QuadNum::rational(1, 13);
  CHECK(h.t - one / h.t == QuadNum::rational(3, 13));
  QuadNum qq = h.s + (h.s + QuadNum::rational(5, 13) * h.t) / (h.t * h.t);
  CHECK(qq == QuadNum::rational(f20_q_from_r(3, 1), 13));
  CHECK(h.s.conj().b == -h.s.b);
}

TEST_CASE("C4 subfield data") {
  auto c = c4_subfield_data(0, 0);
  CHECK(c.W == -199);
  CHECK(c.g_c4 == parse_poly("X^4 + 796X^2 + 158404"));
  auto c1 = c4_subfield_data(1, 0);
  CHECK(c1.W == -215);
  CHECK(c1.g_c4 == parse_poly("X^4 + 2150X^2 + 231125"));
  CHECK(c1.delta_u == q(-215 * 10, 8));
  CHECK(c1.delta_v == q(-215 * 4, 8));
  CHECK_FALSE(c1.degenerate);
}

TEST_CASE("rho transport") {
  auto r = rho_transport(0, 1);
  CHECK(r.s == 5);
  CHECK(r.t == -1);
  auto r1 = rho_transport(7, 1, Rational(4));
  CHECK(r1.s == 12);
  CHECK(r1.t == -1);
  CHECK(*r1.d == 4);
  RhoImage x{2, 3, Rational(5)};
  for (int i = 0; i < 4; ++i) x = rho_transport(x.s, x.t, x.d);
  CHECK(x.s == 2);
  CHECK(x.t == 3);
  CHECK(*x.d == 5);
  CHECK_THROWS_AS(rho_transport(1, 0), DegenerateParameter);
}

TEST_CASE("Lehmer quintic") {
  CHECK(lehmer_quintic(0) == parse_poly("X^5 - 10X^3 + 5X^2 + 10X + 1"));
  for (long n = -20; n <= 20; ++n) {
    Rational N(n);
    CHECK(ht_c5_f(2 * N + 3, 1) == brumer_d5(lehmer_s(N), lehmer_t(N)));
  }
  for (long n = -3; n <= 3; ++n) {
    Rational N(n);
    Rational R = N * N * N * N + 5 * N * N * N + 15 * N * N + 25 * N + 25;
    Rational c = N * N * N + 5 * N * N + 10 * N + 7;
    CHECK(discriminant(lehmer_quintic(N)) == R * R * R * R * c * c);
  }
}

TEST_CASE("sextic multi-resolvents") {
  CHECK(sextic_multiresolvent(SexticTag::S3S3, 1, 1) == parse_poly("X^6 - 6X^4 - 27X^3 + 9X^2 + 81X - 58"));
  CHECK(sextic_multiresolvent(SexticTag::S3triv, 1, 99) == parse_poly("X^6 + 6X^4 + 9X^2 + 31"));
  CHECK(sextic_multiresolvent(SexticTag::C3C2, 0, 1) == parse_poly("X^6 - 18X^4 + 81X^2 - 81"));
  CHECK(sextic_multiresolvent(SexticTag::S3C2, 1, 1) == parse_poly("X^6 + 6X^4 + 9X^2 + 31"));
  // S3C3 at (1,0): u = 9, X^6 + 18X^4 + 27X^3 + 81X^2 + 243X + 81*10
  CHECK(sextic_multiresolvent(SexticTag::S3C3, 1, 0) == parse_poly("X^6 + 18X^4 + 27X^3 + 81X^2 + 243X + 810"));
  CHECK(parse_sextic_tag("S3C2") == SexticTag::S3C2);
  CHECK_THROWS_AS(parse_sextic_tag("S4"), ParseError);
}

TEST_CASE("C4 quartic") {
  CHECK(thc4_quartic(1, 0) == PolyQ({q(1, 4), 0, 1, 0, 1}));
  CHECK(discriminant(thc4_quartic(1, 2)) == q(1, 2));
  CHECK(thc4_quartic(0, 5) == PolyQ::monomial(Rational(1), 4));
}

TEST_CASE("characteristic 2 constructors") {
  const auto& F = GF2mField::get(8);
  GF2m zero(0, F), one(1, F);
  CHECK(epsilon_char2(zero, one) == zero);
  CHECK(epsilon_char2(one, zero) == one);
  CHECK_THROWS_AS(epsilon_char2(zero, zero), DegenerateParameter);
  PolyF2m b = brumer(zero, one);
  // X^5 + 0X^4 + 0X^3 + X^2 + 0X + 1 over F_2
  CHECK(b.degree() == 5);
  CHECK(b[2] == one);
  CHECK(b[4] == zero);
  PolyF2m f = f20_char2(one, one);
  CHECK(f[4] == one);  // (1+1+1)/1
  CHECK(f[3] == zero);  // 1+1+1+1
}

TEST_CASE("parameter points") {
  auto p = parse_param_point("d5:5,-1");
  CHECK(p.family == Family::D5);
  CHECK(p.a == 5);
  CHECK(p.b == -1);
  auto c = parse_param_point("c5:3/2,1");
  CHECK(c.family == Family::C5HT);
  CHECK(c.a == q(3, 2));
  CHECK(to_string(c) == "c5:3/2,1");
  CHECK(to_f20r(parse_param_point("f20q:1,-15/2")) == parse_param_point("f20r:1,1"));
  CHECK_THROWS_AS(parse_param_point("d5:0,1/0"), ParseError);
  CHECK_THROWS_AS(parse_param_point("x5:1,2"), ParseError);
  CHECK_THROWS_AS(parse_param_point("d5:1"), ParseError);
  CHECK(family_polynomial(p) == brumer_d5(5, -1));
}
