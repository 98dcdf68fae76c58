#include "quinfield/resultant.hpp"

#include <stdexcept>

namespace quinfield {

namespace {

using ZPoly = std::vector<Integer>;  // index = degree, no trailing zeros

int deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// lc(b)^(deg a - deg b + 1) * a mod b
ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
  const int db = deg(b);
  const Integer& lb = b.back();
  int e = deg(a) - db + 1;
  while (deg(a) >= db) {
    Integer top = a.back();
    const int shift = deg(a) - db;
    for (auto& c : a) c *= lb;
    for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(shift + j)] -= top * b[static_cast<std::size_t>(j)];
    trim(a);
    --e;
  }
  if (e > 0) {
    Integer m = pow(lb, static_cast<unsigned long>(e));
    for (auto& c : a) c *= m;
  }
  return a;
}

Integer content_of(const ZPoly& a) {
  Integer g = 0;
  for (const auto& c : a) g = gcd(g, c);
  return g;
}

// Cohen, Algorithm 3.3.7.
Integer subresultant(ZPoly A, ZPoly B) {
  Integer a = content_of(A);
  Integer b = content_of(B);
  for (auto& c : A) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), a.get_mpz_t());
  for (auto& c : B) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), b.get_mpz_t());
  Integer t = pow(a, static_cast<unsigned long>(deg(B))) * pow(b, static_cast<unsigned long>(deg(A)));
  int s = 1;
  if (deg(A) < deg(B)) {
    std::swap(A, B);
    if (deg(A) % 2 == 1 && deg(B) % 2 == 1) s = -s;
  }
  Integer g = 1;
  Integer h = 1;
  while (deg(B) > 0) {
    const int delta = deg(A) - deg(B);
    if (deg(A) % 2 == 1 && deg(B) % 2 == 1) s = -s;
    ZPoly R = pseudo_rem(A, B);
    A = std::move(B);
    Integer div = g * pow(h, static_cast<unsigned long>(delta));
    for (auto& c : R) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), div.get_mpz_t());
    B = std::move(R);
    g = A.back();
    if (delta > 0) {
      Integer num = pow(g, static_cast<unsigned long>(delta));
      Integer den = pow(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (B.empty()) return 0;
  }
  if (B.empty()) return 0;
  const int da = deg(A);
  Integer num = pow(B.back(), static_cast<unsigned long>(da));
  if (da >= 1) {
    Integer den = pow(h, static_cast<unsigned long>(da - 1));
    mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  } else {
    h = num;
  }
  return s * t * h;
}

}  // namespace

Rational resultant(const PolyQ& f, const PolyQ& g) {
  if (f.is_zero() || g.is_zero()) throw std::domain_error("resultant of zero polynomial");
  // Res(cf F, cg G) = cf^deg g * cg^deg f * Res(F, G)
  Rational cf = content(f);
  Rational cg = content(g);
  Integer r = subresultant(integer_coeffs(f), integer_coeffs(g));
  return pow(cf, g.degree()) * pow(cg, f.degree()) * Rational(r);
}

Rational discriminant(const PolyQ& f) {
  const int n = f.degree();
  if (n < 2) throw std::domain_error("discriminant needs degree >= 2");
  Rational r = resultant(f, f.derivative()) / f.lead();
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  return r;
}

}  // namespace quinfield
