#include "quinfield/poly.hpp"

namespace quinfield {

PolyQ polyq(std::initializer_list<long> coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return PolyQ(std::move(v));
}

Rational content(const PolyQ& f) {
  if (f.is_zero()) return Rational(0);
  Integer num = 0;
  Integer den = 1;
  for (const auto& c : f.coeffs()) {
    if (sgn(c) == 0) continue;
    num = gcd(num, c.get_num());
    den = lcm(den, c.get_den());
  }
  Rational r(num, den);
  r.canonicalize();
  if (sgn(f.lead()) < 0) r = -r;
  return r;
}

PolyQ primitive_part(const PolyQ& f) {
  if (f.is_zero()) return f;
  Rational c = content(f);
  return f * Rational(1 / c);
}

std::vector<Integer> integer_coeffs(const PolyQ& f) {
  PolyQ g = primitive_part(f);
  std::vector<Integer> out;
  out.reserve(g.coeffs().size());
  for (const auto& c : g.coeffs()) out.push_back(c.get_num());
  return out;
}

PolyQ from_integers(const std::vector<Integer>& coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.emplace_back(c);
  return PolyQ(std::move(v));
}

}  // namespace quinfield
