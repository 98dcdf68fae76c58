#include "quinfield/quadratic.hpp"

namespace quinfield {

QuadNum QuadNum::inverse() const {
  Rational n = norm();
  if (sgn(n) == 0) throw std::domain_error("inverse of zero in Q(sqrt D)");
  return QuadNum(a / n, -b / n, D);
}

QuadraticContext quadratic_context(const Rational& radicand) {
  if (sgn(radicand) == 0) throw std::domain_error("quadratic extension by sqrt(0)");
  auto sp = squarefree_split(radicand);
  if (sp.kernel == 1) throw std::domain_error("radicand " + to_string(radicand) + " is a rational square");
  return {sp.kernel, sp.cofactor};
}

PolyQuad lift(const PolyQ& f, const Integer& D) {
  return f.map([&D](const Rational& c) { return QuadNum::rational(c, D); });
}

PolyQuad conj(const PolyQuad& f) {
  return f.map([](const QuadNum& c) { return c.conj(); });
}

PolyQ norm(const PolyQuad& f) { return rational_part(f * conj(f)); }

bool is_rational(const PolyQuad& f) {
  for (const auto& c : f.coeffs()) {
    if (!c.is_rational()) return false;
  }
  return true;
}

PolyQ rational_part(const PolyQuad& f) {
  if (!is_rational(f)) throw std::domain_error("polynomial has irrational coefficients");
  return f.map([](const QuadNum& c) { return c.a; });
}

BiquadNum BiquadNum::embed(const QuadNum& x, const Integer& d1, const Integer& d2, bool first) {
  if (first) return {x.a, x.b, 0, 0, d1, d2};
  return {x.a, 0, x.b, 0, d1, d2};
}

BiquadNum BiquadNum::inverse() const {
  // x * (x with v -> -v) = alpha + beta*u lies in Q(u)
  const Rational alpha = a * a + D1 * b * b - D2 * (c * c + D1 * e * e);
  const Rational beta = 2 * a * b - 2 * D2 * c * e;
  const Rational n = alpha * alpha - D1 * beta * beta;
  if (sgn(n) == 0) throw std::domain_error("inverse of zero in Q(sqrt D1, sqrt D2)");
  const BiquadNum w(alpha / n, -beta / n, 0, 0, D1, D2);
  return BiquadNum(a, b, -c, -e, D1, D2) * w;
}

}  // namespace quinfield
