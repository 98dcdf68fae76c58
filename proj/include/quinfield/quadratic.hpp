#pragma once

#include <stdexcept>
#include <utility>

#include "quinfield/poly.hpp"

namespace quinfield {

/// a + b*sqrt(D) in Q(sqrt D), D a squarefree integer other than 0 and 1.
/// D == 0 marks a context-free rational that adopts the partner's D.
struct QuadNum {
  Rational a;
  Rational b;
  Integer D;

  QuadNum() = default;
  QuadNum(Rational a_, Rational b_, Integer d) : a(std::move(a_)), b(std::move(b_)), D(std::move(d)) {}
  static QuadNum rational(const Rational& a, const Integer& d) { return QuadNum(a, Rational(0), d); }

  QuadNum conj() const { return QuadNum(a, -b, D); }
  Rational norm() const { return a * a - D * b * b; }
  bool is_rational() const { return sgn(b) == 0; }
  QuadNum inverse() const;

  friend QuadNum operator+(const QuadNum& x, const QuadNum& y) { return QuadNum(x.a + y.a, x.b + y.b, ctx(x, y)); }
  friend QuadNum operator-(const QuadNum& x, const QuadNum& y) { return QuadNum(x.a - y.a, x.b - y.b, ctx(x, y)); }
  friend QuadNum operator*(const QuadNum& x, const QuadNum& y) {
    Integer d = ctx(x, y);
    return QuadNum(x.a * y.a + d * x.b * y.b, x.a * y.b + x.b * y.a, d);
  }
  friend QuadNum operator/(const QuadNum& x, const QuadNum& y) { return x * y.inverse(); }
  QuadNum operator-() const { return QuadNum(-a, -b, D); }
  friend bool operator==(const QuadNum& x, const QuadNum& y) { return x.a == y.a && x.b == y.b; }

 private:
  static Integer ctx(const QuadNum& x, const QuadNum& y) {
    if (x.D == 0) return y.D;
    if (y.D != 0 && x.D != y.D) throw std::domain_error("mixed quadratic-field contexts");
    return x.D;
  }
};

template <>
struct Ops<QuadNum> {
  static QuadNum zero(const QuadNum& like) { return QuadNum(Rational(0), Rational(0), like.D); }
  static QuadNum one(const QuadNum& like) { return QuadNum(Rational(1), Rational(0), like.D); }
  static QuadNum from_int(const QuadNum& like, long v) { return QuadNum(Rational(v), Rational(0), like.D); }
  static bool is_zero(const QuadNum& x) { return sgn(x.a) == 0 && sgn(x.b) == 0; }
  static QuadNum inv(const QuadNum& x) { return x.inverse(); }
};

using PolyQuad = Poly<QuadNum>;

/// sqrt(radicand) written as cofactor * sqrt(D) with D the squarefree kernel.
/// Throws if radicand is zero or a rational square (the extension would be Q).
struct QuadraticContext {
  Integer D;
  Rational cofactor;
  /// The element sqrt(radicand) = cofactor * sqrt(D) (positive real root when D > 0).
  QuadNum root() const { return QuadNum(Rational(0), cofactor, D); }
  QuadNum lift(const Rational& q) const { return QuadNum::rational(q, D); }
};
QuadraticContext quadratic_context(const Rational& radicand);

PolyQuad lift(const PolyQ& f, const Integer& D);
PolyQuad conj(const PolyQuad& f);
/// f * conj(f), which has rational coefficients.
PolyQ norm(const PolyQuad& f);
/// Rational polynomial when every coefficient is rational.
bool is_rational(const PolyQuad& f);
PolyQ rational_part(const PolyQuad& f);

/// a + b*u + c*v + e*u*v with u^2 = D1, v^2 = D2, D1 != D2 squarefree, so
/// Q(u, v) is a biquadratic field. D1 == 0 marks a context-free rational.
struct BiquadNum {
  Rational a, b, c, e;
  Integer D1, D2;

  BiquadNum() = default;
  BiquadNum(Rational a_, Rational b_, Rational c_, Rational e_, Integer d1, Integer d2)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), e(std::move(e_)), D1(std::move(d1)), D2(std::move(d2)) {}
  static BiquadNum rational(const Rational& q, const Integer& d1, const Integer& d2) { return {q, 0, 0, 0, d1, d2}; }
  /// Embeds x + y*sqrt(D1) (first = true) or x + y*sqrt(D2).
  static BiquadNum embed(const QuadNum& x, const Integer& d1, const Integer& d2, bool first);

  bool is_rational() const { return sgn(b) == 0 && sgn(c) == 0 && sgn(e) == 0; }
  BiquadNum inverse() const;

  friend BiquadNum operator+(const BiquadNum& x, const BiquadNum& y) {
    auto [d1, d2] = ctx(x, y);
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.e + y.e, d1, d2};
  }
  friend BiquadNum operator-(const BiquadNum& x, const BiquadNum& y) {
    auto [d1, d2] = ctx(x, y);
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.e - y.e, d1, d2};
  }
  friend BiquadNum operator*(const BiquadNum& x, const BiquadNum& y) {
    auto [d1, d2] = ctx(x, y);
    return {x.a * y.a + d1 * x.b * y.b + d2 * x.c * y.c + d1 * d2 * x.e * y.e,
            x.a * y.b + x.b * y.a + d2 * (x.c * y.e + x.e * y.c),
            x.a * y.c + x.c * y.a + d1 * (x.b * y.e + x.e * y.b),
            x.a * y.e + x.e * y.a + x.b * y.c + x.c * y.b,
            d1,
            d2};
  }
  friend BiquadNum operator/(const BiquadNum& x, const BiquadNum& y) { return x * y.inverse(); }
  BiquadNum operator-() const { return {-a, -b, -c, -e, D1, D2}; }
  friend bool operator==(const BiquadNum& x, const BiquadNum& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.e == y.e;
  }

 private:
  static std::pair<Integer, Integer> ctx(const BiquadNum& x, const BiquadNum& y) {
    if (x.D1 == 0) return {y.D1, y.D2};
    if (y.D1 != 0 && (x.D1 != y.D1 || x.D2 != y.D2)) throw std::domain_error("mixed biquadratic contexts");
    return {x.D1, x.D2};
  }
};

template <>
struct Ops<BiquadNum> {
  static BiquadNum zero(const BiquadNum& like) { return BiquadNum::rational(0, like.D1, like.D2); }
  static BiquadNum one(const BiquadNum& like) { return BiquadNum::rational(1, like.D1, like.D2); }
  static BiquadNum from_int(const BiquadNum& like, long v) { return BiquadNum::rational(v, like.D1, like.D2); }
  static bool is_zero(const BiquadNum& x) { return x.is_rational() && sgn(x.a) == 0; }
  static BiquadNum inv(const BiquadNum& x) { return x.inverse(); }
};

using PolyBiquad = Poly<BiquadNum>;

}  // namespace quinfield
