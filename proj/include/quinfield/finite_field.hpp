#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "quinfield/poly.hpp"

namespace quinfield {

/// Element of the prime field F_p, p < 2^32. The modulus travels with the value.
struct Zp {
  std::uint64_t v = 0;
  std::uint64_t p = 2;

  Zp() = default;
  Zp(std::int64_t value, std::uint64_t modulus) : p(modulus) {
    std::int64_t m = static_cast<std::int64_t>(modulus);
    std::int64_t r = value % m;
    v = static_cast<std::uint64_t>(r < 0 ? r + m : r);
  }
  /// Reduction of a rational whose denominator is prime to p.
  static Zp reduce(const Rational& q, std::uint64_t p);
  static Zp reduce(const Integer& z, std::uint64_t p);

  friend Zp operator+(Zp a, Zp b) { return raw(a.v + b.v >= a.p ? a.v + b.v - a.p : a.v + b.v, a.p); }
  friend Zp operator-(Zp a, Zp b) { return raw(a.v >= b.v ? a.v - b.v : a.v + a.p - b.v, a.p); }
  friend Zp operator*(Zp a, Zp b) { return raw(a.v * b.v % a.p, a.p); }
  Zp operator-() const { return raw(v == 0 ? 0 : p - v, p); }
  friend Zp operator/(Zp a, Zp b) { return a * b.inverse(); }
  friend bool operator==(Zp a, Zp b) { return a.v == b.v && a.p == b.p; }

  Zp pow(std::uint64_t e) const {
    Zp acc = raw(1 % p, p);
    Zp b = *this;
    while (e) {
      if (e & 1U) acc = acc * b;
      b = b * b;
      e >>= 1;
    }
    return acc;
  }
  Zp inverse() const {
    if (v == 0) throw std::domain_error("inverse of zero in F_p");
    return pow(p - 2);
  }

 private:
  static Zp raw(std::uint64_t value, std::uint64_t modulus) {
    Zp z;
    z.v = value;
    z.p = modulus;
    return z;
  }
};

template <>
struct Ops<Zp> {
  static Zp zero(const Zp& like) { return Zp(0, like.p); }
  static Zp one(const Zp& like) { return Zp(1, like.p); }
  static Zp from_int(const Zp& like, long v) { return Zp(v, like.p); }
  static bool is_zero(const Zp& a) { return a.v == 0; }
  static Zp inv(const Zp& a) { return a.inverse(); }
};

using PolyFp = Poly<Zp>;

/// Reduces a rational polynomial mod p; throws if a denominator vanishes mod p.
PolyFp reduce_mod(const PolyQ& f, std::uint64_t p);

/// F_{2^m} with a fixed irreducible modulus (1 <= m <= 62). Instances are
/// interned per m and live for the whole program.
class GF2mField {
 public:
  static const GF2mField& get(unsigned m);

  unsigned degree() const { return m_; }
  /// Bit i of the modulus is the coefficient of z^i; bit m is set.
  std::uint64_t modulus() const { return modulus_; }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t sqrt(std::uint64_t a) const;  // a^(2^(m-1))

 private:
  explicit GF2mField(unsigned m);
  unsigned m_;
  std::uint64_t modulus_;
};

/// Irreducibility over F_2 of a binary polynomial (bit i = coefficient of z^i).
bool is_irreducible_gf2(std::uint64_t poly);

/// Element of F_{2^m}; field == nullptr marks a default (F_2-valued) element
/// that adopts the field of whatever it is combined with.
struct GF2m {
  std::uint64_t v = 0;
  const GF2mField* field = nullptr;

  GF2m() = default;
  GF2m(std::uint64_t value, const GF2mField& f) : v(value), field(&f) {}

  friend GF2m operator+(GF2m a, GF2m b) { return make(a.v ^ b.v, pick(a, b)); }
  friend GF2m operator-(GF2m a, GF2m b) { return a + b; }
  GF2m operator-() const { return *this; }
  friend GF2m operator*(GF2m a, GF2m b) {
    const GF2mField* f = pick(a, b);
    if (f == nullptr) return make(a.v & b.v & 1U, nullptr);
    return make(f->mul(a.v, b.v), f);
  }
  friend GF2m operator/(GF2m a, GF2m b) { return a * b.inverse(); }
  friend bool operator==(GF2m a, GF2m b) { return a.v == b.v; }

  GF2m inverse() const {
    if (v == 0) throw std::domain_error("inverse of zero in F_2^m");
    if (field == nullptr) return *this;
    return make(field->inv(v), field);
  }
  GF2m sqrt() const {
    if (field == nullptr) return *this;
    return make(field->sqrt(v), field);
  }

 private:
  static const GF2mField* pick(GF2m a, GF2m b) { return a.field != nullptr ? a.field : b.field; }
  static GF2m make(std::uint64_t v, const GF2mField* f) {
    GF2m e;
    e.v = v;
    e.field = f;
    return e;
  }
};

template <>
struct Ops<GF2m> {
  static GF2m zero(const GF2m& like) { return like.field ? GF2m(0, *like.field) : GF2m(); }
  static GF2m one(const GF2m& like) {
    if (like.field) return GF2m(1, *like.field);
    GF2m e;
    e.v = 1;
    return e;
  }
  static GF2m from_int(const GF2m& like, long v) {
    GF2m e = one(like);
    if ((v & 1L) == 0) e.v = 0;
    return e;
  }
  static bool is_zero(const GF2m& a) { return a.v == 0; }
  static GF2m inv(const GF2m& a) { return a.inverse(); }
};

using PolyF2m = Poly<GF2m>;

}  // namespace quinfield
