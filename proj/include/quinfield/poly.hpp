#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "quinfield/rational.hpp"

namespace quinfield {

/// Coefficient-domain traits. Elements of contextual domains (F_p, F_{2^m},
/// Q(sqrt D)) carry their context, so "like" arguments supply it.
template <class T>
struct Ops;

template <>
struct Ops<Rational> {
  static Rational zero(const Rational&) { return Rational(0); }
  static Rational one(const Rational&) { return Rational(1); }
  static Rational from_int(const Rational&, long v) { return Rational(v); }
  static bool is_zero(const Rational& a) { return sgn(a) == 0; }
  static Rational inv(const Rational& a) {
    if (sgn(a) == 0) throw std::domain_error("inverse of zero");
    return 1 / a;
  }
};

/// Dense univariate polynomial; index i holds the coefficient of X^i.
/// No trailing zeros are stored, so the zero polynomial has no coefficients.
template <class T>
class Poly {
 public:
  Poly() : zero_(T{}) {}
  explicit Poly(T zero) : zero_(std::move(zero)) {}
  Poly(std::vector<T> coeffs, T zero) : c_(std::move(coeffs)), zero_(std::move(zero)) { trim(); }
  explicit Poly(std::vector<T> coeffs)
      : c_(std::move(coeffs)), zero_(c_.empty() ? T{} : Ops<T>::zero(c_.front())) {
    trim();
  }

  static Poly constant(const T& c) { return Poly(std::vector<T>{c}, Ops<T>::zero(c)); }
  static Poly monomial(const T& c, int degree) {
    std::vector<T> v(static_cast<std::size_t>(degree) + 1, Ops<T>::zero(c));
    v.back() = c;
    return Poly(std::move(v), Ops<T>::zero(c));
  }
  /// The polynomial X over the domain of `like`.
  static Poly x(const T& like) { return monomial(Ops<T>::one(like), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const T& lead() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }
  const T& operator[](std::size_t i) const { return i < c_.size() ? c_[i] : zero_; }
  std::span<const T> coeffs() const { return c_; }
  const T& zero_elem() const { return zero_; }
  T one_elem() const { return Ops<T>::one(zero_); }

  T eval(const T& x) const {
    T acc = zero_;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly derivative() const {
    std::vector<T> d;
    for (std::size_t i = 1; i < c_.size(); ++i) {
      d.push_back(c_[i] * Ops<T>::from_int(zero_, static_cast<long>(i)));
    }
    return Poly(std::move(d), zero_);
  }

  Poly monic() const {
    if (c_.empty()) return *this;
    T inv = Ops<T>::inv(c_.back());
    return *this * inv;
  }

  /// this(g(X))
  Poly compose(const Poly& g) const {
    Poly acc(zero_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * g + constant(*it);
    return acc;
  }

  /// Applies a coefficient map (e.g. reduction or conjugation).
  template <class F>
  auto map(F&& f) const {
    using U = decltype(f(std::declval<const T&>()));
    std::vector<U> out;
    out.reserve(c_.size());
    for (const auto& a : c_) out.push_back(f(a));
    return Poly<U>(std::move(out), f(zero_));
  }

  Poly operator-() const {
    std::vector<T> v;
    v.reserve(c_.size());
    for (const auto& a : c_) v.push_back(-a);
    return Poly(std::move(v), zero_);
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const T& s) {
    for (auto& a : c_) a = a * s;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const T& s) { return a *= s; }
  friend Poly operator*(const T& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.c_.empty() || b.c_.empty()) return Poly(a.zero_);
    std::vector<T> v(a.c_.size() + b.c_.size() - 1, a.zero_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (Ops<T>::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v), a.zero_);
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (!(a.c_[i] == b.c_[i])) return false;
    }
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && Ops<T>::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<T> c_;
  T zero_;
};

template <class T>
struct DivRem {
  Poly<T> quotient;
  Poly<T> remainder;
};

/// Division with remainder; the divisor's leading coefficient must be invertible.
template <class T>
DivRem<T> divrem(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  const T& zero = a.zero_elem();
  if (a.degree() < b.degree()) return {Poly<T>(zero), a};
  std::vector<T> r(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  std::vector<T> q(static_cast<std::size_t>(a.degree() - db + 1), zero);
  T inv = Ops<T>::inv(b.lead());
  for (int i = a.degree(); i >= db; --i) {
    const T& top = r[static_cast<std::size_t>(i)];
    if (Ops<T>::is_zero(top)) continue;
    T factor = top * inv;
    q[static_cast<std::size_t>(i - db)] = factor;
    for (int j = 0; j <= db; ++j) {
      auto& slot = r[static_cast<std::size_t>(i - db + j)];
      slot = slot - factor * b[static_cast<std::size_t>(j)];
    }
  }
  r.resize(static_cast<std::size_t>(db), zero);
  return {Poly<T>(std::move(q), zero), Poly<T>(std::move(r), zero)};
}

template <class T>
Poly<T> operator/(const Poly<T>& a, const Poly<T>& b) {
  return divrem(a, b).quotient;
}
template <class T>
Poly<T> operator%(const Poly<T>& a, const Poly<T>& b) {
  return divrem(a, b).remainder;
}

/// Exact quotient; throws if b does not divide a.
template <class T>
Poly<T> exact_div(const Poly<T>& a, const Poly<T>& b) {
  auto qr = divrem(a, b);
  if (!qr.remainder.is_zero()) throw std::domain_error("exact_div: nonzero remainder");
  return qr.quotient;
}

/// Monic gcd over a field; gcd(0, 0) = 0.
template <class T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
  while (!b.is_zero()) {
    Poly<T> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class T>
Poly<T> pow(Poly<T> base, unsigned long e) {
  Poly<T> acc = Poly<T>::constant(base.one_elem());
  while (e > 0) {
    if (e & 1UL) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

/// base^e mod m for an arbitrary-precision exponent.
template <class T>
Poly<T> powmod(const Poly<T>& base, const Integer& e, const Poly<T>& m) {
  Poly<T> acc = Poly<T>::constant(base.one_elem()) % m;
  Poly<T> b = base % m;
  const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    acc = (acc * acc) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = (acc * b) % m;
  }
  return acc;
}

using PolyQ = Poly<Rational>;

/// Builds a rational polynomial from integer coefficients (index = degree).
PolyQ polyq(std::initializer_list<long> coeffs);

/// The rational c with f = c * g where g is integral, primitive and has a
/// positive leading coefficient (so c carries the sign of lc f). content(0) = 0.
Rational content(const PolyQ& f);
PolyQ primitive_part(const PolyQ& f);
/// Coefficients of primitive_part(f) as integers.
std::vector<Integer> integer_coeffs(const PolyQ& f);
PolyQ from_integers(const std::vector<Integer>& coeffs);

}  // namespace quinfield
