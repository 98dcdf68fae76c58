#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "quinfield/finite_field.hpp"
#include "quinfield/poly.hpp"
#include "quinfield/quadratic.hpp"

namespace quinfield {

/// Integer constant v in the domain of `like`.
template <class T>
T cst(const T& like, long v) {
  return Ops<T>::from_int(like, v);
}

/// Brumer's D5 quintic X^5+(t-3)X^4+(s-t+3)X^3+(t^2-t-2s-1)X^2+sX+t. Over a
/// field of characteristic 2 the signs collapse on their own.
template <class T>
Poly<T> brumer(const T& s, const T& t) {
  auto k = [&](long v) { return cst(s, v); };
  return Poly<T>({t, s, t * t - t - k(2) * s - k(1), s - t + k(3), t - k(3), k(1)}, k(0));
}

/// delta_{s,t}; d^2 = delta and disc(brumer(s,t)) = t^2 delta^2.
template <class T>
T delta(const T& s, const T& t) {
  auto k = [&](long v) { return cst(s, v); };
  const T s2 = s * s, t2 = t * t, t3 = t2 * t, t4 = t3 * t;
  return s2 - k(4) * s2 * s + k(4) * t - k(14) * s * t - k(30) * s2 * t - k(91) * t2 - k(34) * s * t2 +
         s2 * t2 + k(40) * t3 + k(24) * s * t3 + k(4) * t4 - k(4) * t4 * t;
}

/// rho: (s, t) -> ((s+5t)/t^2, -1/t). Characteristic 0 (and odd) only.
template <class T>
std::pair<T, T> rho(const T& s, const T& t) {
  if (Ops<T>::is_zero(t)) throw DegenerateParameter("rho needs t != 0");
  return {(s + cst(s, 5) * t) / (t * t), -(Ops<T>::one(t) / t)};
}

/// rho in characteristic 2: (s, t) -> ((s+t)/t^2, 1/t).
template <class T>
std::pair<T, T> rho_char2(const T& s, const T& t) {
  if (Ops<T>::is_zero(t)) throw DegenerateParameter("rho needs t != 0");
  return {(s + t) / (t * t), Ops<T>::one(t) / t};
}

/// epsilon_{s,t} = (1+s+s^3+t^2+t^4+t^5)/(s+t+st)^2 (characteristic 2).
template <class T>
T epsilon_char2(const T& s, const T& t) {
  const T den = s + t + s * t;
  if (Ops<T>::is_zero(den)) throw DegenerateParameter("epsilon: s+t+st = 0");
  const T one = Ops<T>::one(s), t2 = t * t, t4 = t2 * t2;
  return (one + s + s * s * s + t2 + t4 + t4 * t) / (den * den);
}

/// f^{F20}_{p,q} in characteristic 2:
/// X^5 + ((q^2+pq+1)/p^2) X^4 + (p^2+p+q+1) X^3 + (p+q) X^2 + pX + 1.
template <class T>
Poly<T> f20_char2(const T& p, const T& q) {
  if (Ops<T>::is_zero(p)) throw DegenerateParameter("f20 (char 2) needs p != 0");
  const T one = Ops<T>::one(p);
  return Poly<T>({one, p, p + q, p * p + p + q + one, (q * q + p * q + one) / (p * p), one}, cst(p, 0));
}

// ---------------------------------------------------------------------------
// Rational constructors

PolyQ brumer_d5(const Rational& s, const Rational& t);

struct QuadraticInvariant {
  Rational value;
  bool is_square = false;
  std::optional<Rational> root;  // nonnegative square root when is_square
};
QuadraticInvariant quadratic_invariant(const Rational& value);
QuadraticInvariant delta_d5(const Rational& s, const Rational& t);

/// Hashimoto-Tsunogai chart: (A, B) -> (s, t, d) with d^2 = delta_{s,t}.
struct HTParams {
  Rational s, t, d;
};
HTParams ht_params_from_AB(const Rational& A, const Rational& B);
/// P = (A^2-A-1)^2 + 25(A^2+1)B^2 + 125B^4, Q = 1-A+7B^2+AB^2.
Rational ht_P(const Rational& A, const Rational& B);
Rational ht_Q(const Rational& A, const Rational& B);
/// Brumer's quintic at the (A, B)-derived (s, t).
PolyQ ht_c5_f(const Rational& A, const Rational& B);
/// X^5 - (P/Q^2)(A^2-2A+15B^2+2)X^3 + (P^2/Q^3)(2BX^2-(A-1)X-2B).
PolyQ ht_c5_h(const Rational& A, const Rational& B);
/// 16B^4(A^2+A^3-B^2+7AB^2)^2 P^8/Q^14, the discriminant of ht_c5_f.
Rational ht_c5_discriminant(const Rational& A, const Rational& B);
/// X^5 - (2-3s-2t+t^2)X^3 + dX^2 + (1-3s-10t-4st+3t^2+t^3)X - d.
PolyQ g_c5(const Rational& s, const Rational& t, const Rational& d);

/// q = -(5p+8r+2p^2 r)/2 and its inverse r = -(5p+2q)/(2(p^2+4)).
Rational f20_q_from_r(const Rational& p, const Rational& r);
Rational f20_r_from_q(const Rational& p, const Rational& q);
PolyQ f20_f(const Rational& p, const Rational& q);
/// Lecacheux's form g_{p,r}.
PolyQ f20_g(const Rational& p, const Rational& r);

/// (s, t) with the same splitting field as g_{p,r}: rational when p^2+4 is
/// a square, otherwise in Q(sqrt(p^2+4)) with the root cofactor*sqrt(D).
struct F20ToD5 {
  Rational radicand;  // p^2 + 4
  bool rational = false;
  Rational s_rat, t_rat;
  QuadNum s, t;
};
F20ToD5 f20_to_d5(const Rational& p, const Rational& r);

/// W, g^{C4} and delta' = W((p^4+5p^2+4) + p(p^2+3) sqrt(p^2+4))/8 as u + v sqrt(p^2+4).
struct C4SubfieldData {
  Rational W;
  PolyQ g_c4;
  Rational delta_u, delta_v;
  bool degenerate = false;  // W = 0
};
C4SubfieldData c4_subfield_data(const Rational& p, const Rational& r);

struct RhoImage {
  Rational s, t;
  std::optional<Rational> d;
};
/// rho on (s, t, d): d -> d/t^3.
RhoImage rho_transport(const Rational& s, const Rational& t, std::optional<Rational> d = std::nullopt);

PolyQ lehmer_quintic(const Rational& n);
Rational lehmer_s(const Rational& n);
Rational lehmer_t(const Rational& n);

enum class SexticTag { S3S3, S3C3, S3C2, S3triv, C3C2 };
SexticTag parse_sextic_tag(std::string_view name);
PolyQ sextic_multiresolvent(SexticTag tag, const Rational& s, const Rational& t);

/// X^4 + sX^2 + s^2/(u^2+4).
PolyQ thc4_quartic(const Rational& s, const Rational& u);

// ---------------------------------------------------------------------------
// Tagged parameter points

enum class Family { D5, C5HT, F20P, F20R, C4 };

struct ParamPoint {
  Family family = Family::D5;
  Rational a, b;  // (s,t), (A,B), (p,q), (p,r) or (s,u)

  friend bool operator==(const ParamPoint&, const ParamPoint&) = default;
};

/// "d5:s,t", "c5:A,B", "f20r:p,r", "f20q:p,q", "c4:s,u".
ParamPoint parse_param_point(std::string_view text);
std::string to_string(const ParamPoint& pt);
std::string family_name(Family f);

/// The point's quintic (Brumer for D5, f^{C5} for C5HT, g for F20R, f for F20P,
/// the quartic for C4).
PolyQ family_polynomial(const ParamPoint& pt);

/// Rewrites F20P as F20R; other families pass through.
ParamPoint to_f20r(const ParamPoint& pt);

}  // namespace quinfield
