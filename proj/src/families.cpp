#include "quinfield/families.hpp"

namespace quinfield {

PolyQ brumer_d5(const Rational& s, const Rational& t) { return brumer(s, t); }

QuadraticInvariant quadratic_invariant(const Rational& value) {
  QuadraticInvariant q;
  q.value = value;
  q.root = rational_sqrt(value);
  q.is_square = q.root.has_value();
  return q;
}

QuadraticInvariant delta_d5(const Rational& s, const Rational& t) { return quadratic_invariant(delta(s, t)); }

HTParams ht_params_from_AB(const Rational& A, const Rational& B) {
  const Rational B2 = B * B;
  const Rational tden = 1 - A + 7 * B2 + A * B2;
  if (tden == 0) throw DegenerateParameter("HT chart: 1-A+7B^2+AB^2 = 0");
  HTParams h;
  h.t = -(A * A + A * A * A - B2 + 7 * A * B2) / tden;
  const Rational& t = h.t;
  const Rational den = -1 + 7 * A + 7 * t + A * t;
  if (den == 0) throw DegenerateParameter("HT chart: -1+7A+7t+At = 0");
  h.s = (2 * A + 13 * t - 33 * A * t - 2 * t * t + 8 * A * t * t + 2 * t * t * t) / den;
  const Rational w = -1 - 11 * t + t * t;
  h.d = 2 * B * w * w / den;
  return h;
}

Rational ht_P(const Rational& A, const Rational& B) {
  const Rational u = A * A - A - 1, B2 = B * B;
  return u * u + 25 * (A * A + 1) * B2 + 125 * B2 * B2;
}

Rational ht_Q(const Rational& A, const Rational& B) { return 1 - A + 7 * B * B + A * B * B; }

PolyQ ht_c5_f(const Rational& A, const Rational& B) {
  auto h = ht_params_from_AB(A, B);
  return brumer_d5(h.s, h.t);
}

PolyQ ht_c5_h(const Rational& A, const Rational& B) {
  const Rational P = ht_P(A, B), Q = ht_Q(A, B);
  if (Q == 0) throw DegenerateParameter("h^{C5}: Q = 0");
  const Rational c3 = -P / (Q * Q) * (A * A - 2 * A + 15 * B * B + 2);
  const Rational k = P * P / (Q * Q * Q);
  return PolyQ({-2 * B * k, -(A - 1) * k, 2 * B * k, c3, 0, 1});
}

Rational ht_c5_discriminant(const Rational& A, const Rational& B) {
  const Rational Q = ht_Q(A, B);
  if (Q == 0) throw DegenerateParameter("h^{C5}: Q = 0");
  const Rational u = A * A + A * A * A - B * B + 7 * A * B * B;
  return 16 * pow(B, 4) * u * u * pow(ht_P(A, B), 8) / pow(Q, 14);
}

PolyQ g_c5(const Rational& s, const Rational& t, const Rational& d) {
  return PolyQ({-d, 1 - 3 * s - 10 * t - 4 * s * t + 3 * t * t + t * t * t, d, -(2 - 3 * s - 2 * t + t * t), 0, 1});
}

Rational f20_q_from_r(const Rational& p, const Rational& r) { return -(5 * p + 8 * r + 2 * p * p * r) / 2; }

Rational f20_r_from_q(const Rational& p, const Rational& q) { return -(5 * p + 2 * q) / (2 * (p * p + 4)); }

PolyQ f20_f(const Rational& p, const Rational& q) {
  const Rational c4 = (q * q + 5 * p * q - 25) / (p * p + 4) - 2 * p + 2;
  return PolyQ({1, p - 6, q - 3 * p + 8, p * p - p - 3 * q + 5, c4, 1});
}

PolyQ f20_g(const Rational& p, const Rational& r) {
  const Rational m = p * p + 4;
  return PolyQ({1, p - 6, -(r * m + Rational(11, 2) * p - 8), m * (3 * r + 1) + Rational(13, 2) * p + 1,
                r * r * m - 2 * p - Rational(17, 4), 1});
}

F20ToD5 f20_to_d5(const Rational& p, const Rational& r) {
  F20ToD5 out;
  out.radicand = p * p + 4;
  const Rational lin = 5 * p + 8 * r + 2 * p * p * r, k = 2 * p * r + 5;
  if (auto b = rational_sqrt(out.radicand)) {
    out.rational = true;
    out.s_rat = -(lin + k * *b) / 4;
    out.t_rat = (p + *b) / 2;
    return out;
  }
  auto ctx = quadratic_context(out.radicand);
  const QuadNum root = ctx.root();
  out.s = -(ctx.lift(lin) + ctx.lift(k) * root) * ctx.lift(Rational(1, 4));
  out.t = (ctx.lift(p) + root) * ctx.lift(Rational(1, 2));
  return out;
}

C4SubfieldData c4_subfield_data(const Rational& p, const Rational& r) {
  C4SubfieldData c;
  const Rational m = p * p + 4;
  c.W = -199 - 16 * p - 4 * (19 * p + 41) * r + 4 * m * r * r + 16 * m * r * r * r;
  c.g_c4 = PolyQ({m * c.W * c.W, 0, -(p * p + 1) * m * c.W, 0, 1});
  c.delta_u = c.W * (p * p * p * p + 5 * p * p + 4) / 8;
  c.delta_v = c.W * p * (p * p + 3) / 8;
  c.degenerate = c.W == 0;
  return c;
}

RhoImage rho_transport(const Rational& s, const Rational& t, std::optional<Rational> d) {
  auto [s1, t1] = rho(s, t);
  RhoImage out{s1, t1, std::nullopt};
  if (d) out.d = *d / (t * t * t);
  return out;
}

PolyQ lehmer_quintic(const Rational& n) {
  const Rational n2 = n * n, n3 = n2 * n;
  return PolyQ({1, n3 + 4 * n2 + 10 * n + 10, n2 * n2 + 5 * n3 + 11 * n2 + 15 * n + 5,
                -(2 * n3 + 6 * n2 + 10 * n + 10), n2, 1});
}

Rational lehmer_s(const Rational& n) {
  const Rational n2 = n * n, n3 = n2 * n;
  return n3 * n2 + 5 * n2 * n2 + 12 * n3 + 10 * n2 - 5 * n - 20;
}

Rational lehmer_t(const Rational& n) { return -n * n * n - 5 * n * n - 10 * n - 7; }

SexticTag parse_sextic_tag(std::string_view name) {
  if (name == "S3S3") return SexticTag::S3S3;
  if (name == "S3C3") return SexticTag::S3C3;
  if (name == "S3C2") return SexticTag::S3C2;
  if (name == "S3triv") return SexticTag::S3triv;
  if (name == "C3C2") return SexticTag::C3C2;
  throw ParseError("unknown sextic tag '" + std::string(name) + "'");
}

PolyQ sextic_multiresolvent(SexticTag tag, const Rational& s, const Rational& t) {
  const Rational st = s * t, s2 = s * s;
  switch (tag) {
    case SexticTag::S3S3:
      return PolyQ({-st * st * (4 * st + 27 * s + 27 * t), 81 * st * st, 9 * st * st, -27 * st, -6 * st, 0, 1});
    case SexticTag::S3C3: {
      const Rational u = t * t + 3 * t + 9, w = 2 * t + 3;
      return PolyQ({s2 * u * u * (t * t + 3 * t + s + 9), s2 * w * u * u, s2 * u * u, s * w * u, 2 * s * u, 0, 1});
    }
    case SexticTag::S3C2:
      return PolyQ({s2 * t * t * t * (4 * s + 27), 0, 9 * st * st, 0, 6 * st, 0, 1});
    case SexticTag::S3triv:
      return PolyQ({s2 * (4 * s + 27), 0, 9 * s2, 0, 6 * s, 0, 1});
    case SexticTag::C3C2: {
      const Rational u = s2 + 3 * s + 9;
      return PolyQ({-t * t * t * u * u, 0, t * t * u * u, 0, -2 * t * u, 0, 1});
    }
  }
  throw ParseError("unknown sextic tag");
}

PolyQ thc4_quartic(const Rational& s, const Rational& u) { return PolyQ({s * s / (u * u + 4), 0, s, 0, 1}); }

namespace {

struct FamilyName {
  std::string_view tag;
  Family family;
};
constexpr FamilyName kFamilies[] = {
    {"d5", Family::D5}, {"c5", Family::C5HT}, {"f20q", Family::F20P}, {"f20r", Family::F20R}, {"c4", Family::C4}};

}  // namespace

std::string family_name(Family f) {
  for (const auto& fn : kFamilies) {
    if (fn.family == f) return std::string(fn.tag);
  }
  return "?";
}

ParamPoint parse_param_point(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("expected family:a,b, got '" + std::string(text) + "'");
  const std::string_view tag = text.substr(0, colon), rest = text.substr(colon + 1);
  ParamPoint pt;
  bool found = false;
  for (const auto& fn : kFamilies) {
    if (fn.tag == tag) {
      pt.family = fn.family;
      found = true;
    }
  }
  if (!found) throw ParseError("unknown family tag '" + std::string(tag) + "'");
  const auto comma = rest.find(',');
  if (comma == std::string_view::npos || rest.find(',', comma + 1) != std::string_view::npos) {
    throw ParseError("expected two parameters in '" + std::string(text) + "'");
  }
  pt.a = parse_rational(rest.substr(0, comma));
  pt.b = parse_rational(rest.substr(comma + 1));
  return pt;
}

std::string to_string(const ParamPoint& pt) {
  return family_name(pt.family) + ":" + to_string(pt.a) + "," + to_string(pt.b);
}

ParamPoint to_f20r(const ParamPoint& pt) {
  if (pt.family != Family::F20P) return pt;
  return {Family::F20R, pt.a, f20_r_from_q(pt.a, pt.b)};
}

PolyQ family_polynomial(const ParamPoint& pt) {
  switch (pt.family) {
    case Family::D5: return brumer_d5(pt.a, pt.b);
    case Family::C5HT: return ht_c5_f(pt.a, pt.b);
    case Family::F20P: return f20_f(pt.a, pt.b);
    case Family::F20R: return f20_g(pt.a, pt.b);
    case Family::C4: return thc4_quartic(pt.a, pt.b);
  }
  throw ParseError("unknown family");
}

}  // namespace quinfield
