#include "quinfield/resolvents.hpp"

#include <cctype>
#include <map>

namespace quinfield {

namespace {

// Sparse polynomial in (s, t, s', t') with small integer coefficients. The
// coefficient tables are kept as text below and expanded once at startup.
using Exponents = std::array<int, 4>;
using MPoly = std::map<Exponents, long>;

MPoly mp_add(MPoly a, const MPoly& b, long sign) {
  for (const auto& [e, c] : b) {
    long& slot = a[e];
    slot += sign * c;
    if (slot == 0) a.erase(e);
  }
  return a;
}

MPoly mp_mul(const MPoly& a, const MPoly& b) {
  MPoly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Exponents e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
      long& slot = out[e];
      slot += ca * cb;
      if (slot == 0) out.erase(e);
    }
  }
  return out;
}

// expr := term (('+'|'-') term)*, term := factor ('*' factor)*,
// factor := integer | var ('^' integer)? | '(' expr ')'. Variables s t S T,
// S and T standing for s' and t'.
class Expander {
 public:
  explicit Expander(std::string_view text) : s_(text) {}

  MPoly parse() {
    MPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail();
    return p;
  }

 private:
  MPoly expr() {
    skip();
    long sign = 1;
    if (peek('-')) {
      ++pos_;
      sign = -1;
    } else if (peek('+')) {
      ++pos_;
    }
    MPoly acc = mp_add({}, term(), sign);
    for (;;) {
      skip();
      if (peek('+')) {
        ++pos_;
        acc = mp_add(std::move(acc), term(), 1);
      } else if (peek('-')) {
        ++pos_;
        acc = mp_add(std::move(acc), term(), -1);
      } else {
        return acc;
      }
    }
  }

  MPoly term() {
    MPoly acc = factor();
    for (;;) {
      skip();
      if (!peek('*')) return acc;
      ++pos_;
      acc = mp_mul(acc, factor());
    }
  }

  MPoly factor() {
    skip();
    if (peek('(')) {
      ++pos_;
      MPoly inner = expr();
      skip();
      if (!peek(')')) fail();
      ++pos_;
      return inner;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) return {{Exponents{}, integer()}};
    static constexpr std::string_view vars = "stST";
    const auto v = pos_ < s_.size() ? vars.find(s_[pos_]) : std::string_view::npos;
    if (v == std::string_view::npos) fail();
    ++pos_;
    int e = 1;
    if (peek('^')) {
      ++pos_;
      e = static_cast<int>(integer());
    }
    Exponents ex{};
    ex[v] = e;
    return {{ex, 1L}};
  }

  long integer() {
    long v = 0;
    const auto start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) v = v * 10 + (s_[pos_++] - '0');
    if (pos_ == start) fail();
    return v;
  }

  void skip() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }
  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
  [[noreturn]] void fail() const {
    throw std::logic_error("coefficient table: bad text at offset " + std::to_string(pos_));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

MPoly swap_sides(const MPoly& p) {
  MPoly out;
  for (const auto& [e, c] : p) out[Exponents{e[2], e[3], e[0], e[1]}] = c;
  return out;
}

// [inner] + rest with [a] = a + iota(a)
MPoly bracketed(std::string_view inner, std::string_view rest) {
  MPoly a = Expander(inner).parse();
  return mp_add(mp_add(a, swap_sides(a), 1), Expander(rest).parse(), 1);
}

struct Entry {
  std::string_view inner, rest;
};

// c3, c2, c1, c0 of G^1
constexpr Entry kC[4] = {
    {"2*s-21*t+3*t^2-2*t*S+t^2*S-t^2*T", "31-3*s*S+5*t*T"},
    {"-20*s+112*t+8*s*t-32*t^2+2*t^3+5*t*S-13*s*t*S-12*t^2*S+4*t^3*S-15*s*t*T"
     "+14*t^2*T+2*t^3*T+8*t^2*S*T-2*t^3*T^2",
     "-102+27*s*S-119*t*T-s*t*S*T+6*t^2*T^2"},
    {"32*s+2*s^2-128*t-26*s*t+60*t^2+4*s*t^2-8*t^3-6*s^2*S-7*t*S+38*s*t*S+9*t^2*S-5*s*t^2*S"
     "-12*t^3*S+2*t^4*S-20*t*S^2-8*s*t*S^2+6*t^2*S^2+2*t^3*S^2+2*s*t*T-77*t^2*T+3*s*t^2*T+8*t^3*T-29*t^2*S*T"
     "+s*t^2*S*T+18*t^3*S*T-2*s*t^2*T^2+10*t^3*T^2",
     "80-37*s*S+145*t*T-45*s*t*S*T+24*t^2*T^2-8*t^3*T^3"},
    {"-16*s-2*s^2+56*t+24*s*t+2*s^2*t-38*t^2-8*s*t^2+8*t^3+5*s^2*S-2*t*S-38*s*t*S-7*s^2*t*S"
     "+5*t^2*S+13*s*t^2*S+8*t^3*S+2*s*t^3*S-4*t^4*S-21*t*S^2-11*s*t*S^2-2*t^2*S^2+2*s*t^2*S^2+4*t^3*S^2"
     "-104*s*t*T-33*s^2*t*T+105*t^2*T+35*s*t^2*T+4*t^3*T+16*s*t^3*T-6*t^4*T-2*t^5*T-s^2*t*S*T+36*t^2*S*T"
     "-14*s*t^2*S*T-6*t^3*S*T+6*t^4*S*T+8*t^2*S^2*T-37*s*t^2*T^2+22*t^3*T^2-2*s*t^3*T^2+8*t^4*T^2+8*t^3*S*T^2"
     "-2*t^4*T^3",
     "-24+14*s*S-8*s^2*S^2-224*t*T+s*t*S*T-101*t^2*T^2-s*t^2*S*T^2-8*t^3*T^3"},
};

// d3, d2, d1, d0 of G^3 (characteristic 2)
constexpr Entry kD[4] = {
    {"t*(1+t+t*S+t*T)", "1+s*S+t*T"},
    {"s+t+s*t+t^3+t*S+s*t*S+s*t*T+t^2*T+t^3*T+t^3*T^2", "1+s*S+s*t*S*T+t^2*T^2"},
    {"s+s^2+t+s*t+t^2+s*t^2+s^2*S+t*S+s*t*S+t^2*S+s*t^2*S+t^4*S+t^2*S^2+t^3*S^2"
     "+t^2*T+t^3*S*T+s*t^2*T^2+t^3*T^2",
     "t*T*(1+s*S)"},
    {"t*(s*t+s*t*S+s*t^2*S+t*S^2+s*t*S^2+t^3*T+t^4*T+s^2*S*T+s*t*S*T"
     "+t^2*S*T+t^3*S*T+t^2*T^2+s*t^2*T^2+t^3*T^3)",
     "t*T*(1+s*S)*(1+t*T)"},
};

struct Tables {
  std::array<MPoly, 4> c;  // index 0 holds c3
  std::array<MPoly, 4> d;
  int max_exp = 0;

  Tables() {
    for (int i = 0; i < 4; ++i) {
      c[i] = bracketed(kC[i].inner, kC[i].rest);
      d[i] = bracketed(kD[i].inner, kD[i].rest);
    }
    for (const auto* group : {&c, &d}) {
      for (const auto& p : *group) {
        for (const auto& [e, coef] : p) {
          for (int x : e) max_exp = std::max(max_exp, x);
        }
      }
    }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

template <class T>
struct PowerCache {
  std::array<std::vector<T>, 4> pw;

  PowerCache(const std::array<const T*, 4>& vars, int max_exp) {
    for (int v = 0; v < 4; ++v) {
      pw[v].reserve(static_cast<std::size_t>(max_exp) + 1);
      pw[v].push_back(Ops<T>::one(*vars[v]));
      for (int k = 1; k <= max_exp; ++k) pw[v].push_back(pw[v].back() * *vars[v]);
    }
  }

  T eval(const MPoly& p) const {
    T acc = Ops<T>::zero(pw[0][0]);
    for (const auto& [e, c] : p) {
      T term = cst(pw[0][0], c);
      for (int v = 0; v < 4; ++v) {
        if (e[v]) term = term * pw[v][static_cast<std::size_t>(e[v])];
      }
      acc = acc + term;
    }
    return acc;
  }
};

template <class T>
std::array<T, 4> eval_group(const std::array<MPoly, 4>& group, const T& s, const T& t, const T& s1, const T& t1) {
  const auto& tb = tables();
  PowerCache<T> pc({&s, &t, &s1, &t1}, tb.max_exp);
  // stored as (x3, x2, x1, x0); returned as (x0, x1, x2, x3)
  return {pc.eval(group[3]), pc.eval(group[2]), pc.eval(group[1]), pc.eval(group[0])};
}

template <class T>
T rho_d(const T& d, const T& t) {
  return d / (t * t * t);
}

bool has_repeated_factor(const PolyQ& f) {
  if (f.degree() < 1) return false;
  return gcd(f, f.derivative()).degree() > 0;
}

}  // namespace

template <class T>
std::array<T, 4> c_coefficients(const T& s, const T& t, const T& s1, const T& t1) {
  return eval_group(tables().c, s, t, s1, t1);
}

template <class T>
std::array<T, 4> d_coefficients(const T& s, const T& t, const T& s1, const T& t1) {
  return eval_group(tables().d, s, t, s1, t1);
}

template <class T>
GPair<T> g1_g2(const T& s, const T& t, const T& s1, const T& t1) {
  auto k = [&](long v) { return cst(s, v); };
  const auto c = c_coefficients(s, t, s1, t1);
  const T half = Ops<T>::inv(k(2));
  Poly<T> g1({c[0] * half, c[1] * half, c[2] * half, c[3], -((t - k(3)) * (t1 - k(3))), k(1)}, k(0));
  Poly<T> g2({s - t + s1 - t1 + t * t1 + k(2), t + t1 - k(1), k(1)}, k(0));
  return {std::move(g1), std::move(g2)};
}

template <class T>
Poly<T> f1(const T& s, const T& t, const T& s1, const T& t1) {
  auto g = g1_g2(s, t, s1, t1);
  const T w = delta(s, t) * delta(s1, t1) / cst(s, 4);
  return g.first * g.first - (g.second * g.second) * w;
}

template <class T>
Poly<T> fi(int i, const T& s, const T& t, const T& s1, const T& t1) {
  switch (i) {
    case 1: return f1(s, t, s1, t1);
    case 2: {
      auto [a, b] = rho(s, t);
      return f1(a, b, s1, t1);
    }
    case 3: {
      auto [a, b] = rho(s1, t1);
      return f1(s, t, a, b);
    }
    case 4: {
      auto [a, b] = rho(s, t);
      auto [a1, b1] = rho(s1, t1);
      return f1(a, b, a1, b1);
    }
    default: throw std::invalid_argument("F^i needs i in 1..4");
  }
}

template <class T>
Poly<T> hfull(const T& s, const T& t, const T& s1, const T& t1) {
  return fi(1, s, t, s1, t1) * fi(2, s, t, s1, t1) * fi(3, s, t, s1, t1) * fi(4, s, t, s1, t1);
}

template <class T>
Poly<T> h_c5(int i, const T& s, const T& t, const T& d, const T& s1, const T& t1, const T& d1) {
  if (i < 1 || i > 4) throw std::invalid_argument("H^i needs i in 1..4");
  if (!(d * d == delta(s, t)) || !(d1 * d1 == delta(s1, t1))) {
    throw std::domain_error("H^i: d^2 must equal delta_{s,t}");
  }
  T a = s, b = t, e = d;
  for (int k = 1; k < i; ++k) {
    T e1 = rho_d(e, b);
    auto [a1, b1] = rho(a, b);
    a = a1;
    b = b1;
    e = e1;
  }
  auto g = g1_g2(a, b, s1, t1);
  return g.first - g.second * (e * d1 / cst(s, 2));
}

template <class T>
GPair<T> g3_g4(const T& s, const T& t, const T& s1, const T& t1) {
  const T one = Ops<T>::one(s);
  const auto d = d_coefficients(s, t, s1, t1);
  Poly<T> g3({d[0], d[1], d[2], d[3], (t + one) * (t1 + one), one}, cst(s, 0));
  const T m = (s + t + s * t) * (s1 + t1 + s1 * t1);
  Poly<T> k({s + t + s1 + t1 + t * t1, t + t1 + one, one}, cst(s, 0));
  return {std::move(g3), k * m};
}

template <class T>
Poly<T> f1_char2(const T& s, const T& t, const T& s1, const T& t1, Char2Coupling coupling) {
  const T one = Ops<T>::one(s);
  auto g = g3_g4(s, t, s1, t1);
  // eps * (a+b+ab)^2
  auto numer = [&](const T& a, const T& b) {
    const T b2 = b * b, b4 = b2 * b2;
    return one + a + a * a * a + b2 + b4 + b4 * b;
  };
  const T m = s + t + s * t, m1 = s1 + t1 + s1 * t1;
  const T n = numer(s, t), n1 = numer(s1, t1);
  Poly<T> k({s + t + s1 + t1 + t * t1, t + t1 + one, one}, cst(s, 0));
  const T w = coupling == Char2Coupling::Sum ? n * m1 * m1 + n1 * m * m : n * n1;
  return g.first * g.first + g.first * g.second + (k * k) * w;
}

#define QF_CHAR0(T)                                                                               \
  template std::array<T, 4> c_coefficients(const T&, const T&, const T&, const T&);              \
  template GPair<T> g1_g2(const T&, const T&, const T&, const T&);                                \
  template Poly<T> f1(const T&, const T&, const T&, const T&);                                    \
  template Poly<T> fi(int, const T&, const T&, const T&, const T&);                               \
  template Poly<T> hfull(const T&, const T&, const T&, const T&);                                 \
  template Poly<T> h_c5(int, const T&, const T&, const T&, const T&, const T&, const T&);

#define QF_CHAR2(T)                                                                  \
  template std::array<T, 4> d_coefficients(const T&, const T&, const T&, const T&); \
  template GPair<T> g3_g4(const T&, const T&, const T&, const T&);                   \
  template Poly<T> f1_char2(const T&, const T&, const T&, const T&, Char2Coupling);

QF_CHAR0(Rational)
QF_CHAR0(Zp)
QF_CHAR0(QuadNum)
QF_CHAR0(BiquadNum)
QF_CHAR2(GF2m)
QF_CHAR2(Zp)

#undef QF_CHAR0
#undef QF_CHAR2

C4Pair thc4_compare_poly(const Rational& a, const Rational& c, const Rational& a1, const Rational& c1) {
  if (a == 0 || a1 == 0 || c == 0 || c1 == 0) throw Indeterminate("indeterminate: quartic criterion hypotheses fail (aa'cc' = 0)");
  if (c == c1 || c == -c1) throw Indeterminate("indeterminate: quartic criterion hypotheses fail (c = +-c')");
  if (c * c1 == 4 || c * c1 == -4) throw Indeterminate("indeterminate: quartic criterion hypotheses fail (cc' = +-4)");
  const Rational den = (c * c + 4) * (c1 * c1 + 4), aa = a * a1;
  auto make = [&](const Rational& cc) { return PolyQ({aa * aa * cc * cc / den, 0, -aa, 0, 1}); };
  return {make(c + c1), make(c - c1)};
}

std::pair<Rational, Rational> c4_params(const Rational& p, const Rational& r) {
  const Rational W = c4_subfield_data(p, r).W;
  return {-(p * p + 1) * (p * p + 4) * W, p * (p * p + 3)};
}

PolyQ hfull_f20(const Rational& p, const Rational& r, const Rational& p1, const Rational& r1) {
  const F20ToD5 x = f20_to_d5(p, r), y = f20_to_d5(p1, r1);
  if (x.rational && y.rational) return hfull(x.s_rat, x.t_rat, y.s_rat, y.t_rat);
  if (x.rational || y.rational || x.s.D == y.s.D) {
    const Integer D = x.rational ? y.s.D : x.s.D;
    auto pick = [&](const F20ToD5& z, bool want_t) {
      if (z.rational) return QuadNum::rational(want_t ? z.t_rat : z.s_rat, D);
      return want_t ? z.t : z.s;
    };
    return rational_part(hfull(pick(x, false), pick(x, true), pick(y, false), pick(y, true)));
  }
  const Integer &D1 = x.s.D, &D2 = y.s.D;
  PolyBiquad h = hfull(BiquadNum::embed(x.s, D1, D2, true), BiquadNum::embed(x.t, D1, D2, true),
                       BiquadNum::embed(y.s, D1, D2, false), BiquadNum::embed(y.t, D1, D2, false));
  return h.map([](const BiquadNum& z) {
    if (!z.is_rational()) throw std::logic_error("degree-40 product has irrational coefficients");
    return z.a;
  });
}

std::pair<ResolventKind, int> parse_resolvent_kind(std::string_view name) {
  if (name.size() == 2 && (name[0] == 'F' || name[0] == 'H') && name[1] >= '1' && name[1] <= '4') {
    const int i = name[1] - '0';
    if (name[0] == 'H') return {ResolventKind::H, i};
    static constexpr ResolventKind fk[] = {ResolventKind::F1, ResolventKind::F2, ResolventKind::F3, ResolventKind::F4};
    return {fk[i - 1], 1};
  }
  if (name == "Hfull") return {ResolventKind::Hfull, 1};
  if (name == "C4pm") return {ResolventKind::C4pm, 1};
  throw ParseError("unknown resolvent kind '" + std::string(name) + "'");
}

std::string resolvent_kind_name(ResolventKind kind, int index) {
  switch (kind) {
    case ResolventKind::F1: return "F1";
    case ResolventKind::F2: return "F2";
    case ResolventKind::F3: return "F3";
    case ResolventKind::F4: return "F4";
    case ResolventKind::H: return "H" + std::to_string(index);
    case ResolventKind::Hfull: return "Hfull";
    case ResolventKind::C4pm: return "C4pm";
  }
  return "?";
}

std::optional<BrumerParams> rational_brumer_params(const ParamPoint& pt) {
  switch (pt.family) {
    case Family::D5: return BrumerParams{pt.a, pt.b, std::nullopt};
    case Family::C5HT: {
      auto h = ht_params_from_AB(pt.a, pt.b);
      return BrumerParams{h.s, h.t, h.d};
    }
    case Family::F20P:
    case Family::F20R: {
      const ParamPoint r = to_f20r(pt);
      auto x = f20_to_d5(r.a, r.b);
      if (!x.rational) return std::nullopt;
      return BrumerParams{x.s_rat, x.t_rat, std::nullopt};
    }
    case Family::C4: return std::nullopt;
  }
  return std::nullopt;
}

namespace {

bool is_f20(const ParamPoint& pt) { return pt.family == Family::F20P || pt.family == Family::F20R; }

}  // namespace

ResolventBundle make_resolvent(ResolventKind kind, int index, const ParamPoint& left, const ParamPoint& right) {
  ResolventBundle b;
  b.kind = kind;
  b.index = index;
  b.left = left;
  b.right = right;
  const std::string what = resolvent_kind_name(kind, index);
  switch (kind) {
    case ResolventKind::F1:
    case ResolventKind::F2:
    case ResolventKind::F3:
    case ResolventKind::F4: {
      auto x = rational_brumer_params(left), y = rational_brumer_params(right);
      if (!x || !y) throw ParseError(what + " needs points with rational Brumer parameters");
      const int i = static_cast<int>(kind) - static_cast<int>(ResolventKind::F1) + 1;
      b.poly = fi(i, x->s, x->t, y->s, y->t);
      break;
    }
    case ResolventKind::H: {
      auto x = rational_brumer_params(left), y = rational_brumer_params(right);
      if (!x || !y) throw ParseError(what + " needs points with rational Brumer parameters");
      for (auto* z : {&x, &y}) {
        if (!(*z)->d) {
          auto dl = delta_d5((*z)->s, (*z)->t);
          if (!dl.is_square) throw ParseError(what + " needs delta to be a square (cyclic quintic)");
          (*z)->d = *dl.root;
          b.caveats.push_back("sign of d chosen as the positive root of delta");
        }
      }
      b.poly = h_c5(index, x->s, x->t, *x->d, y->s, y->t, *y->d);
      break;
    }
    case ResolventKind::Hfull: {
      if (is_f20(left) && is_f20(right)) {
        const ParamPoint l = to_f20r(left), r = to_f20r(right);
        b.poly = hfull_f20(l.a, l.b, r.a, r.b);
      } else {
        auto x = rational_brumer_params(left), y = rational_brumer_params(right);
        if (!x || !y) throw ParseError(what + " needs two F20 points or two points with rational Brumer parameters");
        b.poly = hfull(x->s, x->t, y->s, y->t);
      }
      break;
    }
    case ResolventKind::C4pm: {
      if (!is_f20(left) || !is_f20(right)) throw ParseError(what + " needs two F20 points");
      const ParamPoint l = to_f20r(left), r = to_f20r(right);
      auto [a, c] = c4_params(l.a, l.b);
      auto [a1, c1] = c4_params(r.a, r.b);
      auto pr = thc4_compare_poly(a, c, a1, c1);
      b.poly = pr.plus * pr.minus;
      break;
    }
  }
  if (has_repeated_factor(b.poly)) b.caveats.push_back("repeated factors");
  return b;
}

}  // namespace quinfield
