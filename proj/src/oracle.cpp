#include "quinfield/oracle.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "quinfield/resultant.hpp"

namespace quinfield {

namespace {

template <class T>
T div(const T& a, const T& b) {
  if (Ops<T>::is_zero(b)) throw std::domain_error("oracle: zero denominator");
  return a / b;
}

template <class T>
Poly<T> product_of_linears(const std::vector<T>& roots, const T& like) {
  Poly<T> acc = Poly<T>::constant(Ops<T>::one(like));
  for (const auto& r : roots) acc = acc * Poly<T>({T(-r), Ops<T>::one(like)}, Ops<T>::zero(like));
  return acc;
}

}  // namespace

template <class T>
XY<T> act_sigma(const XY<T>& p) {
  return {p.y, -div<T>(p.y - Ops<T>::one(p.x), p.x)};
}

template <class T>
XY<T> act_tau(const XY<T>& p) {
  return {p.x, -div<T>(p.x - Ops<T>::one(p.x), p.y)};
}

template <class T>
std::array<T, 5> d5_orbit(const T& x, const T& y) {
  const T one = Ops<T>::one(x);
  return {x, y, -div<T>(y - one, x), div<T>(x + y - one, x * y), -div<T>(x - one, y)};
}

template <class T>
XYParams<T> params_from_xy(const T& x, const T& y) {
  auto k = [&](long v) { return cst(x, v); };
  const T one = k(1);
  const T x2 = x * x, x3 = x2 * x, x4 = x3 * x, y2 = y * y, y3 = y2 * y, y4 = y3 * y;
  XYParams<T> p;
  const T sn = x - k(2) * x2 + x3 + y - k(4) * x * y + k(5) * x2 * y - k(3) * x3 * y + x4 * y - k(2) * y2 +
               k(5) * x * y2 - k(5) * x2 * y2 + k(2) * x3 * y2 + y3 - k(3) * x * y3 + k(2) * x2 * y3 - x3 * y3 +
               x * y4;
  p.s = -div<T>(sn, x2 * y2);
  p.t = -div<T>((x - one) * (y - one) * (x + y - one), x * y);
  p.d = div<T>((x - y) * (x + x * y - one) * (y + x * y - one) * (x2 + y - one) * (x + y2 - one), x3 * y3);
  if (Ops<T>::is_zero(k(2))) {
    const T m = p.s + p.t + p.s * p.t;
    if (!Ops<T>::is_zero(m)) {
      const T x5 = x4 * x, x6 = x5 * x, y5 = y4 * y, y6 = y5 * y;
      const T en = x2 + x3 + x4 + x5 + y + x4 * y + y2 + x2 * y2 + x5 * y2 + x6 * y2 + y3 + y4 + x * y4 +
                   x4 * y5 + x * y6;
      p.e = div<T>(div<T>(en, x3 * y3), m);
    }
  }
  return p;
}

template <class T>
std::vector<XY<T>> d5_point_orbit(const XY<T>& p) {
  std::vector<XY<T>> pts{p};
  for (std::size_t i = 0; i < pts.size() && pts.size() <= 10; ++i) {
    for (const auto& img : {act_sigma(pts[i]), act_tau(pts[i])}) {
      bool seen = false;
      for (const auto& q : pts) seen = seen || (q.x == img.x && q.y == img.y);
      if (!seen) pts.push_back(img);
    }
  }
  if (pts.size() != 10) throw std::domain_error("oracle: point has a nontrivial stabilizer");
  return pts;
}

template <class T>
T invariant_P(const XY<T>& a, const XY<T>& b) {
  const T one = Ops<T>::one(a.x);
  const T xx = a.x * b.x, yy = a.y * b.y;
  return xx + yy + div<T>((a.y - one) * (b.y - one), xx) + div<T>((a.x + a.y - one) * (b.x + b.y - one), xx * yy) +
         div<T>((a.x - one) * (b.x - one), yy);
}

template <class T>
Poly<T> f1_from_xy(const XY<T>& a, const XY<T>& b) {
  std::vector<T> roots;
  for (const auto& g : d5_point_orbit(b)) roots.push_back(invariant_P(a, g));
  return product_of_linears(roots, a.x);
}

template <class T>
Poly<T> f20_resolvent_from_xy(const T& x, const T& y) {
  const T one = Ops<T>::one(x), w = x + y - one;
  std::vector<T> v{div<T>(x - one, x * x), div<T>(y - one, y * y), -div<T>(x * w, (y - one) * (y - one)),
                   -div<T>(x * y * (x - one) * (y - one), w * w), -div<T>(y * w, (x - one) * (x - one))};
  return product_of_linears(v, x);
}

#define QF_ORACLE(T)                                                \
  template XY<T> act_sigma(const XY<T>&);                           \
  template XY<T> act_tau(const XY<T>&);                             \
  template std::array<T, 5> d5_orbit(const T&, const T&);           \
  template XYParams<T> params_from_xy(const T&, const T&);          \
  template std::vector<XY<T>> d5_point_orbit(const XY<T>&);         \
  template T invariant_P(const XY<T>&, const XY<T>&);               \
  template Poly<T> f1_from_xy(const XY<T>&, const XY<T>&);          \
  template Poly<T> f20_resolvent_from_xy(const T&, const T&);

QF_ORACLE(Rational)
QF_ORACLE(GF2m)
#undef QF_ORACLE

// ---------------------------------------------------------------------------

bool SuiteReport::all_passed() const {
  for (const auto& id : identities) {
    if (id.passed != id.checked || id.checked == 0) return false;
  }
  return true;
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json ids = nlohmann::json::array();
  for (const auto& id : identities) {
    ids.push_back({{"name", id.name},
                   {"checked", id.checked},
                   {"passed", id.passed},
                   {"first_failure", id.first_failure ? nlohmann::json(*id.first_failure) : nlohmann::json()}});
  }
  return {{"seed", options.seed},
          {"trials", options.trials},
          {"char2_field_bits", options.char2_bits},
          {"identities", ids},
          {"all_passed", all_passed()}};
}

namespace {

class Tally {
 public:
  explicit Tally(std::vector<IdentityResult>& out) : out_(out) {}

  void record(const std::string& name, int trial, const std::string& where, bool ok) {
    IdentityResult* r = nullptr;
    for (auto& id : out_) {
      if (id.name == name) r = &id;
    }
    if (r == nullptr) {
      out_.push_back({name, 0, 0, std::nullopt});
      r = &out_.back();
    }
    ++r->checked;
    if (ok) {
      ++r->passed;
    } else if (!r->first_failure) {
      r->first_failure = "trial " + std::to_string(trial) + " at " + where;
    }
  }

  // An exception inside an identity check counts as a failure, not a skip.
  void check(const std::string& name, int trial, const std::string& where, const std::function<bool()>& f) {
    bool ok = false;
    try {
      ok = f();
    } catch (const std::exception&) {
      ok = false;
    }
    record(name, trial, where, ok);
  }

 private:
  std::vector<IdentityResult>& out_;
};

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-20, 20), den(1, 7);
  return ratio(num(rng), den(rng));
}

struct Char0Point {
  XY<Rational> a, b;
  XYParams<Rational> pa, pb;
  Rational A, B;
  PolyQ oracle_f1;
};

// Resamples until every denominator the checks touch is nonzero.
Char0Point sample_char0(std::mt19937_64& rng) {
  for (;;) {
    try {
      Char0Point c;
      c.a = {random_rational(rng), random_rational(rng)};
      c.b = {random_rational(rng), random_rational(rng)};
      for (const auto* p : {&c.a, &c.b}) {
        d5_orbit(p->x, p->y);
        if (p->x == 1 || p->y == 1 || p->x + p->y == 1) throw std::domain_error("boundary");
      }
      c.pa = params_from_xy(c.a.x, c.a.y);
      c.pb = params_from_xy(c.b.x, c.b.y);
      if (c.pa.t == 0 || c.pb.t == 0 || c.pa.d == 0 || c.pb.d == 0) throw std::domain_error("inseparable");
      f20_resolvent_from_xy(c.a.x, c.a.y);
      c.oracle_f1 = f1_from_xy(c.a, c.b);
      const Rational& s = c.pa.s;
      const Rational& t = c.pa.t;
      const Rational den = -2 + 7 * s + 33 * t + s * t - 8 * t * t;
      if (den == 0) throw std::domain_error("A,B chart");
      c.A = (s + 13 * t - 7 * s * t - 2 * t * t + 2 * t * t * t) / den;
      c.B = c.pa.d / den;
      ht_params_from_AB(c.A, c.B);
      if (ht_Q(c.A, c.B) == 0) throw std::domain_error("Q = 0");
      return c;
    } catch (const std::domain_error&) {
    }
  }
}

struct Char2Point {
  XY<GF2m> a, b;
  XYParams<GF2m> pa, pb;
  PolyF2m oracle_f1;
};

Char2Point sample_char2(std::mt19937_64& rng, const GF2mField& F) {
  const std::uint64_t mask = F.degree() >= 64 ? ~0ULL : ((1ULL << F.degree()) - 1);
  auto elem = [&] { return GF2m(rng() & mask, F); };
  for (;;) {
    try {
      Char2Point c;
      c.a = {elem(), elem()};
      c.b = {elem(), elem()};
      const GF2m one(1, F);
      for (const auto* p : {&c.a, &c.b}) {
        d5_orbit(p->x, p->y);
        if (p->x == one || p->y == one || p->x + p->y == one) throw std::domain_error("boundary");
      }
      c.pa = params_from_xy(c.a.x, c.a.y);
      c.pb = params_from_xy(c.b.x, c.b.y);
      if (!c.pa.e || !c.pb.e) throw std::domain_error("s+t+st = 0");
      c.oracle_f1 = f1_from_xy(c.a, c.b);
      return c;
    } catch (const std::domain_error&) {
    }
  }
}

std::string describe(const Char0Point& c) {
  return "(" + to_string(c.a.x) + "," + to_string(c.a.y) + "," + to_string(c.b.x) + "," + to_string(c.b.y) + ")";
}

std::string describe(const Char2Point& c) {
  std::ostringstream os;
  os << std::hex << "(0x" << c.a.x.v << ",0x" << c.a.y.v << ",0x" << c.b.x.v << ",0x" << c.b.y.v << ")";
  return os.str();
}

}  // namespace

SuiteReport identity_suite(const SuiteOptions& options) {
  if (options.trials < 1) throw std::invalid_argument("identity suite needs trials >= 1");
  SuiteReport report;
  report.options = options;
  Tally tally(report.identities);
  std::mt19937_64 rng(options.seed);

  for (int trial = 1; trial <= options.trials; ++trial) {
    const Char0Point c = sample_char0(rng);
    const std::string where = describe(c);
    const auto& pa = c.pa;
    const auto& pb = c.pb;

    tally.check("brumer_orbit_product", trial, where, [&] {
      auto o = d5_orbit(c.a.x, c.a.y);
      return product_of_linears(std::vector<Rational>(o.begin(), o.end()), Rational(0)) == brumer_d5(pa.s, pa.t);
    });
    tally.check("d_squared_equals_delta", trial, where, [&] { return pa.d * pa.d == delta(pa.s, pa.t); });
    tally.check("brumer_discriminant", trial, where, [&] {
      const Rational dl = delta(pa.s, pa.t);
      return discriminant(brumer_d5(pa.s, pa.t)) == pa.t * pa.t * dl * dl;
    });
    tally.check("f1_formula_vs_oracle", trial, where, [&] {
      PolyQ formula = f1(pa.s, pa.t, pb.s, pb.t);
      if (options.mutate_c2) {
        auto g = g1_g2(pa.s, pa.t, pb.s, pb.t);
        PolyQ g1 = g.first + PolyQ::monomial(Rational(1, 2), 2);
        formula = g1 * g1 - (g.second * g.second) * (delta(pa.s, pa.t) * delta(pb.s, pb.t) / 4);
      }
      return formula == c.oracle_f1;
    });
    tally.check("f20_orbit_product", trial, where, [&] {
      const Rational p = pa.t - 1 / pa.t, q = pa.s + (pa.s + 5 * pa.t) / (pa.t * pa.t);
      return f20_resolvent_from_xy(c.a.x, c.a.y) == f20_f(p, q);
    });
    tally.check("ht_chart_roundtrip", trial, where, [&] {
      auto h = ht_params_from_AB(c.A, c.B);
      return h.s == pa.s && h.t == pa.t && h.d == pa.d;
    });
    tally.check("c5_discriminant_formula", trial, where,
                [&] { return discriminant(ht_c5_f(c.A, c.B)) == ht_c5_discriminant(c.A, c.B); });
    tally.check("h1_split", trial, where, [&] {
      return h_c5(1, pa.s, pa.t, pa.d, pb.s, pb.t, pb.d) * h_c5(1, pa.s, pa.t, Rational(-pa.d), pb.s, pb.t, pb.d) ==
             f1(pa.s, pa.t, pb.s, pb.t);
    });
  }

  if (options.char2_bits > 0) {
    const auto& F = GF2mField::get(options.char2_bits);
    const int n = options.char2_trials < 0 ? options.trials : options.char2_trials;
    for (int trial = 1; trial <= n; ++trial) {
      const Char2Point c = sample_char2(rng, F);
      const std::string where = describe(c);
      const auto& pa = c.pa;
      const auto& pb = c.pb;
      tally.check("char2_brumer_orbit_product", trial, where, [&] {
        auto o = d5_orbit(c.a.x, c.a.y);
        return product_of_linears(std::vector<GF2m>(o.begin(), o.end()), GF2m(0, F)) == brumer(pa.s, pa.t);
      });
      tally.check("char2_artin_schreier", trial, where,
                  [&] { return Ops<GF2m>::is_zero(*pa.e * *pa.e + *pa.e + epsilon_char2(pa.s, pa.t)); });
      tally.check("char2_f1_formula_vs_oracle", trial, where,
                  [&] { return f1_char2(pa.s, pa.t, pb.s, pb.t, options.coupling) == c.oracle_f1; });
      tally.check("char2_f20_orbit_product", trial, where, [&] {
        const GF2m one(1, F);
        const GF2m p = pa.t + one / pa.t, q = pa.s + (pa.s + pa.t) / (pa.t * pa.t);
        return f20_resolvent_from_xy(c.a.x, c.a.y) == f20_char2(p, q);
      });
    }
  }
  return report;
}

}  // namespace quinfield
