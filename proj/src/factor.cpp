#include "quinfield/factor.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace quinfield {

namespace {

// ---------------------------------------------------------------- field traits

template <class T>
struct FieldInfo;

template <>
struct FieldInfo<Zp> {
  static Integer size(const Zp& like) { return Integer(static_cast<unsigned long>(like.p)); }
  static unsigned long characteristic(const Zp& like) { return like.p; }
  static unsigned degree(const Zp&) { return 1; }
  static Zp pth_root(const Zp& a) { return a; }
  static Zp random(std::mt19937_64& rng, const Zp& like) {
    return Zp(static_cast<std::int64_t>(rng() % like.p), like.p);
  }
};

template <>
struct FieldInfo<GF2m> {
  static unsigned degree(const GF2m& like) { return like.field ? like.field->degree() : 1; }
  static Integer size(const GF2m& like) { return pow(Integer(2), degree(like)); }
  static unsigned long characteristic(const GF2m&) { return 2; }
  static GF2m pth_root(const GF2m& a) { return a.sqrt(); }
  static GF2m random(std::mt19937_64& rng, const GF2m& like) {
    if (!like.field) return Ops<GF2m>::from_int(like, static_cast<long>(rng() & 1U));
    const unsigned m = like.field->degree();
    return GF2m(rng() & ((1ULL << m) - 1), *like.field);
  }
};

template <class T>
Poly<T> x_of(const Poly<T>& like) {
  return Poly<T>::x(like.zero_elem());
}

template <class T>
Poly<T> one_of(const Poly<T>& like) {
  return Poly<T>::constant(like.one_elem());
}

// Coefficient keys for a deterministic factor order.
std::vector<std::uint64_t> coef_key(const Poly<Zp>& f) {
  std::vector<std::uint64_t> k;
  for (const auto& c : f.coeffs()) k.push_back(c.v);
  return k;
}
std::vector<std::uint64_t> coef_key(const Poly<GF2m>& f) {
  std::vector<std::uint64_t> k;
  for (const auto& c : f.coeffs()) k.push_back(c.v);
  return k;
}
std::vector<Rational> coef_key(const PolyQ& f) { return {f.coeffs().begin(), f.coeffs().end()}; }
std::vector<std::pair<Rational, Rational>> coef_key(const PolyQuad& f) {
  std::vector<std::pair<Rational, Rational>> k;
  for (const auto& c : f.coeffs()) k.emplace_back(c.a, c.b);
  return k;
}

template <class T>
void sort_factors(std::vector<std::pair<Poly<T>, int>>& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    auto ka = coef_key(a.first);
    auto kb = coef_key(b.first);
    if (ka != kb) return ka < kb;
    return a.second < b.second;
  });
}

// Yun's algorithm over a field of characteristic 0; f monic.
template <class T>
std::vector<std::pair<Poly<T>, int>> yun(const Poly<T>& f) {
  std::vector<std::pair<Poly<T>, int>> out;
  if (f.degree() < 1) return out;
  Poly<T> fp = f.derivative();
  Poly<T> b = gcd(f, fp);
  Poly<T> c = exact_div(f, b);
  Poly<T> d = exact_div(fp, b) - c.derivative();
  for (int i = 1; c.degree() > 0; ++i) {
    Poly<T> a = gcd(c, d);
    c = exact_div(c, a);
    d = exact_div(d, a) - c.derivative();
    if (a.degree() > 0) out.emplace_back(a, i);
  }
  return out;
}

// ---------------------------------------------------------------- finite fields

template <class T>
Poly<T> pth_root_poly(const Poly<T>& f, unsigned long p) {
  std::vector<T> v;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) v.push_back(FieldInfo<T>::pth_root(f.coeffs()[i]));
  return Poly<T>(std::move(v), f.zero_elem());
}

template <class T>
void sqf_ff(const Poly<T>& f, int scale, std::vector<std::pair<Poly<T>, int>>& out) {
  if (f.degree() < 1) return;
  const unsigned long p = FieldInfo<T>::characteristic(f.zero_elem());
  Poly<T> fp = f.derivative();
  if (fp.is_zero()) {
    sqf_ff(pth_root_poly(f, p), scale * static_cast<int>(p), out);
    return;
  }
  Poly<T> c = gcd(f, fp);
  Poly<T> w = exact_div(f, c);
  for (int i = 1; w.degree() > 0; ++i) {
    Poly<T> y = gcd(w, c);
    Poly<T> z = exact_div(w, y);
    if (z.degree() > 0) out.emplace_back(z, i * scale);
    w = y;
    c = exact_div(c, y);
  }
  if (c.degree() > 0) sqf_ff(pth_root_poly(c, p), scale * static_cast<int>(p), out);
}

// Distinct-degree factorization of a monic squarefree f: (product of all
// irreducible factors of degree d, d).
template <class T>
std::vector<std::pair<Poly<T>, int>> ddf(const Poly<T>& f) {
  std::vector<std::pair<Poly<T>, int>> out;
  const Integer q = FieldInfo<T>::size(f.zero_elem());
  const Poly<T> X = x_of(f);
  Poly<T> rest = f;
  Poly<T> h = X % rest;
  int d = 0;
  while (rest.degree() >= 2 * (d + 1)) {
    ++d;
    h = powmod(h, q, rest);
    Poly<T> g = gcd(h - X, rest);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      rest = exact_div(rest, g);
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest, rest.degree());
  return out;
}

template <class T>
Poly<T> random_poly_below(std::mt19937_64& rng, const Poly<T>& like, int n) {
  std::vector<T> v;
  for (int i = 0; i < n; ++i) v.push_back(FieldInfo<T>::random(rng, like.zero_elem()));
  return Poly<T>(std::move(v), like.zero_elem());
}

// Equal-degree splitting (Cantor-Zassenhaus); f monic, product of irreducibles of degree d.
template <class T>
void edf(const Poly<T>& f, int d, std::mt19937_64& rng, std::vector<Poly<T>>& out) {
  const int n = f.degree();
  if (n == d) {
    out.push_back(f);
    return;
  }
  const T& like = f.zero_elem();
  const Integer q = FieldInfo<T>::size(like);
  const bool char2 = FieldInfo<T>::characteristic(like) == 2;
  const unsigned long trace_len = static_cast<unsigned long>(FieldInfo<T>::degree(like)) * static_cast<unsigned long>(d);
  Integer e = (pow(q, static_cast<unsigned long>(d)) - 1) / 2;
  for (;;) {
    Poly<T> a = random_poly_below(rng, f, n);
    if (a.degree() < 1) continue;
    Poly<T> b;
    if (char2) {
      b = a;
      Poly<T> term = a;
      for (unsigned long i = 1; i < trace_len; ++i) {
        term = (term * term) % f;
        b += term;
      }
    } else {
      b = powmod(a, e, f) - one_of(f);
    }
    Poly<T> g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < n) {
      edf(g, d, rng, out);
      edf(exact_div(f, g), d, rng, out);
      return;
    }
  }
}

// ---------------------------------------------------------------- integer polys mod m

using ZPoly = std::vector<Integer>;

int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmod(ZPoly a, const Integer& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  ztrim(a);
  return a;
}

ZPoly zsym(ZPoly a, const Integer& m) {
  Integer half = m / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  ztrim(a);
  return a;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  ztrim(r);
  return r;
}

ZPoly zadd(ZPoly a, const ZPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), Integer(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  ztrim(a);
  return a;
}

ZPoly zsub(ZPoly a, const ZPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), Integer(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  ztrim(a);
  return a;
}

ZPoly zscale(ZPoly a, const Integer& s) {
  for (auto& c : a) c *= s;
  ztrim(a);
  return a;
}

// a = q*b + r mod m with b monic mod m.
std::pair<ZPoly, ZPoly> zdivrem_monic(ZPoly a, const ZPoly& b, const Integer& m) {
  a = zmod(std::move(a), m);
  const int db = zdeg(b);
  if (zdeg(a) < db) return {{}, a};
  ZPoly q(static_cast<std::size_t>(zdeg(a) - db + 1), Integer(0));
  for (int i = zdeg(a); i >= db; --i) {
    Integer top = a[static_cast<std::size_t>(i)];
    mpz_fdiv_r(top.get_mpz_t(), top.get_mpz_t(), m.get_mpz_t());
    if (top == 0) continue;
    q[static_cast<std::size_t>(i - db)] = top;
    for (int j = 0; j <= db; ++j) {
      auto& slot = a[static_cast<std::size_t>(i - db + j)];
      slot -= top * b[static_cast<std::size_t>(j)];
      mpz_fdiv_r(slot.get_mpz_t(), slot.get_mpz_t(), m.get_mpz_t());
    }
  }
  a.resize(static_cast<std::size_t>(db));
  return {zmod(std::move(q), m), zmod(std::move(a), m)};
}

PolyFp to_fp(const ZPoly& a, std::uint64_t p) {
  std::vector<Zp> v;
  for (const auto& c : a) v.push_back(Zp::reduce(c, p));
  return PolyFp(std::move(v), Zp(0, p));
}

ZPoly from_fp(const PolyFp& a) {
  ZPoly v;
  for (const auto& c : a.coeffs()) v.emplace_back(static_cast<unsigned long>(c.v));
  return v;
}

ZPoly to_z(const PolyQ& f) { return integer_coeffs(f); }

// s*a + t*b = 1 over F_p (a, b coprime).
std::pair<PolyFp, PolyFp> xgcd_fp(const PolyFp& a, const PolyFp& b) {
  const Zp zero = a.zero_elem();
  PolyFp r0 = a, r1 = b;
  PolyFp s0 = PolyFp::constant(Zp(1, zero.p)), s1(zero);
  PolyFp t0(zero), t1 = PolyFp::constant(Zp(1, zero.p));
  while (!r1.is_zero()) {
    auto qr = divrem(r0, r1);
    r0 = std::exchange(r1, qr.remainder);
    s0 = std::exchange(s1, s0 - qr.quotient * s1);
    t0 = std::exchange(t1, t0 - qr.quotient * t1);
  }
  if (r0.degree() != 0) throw std::logic_error("xgcd_fp: inputs not coprime");
  Zp inv = r0.lead().inverse();
  return {s0 * inv, t0 * inv};
}

// One quadratic Hensel step (von zur Gathen & Gerhard, Alg. 15.10):
// f = g*h mod m, s*g + t*h = 1 mod m, h monic  ->  the same mod M (M | m^2).
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Integer& M) {
  ZPoly e = zmod(zsub(f, zmul(g, h)), M);
  auto [q, r] = zdivrem_monic(zmul(s, e), h, M);
  ZPoly g2 = zmod(zadd(zadd(g, zmul(t, e)), zmul(q, g)), M);
  ZPoly h2 = zmod(zadd(h, r), M);
  ZPoly b = zmod(zsub(zadd(zmul(s, g2), zmul(t, h2)), ZPoly{Integer(1)}), M);
  auto [c, d] = zdivrem_monic(zmul(s, b), h2, M);
  s = zmod(zsub(s, d), M);
  t = zmod(zsub(zsub(t, zmul(t, b)), zmul(c, g2)), M);
  g = std::move(g2);
  h = std::move(h2);
}

// Lifts monic modular factors of f (f = lc * prod facs mod p) to monic
// factors mod pk, via a balanced factor tree.
void multi_lift(const ZPoly& f, const std::vector<PolyFp>& facs, std::uint64_t p, const Integer& pk,
                std::vector<ZPoly>& out) {
  const Integer lc = f.back();
  if (facs.size() == 1) {
    Integer inv;
    Integer lcm = lc;
    mpz_fdiv_r(lcm.get_mpz_t(), lcm.get_mpz_t(), pk.get_mpz_t());
    if (!mpz_invert(inv.get_mpz_t(), lcm.get_mpz_t(), pk.get_mpz_t())) throw std::logic_error("lc not invertible");
    out.push_back(zmod(zscale(f, inv), pk));
    return;
  }
  const std::size_t half = facs.size() / 2;
  std::vector<PolyFp> left(facs.begin(), facs.begin() + static_cast<std::ptrdiff_t>(half));
  std::vector<PolyFp> right(facs.begin() + static_cast<std::ptrdiff_t>(half), facs.end());
  const Zp one(1, p);
  PolyFp gl = PolyFp::constant(Zp::reduce(lc, p));
  for (const auto& a : left) gl = gl * a;
  PolyFp hr = PolyFp::constant(one);
  for (const auto& a : right) hr = hr * a;
  auto [s0, t0] = xgcd_fp(gl, hr);
  ZPoly g = from_fp(gl);
  g.back() = lc;
  g = zmod(std::move(g), pk);
  ZPoly h = from_fp(hr);
  ZPoly s = from_fp(s0);
  ZPoly t = from_fp(t0);
  Integer m(static_cast<unsigned long>(p));
  while (m < pk) {
    Integer M = m * m;
    if (M > pk) M = pk;
    hensel_step(f, g, h, s, t, M);
    m = M;
  }
  multi_lift(g, left, p, pk, out);
  multi_lift(h, right, p, pk, out);
}

bool is_small_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  do {
    ++n;
  } while (!is_small_prime(n));
  return n;
}

// f mod p has the full degree and is squarefree.
bool good_prime(const ZPoly& f, std::uint64_t p) {
  if (mpz_divisible_ui_p(f.back().get_mpz_t(), p)) return false;
  PolyFp fp = to_fp(f, p);
  return gcd(fp, fp.derivative()).degree() == 0;
}

using DegreeMask = std::vector<bool>;

DegreeMask subset_sums(const std::vector<int>& degs, int n) {
  DegreeMask m(static_cast<std::size_t>(n) + 1, false);
  m[0] = true;
  for (int d : degs) {
    for (int s = n; s >= d; --s) {
      if (m[static_cast<std::size_t>(s - d)]) m[static_cast<std::size_t>(s)] = true;
    }
  }
  return m;
}

Integer max_abs(const ZPoly& f) {
  Integer m = 0;
  for (const auto& c : f) {
    if (abs(c) > m) m = abs(c);
  }
  return m;
}

// Irreducible factors of a primitive squarefree integer polynomial of degree >= 2.
std::vector<ZPoly> factor_squarefree_z(ZPoly f) {
  std::vector<ZPoly> result;
  const int n = zdeg(f);
  if (n <= 1) return {f};

  // Gather distinct-degree data at a handful of good primes; keep the prime
  // with the fewest modular factors and intersect the achievable degree sets.
  DegreeMask allowed(static_cast<std::size_t>(n) + 1, true);
  std::uint64_t best_p = 0;
  std::size_t best_count = 0;
  int tried = 0;
  for (std::uint64_t p = 3; tried < 7; p = next_prime(p)) {
    if (!good_prime(f, p)) continue;
    ++tried;
    PolyFp fp = to_fp(f, p).monic();
    auto degs = ddf_degrees(fp);
    DegreeMask ss = subset_sums(degs, n);
    for (int d = 0; d <= n; ++d) allowed[static_cast<std::size_t>(d)] = allowed[static_cast<std::size_t>(d)] && ss[static_cast<std::size_t>(d)];
    if (best_p == 0 || degs.size() < best_count) {
      best_p = p;
      best_count = degs.size();
    }
    if (degs.size() == 1) return {f};
  }
  bool any_proper = false;
  for (int d = 1; d < n; ++d) any_proper = any_proper || allowed[static_cast<std::size_t>(d)];
  if (!any_proper) return {f};

  const std::uint64_t p = best_p;
  auto modfz = factor_over_finite_field(to_fp(f, p), 1);
  std::vector<PolyFp> facs;
  for (const auto& [g, e] : modfz.factors) facs.push_back(g);

  // Mignotte-type bound on coefficients of lc * (any factor).
  Integer lc = abs(f.back());
  Integer norm_bound = sqrt(Integer(n + 1)) + 1;
  Integer B = lc * pow(Integer(2), static_cast<unsigned long>(n)) * norm_bound * max_abs(f);
  Integer pk(static_cast<unsigned long>(p));
  while (pk <= 2 * B) pk *= p;

  std::vector<ZPoly> lifted;
  multi_lift(f, facs, p, pk, lifted);

  // Zassenhaus recombination over subsets of increasing size.
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    const std::size_t r = lifted.size();
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    const Integer flc = f.back();
    const Integer target0 = flc * f[0];
    for (;;) {
      int dsum = 0;
      for (auto i : idx) dsum += zdeg(lifted[i]);
      if (allowed[static_cast<std::size_t>(dsum)]) {
        Integer c = flc;
        for (auto i : idx) {
          c *= lifted[i].empty() ? Integer(0) : lifted[i][0];
          mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), pk.get_mpz_t());
        }
        if (c > pk / 2) c -= pk;
        bool pass = (c == 0) ? target0 == 0 : mpz_divisible_p(target0.get_mpz_t(), c.get_mpz_t()) != 0;
        if (pass) {
          ZPoly g{flc};
          ZPoly h{flc};
          std::vector<bool> in(r, false);
          for (auto i : idx) in[i] = true;
          for (std::size_t i = 0; i < r; ++i) {
            if (in[i]) {
              g = zmod(zmul(g, lifted[i]), pk);
            } else {
              h = zmod(zmul(h, lifted[i]), pk);
            }
          }
          g = zsym(std::move(g), pk);
          h = zsym(std::move(h), pk);
          if (zmul(g, h) == zscale(f, flc)) {
            result.push_back(integer_coeffs(from_integers(g)));
            f = integer_coeffs(from_integers(h));
            std::vector<ZPoly> rest;
            for (std::size_t i = 0; i < r; ++i) {
              if (!in[i]) rest.push_back(lifted[i]);
            }
            lifted = std::move(rest);
            found = true;
          }
        }
      }
      if (found) break;
      // next combination
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == r - s + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  result.push_back(f);
  return result;
}

PolyQ monic_q(const ZPoly& z) { return from_integers(z).monic(); }

}  // namespace

// ---------------------------------------------------------------- public API

std::vector<std::pair<PolyQ, int>> squarefree_decompose(const PolyQ& f) {
  if (f.is_zero()) throw std::domain_error("squarefree decomposition of zero polynomial");
  return yun(f.monic());
}

template <class T>
std::vector<std::pair<Poly<T>, int>> squarefree_decompose_ff(const Poly<T>& f) {
  if (f.is_zero()) throw std::domain_error("squarefree decomposition of zero polynomial");
  std::vector<std::pair<Poly<T>, int>> out;
  sqf_ff(f.monic(), 1, out);
  return out;
}

template <class T>
std::vector<int> ddf_degrees(const Poly<T>& f) {
  std::vector<int> degs;
  for (const auto& [g, d] : ddf(f.monic())) {
    for (int i = 0; i < g.degree() / d; ++i) degs.push_back(d);
  }
  return degs;
}

template <class T>
Factorization<T> factor_over_finite_field(const Poly<T>& f, std::uint64_t seed) {
  if (f.is_zero()) throw std::domain_error("factorization of zero polynomial");
  Factorization<T> out{f.lead(), {}};
  std::mt19937_64 rng(seed);
  for (const auto& [part, e] : squarefree_decompose_ff(f)) {
    for (const auto& [g, d] : ddf(part)) {
      std::vector<Poly<T>> pieces;
      edf(g, d, rng, pieces);
      for (auto& h : pieces) out.factors.emplace_back(std::move(h), e);
    }
  }
  sort_factors(out.factors);
  return out;
}

template std::vector<std::pair<PolyFp, int>> squarefree_decompose_ff(const PolyFp&);
template std::vector<std::pair<PolyF2m, int>> squarefree_decompose_ff(const PolyF2m&);
template std::vector<int> ddf_degrees(const PolyFp&);
template std::vector<int> ddf_degrees(const PolyF2m&);
template Factorization<Zp> factor_over_finite_field(const PolyFp&, std::uint64_t);
template Factorization<GF2m> factor_over_finite_field(const PolyF2m&, std::uint64_t);

FactorizationQ factor_over_rationals(const PolyQ& f) {
  if (f.is_zero()) throw std::domain_error("factorization of zero polynomial");
  FactorizationQ out{f.lead(), {}};
  for (const auto& [part, e] : squarefree_decompose(f)) {
    ZPoly z = to_z(part);
    // Pull out X first; it is common in resolvents and keeps f(0) != 0 for the
    // constant-term test.
    if (z[0] == 0) {
      out.factors.emplace_back(polyq({0, 1}), e);
      z.erase(z.begin());
    }
    if (zdeg(z) < 1) continue;
    for (const auto& g : factor_squarefree_z(z)) out.factors.emplace_back(monic_q(g), e);
  }
  sort_factors(out.factors);
  return out;
}

std::vector<Rational> rational_roots(const PolyQ& f) {
  if (f.is_zero()) throw std::domain_error("roots of zero polynomial");
  std::vector<Rational> roots;
  if (f.degree() < 1) return roots;
  PolyQ sq = exact_div(f, gcd(f, f.derivative()));
  ZPoly g = to_z(sq);
  if (g[0] == 0) {
    roots.emplace_back(0);
    g.erase(g.begin());
  }
  if (zdeg(g) >= 1) {
    std::uint64_t p = 1009;
    while (!good_prime(g, p)) p = next_prime(p);
    PolyFp gp = to_fp(g, p).monic();
    PolyFp X = PolyFp::x(Zp(0, p));
    PolyFp lin = gcd(powmod(X, Integer(static_cast<unsigned long>(p)), gp) - X, gp);
    if (lin.degree() > 0) {
      std::mt19937_64 rng(1);
      std::vector<PolyFp> pieces;
      edf(lin, 1, rng, pieces);
      const Integer lc = g.back();
      const Integer bound = 2 * abs(lc) * (1 + max_abs(g));
      Integer pk(static_cast<unsigned long>(p));
      while (pk <= bound) pk *= pk;
      const ZPoly gd = [&] {
        ZPoly d;
        for (std::size_t i = 1; i < g.size(); ++i) d.push_back(g[i] * static_cast<unsigned long>(i));
        return d;
      }();
      auto eval_mod = [](const ZPoly& a, const Integer& x, const Integer& m) {
        Integer acc = 0;
        for (auto it = a.rbegin(); it != a.rend(); ++it) {
          acc = acc * x + *it;
          mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
        }
        return acc;
      };
      for (const auto& piece : pieces) {
        // piece = X + c, so the root is -c mod p
        Integer r(static_cast<unsigned long>((-piece[0]).v));
        Integer m(static_cast<unsigned long>(p));
        while (m < pk) {
          m = m * m;
          if (m > pk) m = pk;
          Integer num = eval_mod(g, r, m);
          Integer den = eval_mod(gd, r, m);
          Integer inv;
          if (!mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t())) break;
          r -= num * inv;
          mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
        }
        Integer c = lc * r;
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), pk.get_mpz_t());
        if (c > pk / 2) c -= pk;
        Rational cand = ratio(c, lc);
        if (sgn(from_integers(g).eval(cand)) == 0) roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {

Integer context_of(const PolyQuad& f) {
  for (const auto& c : f.coeffs()) {
    if (c.D != 0) return c.D;
  }
  return f.zero_elem().D;
}

// g(X - k sqrt D)
PolyQuad shift(const PolyQuad& g, long k, const Integer& D) {
  PolyQuad lin({QuadNum(Rational(0), Rational(-k), D), QuadNum(Rational(1), Rational(0), D)});
  return g.compose(lin);
}

std::vector<PolyQuad> trager_squarefree(const PolyQuad& g, const Integer& D) {
  if (g.degree() <= 1) return {g};
  long k = 0;
  PolyQuad gk = g;
  PolyQ N = norm(gk);
  for (long step = 1; gcd(N, N.derivative()).degree() > 0; ++step) {
    k = (step % 2 == 1) ? (step + 1) / 2 : -(step / 2);
    gk = shift(g, k, D);
    N = norm(gk);
  }
  FactorizationQ nf = factor_over_rationals(N);
  if (nf.factors.size() == 1) return {g};
  std::vector<PolyQuad> out;
  for (const auto& [ni, e] : nf.factors) {
    PolyQuad h = gcd(gk, lift(ni, D));
    out.push_back(shift(h, -k, D).monic());
  }
  return out;
}

}  // namespace

Factorization<QuadNum> factor_over_quadratic(const PolyQuad& f) {
  if (f.is_zero()) throw std::domain_error("factorization of zero polynomial");
  const Integer D = context_of(f);
  if (D == 0) throw std::domain_error("quadratic factorization needs a field context");
  if (is_rational_square(Rational(D))) throw std::domain_error("D is a rational square; factor over Q instead");
  PolyQuad fd = f.map([&D](const QuadNum& c) { return QuadNum(c.a, c.b, D); });
  Factorization<QuadNum> out{fd.lead(), {}};
  for (const auto& [part, e] : yun(fd.monic())) {
    for (auto& h : trager_squarefree(part, D)) out.factors.emplace_back(std::move(h), e);
  }
  sort_factors(out.factors);
  return out;
}

Factorization<QuadNum> factor_over_quadratic(const PolyQ& f, const Integer& D) {
  return factor_over_quadratic(lift(f, D));
}

std::vector<QuadNum> quadratic_roots(const PolyQuad& f) {
  std::vector<QuadNum> roots;
  if (f.degree() < 1) return roots;
  for (const auto& [h, e] : factor_over_quadratic(f).factors) {
    if (h.degree() == 1) roots.push_back(-h[0]);
  }
  return roots;
}

// ---------------------------------------------------------------- decomposition types

namespace {

void partitions(int n, int max, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, max); k >= 1; --k) {
    cur.push_back(k);
    partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

template <class T>
std::vector<DecompType> decomposition_types(const Factorization<T>& fz, FoldPolicy policy) {
  if (policy != FoldPolicy::Both) {
    DecompType dt;
    dt.folded = policy == FoldPolicy::Fold;
    for (const auto& [h, e] : fz.factors) {
      if (dt.folded) {
        dt.parts.push_back(h.degree() * e);
      } else {
        dt.parts.insert(dt.parts.end(), static_cast<std::size_t>(e), h.degree());
      }
    }
    std::sort(dt.parts.rbegin(), dt.parts.rend());
    return {dt};
  }
  std::set<std::vector<int>> acc{{}};
  for (const auto& [h, e] : fz.factors) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions(e, e, cur, parts);
    std::set<std::vector<int>> next;
    for (const auto& base : acc) {
      for (const auto& pt : parts) {
        std::vector<int> v = base;
        for (int k : pt) v.push_back(k * h.degree());
        std::sort(v.rbegin(), v.rend());
        next.insert(v);
      }
    }
    acc = std::move(next);
  }
  const auto fold = decomposition_types(fz, FoldPolicy::Fold).front().parts;
  std::vector<DecompType> out;
  for (const auto& v : acc) out.push_back({v, v == fold});
  std::sort(out.begin(), out.end(), [](const DecompType& a, const DecompType& b) { return a.parts > b.parts; });
  return out;
}

template std::vector<DecompType> decomposition_types(const FactorizationQ&, FoldPolicy);
template std::vector<DecompType> decomposition_types(const Factorization<QuadNum>&, FoldPolicy);
template std::vector<DecompType> decomposition_types(const Factorization<Zp>&, FoldPolicy);
template std::vector<DecompType> decomposition_types(const Factorization<GF2m>&, FoldPolicy);

std::string to_string(const DecompType& dt) {
  std::string out;
  for (std::size_t i = 0; i < dt.parts.size();) {
    std::size_t j = i;
    while (j < dt.parts.size() && dt.parts[j] == dt.parts[i]) ++j;
    if (!out.empty()) out += ",";
    out += std::to_string(dt.parts[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace quinfield
