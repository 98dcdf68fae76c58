#include "quinfield/finite_field.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace quinfield {

Zp Zp::reduce(const Integer& z, std::uint64_t p) {
  unsigned long r = mpz_fdiv_ui(z.get_mpz_t(), p);
  return Zp(static_cast<std::int64_t>(r), p);
}

Zp Zp::reduce(const Rational& q, std::uint64_t p) {
  Zp num = reduce(q.get_num(), p);
  Zp den = reduce(q.get_den(), p);
  if (den.v == 0) throw std::domain_error("denominator vanishes mod " + std::to_string(p));
  return num / den;
}

PolyFp reduce_mod(const PolyQ& f, std::uint64_t p) {
  return f.map([p](const Rational& c) { return Zp::reduce(c, p); });
}

namespace {

unsigned bit_degree(std::uint64_t a) { return a == 0 ? 0 : 63U - static_cast<unsigned>(__builtin_clzll(a)); }

// Binary polynomial arithmetic without reduction, degrees < 64.
std::uint64_t gf2_mod(std::uint64_t a, std::uint64_t m) {
  const unsigned dm = bit_degree(m);
  while (a != 0 && bit_degree(a) >= dm) a ^= m << (bit_degree(a) - dm);
  return a;
}

std::uint64_t gf2_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  const unsigned dm = bit_degree(m);
  std::uint64_t r = 0;
  a = gf2_mod(a, m);
  while (b) {
    if (b & 1U) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a >> dm & 1U) a ^= m;
  }
  return r;
}

std::uint64_t gf2_gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a = gf2_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

}  // namespace

bool is_irreducible_gf2(std::uint64_t f) {
  const unsigned n = bit_degree(f);
  if (n == 0) return false;
  if (n == 1) return true;
  // Rabin: x^(2^n) = x mod f and gcd(x^(2^(n/q)) - x, f) = 1 for primes q | n.
  auto frob = [&](unsigned k) {
    std::uint64_t x = 2;
    for (unsigned i = 0; i < k; ++i) x = gf2_mulmod(x, x, f);
    return x;
  };
  if (frob(n) != gf2_mod(2, f)) return false;
  unsigned rest = n;
  for (unsigned q = 2; q <= rest; ++q) {
    if (rest % q != 0) continue;
    while (rest % q == 0) rest /= q;
    if (gf2_gcd(f, frob(n / q) ^ gf2_mod(2, f)) != 1) return false;
  }
  return true;
}

GF2mField::GF2mField(unsigned m) : m_(m), modulus_(0) {
  if (m < 1 || m > 62) throw std::domain_error("GF(2^m) supports 1 <= m <= 62");
  // Smallest irreducible modulus in numeric order.
  for (std::uint64_t c = (1ULL << m) | 1ULL; c < (2ULL << m); c += 2) {
    if (is_irreducible_gf2(c)) {
      modulus_ = c;
      return;
    }
  }
  if (m == 1) modulus_ = 0b10;  // z, the only choice for F_2 itself
}

const GF2mField& GF2mField::get(unsigned m) {
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<GF2mField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[m];
  if (!slot) slot.reset(new GF2mField(m));
  return *slot;
}

std::uint64_t GF2mField::mul(std::uint64_t a, std::uint64_t b) const { return gf2_mulmod(a, b, modulus_); }

std::uint64_t GF2mField::inv(std::uint64_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero in F_2^m");
  // a^(2^m - 2)
  std::uint64_t r = 1;
  std::uint64_t sq = a;
  for (unsigned i = 1; i < m_; ++i) {
    sq = mul(sq, sq);
    r = mul(r, sq);
  }
  return r;
}

std::uint64_t GF2mField::sqrt(std::uint64_t a) const {
  for (unsigned i = 1; i < m_; ++i) a = mul(a, a);
  return a;
}

}  // namespace quinfield
