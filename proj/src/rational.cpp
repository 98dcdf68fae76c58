#include "quinfield/rational.hpp"

#include <cctype>

namespace quinfield {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  Integer n = parse_integer(num);
  Integer d = 1;
  if (slash != std::string_view::npos) {
    std::string_view den = text.substr(slash + 1);
    if (!is_integer_literal(den)) {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    d = parse_integer(den);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& z) { return z.get_str(10); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str(10);
  return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) {
    return std::nullopt;
  }
  Integer n = sqrt(q.get_num());
  Integer d = sqrt(q.get_den());
  Rational r(n, d);
  r.canonicalize();
  return r;
}

SquarefreeSplit squarefree_split(const Integer& n) {
  if (n == 0) throw std::domain_error("squarefree_split of zero");
  Integer rest = abs(n);
  Integer kernel = 1;
  Integer cofactor = 1;
  for (unsigned long p = 2; p <= 1000000UL; p = (p == 2 ? 3 : p + 2)) {
    if (Integer(p) * p > rest) break;
    int e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    if (e >= 2) cofactor *= pow(Integer(p), static_cast<unsigned long>(e / 2));
    if (e % 2 == 1) kernel *= p;
  }
  if (mpz_perfect_square_p(rest.get_mpz_t())) {
    cofactor *= sqrt(rest);
  } else {
    kernel *= rest;
  }
  if (sgn(n) < 0) kernel = -kernel;
  return {kernel, cofactor};
}

RationalSquareSplit squarefree_split(const Rational& q) {
  if (q == 0) throw std::domain_error("squarefree_split of zero");
  // q = n/d = n*d / d^2
  Integer nd = q.get_num() * q.get_den();
  auto sp = squarefree_split(nd);
  Rational c(sp.cofactor, q.get_den());
  c.canonicalize();
  return {sp.kernel, c};
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("zero to a negative power");
    Rational inv = 1 / base;
    return pow(inv, -exponent);
  }
  auto e = static_cast<unsigned long>(exponent);
  Rational r(pow(base.get_num(), e), pow(base.get_den(), e));
  return r;
}

}  // namespace quinfield
