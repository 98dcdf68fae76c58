#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace quinfield {

using Integer = mpz_class;
/// Always canonical: gcd(num, den) = 1 and den > 0 (maintained by GMP).
using Rational = mpq_class;

/// Thrown for malformed user input (bad rationals, unknown tags, ...).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a parameter sits on a locus where a formula divides by zero.
class DegenerateParameter : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// n/d in canonical form (mpq_class(n, d) alone does not reduce).
inline Rational ratio(const Integer& n, const Integer& d) {
  if (d == 0) throw std::domain_error("zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

/// Parses "a" or "a/b" with arbitrary-precision decimal integers.
/// No whitespace, no decimal points, no exponents, b != 0.
Rational parse_rational(std::string_view text);

/// "a" when the denominator is 1, else "a/b".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Square root in Q if q is a rational square.
std::optional<Rational> rational_sqrt(const Rational& q);
inline bool is_rational_square(const Rational& q) { return rational_sqrt(q).has_value(); }

/// Squarefree kernel of a nonzero integer, sign preserved: n = kernel * m^2.
/// Trial division up to 10^6, then a perfect-square test on the cofactor.
/// A cofactor above 10^12 may still hide a square of a large prime; the
/// result then differs from the true kernel by that square, which leaves
/// Q(sqrt(n)) unchanged.
struct SquarefreeSplit {
  Integer kernel;
  Integer cofactor;  // n = kernel * cofactor^2, cofactor > 0
};
SquarefreeSplit squarefree_split(const Integer& n);

/// Rational q = kernel * c^2 with kernel a squarefree integer (c rational > 0).
struct RationalSquareSplit {
  Integer kernel;
  Rational cofactor;
};
RationalSquareSplit squarefree_split(const Rational& q);

Rational pow(const Rational& base, long exponent);
Integer pow(const Integer& base, unsigned long exponent);

}  // namespace quinfield
