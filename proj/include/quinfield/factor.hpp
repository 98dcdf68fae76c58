#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "quinfield/finite_field.hpp"
#include "quinfield/poly.hpp"
#include "quinfield/quadratic.hpp"

namespace quinfield {

/// unit * prod factors[i].first ^ factors[i].second, factors monic, irreducible
/// and pairwise distinct, sorted by (degree, coefficients) where comparable.
template <class T>
struct Factorization {
  T unit;
  std::vector<std::pair<Poly<T>, int>> factors;

  Poly<T> expand() const {
    Poly<T> acc = Poly<T>::constant(unit);
    for (const auto& [g, e] : factors) acc = acc * pow(g, static_cast<unsigned long>(e));
    return acc;
  }
  bool has_repeated() const {
    for (const auto& fe : factors) {
      if (fe.second > 1) return true;
    }
    return false;
  }
};

using FactorizationQ = Factorization<Rational>;

/// Yun's algorithm over Q. Parts are monic, squarefree and pairwise coprime;
/// the product of part^mult equals f / lc(f).
std::vector<std::pair<PolyQ, int>> squarefree_decompose(const PolyQ& f);

/// Squarefree decomposition over F_p or F_{2^m} (handles p-th powers).
template <class T>
std::vector<std::pair<Poly<T>, int>> squarefree_decompose_ff(const Poly<T>& f);

/// Distinct-degree + Cantor-Zassenhaus equal-degree factorization. The
/// splitting is randomized; a fixed seed gives a fixed result.
template <class T>
Factorization<T> factor_over_finite_field(const Poly<T>& f, std::uint64_t seed = 1);

inline Factorization<Zp> factor_over_prime_field(const PolyFp& f, std::uint64_t seed = 1) {
  return factor_over_finite_field(f, seed);
}

/// Degrees of the irreducible factors of a squarefree f over a finite field,
/// from distinct-degree factorization alone.
template <class T>
std::vector<int> ddf_degrees(const Poly<T>& f);

/// Complete factorization over Q (Zassenhaus: modular factorization, Hensel
/// lifting, subset recombination). Factors are monic.
FactorizationQ factor_over_rationals(const PolyQ& f);

/// Factorization over Q(sqrt D) by Trager's norm method.
Factorization<QuadNum> factor_over_quadratic(const PolyQuad& f);
Factorization<QuadNum> factor_over_quadratic(const PolyQ& f, const Integer& D);

/// Distinct rational roots in increasing order (p-adic lifting, then exact check).
std::vector<Rational> rational_roots(const PolyQ& f);
inline bool has_rational_root(const PolyQ& f) { return !rational_roots(f).empty(); }

/// Distinct roots in Q(sqrt D).
std::vector<QuadNum> quadratic_roots(const PolyQuad& f);

enum class FoldPolicy { Fold, Split, Both };

/// Partition of the degree induced by the factor degrees; parts in
/// non-increasing order.
struct DecompType {
  std::vector<int> parts;
  bool folded = false;

  friend bool operator<(const DecompType& a, const DecompType& b) {
    return std::tie(a.parts, a.folded) < std::tie(b.parts, b.folded);
  }
  friend bool operator==(const DecompType& a, const DecompType& b) { return a.parts == b.parts; }
};

/// Fold: (h, e) gives one part e*deg h. Split: e parts of deg h. Both: every
/// grouping of the e copies (integer partitions of e scaled by deg h), so the
/// result always contains the Fold and Split answers.
template <class T>
std::vector<DecompType> decomposition_types(const Factorization<T>& fz, FoldPolicy policy);

template <class T>
DecompType decomposition_type(const Factorization<T>& fz, FoldPolicy policy) {
  return decomposition_types(fz, policy == FoldPolicy::Both ? FoldPolicy::Fold : policy).front();
}

/// "10^3,4^2,2" style rendering.
std::string to_string(const DecompType& dt);

}  // namespace quinfield
