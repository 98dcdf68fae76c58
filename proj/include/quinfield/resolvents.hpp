#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "quinfield/families.hpp"

namespace quinfield {

/// A decision procedure's hypotheses do not hold; another method must decide.
class Indeterminate : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Instantiated for Rational, Zp, QuadNum and BiquadNum (characteristic != 2
// routines) and for GF2m and Zp with p = 2 (characteristic 2 routines).

/// c0..c3 of G^1 at (s, t, s', t') (before halving c0..c2).
template <class T>
std::array<T, 4> c_coefficients(const T& s, const T& t, const T& s1, const T& t1);
/// d0..d3 of G^3.
template <class T>
std::array<T, 4> d_coefficients(const T& s, const T& t, const T& s1, const T& t1);

template <class T>
struct GPair {
  Poly<T> first;   // degree 5
  Poly<T> second;  // degree 2
};

/// G^1 = X^5 - (t-3)(t'-3)X^4 + c3 X^3 + c2/2 X^2 + c1/2 X + c0/2,
/// G^2 = X^2 + (t+t'-1)X + s-t+s'-t'+tt'+2.
template <class T>
GPair<T> g1_g2(const T& s, const T& t, const T& s1, const T& t1);

/// F^1 = (G^1)^2 - (delta delta'/4)(G^2)^2.
template <class T>
Poly<T> f1(const T& s, const T& t, const T& s1, const T& t1);

/// F^i through rho: F^2 moves (s,t), F^3 moves (s',t'), F^4 moves both.
template <class T>
Poly<T> fi(int i, const T& s, const T& t, const T& s1, const T& t1);

/// Product F^1 F^2 F^3 F^4 (degree 40).
template <class T>
Poly<T> hfull(const T& s, const T& t, const T& s1, const T& t1);

/// H^i = rho^(i-1)(G^1 - (dd'/2) G^2), rho acting on (s, t, d) only.
/// Requires d^2 = delta_{s,t} and d'^2 = delta_{s',t'}.
template <class T>
Poly<T> h_c5(int i, const T& s, const T& t, const T& d, const T& s1, const T& t1, const T& d1);

/// How the characteristic-2 F^1 couples G^3 and G^4: Sum uses eps + eps'
/// (the expansion of the factored form), Product uses eps * eps'.
enum class Char2Coupling { Sum, Product };

/// G^3 and G^4 in characteristic 2.
template <class T>
GPair<T> g3_g4(const T& s, const T& t, const T& s1, const T& t1);

/// F^1 in characteristic 2: (G^3)^2 + G^3 G^4 + coupling * (G^4)^2. The
/// coupling is formed from numerators, so s+t+st = 0 is allowed.
template <class T>
Poly<T> f1_char2(const T& s, const T& t, const T& s1, const T& t1, Char2Coupling coupling = Char2Coupling::Sum);

// ---------------------------------------------------------------------------

struct C4Pair {
  PolyQ plus, minus;
};
/// F^{+-} = X^4 - aa'X^2 + a^2a'^2(c +- c')^2/((c^2+4)(c'^2+4)). Throws
/// Indeterminate unless aa'cc' != 0, c != +-c' and cc' != +-4.
C4Pair thc4_compare_poly(const Rational& a, const Rational& c, const Rational& a1, const Rational& c1);

/// (a, c) of the C4 quartic g^{C4}_{p,r}: a = -(p^2+1)(p^2+4)W, c = p(p^2+3).
std::pair<Rational, Rational> c4_params(const Rational& p, const Rational& r);

/// Degree-40 product for two F20 points (p, r) and (p', r'), computed over
/// Q, Q(sqrt D) or Q(sqrt D, sqrt D') as the radicands require.
PolyQ hfull_f20(const Rational& p, const Rational& r, const Rational& p1, const Rational& r1);

enum class ResolventKind { F1, F2, F3, F4, H, Hfull, C4pm };

struct ResolventBundle {
  ResolventKind kind = ResolventKind::F1;
  int index = 1;  // i of H^i
  PolyQ poly;
  ParamPoint left, right;
  std::vector<std::string> caveats;
};

/// Rational Brumer parameters of a point, when it has them: D5 as is, C5HT
/// through the (A,B) chart (with d), F20 when p^2+4 is a square.
struct BrumerParams {
  Rational s, t;
  std::optional<Rational> d;
};
std::optional<BrumerParams> rational_brumer_params(const ParamPoint& pt);

/// "F1".."F4", "H1".."H4", "Hfull", "C4pm".
std::pair<ResolventKind, int> parse_resolvent_kind(std::string_view name);
std::string resolvent_kind_name(ResolventKind kind, int index);

/// Builds the named resolvent for a pair of points: F^i for D5 pairs, H^i for
/// C5HT pairs (d from the (A,B) chart), Hfull and C4pm for F20 pairs.
/// Records a caveat when the result has repeated factors.
ResolventBundle make_resolvent(ResolventKind kind, int index, const ParamPoint& left, const ParamPoint& right);

}  // namespace quinfield
