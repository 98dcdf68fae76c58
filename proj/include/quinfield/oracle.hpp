#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "quinfield/resolvents.hpp"

namespace quinfield {

// Reconstruction of the family polynomials and resolvents from the
// cross-ratio coordinates (x, y) and the explicit action
//   sigma: (x, y) -> (y, -(y-1)/x),   tau: (x, y) -> (x, -(x-1)/y).
// Instantiated for Rational and GF2m.

template <class T>
struct XY {
  T x, y;
};

template <class T>
XY<T> act_sigma(const XY<T>& p);
template <class T>
XY<T> act_tau(const XY<T>& p);

/// {x, y, -(y-1)/x, (x+y-1)/(xy), -(x-1)/y}
template <class T>
std::array<T, 5> d5_orbit(const T& x, const T& y);

template <class T>
struct XYParams {
  T s, t, d;
  std::optional<T> e;  // characteristic 2 only, when s+t+st != 0
};
template <class T>
XYParams<T> params_from_xy(const T& x, const T& y);

/// The ten images of (x, y) under the group generated by sigma and tau.
template <class T>
std::vector<XY<T>> d5_point_orbit(const XY<T>& p);

/// sum_{i<5} (sigma sigma')^i (x x') written out.
template <class T>
T invariant_P(const XY<T>& a, const XY<T>& b);

/// prod over g' in D5' of (X - P(x, y, g'(x', y'))).
template <class T>
Poly<T> f1_from_xy(const XY<T>& a, const XY<T>& b);

/// prod of (X - v) over the five conjugates of (x-1)/x^2.
template <class T>
Poly<T> f20_resolvent_from_xy(const T& x, const T& y);

struct SuiteOptions {
  std::uint64_t seed = 1;
  int trials = 100;
  unsigned char2_bits = 16;  // 0 skips the characteristic-2 checks
  int char2_trials = -1;     // -1: same as trials
  bool mutate_c2 = false;    // perturb c2 in the F^1 formula (self-test)
  Char2Coupling coupling = Char2Coupling::Sum;
};

struct IdentityResult {
  std::string name;
  int checked = 0;
  int passed = 0;
  std::optional<std::string> first_failure;  // "trial N at (...)"
};

struct SuiteReport {
  SuiteOptions options;
  std::vector<IdentityResult> identities;
  bool all_passed() const;
  nlohmann::json to_json() const;
};

SuiteReport identity_suite(const SuiteOptions& options);

}  // namespace quinfield
