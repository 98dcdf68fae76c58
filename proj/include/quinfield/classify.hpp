#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "quinfield/factor.hpp"
#include "quinfield/resolvents.hpp"

namespace quinfield {

// C1 is reported for the degenerate case of a quintic that splits over Q.
enum class GroupName { C1, C2, C4, C5, D5, F20, SUB_C4 };

struct GroupLabel {
  GroupName name = GroupName::C1;
  std::string dt;  // decomposition type of the point's polynomial over Q
  std::vector<std::pair<std::string, std::string>> evidence;
  /// Radicand of the quadratic subfield, when the group has one (delta,
  /// p^2+4 or the discriminant of the quadratic factor).
  std::optional<Rational> quadratic;
};

std::string to_string(GroupName g);
/// "D5", or "SUB_C4(2^2,1)".
std::string to_string(const GroupLabel& g);

/// Throws DegenerateParameter for an inseparable polynomial.
GroupLabel identify_group(const ParamPoint& pt);

/// Q(sqrt m1) = Q(sqrt m2). Throws std::domain_error on a zero or square input.
bool quadratic_subfields_equal(const Rational& m1, const Rational& m2);

/// Cyclic quartic subfields of two F20 points, by the cyclic-quartic comparison pair;
/// nullopt when the hypotheses of that criterion fail (e.g. p = +-p').
/// Throws DegenerateParameter when W = 0.
std::optional<bool> quartic_subfields_equal(const Rational& p, const Rational& r, const Rational& p1,
                                            const Rational& r1);

enum class Relation { EQUAL, INTERSECT_DEG_4, INTERSECT_DEG_2, TRIVIAL_INTERSECTION, SUBFIELD, AMBIGUOUS };
std::string to_string(Relation r);

struct ResolventDT {
  std::string resolvent;  // "F1", "F2", "Hfull", ...
  std::string field;      // "Q" or "Q(sqrt(D))"
  std::string fold, split;
  std::vector<std::string> both;
};

struct Witness {
  std::string resolvent;
  std::string root;
};

struct Verdict {
  GroupLabel left, right;
  Relation relation = Relation::AMBIGUOUS;
  std::string table_row;
  std::vector<ResolventDT> dts;
  std::vector<Witness> witnesses;
  std::vector<std::string> caveats;

  /// {verdict, table_row, groups, dts, witnesses, caveats}
  nlohmann::json to_json() const;
};

struct CompareOptions {
  bool f20_cross_check = true;  // check the degree-40 resolvent DT as well
};

/// Throws DegenerateParameter on inseparable input and std::domain_error on
/// pairs outside the supported families (C4 points, quintics that split).
Verdict compare(const ParamPoint& left, const ParamPoint& right, const CompareOptions& options = {});

/// Sound prefilter: false only when, at some good prime, neither F^1 nor F^2
/// of the pair has a root. Both points need rational Brumer parameters.
bool may_share_field(const BrumerParams& a, const BrumerParams& b, const std::vector<std::uint64_t>& primes);

struct SearchRange {
  long lo = 0, hi = 0;
};

struct SearchOptions {
  Family family = Family::D5;  // D5 or C5HT
  ParamPoint fixed;
  SearchRange first, second;
  std::optional<Rational> second_fixed;  // e.g. t' = 1; `second` is ignored
  std::vector<std::uint64_t> primes{101, 103, 107};
  int jobs = 1;
};

struct SearchMatch {
  ParamPoint point;
  std::vector<std::string> resolvents;  // those with a rational root, "F1", "H3", ...
  Verdict verdict;
};

struct SearchResult {
  std::vector<SearchMatch> matches;  // sorted by the point's coordinates
  long candidates = 0;
  long skipped = 0;    // degenerate grid points
  long screened = 0;   // removed by the modular screen
  long confirmed = 0;  // exact comparisons run
};

/// Throws std::invalid_argument on an empty grid or bad primes.
SearchResult search(const SearchOptions& options);

}  // namespace quinfield
