#include "quinfield/classify.hpp"

#include <algorithm>
#include <thread>

#include "quinfield/poly_io.hpp"
#include "quinfield/resultant.hpp"

namespace quinfield {

std::string to_string(GroupName g) {
  switch (g) {
    case GroupName::C1: return "C1";
    case GroupName::C2: return "C2";
    case GroupName::C4: return "C4";
    case GroupName::C5: return "C5";
    case GroupName::D5: return "D5";
    case GroupName::F20: return "F20";
    case GroupName::SUB_C4: return "SUB_C4";
  }
  return "?";
}

std::string to_string(const GroupLabel& g) {
  if (g.name == GroupName::SUB_C4) return "SUB_C4(" + g.dt + ")";
  return to_string(g.name);
}

std::string to_string(Relation r) {
  switch (r) {
    case Relation::EQUAL: return "EQUAL";
    case Relation::INTERSECT_DEG_4: return "INTERSECT_DEG_4";
    case Relation::INTERSECT_DEG_2: return "INTERSECT_DEG_2";
    case Relation::TRIVIAL_INTERSECTION: return "TRIVIAL_INTERSECTION";
    case Relation::SUBFIELD: return "SUBFIELD";
    case Relation::AMBIGUOUS: return "AMBIGUOUS";
  }
  return "?";
}

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// Radicand of the splitting field of a reducible quintic whose irreducible
// factors have degree <= 2; nullopt when it splits over Q.
std::optional<Rational> quadratic_of_reducible(const FactorizationQ& fz, bool& mixed) {
  std::optional<Rational> m;
  mixed = false;
  for (const auto& [h, e] : fz.factors) {
    if (h.degree() != 2) continue;
    const Rational disc = h[1] * h[1] - 4 * h[0] * h[2];
    if (is_rational_square(disc)) continue;
    if (m && !is_rational_square(*m * disc)) mixed = true;
    if (!m) m = disc;
  }
  return m;
}

template <class T>
ResolventDT dt_entry(const std::string& name, const std::string& field, const Factorization<T>& fz) {
  ResolventDT d{name, field, to_string(decomposition_type(fz, FoldPolicy::Fold)),
                to_string(decomposition_type(fz, FoldPolicy::Split)), {}};
  for (const auto& dt : decomposition_types(fz, FoldPolicy::Both)) d.both.push_back(to_string(dt));
  return d;
}

bool contains(const std::vector<std::string>& v, const std::string& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace

GroupLabel identify_group(const ParamPoint& pt) {
  GroupLabel g;
  const PolyQ f = family_polynomial(pt);
  if (discriminant(f) == 0) throw DegenerateParameter("inseparable polynomial at " + to_string(pt));
  const FactorizationQ fz = factor_over_rationals(f);
  g.dt = to_string(decomposition_type(fz, FoldPolicy::Fold));
  const bool irreducible = fz.factors.size() == 1 && fz.factors[0].second == 1;
  g.evidence.emplace_back("irreducible", yes_no(irreducible));

  if (pt.family == Family::C4) {
    g.name = irreducible ? GroupName::C4 : GroupName::SUB_C4;
    return g;
  }
  if (!irreducible) {
    if (pt.family == Family::F20P || pt.family == Family::F20R) {
      g.name = g.dt == "4,1" ? GroupName::C4 : GroupName::SUB_C4;
      return g;
    }
    bool mixed = false;
    g.quadratic = quadratic_of_reducible(fz, mixed);
    g.name = g.quadratic ? GroupName::C2 : GroupName::C1;
    if (mixed) g.evidence.emplace_back("quadratic factors", "generate different fields");
    return g;
  }
  switch (pt.family) {
    case Family::D5: {
      const auto dl = delta_d5(pt.a, pt.b);
      g.evidence.emplace_back("delta square", yes_no(dl.is_square));
      g.name = dl.is_square ? GroupName::C5 : GroupName::D5;
      if (!dl.is_square) g.quadratic = dl.value;
      break;
    }
    case Family::C5HT: g.name = GroupName::C5; break;
    case Family::F20P:
    case Family::F20R: {
      const ParamPoint r = to_f20r(pt);
      const Rational m = r.a * r.a + 4;
      const bool sq = is_rational_square(m);
      g.evidence.emplace_back("p^2+4 square", yes_no(sq));
      if (!sq) {
        g.name = GroupName::F20;
        g.quadratic = m;
        break;
      }
      const auto x = f20_to_d5(r.a, r.b);
      const auto dl = delta_d5(x.s_rat, x.t_rat);
      g.evidence.emplace_back("delta square", yes_no(dl.is_square));
      g.name = dl.is_square ? GroupName::C5 : GroupName::D5;
      if (!dl.is_square) g.quadratic = dl.value;
      break;
    }
    case Family::C4: break;
  }
  return g;
}

bool quadratic_subfields_equal(const Rational& m1, const Rational& m2) {
  for (const auto* m : {&m1, &m2}) {
    if (*m == 0 || is_rational_square(*m)) {
      throw std::domain_error("quadratic subfield test needs a nonzero non-square, got " + to_string(*m));
    }
  }
  return is_rational_square(m1 * m2);
}

std::optional<bool> quartic_subfields_equal(const Rational& p, const Rational& r, const Rational& p1,
                                            const Rational& r1) {
  if (c4_subfield_data(p, r).degenerate || c4_subfield_data(p1, r1).degenerate) {
    throw DegenerateParameter("W = 0: the cyclic quartic subfield data degenerates");
  }
  const auto [a, c] = c4_params(p, r);
  const auto [a1, c1] = c4_params(p1, r1);
  try {
    const auto pr = thc4_compare_poly(a, c, a1, c1);
    return has_rational_root(pr.plus) || has_rational_root(pr.minus);
  } catch (const Indeterminate&) {
    return std::nullopt;
  }
}

nlohmann::json Verdict::to_json() const {
  nlohmann::json j;
  j["verdict"] = to_string(relation);
  j["table_row"] = table_row;
  j["groups"] = {{"left", to_string(left)}, {"right", to_string(right)}};
  auto ev = [](const GroupLabel& g) {
    nlohmann::json e = nlohmann::json::object();
    for (const auto& [k, v] : g.evidence) e[k] = v;
    e["dt"] = g.dt;
    return e;
  };
  j["evidence"] = {{"left", ev(left)}, {"right", ev(right)}};
  j["dts"] = nlohmann::json::array();
  for (const auto& d : dts) {
    j["dts"].push_back({{"resolvent", d.resolvent}, {"field", d.field}, {"fold", d.fold}, {"split", d.split},
                        {"both", d.both}});
  }
  j["witnesses"] = nlohmann::json::array();
  for (const auto& w : witnesses) j["witnesses"].push_back({{"resolvent", w.resolvent}, {"root", w.root}});
  j["caveats"] = caveats;
  return j;
}

namespace {

// Both points have group D5 or C5 and rational Brumer parameters.
void compare_dihedral(Verdict& v, const BrumerParams& a, const BrumerParams& b) {
  bool root = false;
  for (int i = 1; i <= 2; ++i) {
    const std::string name = "F" + std::to_string(i);
    const PolyQ F = fi(i, a.s, a.t, b.s, b.t);
    for (const auto& x : rational_roots(F)) {
      v.witnesses.push_back({name, to_string(x)});
      root = true;
    }
    v.dts.push_back(dt_entry(name, "Q", factor_over_rationals(F)));
  }
  const bool l5 = v.left.name == GroupName::C5, r5 = v.right.name == GroupName::C5;
  if (l5 != r5) {
    v.table_row = "II-4";
    v.relation = Relation::TRIVIAL_INTERSECTION;
    if (root) {
      v.relation = Relation::AMBIGUOUS;
      v.caveats.push_back("a resolvent has a rational root but the groups differ");
    }
    return;
  }
  if (!l5) {
    const bool quad = quadratic_subfields_equal(*v.left.quadratic, *v.right.quadratic);
    if (root) {
      v.table_row = "II-3";
      v.relation = Relation::EQUAL;
      if (!quad) {
        v.relation = Relation::AMBIGUOUS;
        v.caveats.push_back("a resolvent has a rational root but the quadratic subfields differ");
      }
    } else {
      v.table_row = quad ? "II-2" : "II-1";
      v.relation = quad ? Relation::INTERSECT_DEG_2 : Relation::TRIVIAL_INTERSECTION;
    }
    return;
  }
  v.table_row = root ? "III-2" : "III-1";
  v.relation = root ? Relation::EQUAL : Relation::TRIVIAL_INTERSECTION;
  // which H^i carries the root; d from the (A,B) chart, else the positive root of delta
  auto d_of = [&](const BrumerParams& x, const char* side) {
    if (x.d) return *x.d;
    v.caveats.push_back(std::string("sign of d on the ") + side + " chosen as the positive root of delta");
    return *delta_d5(x.s, x.t).root;
  };
  const Rational d = d_of(a, "left"), d1 = d_of(b, "right");
  for (int i = 1; i <= 4; ++i) {
    const std::string name = "H" + std::to_string(i);
    const PolyQ H = h_c5(i, a.s, a.t, d, b.s, b.t, d1);
    for (const auto& x : rational_roots(H)) v.witnesses.push_back({name, to_string(x)});
    v.dts.push_back(dt_entry(name, "Q", factor_over_rationals(H)));
  }
}

// At least one side is C2.
void compare_reducible(Verdict& v, const std::optional<BrumerParams>& a, const std::optional<BrumerParams>& b) {
  const GroupLabel& big = v.left.name == GroupName::C2 ? v.right : v.left;
  const GroupLabel& small = v.left.name == GroupName::C2 ? v.left : v.right;
  if (big.name == GroupName::C2) {
    const bool eq = quadratic_subfields_equal(*big.quadratic, *small.quadratic);
    v.relation = eq ? Relation::EQUAL : Relation::TRIVIAL_INTERSECTION;
    v.table_row = eq ? "T3-C2" : "T3-C2xC2";
  } else if (big.name == GroupName::C5) {
    v.relation = Relation::TRIVIAL_INTERSECTION;
    v.table_row = "T3-C10";
  } else {
    const bool sub = quadratic_subfields_equal(*big.quadratic, *small.quadratic);
    v.relation = sub ? Relation::SUBFIELD : Relation::TRIVIAL_INTERSECTION;
    v.table_row = sub ? "T3-D5" : "T3-D10";
  }
  if (a && b) {
    for (int i = 1; i <= 2; ++i) {
      v.dts.push_back(dt_entry("F" + std::to_string(i), "Q", factor_over_rationals(fi(i, a->s, a->t, b->s, b->t))));
    }
  }
}

std::string field_name(const Integer& D) { return "Q(sqrt(" + to_string(D) + "))"; }

void compare_f20(Verdict& v, const ParamPoint& l, const ParamPoint& r, const CompareOptions& options) {
  const Rational &p = l.a, &rr = l.b, &p1 = r.a, &r1 = r.b;
  std::string expected;
  if (!quadratic_subfields_equal(p * p + 4, p1 * p1 + 4)) {
    v.relation = Relation::TRIVIAL_INTERSECTION;
    v.table_row = "I-1";
    expected = "40";
  } else {
    const F20ToD5 x = f20_to_d5(p, rr), y = f20_to_d5(p1, r1);
    const std::string field = field_name(x.s.D);
    bool root = false;
    for (int i = 1; i <= 2; ++i) {
      const std::string name = "F" + std::to_string(i);
      const PolyQuad F = fi(i, x.s, x.t, y.s, y.t);
      const auto fz = factor_over_quadratic(F);
      for (const auto& [h, e] : fz.factors) {
        if (h.degree() != 1) continue;
        v.witnesses.push_back({name, to_string(-h[0])});
        root = true;
      }
      v.dts.push_back(dt_entry(name, field, fz));
    }
    if (root) {
      v.relation = Relation::EQUAL;
      v.table_row = "I-5";
      expected = "10^3,4^2,2";
    } else {
      std::optional<bool> quartic;
      try {
        quartic = quartic_subfields_equal(p, rr, p1, r1);
      } catch (const DegenerateParameter& e) {
        v.caveats.push_back(e.what());
      }
      if (quartic) {
        v.relation = *quartic ? Relation::INTERSECT_DEG_4 : Relation::INTERSECT_DEG_2;
        v.table_row = *quartic ? "I-3/I-4" : "I-2";
        expected = *quartic ? "10^4" : "20^2";
      } else {
        v.caveats.push_back("quartic subfield criterion indeterminate; degree 4 vs 2 read from the degree-40 resolvent");
      }
    }
  }
  if (!options.f20_cross_check && !expected.empty()) return;

  const ResolventDT h = dt_entry("Hfull", "Q", factor_over_rationals(hfull_f20(p, rr, p1, r1)));
  v.dts.push_back(h);
  if (expected.empty()) {
    if (contains(h.both, "20^2")) {
      v.relation = Relation::INTERSECT_DEG_2;
      v.table_row = "I-2";
    } else if (contains(h.both, "10^4")) {
      v.relation = Relation::INTERSECT_DEG_4;
      v.table_row = "I-3/I-4";
    } else {
      v.relation = Relation::AMBIGUOUS;
      v.caveats.push_back("degree-40 resolvent shows neither 20^2 nor 10^4 (fold: " + h.fold + ")");
    }
  } else if (!contains(h.both, expected)) {
    v.caveats.push_back("methods disagree: row " + v.table_row + " expects " + expected +
                        " for the degree-40 resolvent, found " + h.fold);
    v.relation = Relation::AMBIGUOUS;
  }
}

// An F20 point against a point whose group is at most D5.
void compare_mixed(Verdict& v) {
  const GroupLabel& f = v.left.name == GroupName::F20 ? v.left : v.right;
  const GroupLabel& o = v.left.name == GroupName::F20 ? v.right : v.left;
  v.table_row = "-";
  v.caveats.push_back("F20 against a smaller group: decided by the quadratic subfields alone");
  if (!o.quadratic || !quadratic_subfields_equal(*f.quadratic, *o.quadratic)) {
    v.relation = Relation::TRIVIAL_INTERSECTION;
    return;
  }
  v.relation = o.name == GroupName::C2 ? Relation::SUBFIELD : Relation::INTERSECT_DEG_2;
}

}  // namespace

Verdict compare(const ParamPoint& left, const ParamPoint& right, const CompareOptions& options) {
  if (left.family == Family::C4 || right.family == Family::C4) {
    throw std::domain_error("compare: C4 points are not supported");
  }
  Verdict v;
  v.left = identify_group(left);
  v.right = identify_group(right);
  for (const auto* g : {&v.left, &v.right}) {
    const GroupName n = g->name;
    if (n == GroupName::C1 || n == GroupName::C4 || n == GroupName::SUB_C4 || (n == GroupName::C2 && !g->quadratic)) {
      throw std::domain_error("compare: unsupported group " + to_string(*g));
    }
    if (std::any_of(g->evidence.begin(), g->evidence.end(),
                    [](const auto& e) { return e.second == "generate different fields"; })) {
      throw std::domain_error("compare: reducible point with two different quadratic fields");
    }
  }
  const bool lf = v.left.name == GroupName::F20, rf = v.right.name == GroupName::F20;
  if (lf && rf) {
    compare_f20(v, to_f20r(left), to_f20r(right), options);
  } else if (lf || rf) {
    compare_mixed(v);
  } else if (v.left.name == GroupName::C2 || v.right.name == GroupName::C2) {
    compare_reducible(v, rational_brumer_params(left), rational_brumer_params(right));
  } else {
    const auto a = rational_brumer_params(left), b = rational_brumer_params(right);
    if (!a || !b) throw std::logic_error("compare: missing Brumer parameters for a D5/C5 point");
    compare_dihedral(v, *a, *b);
  }
  return v;
}

// ---------------------------------------------------------------- screening

namespace {

bool has_root_mod_p(const PolyFp& f) {
  const auto c = f.coeffs();
  if (c.empty()) return true;
  const std::uint64_t p = c.front().p;
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = (acc * x + c[i].v) % p;
    if (acc == 0) return true;
  }
  return false;
}

bool is_odd_prime(std::uint64_t p) {
  if (p < 3 || p % 2 == 0 || p >= (1ULL << 31)) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

// Second-stage primes applied to survivors of the user's screen before the
// exact comparison; they only ever remove candidates without a rational root.
const std::vector<std::uint64_t> kConfirmPrimes{109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173};

}  // namespace

bool may_share_field(const BrumerParams& a, const BrumerParams& b, const std::vector<std::uint64_t>& primes) {
  bool f1_alive = true, f2_alive = true;
  for (std::uint64_t p : primes) {
    Zp s, t, s1, t1;
    try {
      s = Zp::reduce(a.s, p);
      t = Zp::reduce(a.t, p);
      s1 = Zp::reduce(b.s, p);
      t1 = Zp::reduce(b.t, p);
    } catch (const std::domain_error&) {
      continue;  // a denominator vanishes mod p
    }
    if (f1_alive) {
      try {
        f1_alive = has_root_mod_p(fi(1, s, t, s1, t1));
      } catch (const std::domain_error&) {
      }
    }
    if (f2_alive) {
      try {
        f2_alive = has_root_mod_p(fi(2, s, t, s1, t1));
      } catch (const std::domain_error&) {
      }
    }
    if (!f1_alive && !f2_alive) return false;
  }
  return true;
}

SearchResult search(const SearchOptions& o) {
  if (o.family != Family::D5 && o.family != Family::C5HT) {
    throw std::invalid_argument("search supports the d5 and c5 families");
  }
  if (o.fixed.family != o.family) throw std::invalid_argument("search: fixed point must belong to the searched family");
  if (o.first.lo > o.first.hi || (!o.second_fixed && o.second.lo > o.second.hi)) {
    throw std::invalid_argument("search: empty grid");
  }
  if (o.jobs < 1) throw std::invalid_argument("search: jobs must be >= 1");
  for (std::size_t i = 0; i < o.primes.size(); ++i) {
    if (!is_odd_prime(o.primes[i])) throw std::invalid_argument("search: " + std::to_string(o.primes[i]) + " is not an odd prime");
    for (std::size_t j = 0; j < i; ++j) {
      if (o.primes[i] == o.primes[j]) throw std::invalid_argument("search: repeated prime");
    }
  }
  identify_group(o.fixed);
  const auto base = rational_brumer_params(o.fixed);

  std::vector<ParamPoint> grid;
  for (long x = o.first.lo; x <= o.first.hi; ++x) {
    if (o.second_fixed) {
      grid.push_back({o.family, Rational(x), *o.second_fixed});
    } else {
      for (long y = o.second.lo; y <= o.second.hi; ++y) grid.push_back({o.family, Rational(x), Rational(y)});
    }
  }

  auto run = [&](std::size_t lo, std::size_t hi, SearchResult& out) {
    for (std::size_t k = lo; k < hi; ++k) {
      const ParamPoint& cand = grid[k];
      ++out.candidates;
      std::optional<BrumerParams> bp;
      try {
        bp = rational_brumer_params(cand);
        if (bp->t == 0 || delta(bp->s, bp->t) == 0) throw DegenerateParameter("inseparable");
      } catch (const std::domain_error&) {
        ++out.skipped;
        continue;
      }
      if (!may_share_field(*base, *bp, o.primes) || !may_share_field(*base, *bp, kConfirmPrimes)) {
        ++out.screened;
        continue;
      }
      ++out.confirmed;
      try {
        Verdict v = compare(o.fixed, cand);
        if (v.relation != Relation::EQUAL) continue;
        SearchMatch m{cand, {}, std::move(v)};
        for (const auto& w : m.verdict.witnesses) {
          if (!contains(m.resolvents, w.resolvent)) m.resolvents.push_back(w.resolvent);
        }
        std::sort(m.resolvents.begin(), m.resolvents.end());
        out.matches.push_back(std::move(m));
      } catch (const std::domain_error&) {
        ++out.skipped;
      }
    }
  };

  const std::size_t jobs = std::min<std::size_t>(static_cast<std::size_t>(o.jobs), std::max<std::size_t>(grid.size(), 1));
  std::vector<SearchResult> parts(jobs);
  if (jobs == 1) {
    run(0, grid.size(), parts[0]);
  } else {
    std::vector<std::thread> threads;
    const std::size_t step = (grid.size() + jobs - 1) / jobs;
    for (std::size_t j = 0; j < jobs; ++j) {
      const std::size_t lo = std::min(grid.size(), j * step), hi = std::min(grid.size(), lo + step);
      threads.emplace_back(run, lo, hi, std::ref(parts[j]));
    }
    for (auto& th : threads) th.join();
  }
  SearchResult out;
  for (auto& part : parts) {
    out.candidates += part.candidates;
    out.skipped += part.skipped;
    out.screened += part.screened;
    out.confirmed += part.confirmed;
    for (auto& m : part.matches) out.matches.push_back(std::move(m));
  }
  std::sort(out.matches.begin(), out.matches.end(), [](const SearchMatch& x, const SearchMatch& y) {
    if (x.point.a != y.point.a) return x.point.a < y.point.a;
    return x.point.b < y.point.b;
  });
  return out;
}

}  // namespace quinfield
