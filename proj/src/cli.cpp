#include "quinfield/cli.hpp"

#include <CLI11.hpp>

#include "quinfield/classify.hpp"
#include "quinfield/oracle.hpp"
#include "quinfield/poly_io.hpp"

namespace quinfield {

namespace {

using json = nlohmann::json;

long parse_long(const std::string& s) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw ParseError("not an integer: '" + s + "'");
  return v;
}

SearchRange parse_range(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw ParseError("range must look like a:b, got '" + s + "'");
  return {parse_long(s.substr(0, colon)), parse_long(s.substr(colon + 1))};
}

Family search_family(const std::string& name) {
  if (name == "d5") return Family::D5;
  if (name == "c5") return Family::C5HT;
  throw ParseError("search family must be d5 or c5, got '" + name + "'");
}

void print_text(std::ostream& out, const Verdict& v) {
  out << to_string(v.relation) << ' ' << v.table_row << '\n';
  out << "groups: " << to_string(v.left) << ' ' << to_string(v.right) << '\n';
  for (const auto& w : v.witnesses) out << "root of " << w.resolvent << ": " << w.root << '\n';
  for (const auto& d : v.dts) out << "DT(" << d.resolvent << " over " << d.field << "): " << d.fold << " / " << d.split << '\n';
  for (const auto& c : v.caveats) out << "caveat: " << c << '\n';
}

struct Cli {
  std::string output = "json";

  std::string point;
  std::string left, right, kind;

  std::string family, fix, range;
  std::string t_fixed;
  std::vector<std::uint64_t> primes{101, 103, 107};
  int jobs = 1;

  SuiteOptions suite;

  void emit(std::ostream& out, const json& j) const { out << j.dump(2) << '\n'; }

  int group(std::ostream& out) const {
    const ParamPoint pt = parse_param_point(point);
    const GroupLabel g = identify_group(pt);
    if (output == "text") {
      out << to_string(g) << " (DT " << g.dt << ")\n";
      return 0;
    }
    json ev = json::object();
    for (const auto& [k, v] : g.evidence) ev[k] = v;
    emit(out, {{"point", to_string(pt)}, {"group", to_string(g)}, {"dt", g.dt}, {"evidence", ev}});
    return 0;
  }

  int compare_cmd(std::ostream& out) const {
    const ParamPoint l = parse_param_point(left), r = parse_param_point(right);
    const Verdict v = compare(l, r);
    if (output == "text") {
      print_text(out, v);
    } else {
      json j = v.to_json();
      j["left"] = to_string(l);
      j["right"] = to_string(r);
      emit(out, j);
    }
    return v.relation == Relation::AMBIGUOUS ? 1 : 0;
  }

  int resolvent(std::ostream& out) const {
    const auto [k, index] = parse_resolvent_kind(kind);
    const ParamPoint l = parse_param_point(left), r = parse_param_point(right);
    const ResolventBundle b = make_resolvent(k, index, l, r);
    const FactorizationQ fz = factor_over_rationals(b.poly);
    const std::string fold = to_string(decomposition_type(fz, FoldPolicy::Fold));
    const std::string split = to_string(decomposition_type(fz, FoldPolicy::Split));
    if (output == "text") {
      out << resolvent_kind_name(k, index) << " = " << to_text(b.poly) << '\n';
      for (const auto& [h, e] : fz.factors) out << "  (" << to_text(h) << ")^" << e << '\n';
      out << "DT fold " << fold << ", split " << split << '\n';
      for (const auto& c : b.caveats) out << "caveat: " << c << '\n';
      return 0;
    }
    json factors = json::array();
    for (const auto& [h, e] : fz.factors) factors.push_back({{"poly", to_text(h)}, {"mult", e}});
    emit(out, {{"kind", resolvent_kind_name(k, index)},
               {"left", to_string(l)},
               {"right", to_string(r)},
               {"coeffs", to_json(b.poly)},
               {"poly", to_text(b.poly)},
               {"unit", to_string(fz.unit)},
               {"factorization", factors},
               {"dt_fold", fold},
               {"dt_split", split},
               {"caveats", b.caveats}});
    return 0;
  }

  int search_cmd(std::ostream& out) const {
    SearchOptions o;
    o.family = search_family(family);
    o.fixed = parse_param_point(fix.find(':') == std::string::npos ? family + ":" + fix : fix);
    const auto comma = range.find(',');
    o.first = parse_range(range.substr(0, comma));
    if (!t_fixed.empty()) {
      if (comma != std::string::npos) throw ParseError("--t-fixed takes a single range a:b");
      o.second_fixed = parse_rational(t_fixed);
    } else {
      if (comma == std::string::npos) throw ParseError("--range needs a:b,c:d unless --t-fixed is given");
      o.second = parse_range(range.substr(comma + 1));
    }
    o.primes = primes;
    o.jobs = jobs;
    const SearchResult res = search(o);
    if (output == "text") {
      for (const auto& m : res.matches) {
        out << to_string(m.point);
        for (const auto& r : m.resolvents) out << ' ' << r;
        out << '\n';
      }
      out << res.matches.size() << " matches, " << res.candidates << " candidates\n";
      return 0;
    }
    json matches = json::array();
    for (const auto& m : res.matches) {
      matches.push_back({{"point", to_string(m.point)}, {"resolvents", m.resolvents}, {"table_row", m.verdict.table_row}});
    }
    emit(out, {{"family", family},
               {"fixed", to_string(o.fixed)},
               {"range", range},
               {"primes", primes},
               {"matches", matches},
               {"candidates", res.candidates},
               {"skipped", res.skipped},
               {"screened", res.screened},
               {"confirmed", res.confirmed}});
    return 0;
  }

  int verify(std::ostream& out) const {
    const SuiteReport rep = identity_suite(suite);
    if (output == "text") {
      for (const auto& id : rep.identities) {
        out << id.name << ' ' << id.passed << '/' << id.checked;
        if (id.first_failure) out << " first failure: " << *id.first_failure;
        out << '\n';
      }
      out << (rep.all_passed() ? "all passed" : "FAILED") << '\n';
    } else {
      emit(out, rep.to_json());
    }
    return rep.all_passed() ? 0 : 1;
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Cli c;
  CLI::App app{"Exact splitting-field comparisons for solvable quintic families", "quinfield"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--output", c.output, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* group = app.add_subcommand("group", "Galois group of a parameter point");
  group->add_option("point", c.point, "e.g. d5:-18,1")->required();

  auto* cmp = app.add_subcommand("compare", "Relation between two splitting fields");
  cmp->add_option("left", c.left)->required();
  cmp->add_option("right", c.right)->required();

  auto* search = app.add_subcommand("search", "Grid search for points with the same splitting field");
  search->add_option("family", c.family, "d5 or c5")->required();
  search->add_option("--fix", c.fix, "fixed point, e.g. 0,1")->required();
  search->add_option("--range", c.range, "a:b[,c:d]")->required();
  search->add_option("--t-fixed", c.t_fixed, "fix the second coordinate");
  search->add_option("--primes", c.primes, "screening primes")->delimiter(',');
  search->add_option("--jobs", c.jobs, "worker threads");

  auto* res = app.add_subcommand("resolvent", "Build and factor a resolvent");
  res->add_option("kind", c.kind, "F1..F4, H1..H4, Hfull, C4pm")->required();
  res->add_option("left", c.left)->required();
  res->add_option("right", c.right)->required();

  auto* verify = app.add_subcommand("verify", "Randomized identity suite");
  verify->add_option("--seed", c.suite.seed);
  verify->add_option("--trials", c.suite.trials);
  verify->add_option("--char2-field-bits", c.suite.char2_bits)->check(CLI::Range(0, 62));
  verify->add_option("--char2-trials", c.suite.char2_trials);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (*group) return c.group(out);
    if (*cmp) return c.compare_cmd(out);
    if (*search) return c.search_cmd(out);
    if (*res) return c.resolvent(out);
    if (*verify) return c.verify(out);
  } catch (const Indeterminate& e) {
    err << "indeterminate: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace quinfield
