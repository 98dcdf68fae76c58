#include "quinfield/poly_io.hpp"

#include <cctype>
#include <map>

namespace quinfield {

std::string to_text(const PolyQ& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= f.degree(); ++i) {
    const Rational& c = f[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    std::string mag = to_string(Rational(abs(c)));
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (i == 0) {
      out += mag;
      continue;
    }
    if (mag != "1") out += mag + "*";
    out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

PolyQ parse_poly(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw ParseError("empty polynomial");
  std::map<unsigned long, Rational> terms;
  std::size_t i = 0;
  auto fail = [&](std::size_t at) {
    throw ParseError("unexpected token at '" + s.substr(at, 12) + "' in polynomial");
  };
  auto read_digits = [&](std::size_t& k) {
    std::size_t start = k;
    while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
    return s.substr(start, k - start);
  };
  bool first = true;
  while (i < s.size()) {
    const std::size_t term_start = i;
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
    } else if (!first) {
      fail(i);
    }
    first = false;
    Rational coef(1);
    bool have_coef = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::string num = read_digits(i);
      if (i < s.size() && s[i] == '/') {
        ++i;
        std::string den = read_digits(i);
        if (den.empty()) fail(term_start);
        num += "/" + den;
      }
      coef = parse_rational(num);
      have_coef = true;
    }
    unsigned long power = 0;
    if (i < s.size() && (s[i] == '*' || s[i] == 'x' || s[i] == 'X')) {
      if (s[i] == '*') {
        if (!have_coef) fail(i);
        ++i;
      }
      if (i >= s.size() || (s[i] != 'x' && s[i] != 'X')) fail(term_start);
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string e = read_digits(i);
        if (e.empty() || e.size() > 6) fail(term_start);
        power = std::stoul(e);
      }
    } else if (!have_coef) {
      fail(term_start);
    }
    if (i < s.size() && s[i] != '+' && s[i] != '-') fail(i);
    terms[power] += sign * coef;
  }
  std::vector<Rational> v(terms.empty() ? 0 : terms.rbegin()->first + 1, Rational(0));
  for (auto& [k, c] : terms) v[k] = c;
  return PolyQ(std::move(v));
}

nlohmann::json to_json(const PolyQ& f) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : f.coeffs()) arr.push_back(to_string(c));
  return arr;
}

PolyQ poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("polynomial JSON must be an array of strings");
  std::vector<Rational> v;
  for (const auto& e : j) {
    if (!e.is_string()) throw ParseError("polynomial coefficient must be a string");
    v.push_back(parse_rational(e.get<std::string>()));
  }
  return PolyQ(std::move(v));
}

std::string to_string(const QuadNum& x) {
  if (x.is_rational()) return to_string(x.a);
  std::string root = "sqrt(" + to_string(x.D) + ")";
  std::string bpart = x.b == 1 ? root : x.b == -1 ? "-" + root : to_string(x.b) + "*" + root;
  if (sgn(x.a) == 0) return bpart;
  return "(" + to_string(x.a) + (sgn(x.b) > 0 ? " + " : " ") + bpart + ")";
}

std::string to_text(const PolyQuad& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= f.degree(); ++i) {
    const QuadNum& c = f[static_cast<std::size_t>(i)];
    if (Ops<QuadNum>::is_zero(c)) continue;
    if (!out.empty()) out += " + ";
    out += to_string(c);
    if (i >= 1) out += "*x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace quinfield
