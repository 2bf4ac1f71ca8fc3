#pragma once

#include "dti/core.hpp"
#include "dti/errors.hpp"
#include "dti/monomial_ideal.hpp"
#include "dti/poly.hpp"

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

namespace dti {

/// Monomial text format: `x3^2*x5` puts exponent 2 on x3 and 1 on x5;
/// `1` is the constant monomial.
inline std::string to_string(const ExponentVector& e) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!first) os << '*';
    os << 'x' << (i + 1);
    if (e[i] != 1) os << '^' << e[i];
    first = false;
  }
  if (first) os << '1';
  return os.str();
}

inline std::string to_string(const MonomialIdeal& I) {
  if (I.is_zero()) return "(0)";
  std::ostringstream os;
  bool first = true;
  for (const ExponentVector& g : I.gens()) {
    if (!first) os << ", ";
    os << to_string(g);
    first = false;
  }
  return os.str();
}

namespace detail {

inline void skip_spaces(const std::string& s, std::size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

inline Int parse_integer(const std::string& s, std::size_t& pos) {
  skip_spaces(s, pos);
  std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start) throw ParseError("expected an integer in '" + s + "'");
  return Int(s.substr(start, pos - start));
}

} // namespace detail

/// Parses the monomial text format. With nvars = 0 the arity is inferred
/// as the largest variable index present.
inline ExponentVector parse_monomial(const std::string& text, int nvars = 0) {
  std::size_t pos = 0;
  std::vector<std::pair<std::size_t, Int>> factors;
  std::size_t max_index = 0;
  bool expect_factor = true;
  while (true) {
    detail::skip_spaces(text, pos);
    if (pos >= text.size()) break;
    if (!expect_factor) {
      if (text[pos] != '*') throw ParseError("expected '*' in monomial '" + text + "'");
      ++pos;
      expect_factor = true;
      continue;
    }
    if (text[pos] == '1') {
      ++pos;
      expect_factor = false;
      continue;
    }
    if (text[pos] != 'x') throw ParseError("expected a variable in monomial '" + text + "'");
    ++pos;
    Int index = detail::parse_integer(text, pos);
    if (index < 1 || index > 4096) throw ParseError("variable index out of range");
    std::size_t idx = index.convert_to<std::size_t>();
    Int exponent = 1;
    detail::skip_spaces(text, pos);
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      exponent = detail::parse_integer(text, pos);
    }
    factors.emplace_back(idx, exponent);
    if (idx > max_index) max_index = idx;
    expect_factor = false;
  }
  if (expect_factor) throw ParseError("empty monomial in '" + text + "'");

  std::size_t n = nvars > 0 ? static_cast<std::size_t>(nvars) : max_index;
  if (max_index > n) throw ParseError("variable index exceeds nvars in '" + text + "'");
  std::vector<Int> e(n, Int(0));
  for (const auto& [idx, exp] : factors) e[idx - 1] += exp;
  return ExponentVector(std::move(e));
}

/// Parses a comma-separated list of monomials.
inline std::vector<ExponentVector> parse_monomial_list(const std::string& text, int nvars = 0) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);

  int n = nvars;
  if (n == 0) {
    for (const std::string& part : parts) {
      ExponentVector e = parse_monomial(part);
      n = std::max(n, static_cast<int>(e.size()));
    }
  }
  std::vector<ExponentVector> result;
  result.reserve(parts.size());
  for (const std::string& part : parts) result.push_back(parse_monomial(part, n));
  return result;
}

/// Polynomial text format: terms joined by '+', each `c*monomial` with
/// the coefficient in [1, p-1] and omitted when 1. Terms print in
/// descending lexicographic order of their exponents.
inline std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    if (!first) os << '+';
    if (it->second != 1) os << it->second << '*';
    os << to_string(ExponentVector(it->first));
    first = false;
  }
  return os.str();
}

inline Polynomial parse_polynomial(const std::string& text, std::int64_t p, int nvars) {
  Polynomial f(p, nvars);
  std::string term;
  std::vector<std::string> terms;
  for (char ch : text) {
    if (ch == '+') {
      terms.push_back(term);
      term.clear();
    } else {
      term += ch;
    }
  }
  terms.push_back(term);
  for (std::string& t : terms) {
    std::size_t pos = 0;
    detail::skip_spaces(t, pos);
    std::int64_t coeff = 1;
    // A leading integer not followed by 'x' directly is a coefficient.
    if (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) {
      std::size_t probe = pos;
      Int value = detail::parse_integer(t, probe);
      detail::skip_spaces(t, probe);
      if (probe < t.size() && t[probe] == '*') {
        coeff = static_cast<std::int64_t>(value % p);
        pos = probe + 1;
      } else if (probe >= t.size()) {
        // Constant term.
        f.add_term(ExponentVector::zeros(static_cast<std::size_t>(nvars)).entries(),
                   static_cast<std::int64_t>(value % p));
        continue;
      }
    }
    ExponentVector e = parse_monomial(t.substr(pos), nvars);
    f.add_term(e.entries(), coeff);
  }
  return f;
}

} // namespace dti
