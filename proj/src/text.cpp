#include "qcirc/text.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "qcirc/error.hpp"

namespace qcirc {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t n) : s_(text), n_(n) {}

  Polynomial parse() {
    Polynomial p(n_);
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto [alpha, c] = term();
      p.add_term(alpha, sign * c);
      first = false;
      skip_ws();
    }
    return p;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError,
                why + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  std::string_view digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }

  std::uint64_t small_number(std::string_view d) const {
    if (d.size() > 9) fail("number too large");
    return std::stoull(std::string(d));
  }

  std::pair<MultiIndex, Rational> term() {
    MultiIndex alpha(n_);
    Rational c = 1;
    bool any = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string lit(digits());
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_ws();
        lit += '/';
        lit += digits();
      }
      c = parse_rational(lit);
      any = true;
      skip_ws();
    }
    while (!at_end()) {
      if (peek() == '*') {
        if (!any) fail("unexpected '*'");
        ++pos_;
        skip_ws();
        if (at_end() || peek() != 'z') fail("expected variable after '*'");
      }
      if (peek() != 'z') break;
      ++pos_;
      const std::uint64_t var = small_number(digits());
      if (var < 1 || var > n_) {
        throw Error(ErrorCode::DimensionMismatch,
                    "variable z" + std::to_string(var) + " outside z1..z" + std::to_string(n_));
      }
      skip_ws();
      std::uint64_t e = 1;
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        e = small_number(digits());
        skip_ws();
      }
      alpha[var - 1] += static_cast<Exponent>(e);
      any = true;
    }
    if (!any) fail("expected a term");
    return {alpha, c};
  }

  std::string_view s_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t n) { return Parser(text, n).parse(); }

std::string format_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<MultiIndex, Rational>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const auto da = a.first.degree();
    const auto db = b.first.degree();
    if (da != db) return da < db;
    return b.first < a.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [alpha, c] : terms) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool constant = alpha.is_zero();
    bool wrote = false;
    if (constant || mag != 1) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t j = 0; j < alpha.size(); ++j) {
      if (alpha[j] == 0) continue;
      if (wrote) os << ' ';
      os << 'z' << j + 1;
      if (alpha[j] > 1) os << '^' << alpha[j];
      wrote = true;
    }
  }
  return os.str();
}

PolyMap parse_poly_map(std::string_view text, std::size_t n) {
  std::vector<Polynomial> components;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (std::all_of(line.begin(), line.end(),
                    [](unsigned char ch) { return std::isspace(ch) != 0; })) {
      continue;
    }
    components.push_back(parse_polynomial(line, n));
  }
  if (components.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "map has " + std::to_string(components.size()) +
                                                  " components, expected " + std::to_string(n));
  }
  return PolyMap(std::move(components));
}

std::string format_poly_map(const PolyMap& f) {
  std::string out;
  for (const auto& p : f) {
    out += format_polynomial(p);
    out += '\n';
  }
  return out;
}

}  // namespace qcirc
