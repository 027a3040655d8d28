#pragma once

#include <charconv>
#include <cmath>
#include <limits>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "cliffdet/algebra.hpp"

namespace cliffdet {

// Grammar:
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*      a number directly followed by a blade
//                                      or '(' multiplies implicitly: 2e1
//   unary   := ('+' | '-') unary | primary
//   primary := number | blade | '(' expr ')'
//   blade   := 'e' digit* | 'e{' index (',' index)* '}'
//
// Without braces each digit is one generator index. Exponents in literals use
// an uppercase E, since a lowercase e always starts a blade.
namespace detail {

class Parser {
public:
  Parser(std::string_view src, const Signature &sig) : src_(src), sig_(sig) {}

  Multivector parse() {
    Multivector out = expr();
    skip_space();
    if (pos_ != src_.size())
      fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return out;
  }

private:
  [[noreturn]] void fail(const std::string &msg) const { throw SyntaxError(pos_, msg); }

  void skip_space() {
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t' ||
                                  src_[pos_] == '\n' || src_[pos_] == '\r'))
      ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  static bool is_digit(char c) { return c >= '0' && c <= '9'; }

  Multivector expr() {
    Multivector acc = term();
    for (;;) {
      const char c = peek();
      if (c == '+') {
        ++pos_;
        acc = acc + term();
      } else if (c == '-') {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Multivector term() {
    Multivector acc = unary();
    while (peek() == '*') {
      ++pos_;
      acc = acc * unary();
    }
    return acc;
  }

  Multivector unary() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return primary();
  }

  Multivector primary() {
    const char c = peek();
    if (c == '\0')
      fail("unexpected end of input");
    if (c == '(') {
      ++pos_;
      Multivector inner = expr();
      if (peek() != ')')
        fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'e')
      return blade();
    if (is_digit(c) || c == '.' || c == 'i' || c == 'n') {
      const double value = number();
      // Implicit multiplication binds only to what immediately follows.
      if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == '('))
        return scale(value, primary());
      return Multivector::scalar(sig_, value);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  double number() {
    const std::size_t start = pos_;
    if (src_.substr(pos_, 3) == "inf") {
      pos_ += 3;
      return std::numeric_limits<double>::infinity();
    }
    if (src_.substr(pos_, 3) == "nan") {
      pos_ += 3;
      return std::numeric_limits<double>::quiet_NaN();
    }
    std::size_t end = pos_;
    while (end < src_.size() && is_digit(src_[end]))
      ++end;
    if (end < src_.size() && src_[end] == '.') {
      ++end;
      while (end < src_.size() && is_digit(src_[end]))
        ++end;
    }
    if (end < src_.size() && src_[end] == 'E') {
      std::size_t exp = end + 1;
      if (exp < src_.size() && (src_[exp] == '+' || src_[exp] == '-'))
        ++exp;
      if (exp >= src_.size() || !is_digit(src_[exp])) {
        pos_ = exp;
        fail("malformed exponent");
      }
      while (exp < src_.size() && is_digit(src_[exp]))
        ++exp;
      end = exp;
    }
    double value = 0.0;
    const char *first = src_.data() + start;
    const char *last = src_.data() + end;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
      fail("malformed number");
    pos_ = end;
    return value;
  }

  Multivector blade() {
    ++pos_; // 'e'
    std::vector<int> indices;
    if (pos_ < src_.size() && src_[pos_] == '{') {
      ++pos_;
      for (;;) {
        skip_space();
        const std::size_t at = pos_;
        int idx = 0;
        const auto [ptr, ec] =
            std::from_chars(src_.data() + pos_, src_.data() + src_.size(), idx);
        if (ec != std::errc())
          fail("expected generator index");
        pos_ = static_cast<std::size_t>(ptr - src_.data());
        check_index(idx, at);
        indices.push_back(idx);
        const char c = peek();
        if (c == ',') {
          ++pos_;
          continue;
        }
        if (c == '}') {
          ++pos_;
          break;
        }
        fail("expected ',' or '}' in blade");
      }
    } else {
      while (pos_ < src_.size() && is_digit(src_[pos_])) {
        check_index(src_[pos_] - '0', pos_);
        indices.push_back(src_[pos_] - '0');
        ++pos_;
      }
    }
    BladeMask mask = 0;
    int sign = 1;
    for (int idx : indices) {
      const auto [m, s] = blade_mul(mask, BladeMask{1} << (idx - 1), sig_);
      mask = m;
      sign *= s;
    }
    return Multivector::blade(sig_, mask, sign);
  }

  void check_index(int idx, std::size_t at) const {
    if (idx < 1 || idx > sig_.n())
      throw Error(ErrorCode::index_out_of_range,
                  "generator e" + std::to_string(idx) + " at position " +
                      std::to_string(at) + " outside " + to_string(sig_));
  }

  std::string_view src_;
  Signature sig_;
  std::size_t pos_ = 0;
};

inline std::string format_double(double x) {
  if (x == 0.0)
    return "0"; // also for -0
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  std::string out(buf, ptr);
  for (char &c : out)
    if (c == 'e')
      c = 'E';
  return out;
}

} // namespace detail

inline Multivector parse(std::string_view expr, const Signature &sig) {
  return detail::Parser(expr, sig).parse();
}

inline std::string format_blade(BladeMask mask, const Signature &sig) {
  std::string out = "e";
  if (mask == 0)
    return out;
  const bool braces = sig.n() >= 10;
  if (braces)
    out += '{';
  bool first = true;
  for (int a = 1; a <= sig.n(); ++a) {
    if (!((mask >> (a - 1)) & 1u))
      continue;
    if (braces && !first)
      out += ',';
    out += std::to_string(a);
    first = false;
  }
  if (braces)
    out += '}';
  return out;
}

// Canonical text: blades by ascending mask, zero terms dropped, unit
// coefficients omitted, shortest round-trip literals. The zero element is "0".
inline std::string format(const Multivector &u) {
  const Signature &sig = u.signature();
  const auto c = u.coefficients();
  std::string out;
  for (BladeMask mask = 0; mask < c.size(); ++mask) {
    const double x = c[mask];
    if (x == 0.0)
      continue;
    const bool negative = std::signbit(x);
    const double mag = std::abs(x);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (mask == 0)
      out += detail::format_double(mag);
    else if (mag == 1.0)
      out += format_blade(mask, sig);
    else
      out += detail::format_double(mag) + "*" + format_blade(mask, sig);
  }
  return out.empty() ? "0" : out;
}

} // namespace cliffdet
