// Copyright 2026 The ortega authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ORTEGA_RATIONAL_HPP_
#define ORTEGA_RATIONAL_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace ortega {

// All arithmetic in this library is exact and arbitrary precision. The
// iteration tables reach denominators past 8*10^7 and squared magnitudes
// past 6*10^15, so 64-bit squaring is not an option.
using BigInt = boost::multiprecision::cpp_int;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Parse failure; `position` is the byte offset into the original text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Floor of the integer square root. Boost's sqrt(cpp_int) already computes
// this; kept as a named wrapper so call sites read as what they do.
inline BigInt isqrt_floor(const BigInt& n) {
  if (n < 0) throw Error("isqrt_floor of negative integer");
  return boost::multiprecision::sqrt(n);
}

// How a fraction was written down: "9", "184/11" or "44+2079/2882". The
// corpus round-trips byte-identically, so the written shape is kept
// alongside the numeric value.
enum class FractionForm { Integer, Pure, Mixed };

namespace detail {

struct ParsedFraction {
  BigInt num;
  BigInt den;
  FractionForm form;
};

// Grammar: ['-'] INT | ['-'] INT '/' INT | ['-'] INT '+' INT '/' INT.
// Whitespace is ignored everywhere. A leading '-' negates the whole value.
inline ParsedFraction parse_fraction_text(std::string_view text) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  auto read_int = [&](const char* what) -> BigInt {
    skip_ws();
    std::size_t start = i;
    std::string digits;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      digits.push_back(text[i]);
      ++i;
    }
    if (digits.empty())
      throw ParseError(std::string("expected ") + what, start);
    return BigInt(digits);
  };

  skip_ws();
  bool negative = false;
  if (i < text.size() && text[i] == '-') {
    negative = true;
    ++i;
  }
  BigInt first = read_int("integer");
  skip_ws();

  BigInt num, den;
  FractionForm form;
  if (i < text.size() && text[i] == '+') {
    ++i;
    BigInt p = read_int("numerator");
    skip_ws();
    if (i >= text.size() || text[i] != '/')
      throw ParseError("expected '/' in mixed fraction", i);
    ++i;
    std::size_t den_pos = i;
    BigInt q = read_int("denominator");
    if (q == 0) throw ParseError("zero denominator", den_pos);
    num = first * q + p;
    den = q;
    form = FractionForm::Mixed;
  } else if (i < text.size() && text[i] == '/') {
    ++i;
    std::size_t den_pos = i;
    BigInt q = read_int("denominator");
    if (q == 0) throw ParseError("zero denominator", den_pos);
    num = first;
    den = q;
    form = FractionForm::Pure;
  } else {
    num = first;
    den = 1;
    form = FractionForm::Integer;
  }
  skip_ws();
  if (i != text.size()) throw ParseError("trailing characters", i);
  if (negative) num = -num;
  return {std::move(num), std::move(den), form};
}

inline std::string fraction_text(const BigInt& num, const BigInt& den,
                                 FractionForm form) {
  BigInt n = num < 0 ? BigInt(-num) : num;
  std::string sign = num < 0 ? "-" : "";
  switch (form) {
    case FractionForm::Integer:
      return sign + n.str();
    case FractionForm::Pure:
      return sign + n.str() + "/" + den.str();
    case FractionForm::Mixed: {
      BigInt whole = n / den;
      BigInt part = n % den;
      if (whole == 0) return sign + n.str() + "/" + den.str();
      if (part == 0) return sign + whole.str();
      return sign + whole.str() + "+" + part.str() + "/" + den.str();
    }
  }
  throw Error("unreachable fraction form");
}

// Natural display for a computed value: integers as "k", values under one
// as "p/q", anything else as "w+p/q".
inline FractionForm natural_form(const BigInt& num, const BigInt& den) {
  if (den == 1) return FractionForm::Integer;
  BigInt n = num < 0 ? BigInt(-num) : num;
  return n < den ? FractionForm::Pure : FractionForm::Mixed;
}

}  // namespace detail

// Exact signed rational in canonical form: den > 0, gcd(|num|, den) = 1.
// Immutable value type; all operations are pure.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long value) : num_(value), den_(1) {}  // NOLINT(runtime/explicit)
  Rational(BigInt value) : num_(std::move(value)), den_(1) {}  // NOLINT

  // Canonicalizes: sign moves to the numerator, gcd is divided out.
  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw Error("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

  Rational operator-() const { return Rational(Raw{}, -num_, den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw Error("division by zero rational");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // Floor division toward negative infinity.
  BigInt floor() const {
    BigInt q = num_ / den_;
    if (num_ < 0 && q * den_ != num_) --q;
    return q;
  }

  std::string str() const {
    return detail::fraction_text(num_, den_, detail::natural_form(num_, den_));
  }

  // Accepts the same grammar the tables use; result is canonical.
  static Rational parse(std::string_view text) {
    auto f = detail::parse_fraction_text(text);
    return Rational(std::move(f.num), std::move(f.den));
  }

 private:
  struct Raw {};
  Rational(Raw, BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {}

  BigInt num_;
  BigInt den_;
};

// Splits x >= 0 into whole part and fractional part in [0, 1).
struct MixedParts {
  BigInt whole;
  Rational frac;
};

inline MixedParts to_mixed(const Rational& x) {
  if (x.sign() < 0) throw Error("to_mixed of negative rational");
  BigInt whole = x.floor();
  return {whole, x - Rational(whole)};
}

// Mediant of two canonical non-negative fractions, re-canonicalized. For
// x < y the result lies strictly between them.
inline Rational mediant(const Rational& x, const Rational& y) {
  if (x.sign() < 0 || y.sign() < 0) throw Error("mediant of negative rational");
  return Rational(x.num() + y.num(), x.den() + y.den());
}

// A fraction exactly as written: den > 0 but not necessarily reduced, plus
// the shape it was written in. 2079/2882 and 189/262 denote the same number
// but are different RawFractions; equality is on num/den.
struct RawFraction {
  BigInt num;
  BigInt den = 1;
  FractionForm form = FractionForm::Integer;

  RawFraction() = default;
  RawFraction(BigInt n, BigInt d)
      : num(std::move(n)), den(std::move(d)), form(detail::natural_form(num, den)) {
    if (den <= 0) throw Error("raw fraction with non-positive denominator");
  }
  RawFraction(BigInt n, BigInt d, FractionForm f)
      : num(std::move(n)), den(std::move(d)), form(f) {
    if (den <= 0) throw Error("raw fraction with non-positive denominator");
  }

  Rational value() const { return Rational(num, den); }

  // Whole part and as-written fractional part (num mod den over den).
  BigInt whole() const { return num / den; }
  RawFraction fractional_part() const {
    return RawFraction(num % den, den, FractionForm::Pure);
  }

  std::string str() const { return detail::fraction_text(num, den, form); }

  static RawFraction parse(std::string_view text) {
    auto f = detail::parse_fraction_text(text);
    return RawFraction(std::move(f.num), std::move(f.den), f.form);
  }

  friend bool operator==(const RawFraction& a, const RawFraction& b) {
    return a.num == b.num && a.den == b.den;
  }
};

inline RawFraction to_raw(const Rational& x) {
  return RawFraction(x.num(), x.den());
}

// Component-wise mediant, no reduction: (a+c)/(b+d) kept as written.
inline RawFraction mediant_raw(const RawFraction& x, const RawFraction& y) {
  if (x.num < 0 || y.num < 0) throw Error("mediant of negative fraction");
  return RawFraction(x.num + y.num, x.den + y.den);
}

// Where a candidate sits relative to the square root being approximated.
// Below doubles as "lower approximation", Above as "upper approximation".
enum class SideOfRoot { Below, Exact, Above };

inline const char* to_string(SideOfRoot s) {
  switch (s) {
    case SideOfRoot::Below: return "below";
    case SideOfRoot::Exact: return "exact";
    case SideOfRoot::Above: return "above";
  }
  return "?";
}

// A non-negative rational n = N/D whose square root is approximated.
// Caches a = floor(sqrt(n)) and r = n - a^2; every seed formula needs them.
class Radicand {
 public:
  explicit Radicand(Rational n) : n_(std::move(n)) {
    if (n_.sign() < 0) throw Error("negative radicand");
    // floor(sqrt(N/D)) equals isqrt(N/D rounded down): if a = isqrt(floor(n))
    // then a^2 <= floor(n) <= n and (a+1)^2 >= floor(n)+1 > n.
    floor_root_ = isqrt_floor(n_.num() / n_.den());
    rem_ = n_ - Rational(floor_root_ * floor_root_);
  }
  explicit Radicand(long long n) : Radicand(Rational(n)) {}

  static Radicand parse(std::string_view text) {
    auto f = detail::parse_fraction_text(text);
    if (f.num < 0) throw ParseError("radicand must be non-negative", 0);
    return Radicand(Rational(std::move(f.num), std::move(f.den)));
  }

  const Rational& value() const { return n_; }
  const BigInt& floor_root() const { return floor_root_; }   // a
  const Rational& floor_remainder() const { return rem_; }   // r = n - a^2

  // n == a^2 for integer a.
  bool is_integer_square() const { return rem_.is_zero(); }

  // Root of an exact rational square, e.g. 16/9 -> 4/3.
  std::optional<Rational> exact_root() const {
    BigInt sn = isqrt_floor(n_.num());
    if (sn * sn != n_.num()) return std::nullopt;
    BigInt sd = isqrt_floor(n_.den());
    if (sd * sd != n_.den()) return std::nullopt;
    return Rational(sn, sd);
  }

  std::string str() const { return n_.str(); }

 private:
  Rational n_;
  BigInt floor_root_;
  Rational rem_;
};

// Exact sign of x^2 - n by cross-multiplication in integers; never touches
// floating point. With x = p/q and n = N/D this is the sign of p^2 D - N q^2.
inline SideOfRoot square_compare(const Rational& x, const Radicand& n) {
  if (x.sign() < 0) throw Error("square_compare of negative value");
  BigInt lhs = x.num() * x.num() * n.value().den();
  BigInt rhs = n.value().num() * x.den() * x.den();
  if (lhs < rhs) return SideOfRoot::Below;
  if (lhs > rhs) return SideOfRoot::Above;
  return SideOfRoot::Exact;
}

// n - x^2: positive for lower approximations, negative for upper ones.
inline Rational remainder(const Rational& x, const Radicand& n) {
  if (x.sign() < 0) throw Error("remainder of negative value");
  return n.value() - x * x;
}

// x^2 - n, the sign convention the iteration tables print for upper bounds.
inline Rational upper_error(const Rational& x, const Radicand& n) {
  if (x.sign() < 0) throw Error("upper_error of negative value");
  return x * x - n.value();
}

}  // namespace ortega

#endif  // ORTEGA_RATIONAL_HPP_
