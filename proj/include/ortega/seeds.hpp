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
//
// Initial bracketing approximations of sqrt(n): the a + r/(2a+1) <= sqrt(n)
// <= a + r/(2a) bounds, plain integer bounds (a, a+1), reciprocal-scaled
// bounds for sqrt(c^2/m), and the increase-the-denominator companion rule.

#ifndef ORTEGA_SEEDS_HPP_
#define ORTEGA_SEEDS_HPP_

#include <variant>

#include "ortega/rational.hpp"

namespace ortega {

enum class SeedOrigin { Heron, Integer, Scaled, Custom };

inline const char* to_string(SeedOrigin o) {
  switch (o) {
    case SeedOrigin::Heron: return "heron";
    case SeedOrigin::Integer: return "integer";
    case SeedOrigin::Scaled: return "scaled";
    case SeedOrigin::Custom: return "custom";
  }
  return "?";
}

// A value together with its verified side of the root.
struct ClassifiedApprox {
  Rational value;
  SideOfRoot side;
};

inline ClassifiedApprox classify(const Rational& x, const Radicand& n) {
  return {x, square_compare(x, n)};
}

// Strict bracket: lower^2 < n < upper^2.
struct SeedPair {
  Rational lower;
  Rational upper;
  SeedOrigin origin = SeedOrigin::Custom;
};

// Seed construction either brackets the root or lands on it exactly
// (integer-square radicand); the exact root is carried as a Rational.
using SeedResult = std::variant<SeedPair, Rational>;

inline BigInt floor_sqrt(const Radicand& n) { return n.floor_root(); }

// a + r/(2a+1) <= sqrt(n) <= a + r/(2a), both canonical. Requires a >= 1;
// for n < 1 the upper formula divides by zero, use integer_bounds instead.
inline SeedResult heron_bounds(const Radicand& n) {
  const BigInt& a = n.floor_root();
  const Rational& r = n.floor_remainder();
  if (r.is_zero()) return SeedResult(Rational(a));
  if (a == 0)
    throw Error(
        "heron bounds undefined for radicand below one (upper formula "
        "divides by 2a = 0); use integer bounds (0, 1)");
  Rational lower = Rational(a) + r / Rational(2 * a + 1);
  Rational upper = Rational(a) + r / Rational(2 * a);
  return SeedResult(SeedPair{lower, upper, SeedOrigin::Heron});
}

// The bracket (a, a+1), as used for the two radicands that come with no
// published lower value.
inline SeedResult integer_bounds(const Radicand& n) {
  if (n.is_integer_square()) return SeedResult(Rational(n.floor_root()));
  const BigInt& a = n.floor_root();
  return SeedResult(SeedPair{Rational(a), Rational(a + 1), SeedOrigin::Integer});
}

// From an approximation of sqrt(m), derive c / approx as an approximation of
// sqrt(c^2/m). Upper flips to lower and vice versa; the flip is re-verified
// by exact comparison against the scaled radicand.
inline ClassifiedApprox reciprocal_scale(const Rational& c, const Radicand& m,
                                         const ClassifiedApprox& approx_m) {
  if (c.sign() <= 0) throw Error("reciprocal_scale requires positive scale");
  if (approx_m.value.is_zero()) throw Error("reciprocal_scale of zero approximation");
  Radicand target(c * c / m.value());
  Rational scaled = c / approx_m.value;
  SideOfRoot side = square_compare(scaled, target);
  SideOfRoot expected = approx_m.side == SideOfRoot::Below  ? SideOfRoot::Above
                        : approx_m.side == SideOfRoot::Above ? SideOfRoot::Below
                                                             : SideOfRoot::Exact;
  if (side != expected) throw Error("reciprocal_scale side flip failed verification");
  return {scaled, side};
}

// "Increase the denominator by one": from a lower bound written a + p/q,
// candidate a + p/(q-1), canonicalized. The rule works on the written form,
// not the reduced one, and is not universally valid: the candidate is
// returned only if it verifies as an upper bound.
inline ClassifiedApprox denominator_companion(const RawFraction& lower_as_written,
                                              const Radicand& n) {
  BigInt q = lower_as_written.den;
  if (q < 2) throw Error("denominator companion requires fractional part with q >= 2");
  BigInt whole = lower_as_written.whole();
  BigInt p = lower_as_written.num % lower_as_written.den;
  Rational candidate = Rational(whole) + Rational(p, q - 1);
  SideOfRoot side = square_compare(candidate, n);
  if (side != SideOfRoot::Above)
    throw Error("denominator companion of " + lower_as_written.str() +
                " is not an upper bound for sqrt(" + n.str() + ")");
  return {candidate, side};
}

}  // namespace ortega

#endif  // ORTEGA_SEEDS_HPP_
