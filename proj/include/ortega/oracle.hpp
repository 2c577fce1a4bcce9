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
// Verification machinery independent of the mediant engine: periodic
// continued fractions of sqrt(n), their convergents, fundamental Pell
// solutions, an exhaustive best-upper-approximation search, and the
// unit-fraction display form. Used to cross-check engine results, never to
// produce them. Deliberately includes nothing from engine.hpp.

#ifndef ORTEGA_ORACLE_HPP_
#define ORTEGA_ORACLE_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "ortega/rational.hpp"

namespace ortega {

// Simple continued fraction of sqrt(n) for non-square integer n >= 2:
// [a0; period repeated], with the classical properties a0 = floor(sqrt(n))
// and last period term = 2*a0.
struct CfExpansion {
  BigInt n;
  BigInt a0;
  std::vector<BigInt> period;
};

// Minimal-period expansion via the integer state (m, d, a):
//   m' = d*a - m,  d' = (n - m'^2)/d,  a' = floor((a0 + m')/d').
// The cycle closes exactly when d returns to 1 (equivalently a = 2*a0).
inline CfExpansion cf_expansion(const BigInt& n) {
  if (n < 2) throw Error("cf_expansion requires n >= 2");
  BigInt a0 = isqrt_floor(n);
  if (a0 * a0 == n) throw Error("cf_expansion of perfect square " + n.str());

  CfExpansion e{n, a0, {}};
  BigInt m = 0, d = 1, a = a0;
  for (;;) {
    m = d * a - m;
    d = (n - m * m) / d;
    a = (a0 + m) / d;
    e.period.push_back(a);
    if (d == 1) break;
  }
  // Regenerate the cycle once to confirm minimality of the stored period.
  BigInt m2 = 0, d2 = 1, a2 = a0;
  for (std::size_t i = 0; i < e.period.size(); ++i) {
    m2 = d2 * a2 - m2;
    d2 = (n - m2 * m2) / d2;
    a2 = (a0 + m2) / d2;
    if (a2 != e.period[i]) throw Error("cf_expansion period failed regeneration");
  }
  if (e.period.back() != 2 * a0) throw Error("cf_expansion period end != 2*a0");
  return e;
}

// First `count` convergents by the standard three-term recurrence
// p_k = a_k p_{k-1} + p_{k-2}, cycling through the period as needed.
inline std::vector<Rational> convergents(const CfExpansion& e, std::size_t count) {
  std::vector<Rational> out;
  out.reserve(count);
  BigInt p_prev = 1, p = e.a0;
  BigInt q_prev = 0, q = 1;
  out.emplace_back(p, q);
  for (std::size_t k = 1; k < count; ++k) {
    const BigInt& a = e.period[(k - 1) % e.period.size()];
    BigInt p_next = a * p + p_prev;
    BigInt q_next = a * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
    out.emplace_back(p, q);
  }
  return out;
}

// Minimal positive solution of p^2 - n q^2 = 1.
struct PellSolution {
  BigInt p;
  BigInt q;
};

// Found by scanning CF convergents in order; every Pell solution is a
// convergent, so the first hit is the fundamental one.
inline PellSolution fundamental_pell(const BigInt& n) {
  CfExpansion e = cf_expansion(n);
  BigInt p_prev = 1, p = e.a0;
  BigInt q_prev = 0, q = 1;
  std::size_t k = 0;
  while (p * p - n * q * q != 1) {
    const BigInt& a = e.period[k % e.period.size()];
    BigInt p_next = a * p + p_prev;
    BigInt q_next = a * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
    ++k;
  }
  return {p, q};
}

// Minimal positive solution of p^2 - n q^2 = -1 if one exists (it does
// exactly when the CF period length is odd).
inline std::optional<PellSolution> fundamental_negative_pell(const BigInt& n) {
  CfExpansion e = cf_expansion(n);
  if (e.period.size() % 2 == 0) return std::nullopt;
  BigInt p_prev = 1, p = e.a0;
  BigInt q_prev = 0, q = 1;
  std::size_t k = 0;
  while (p * p - n * q * q != -1) {
    const BigInt& a = e.period[k % e.period.size()];
    BigInt p_next = a * p + p_prev;
    BigInt q_next = a * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
    ++k;
  }
  return PellSolution{p, q};
}

// Desk-scale exhaustive oracle: the best (smallest) upper rational bound of
// sqrt(n) with denominator at most qmax. For each q the smallest p with
// p^2 D > N q^2 is a candidate; candidates are compared by exact value.
inline Rational brute_best_upper(const Radicand& n, const BigInt& qmax) {
  if (qmax < 1) throw Error("brute_best_upper requires qmax >= 1");
  const BigInt& numer = n.value().num();
  const BigInt& denom = n.value().den();
  std::optional<Rational> best;
  for (BigInt q = 1; q <= qmax; ++q) {
    BigInt p = isqrt_floor(numer * q * q / denom);
    while (p * p * denom <= numer * q * q) ++p;
    Rational candidate(p, q);
    if (!best || candidate < *best) best = candidate;
  }
  return *best;
}

// whole + 1/u (+ 1/v): the display form the editions use for 2+13/42.
struct UnitFractionForm {
  BigInt whole;
  BigInt u;
  std::optional<BigInt> v;
};

// If the fractional part of x is a single unit fraction 1/u, return (u);
// else if it splits as 1/u + 1/v with 2 <= u < v <= 1000, return the
// lexicographically smallest such pair; otherwise nothing.
inline std::optional<UnitFractionForm> unit_fraction_form(const Rational& x) {
  constexpr int kSearchBound = 1000;
  MixedParts parts = to_mixed(x);
  const Rational& f = parts.frac;
  if (f.is_zero()) return std::nullopt;
  if (f.num() == 1 && f.den() <= kSearchBound)
    return UnitFractionForm{parts.whole, f.den(), std::nullopt};
  for (BigInt u = 2; u <= kSearchBound; ++u) {
    Rational rest = f - Rational(BigInt(1), u);
    if (rest.sign() <= 0) continue;
    if (rest.num() == 1 && rest.den() > u && rest.den() <= kSearchBound)
      return UnitFractionForm{parts.whole, u, rest.den()};
  }
  return std::nullopt;
}

}  // namespace ortega

#endif  // ORTEGA_ORACLE_HPP_
