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
// The mediant iteration: repeatedly replace one bound of a bracketing pair
// by the mediant of the two, keeping an exact trace of every step. The
// reduction policy is semantic, not cosmetic: reducing each mediant before
// the next step produces a different sequence than keeping component sums
// whenever the seed pair is not unimodular.

#ifndef ORTEGA_ENGINE_HPP_
#define ORTEGA_ENGINE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ortega/rational.hpp"
#include "ortega/seeds.hpp"

namespace ortega {

enum class RefinePolicy { Reduce, KeepRaw };

inline const char* to_string(RefinePolicy p) {
  return p == RefinePolicy::Reduce ? "reduce" : "raw";
}

// When to stop refining. A safety cap on the row count is always enforced
// on top of whichever rule is active.
struct StopRule {
  enum class Kind {
    FirstOptimalUpper,  // first row whose upper bound is optimal
    FirstOptimalLower,  // first row whose lower bound is optimal
    TargetValue,        // either bound equals the target (canonical equality)
    MaxRows,            // exactly k rows
    ExactHit,           // only an exact mediant hit stops the run
  };

  Kind kind = Kind::FirstOptimalUpper;
  Rational target;
  std::size_t rows = 0;

  static StopRule first_optimal_upper() { return {Kind::FirstOptimalUpper, {}, 0}; }
  static StopRule first_optimal_lower() { return {Kind::FirstOptimalLower, {}, 0}; }
  static StopRule target_value(Rational t) { return {Kind::TargetValue, std::move(t), 0}; }
  static StopRule max_rows(std::size_t k) { return {Kind::MaxRows, {}, k}; }
  static StopRule exact_hit() { return {Kind::ExactHit, {}, 0}; }
};

enum class RowUpdate { SeedRow, LowerUpdated, UpperUpdated };

enum class Termination {
  TargetReached,
  OptimalUpperFound,
  OptimalLowerFound,
  ExactRootFound,
  RowLimit,    // MaxRows rule satisfied
  Incomplete,  // safety cap hit without satisfying the active rule
};

inline const char* to_string(Termination t) {
  switch (t) {
    case Termination::TargetReached: return "target-reached";
    case Termination::OptimalUpperFound: return "optimal-upper";
    case Termination::OptimalLowerFound: return "optimal-lower";
    case Termination::ExactRootFound: return "exact-root";
    case Termination::RowLimit: return "row-limit";
    case Termination::Incomplete: return "incomplete";
  }
  return "?";
}

// One line of an iteration table. Under Reduce the bounds are canonical;
// under KeepRaw they carry the unreduced component sums.
struct TraceRow {
  std::size_t index = 1;  // row 1 is the seed pair
  RawFraction lower;
  RawFraction upper;
  Rational upper_error;  // value(upper)^2 - n, canonical
  RowUpdate updated = RowUpdate::SeedRow;
};

struct Trace {
  Radicand radicand;
  RefinePolicy policy;
  std::vector<TraceRow> rows;
  Termination termination = Termination::Incomplete;
  std::optional<Rational> exact_root;  // set when termination == ExactRootFound
};

// x is an optimal upper approximation of n when x^2 - n == 1/q^2 on the
// canonical form x = p/q; for integer n this is Pell's equation
// p^2 - n q^2 = 1. Always evaluated on the reduced form, whatever the
// iteration policy: 165055/228811 is optimal because 15005/20801 is.
inline bool is_optimal_upper(const Rational& x, const Radicand& n) {
  const BigInt& p = x.num();
  const BigInt& q = x.den();
  const BigInt& numer = n.value().num();
  const BigInt& denom = n.value().den();
  return p * p * denom - numer * q * q == denom;
}

// Lower-side analogue: n - x^2 == 1/q^2 (negative Pell for integer n).
inline bool is_optimal_lower(const Rational& x, const Radicand& n) {
  const BigInt& p = x.num();
  const BigInt& q = x.den();
  const BigInt& numer = n.value().num();
  const BigInt& denom = n.value().den();
  return numer * q * q - p * p * denom == denom;
}

struct StepResult {
  RawFraction lower;
  RawFraction upper;
  RowUpdate updated = RowUpdate::SeedRow;
  std::optional<Rational> exact_root;
};

// One mediant step: form the mediant of the pair (raw or reduced per
// policy), classify it against n, and move the matching bound. An exact
// mediant hit reports the root instead of a new pair.
inline StepResult refine_step(const Radicand& n, const RawFraction& lower,
                              const RawFraction& upper, RefinePolicy policy) {
  if (square_compare(lower.value(), n) != SideOfRoot::Below ||
      square_compare(upper.value(), n) != SideOfRoot::Above)
    throw Error("refine_step: seeds do not bracket sqrt(" + n.str() + ")");

  RawFraction m = mediant_raw(lower, upper);
  if (policy == RefinePolicy::Reduce) m = to_raw(m.value());

  switch (square_compare(m.value(), n)) {
    case SideOfRoot::Below:
      return {m, upper, RowUpdate::LowerUpdated, std::nullopt};
    case SideOfRoot::Above:
      return {lower, m, RowUpdate::UpperUpdated, std::nullopt};
    case SideOfRoot::Exact:
      return {lower, upper, RowUpdate::SeedRow, m.value()};
  }
  throw Error("unreachable");
}

// Full iteration from a seed pair. Row 1 is the seed pair itself; the stop
// rule is evaluated on every row including the seeds (a seed upper can
// already be optimal or already be the target). Hitting the safety cap
// flags the trace Incomplete rather than throwing.
inline Trace refine(const Radicand& n, const SeedPair& seeds, RefinePolicy policy,
                    const StopRule& stop, std::size_t safety_cap = 10000) {
  Trace trace{n, policy, {}, Termination::Incomplete, std::nullopt};

  RawFraction lower = to_raw(seeds.lower);
  RawFraction upper = to_raw(seeds.upper);
  if (square_compare(seeds.lower, n) != SideOfRoot::Below ||
      square_compare(seeds.upper, n) != SideOfRoot::Above)
    throw Error("refine: seeds (" + seeds.lower.str() + ", " + seeds.upper.str() +
                ") do not bracket sqrt(" + n.str() + ")");

  auto push_row = [&](const RawFraction& lo, const RawFraction& up, RowUpdate upd) {
    trace.rows.push_back(TraceRow{trace.rows.size() + 1, lo, up,
                                  upper_error(up.value(), n), upd});
  };
  auto rule_satisfied = [&](const TraceRow& row) -> std::optional<Termination> {
    switch (stop.kind) {
      case StopRule::Kind::FirstOptimalUpper:
        if (is_optimal_upper(row.upper.value(), n))
          return Termination::OptimalUpperFound;
        return std::nullopt;
      case StopRule::Kind::FirstOptimalLower:
        if (is_optimal_lower(row.lower.value(), n))
          return Termination::OptimalLowerFound;
        return std::nullopt;
      case StopRule::Kind::TargetValue:
        if (row.upper.value() == stop.target || row.lower.value() == stop.target)
          return Termination::TargetReached;
        return std::nullopt;
      case StopRule::Kind::MaxRows:
        if (row.index >= stop.rows) return Termination::RowLimit;
        return std::nullopt;
      case StopRule::Kind::ExactHit:
        return std::nullopt;
    }
    return std::nullopt;
  };

  push_row(lower, upper, RowUpdate::SeedRow);
  for (;;) {
    if (auto fired = rule_satisfied(trace.rows.back())) {
      trace.termination = *fired;
      return trace;
    }
    if (trace.rows.size() >= safety_cap) {
      trace.termination = Termination::Incomplete;
      return trace;
    }
    StepResult step = refine_step(n, lower, upper, policy);
    if (step.exact_root) {
      trace.termination = Termination::ExactRootFound;
      trace.exact_root = step.exact_root;
      return trace;
    }
    lower = step.lower;
    upper = step.upper;
    push_row(lower, upper, step.updated);
  }
}

// One row per line: index, lower, upper, upper error, separated by `sep`
// (tab for the human table, comma for CSV).
inline std::string render_trace_rows(const Trace& trace, char sep) {
  std::string out;
  for (const TraceRow& row : trace.rows) {
    out += std::to_string(row.index);
    out += sep;
    out += row.lower.str();
    out += sep;
    out += row.upper.str();
    out += sep;
    out += row.upper_error.str();
    out += '\n';
  }
  return out;
}

}  // namespace ortega

#endif  // ORTEGA_ENGINE_HPP_
