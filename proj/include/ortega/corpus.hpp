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
// Machine-readable transcription of every printed numeric table: the
// sixteen-radicand editions table, the Chuquet root table, and all
// seventeen iteration traces. The verifiers recompute every printed value
// from scratch and report exact matches, matches after reduction, known
// errata, and mismatches. Values are stored exactly as printed, unreduced
// where the source is unreduced, so transcription fidelity and mathematical
// correctness stay separately observable.

#ifndef ORTEGA_CORPUS_HPP_
#define ORTEGA_CORPUS_HPP_

#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ortega/corpus_data.hpp"
#include "ortega/engine.hpp"
#include "ortega/oracle.hpp"
#include "ortega/rational.hpp"
#include "ortega/seeds.hpp"

namespace ortega {

enum class FindingStatus { ExactMatch, MatchAfterReduction, KnownErratum, Mismatch };

inline const char* to_string(FindingStatus s) {
  switch (s) {
    case FindingStatus::ExactMatch: return "exact";
    case FindingStatus::MatchAfterReduction: return "reduced-match";
    case FindingStatus::KnownErratum: return "known-erratum";
    case FindingStatus::Mismatch: return "MISMATCH";
  }
  return "?";
}

struct Finding {
  FindingStatus status;
  std::string location;
  std::string expected;
  std::string computed;
};

struct Report {
  std::vector<Finding> findings;

  std::size_t count(FindingStatus s) const {
    std::size_t n = 0;
    for (const Finding& f : findings)
      if (f.status == s) ++n;
    return n;
  }
  bool ok() const { return count(FindingStatus::Mismatch) == 0; }

  void add(FindingStatus status, std::string location, std::string expected,
           std::string computed) {
    findings.push_back(Finding{status, std::move(location), std::move(expected),
                               std::move(computed)});
  }
  void merge(const Report& other) {
    findings.insert(findings.end(), other.findings.begin(), other.findings.end());
  }
};

// One row of the editions table: the value printed in the first edition,
// the value the later editions replaced it with, and both remainders.
struct CorpusEntry {
  int id = 0;
  std::string radicand_text;
  RawFraction ed1_value;
  RawFraction ed1_remainder;
  RawFraction ed2_value;
  RawFraction ed2_remainder;
  SeedOrigin seeds = SeedOrigin::Heron;
  std::optional<std::size_t> pub_row;  // trace row holding the ed2 value
  std::optional<std::size_t> opt_row;  // first optimal row when it differs
  bool ed2_optimal = false;
};

struct ChuquetEntry {
  int n = 0;
  RawFraction value;
  RawFraction stated_error;
  SideOfRoot side = SideOfRoot::Above;
  std::optional<Rational> erratum_recomputed;  // set when the printed error is wrong
};

// Seed recipe for a trace fixture.
struct SeedSpec {
  SeedOrigin kind = SeedOrigin::Heron;
  Rational scale_c;  // Scaled: derive from the Chuquet value for sqrt(scale_m)
  BigInt scale_m;
  Rational custom_lower;  // Custom: explicit pair
  Rational custom_upper;
};

struct FixtureRow {
  std::size_t index = 0;
  RawFraction lower;
  RawFraction upper;
  RawFraction upper_error;  // as printed; compared by value
};

struct TraceFixture {
  std::string radicand_text;
  RefinePolicy policy = RefinePolicy::Reduce;
  SeedSpec seeds;
  StopRule stop;
  std::size_t pub_row = 0;
  std::optional<std::size_t> opt_row;
  std::vector<FixtureRow> rows;
};

struct Corpus {
  std::vector<CorpusEntry> entries;
  std::vector<ChuquetEntry> chuquet;
  std::vector<TraceFixture> fixtures;

  const ChuquetEntry* chuquet_upper(const BigInt& n) const {
    for (const ChuquetEntry& e : chuquet)
      if (e.n == n && e.side == SideOfRoot::Above) return &e;
    return nullptr;
  }
};

namespace corpus_detail {

class LoadError : public Error {
 public:
  LoadError(const std::string& what, std::size_t line)
      : Error("corpus line " + std::to_string(line) + ": " + what) {}
};

inline std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = line.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

// Every stored fraction must survive parse -> print unchanged; this is what
// makes the transcription auditable against the printed pages.
inline RawFraction parse_cell(const std::string& text, std::size_t line) {
  RawFraction f;
  try {
    f = RawFraction::parse(text);
  } catch (const Error& e) {
    throw LoadError("bad fraction '" + text + "': " + e.what(), line);
  }
  if (f.str() != text)
    throw LoadError("fraction '" + text + "' does not round-trip (prints as '" +
                    f.str() + "')", line);
  return f;
}

inline std::optional<std::size_t> parse_opt_index(const std::string& text,
                                                  std::size_t line) {
  if (text.empty()) return std::nullopt;
  try {
    return static_cast<std::size_t>(std::stoul(text));
  } catch (...) {
    throw LoadError("bad row index '" + text + "'", line);
  }
}

}  // namespace corpus_detail

// Parses the line-oriented corpus format. Malformed input reports the line
// number.
inline Corpus parse_corpus(std::string_view text) {
  using corpus_detail::LoadError;
  using corpus_detail::parse_cell;
  using corpus_detail::parse_opt_index;
  using corpus_detail::split;

  Corpus corpus;
  enum class Section { None, Editions, Chuquet, Trace };
  Section section = Section::None;
  bool expect_trace_header = false;

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;

    if (line == "[editions]") { section = Section::Editions; continue; }
    if (line == "[chuquet]") { section = Section::Chuquet; continue; }
    if (line == "[trace]") {
      section = Section::Trace;
      expect_trace_header = true;
      continue;
    }
    if (line[0] == '[') throw LoadError("unknown section " + line, lineno);

    std::vector<std::string> fields = split(line, '|');
    switch (section) {
      case Section::None:
        throw LoadError("data before any section header", lineno);

      case Section::Editions: {
        if (fields.size() != 10)
          throw LoadError("editions row needs 10 fields, got " +
                          std::to_string(fields.size()), lineno);
        CorpusEntry e;
        e.id = std::stoi(fields[0]);
        e.radicand_text = fields[1];
        e.ed1_value = parse_cell(fields[2], lineno);
        e.ed1_remainder = parse_cell(fields[3], lineno);
        e.ed2_value = parse_cell(fields[4], lineno);
        e.ed2_remainder = parse_cell(fields[5], lineno);
        if (fields[6] == "heron") e.seeds = SeedOrigin::Heron;
        else if (fields[6] == "integer") e.seeds = SeedOrigin::Integer;
        else throw LoadError("bad seeds kind '" + fields[6] + "'", lineno);
        e.pub_row = parse_opt_index(fields[7], lineno);
        e.opt_row = parse_opt_index(fields[8], lineno);
        if (fields[9] == "yes") e.ed2_optimal = true;
        else if (fields[9] == "no") e.ed2_optimal = false;
        else throw LoadError("bad optimal flag '" + fields[9] + "'", lineno);
        corpus.entries.push_back(std::move(e));
        break;
      }

      case Section::Chuquet: {
        if (fields.size() != 5)
          throw LoadError("chuquet row needs 5 fields, got " +
                          std::to_string(fields.size()), lineno);
        ChuquetEntry e;
        e.n = std::stoi(fields[0]);
        e.value = parse_cell(fields[1], lineno);
        e.stated_error = parse_cell(fields[2], lineno);
        if (fields[3] == "upper") e.side = SideOfRoot::Above;
        else if (fields[3] == "lower") e.side = SideOfRoot::Below;
        else throw LoadError("bad side '" + fields[3] + "'", lineno);
        if (!fields[4].empty())
          e.erratum_recomputed = parse_cell(fields[4], lineno).value();
        corpus.chuquet.push_back(std::move(e));
        break;
      }

      case Section::Trace: {
        if (expect_trace_header) {
          expect_trace_header = false;
          TraceFixture fx;
          bool have_pub = false;
          for (const std::string& field : fields) {
            std::size_t eq = field.find('=');
            if (eq == std::string::npos)
              throw LoadError("trace header field needs key=value: " + field, lineno);
            std::string key = field.substr(0, eq);
            std::string val = field.substr(eq + 1);
            if (key == "radicand") {
              fx.radicand_text = val;
            } else if (key == "policy") {
              if (val == "reduce") fx.policy = RefinePolicy::Reduce;
              else if (val == "raw") fx.policy = RefinePolicy::KeepRaw;
              else throw LoadError("bad policy '" + val + "'", lineno);
            } else if (key == "seeds") {
              if (val == "heron") fx.seeds.kind = SeedOrigin::Heron;
              else if (val == "integer") fx.seeds.kind = SeedOrigin::Integer;
              else if (val.rfind("scaled:", 0) == 0) {
                fx.seeds.kind = SeedOrigin::Scaled;
                std::vector<std::string> parts = split(val.substr(7), ',');
                if (parts.size() != 2) throw LoadError("scaled seeds need c,m", lineno);
                fx.seeds.scale_c = Rational::parse(parts[0]);
                fx.seeds.scale_m = BigInt(parts[1]);
              } else if (val.rfind("custom:", 0) == 0) {
                fx.seeds.kind = SeedOrigin::Custom;
                std::vector<std::string> parts = split(val.substr(7), ',');
                if (parts.size() != 2) throw LoadError("custom seeds need L,U", lineno);
                fx.seeds.custom_lower = Rational::parse(parts[0]);
                fx.seeds.custom_upper = Rational::parse(parts[1]);
              } else {
                throw LoadError("bad seeds '" + val + "'", lineno);
              }
            } else if (key == "stop") {
              if (val == "optimal") fx.stop = StopRule::first_optimal_upper();
              else if (val.rfind("target:", 0) == 0)
                fx.stop = StopRule::target_value(Rational::parse(val.substr(7)));
              else throw LoadError("bad stop rule '" + val + "'", lineno);
            } else if (key == "pub") {
              fx.pub_row = std::stoul(val);
              have_pub = true;
            } else if (key == "opt") {
              fx.opt_row = std::stoul(val);
            } else {
              throw LoadError("unknown trace header key '" + key + "'", lineno);
            }
          }
          if (fx.radicand_text.empty() || !have_pub)
            throw LoadError("trace header missing radicand or pub row", lineno);
          corpus.fixtures.push_back(std::move(fx));
        } else {
          if (corpus.fixtures.empty())
            throw LoadError("trace row before trace header", lineno);
          if (fields.size() != 4)
            throw LoadError("trace row needs 4 fields, got " +
                            std::to_string(fields.size()), lineno);
          FixtureRow row;
          row.index = std::stoul(fields[0]);
          row.lower = parse_cell(fields[1], lineno);
          row.upper = parse_cell(fields[2], lineno);
          row.upper_error = parse_cell(fields[3], lineno);
          TraceFixture& fx = corpus.fixtures.back();
          if (row.index != fx.rows.size() + 1)
            throw LoadError("trace row index out of order", lineno);
          fx.rows.push_back(std::move(row));
        }
        break;
      }
    }
  }

  if (corpus.entries.size() != 16)
    throw LoadError("expected 16 editions entries, got " +
                    std::to_string(corpus.entries.size()), lineno);
  if (corpus.chuquet.size() != 12)
    throw LoadError("expected 12 chuquet rows, got " +
                    std::to_string(corpus.chuquet.size()), lineno);
  if (corpus.fixtures.size() != 17)
    throw LoadError("expected 17 trace fixtures, got " +
                    std::to_string(corpus.fixtures.size()), lineno);
  return corpus;
}

inline Corpus load_corpus() { return parse_corpus(kCorpusText); }

inline Corpus load_corpus_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open corpus file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_corpus(buf.str());
}

namespace corpus_detail {

// Remainder n - x^2 computed on the as-written fraction without reduction:
// (N q^2 - p^2 D) over (D q^2).
inline RawFraction raw_remainder(const RawFraction& x, const Radicand& n) {
  const BigInt& numer = n.value().num();
  const BigInt& denom = n.value().den();
  BigInt top = numer * x.den * x.den - x.num * x.num * denom;
  BigInt bottom = denom * x.den * x.den;
  return RawFraction(top, bottom, FractionForm::Pure);
}

// Exact as written beats equal after reduction beats mismatch.
inline FindingStatus compare_raw(const RawFraction& printed, const RawFraction& computed) {
  if (printed == computed) return FindingStatus::ExactMatch;
  if (printed.value() == computed.value()) return FindingStatus::MatchAfterReduction;
  return FindingStatus::Mismatch;
}

inline SeedPair fixture_seeds(const Corpus& corpus, const TraceFixture& fx,
                              const Radicand& n) {
  switch (fx.seeds.kind) {
    case SeedOrigin::Heron: {
      SeedResult r = heron_bounds(n);
      if (auto* pair = std::get_if<SeedPair>(&r)) return *pair;
      throw Error("fixture radicand " + fx.radicand_text + " is a perfect square");
    }
    case SeedOrigin::Integer: {
      SeedResult r = integer_bounds(n);
      if (auto* pair = std::get_if<SeedPair>(&r)) return *pair;
      throw Error("fixture radicand " + fx.radicand_text + " is a perfect square");
    }
    case SeedOrigin::Scaled: {
      const ChuquetEntry* src = corpus.chuquet_upper(fx.seeds.scale_m);
      if (!src)
        throw Error("no chuquet upper value for sqrt(" + fx.seeds.scale_m.str() + ")");
      Radicand m{Rational(fx.seeds.scale_m)};
      ClassifiedApprox lower =
          reciprocal_scale(fx.seeds.scale_c, m, {src->value.value(), src->side});
      ClassifiedApprox upper = denominator_companion(to_raw(lower.value), n);
      return SeedPair{lower.value, upper.value, SeedOrigin::Scaled};
    }
    case SeedOrigin::Custom:
      return SeedPair{fx.seeds.custom_lower, fx.seeds.custom_upper, SeedOrigin::Custom};
  }
  throw Error("unreachable seed kind");
}

}  // namespace corpus_detail

// Recomputes the editions table: first-edition values from the a + r/(2a+1)
// lower formula (written unreduced, as the formula produces them), both
// remainder columns from the as-printed values, and the optimality census.
inline Report verify_section2(const Corpus& corpus) {
  using corpus_detail::compare_raw;
  using corpus_detail::raw_remainder;

  Report report;
  for (const CorpusEntry& e : corpus.entries) {
    std::string loc = "editions id " + std::to_string(e.id);
    Radicand n = Radicand::parse(e.radicand_text);

    if (e.seeds == SeedOrigin::Heron) {
      // a + r/(2a+1) with integer n: numerator a(2a+1)+r over 2a+1, unreduced.
      const BigInt& a = n.floor_root();
      const Rational& r = n.floor_remainder();
      RawFraction formula(a * (2 * a + 1) * r.den() + r.num(),
                          (2 * a + 1) * r.den(), FractionForm::Mixed);
      report.add(compare_raw(e.ed1_value, formula), loc + " ed1 value",
                 e.ed1_value.str(), formula.str());
    } else {
      // The two radicands with no published lower value: the first-edition
      // value is an upper approximation, unchanged across editions.
      bool same = e.ed1_value == e.ed2_value;
      bool upper = square_compare(e.ed1_value.value(), n) == SideOfRoot::Above;
      report.add(same && upper ? FindingStatus::ExactMatch : FindingStatus::Mismatch,
                 loc + " ed1 value", e.ed1_value.str(),
                 same && upper ? e.ed1_value.str() : "not an unchanged upper value");
    }

    RawFraction rem1 = raw_remainder(e.ed1_value, n);
    report.add(compare_raw(e.ed1_remainder, rem1), loc + " ed1 remainder",
               e.ed1_remainder.str(), rem1.str());
    RawFraction rem2 = raw_remainder(e.ed2_value, n);
    report.add(compare_raw(e.ed2_remainder, rem2), loc + " ed2 remainder",
               e.ed2_remainder.str(), rem2.str());

    bool optimal = is_optimal_upper(e.ed2_value.value(), n);
    report.add(optimal == e.ed2_optimal ? FindingStatus::ExactMatch
                                        : FindingStatus::Mismatch,
               loc + " ed2 optimality", e.ed2_optimal ? "optimal" : "not optimal",
               optimal ? "optimal" : "not optimal");
  }
  return report;
}

// Re-runs every iteration table from its seed recipe and compares each row
// exactly: raw component sums for the unreduced fixture, canonical values
// for the reduced ones. Also checks the published-value row and, where it
// differs, the first-optimal row.
inline Report verify_traces(const Corpus& corpus) {
  Report report;
  for (const TraceFixture& fx : corpus.fixtures) {
    std::string loc = "trace " + fx.radicand_text +
                      (fx.policy == RefinePolicy::KeepRaw ? " (raw)" : "");
    Radicand n = Radicand::parse(fx.radicand_text);

    SeedPair seeds;
    try {
      seeds = corpus_detail::fixture_seeds(corpus, fx, n);
    } catch (const Error& e) {
      report.add(FindingStatus::Mismatch, loc + " seeds", "seed pair", e.what());
      continue;
    }

    Trace trace = refine(n, seeds, fx.policy, fx.stop);
    if (trace.termination == Termination::Incomplete) {
      report.add(FindingStatus::Mismatch, loc, "terminating run", "safety cap hit");
      continue;
    }
    if (trace.rows.size() != fx.rows.size()) {
      report.add(FindingStatus::Mismatch, loc + " length",
                 std::to_string(fx.rows.size()) + " rows",
                 std::to_string(trace.rows.size()) + " rows");
      continue;
    }

    for (std::size_t i = 0; i < fx.rows.size(); ++i) {
      const FixtureRow& want = fx.rows[i];
      const TraceRow& got = trace.rows[i];
      bool bounds_match =
          fx.policy == RefinePolicy::KeepRaw
              ? want.lower == got.lower && want.upper == got.upper
              : want.lower.value() == got.lower.value() &&
                    want.upper.value() == got.upper.value();
      bool err_match = want.upper_error.value() == got.upper_error;
      report.add(bounds_match && err_match ? FindingStatus::ExactMatch
                                           : FindingStatus::Mismatch,
                 loc + " row " + std::to_string(want.index),
                 want.lower.str() + " | " + want.upper.str() + " | " +
                     want.upper_error.str(),
                 got.lower.str() + " | " + got.upper.str() + " | " +
                     got.upper_error.str());
    }

    // Published value sits at the declared row: byte-for-byte for the raw
    // fixture, canonically for the reduced ones (the reduced table holds
    // 44+189/262 where the editions print 44+2079/2882).
    const CorpusEntry* entry = nullptr;
    for (const CorpusEntry& e : corpus.entries)
      if (e.radicand_text == fx.radicand_text) entry = &e;
    if (entry && fx.pub_row >= 1 && fx.pub_row <= trace.rows.size()) {
      const RawFraction& at_pub = trace.rows[fx.pub_row - 1].upper;
      bool match = fx.policy == RefinePolicy::KeepRaw
                       ? at_pub == entry->ed2_value
                       : at_pub.value() == entry->ed2_value.value();
      FindingStatus status = FindingStatus::Mismatch;
      if (match)
        status = at_pub == entry->ed2_value ? FindingStatus::ExactMatch
                                            : FindingStatus::MatchAfterReduction;
      report.add(status, loc + " published row " + std::to_string(fx.pub_row),
                 entry->ed2_value.str(), at_pub.str());
    } else {
      report.add(FindingStatus::Mismatch, loc + " published row",
                 "row " + std::to_string(fx.pub_row), "out of range or no entry");
    }

    if (fx.opt_row) {
      bool at_end = *fx.opt_row == trace.rows.size() &&
                    trace.termination == Termination::OptimalUpperFound &&
                    is_optimal_upper(trace.rows.back().upper.value(), n);
      report.add(at_end ? FindingStatus::ExactMatch : FindingStatus::Mismatch,
                 loc + " first optimal row",
                 "row " + std::to_string(*fx.opt_row),
                 "row " + std::to_string(trace.rows.size()) + " (" +
                     to_string(trace.termination) + ")");
    }
  }
  return report;
}

// The Chuquet root table: every printed value must be reached by the
// mediant iteration from integer seeds on the printed side, and its error
// column must recompute exactly except for the flagged errata.
inline Report verify_chuquet(const Corpus& corpus) {
  Report report;
  for (const ChuquetEntry& e : corpus.chuquet) {
    std::string loc = "chuquet n=" + std::to_string(e.n) +
                      (e.side == SideOfRoot::Below ? " (lower)" : "");
    Radicand n{Rational(BigInt(e.n))};
    Rational target = e.value.value();

    SeedResult sr = integer_bounds(n);
    auto* pair = std::get_if<SeedPair>(&sr);
    if (!pair) {
      report.add(FindingStatus::Mismatch, loc, "non-square n", "perfect square");
      continue;
    }
    Trace trace = refine(n, *pair, RefinePolicy::Reduce, StopRule::target_value(target));
    const TraceRow& last = trace.rows.back();
    bool reached = trace.termination == Termination::TargetReached;
    bool on_side = reached && (e.side == SideOfRoot::Above
                                   ? last.upper.value() == target
                                   : last.lower.value() == target);
    report.add(on_side ? FindingStatus::ExactMatch : FindingStatus::Mismatch,
               loc + " value reached", e.value.str(),
               reached ? "row " + std::to_string(last.index)
                       : "not reached before cap");

    Rational recomputed = upper_error(target, n);
    if (recomputed == e.stated_error.value()) {
      report.add(FindingStatus::ExactMatch, loc + " error", e.stated_error.str(),
                 recomputed.str());
    } else if (e.erratum_recomputed && recomputed == *e.erratum_recomputed) {
      report.add(FindingStatus::KnownErratum, loc + " error",
                 e.stated_error.str() + " as printed", recomputed.str());
    } else {
      report.add(FindingStatus::Mismatch, loc + " error", e.stated_error.str(),
                 recomputed.str());
    }
  }
  return report;
}

// The scaled derivation of the unreduced table, end to end: Chuquet's
// sqrt(5) value, reciprocal scaling by 100, the denominator companion, and
// the fact that every mediant before row 63 lands on the upper side.
inline Report verify_appendix3(const Corpus& corpus) {
  Report report;
  const TraceFixture* fx = nullptr;
  for (const TraceFixture& f : corpus.fixtures)
    if (f.policy == RefinePolicy::KeepRaw && f.seeds.kind == SeedOrigin::Scaled)
      fx = &f;
  if (!fx) {
    report.add(FindingStatus::Mismatch, "scaled trace", "one raw scaled fixture",
               "none found");
    return report;
  }
  std::string loc = "scaled " + fx->radicand_text;
  Radicand n = Radicand::parse(fx->radicand_text);

  const ChuquetEntry* src = corpus.chuquet_upper(fx->seeds.scale_m);
  if (!src) {
    report.add(FindingStatus::Mismatch, loc + " source",
               "chuquet value for sqrt(" + fx->seeds.scale_m.str() + ")", "missing");
    return report;
  }

  Radicand m{Rational(fx->seeds.scale_m)};
  ClassifiedApprox lower =
      reciprocal_scale(fx->seeds.scale_c, m, {src->value.value(), src->side});
  const FixtureRow& seed_row = fx->rows.front();
  report.add(lower.value == seed_row.lower.value() && lower.side == SideOfRoot::Below
                 ? FindingStatus::ExactMatch
                 : FindingStatus::Mismatch,
             loc + " seed lower", seed_row.lower.str(),
             lower.value.str() + " (" + to_string(lower.side) + ")");

  ClassifiedApprox upper = denominator_companion(to_raw(lower.value), n);
  report.add(upper.value == seed_row.upper.value() && upper.side == SideOfRoot::Above
                 ? FindingStatus::ExactMatch
                 : FindingStatus::Mismatch,
             loc + " seed upper", seed_row.upper.str(),
             upper.value.str() + " (" + to_string(upper.side) + ")");

  Trace trace = refine(n, SeedPair{lower.value, upper.value, SeedOrigin::Scaled},
                       RefinePolicy::KeepRaw, fx->stop);

  // Every mediant up to the first lower update is classified above the root.
  std::size_t first_lower = 0;
  for (const TraceRow& row : trace.rows)
    if (row.updated == RowUpdate::LowerUpdated) {
      first_lower = row.index;
      break;
    }
  bool all_upper_before = true;
  for (const TraceRow& row : trace.rows)
    if (row.index > 1 && row.index < first_lower &&
        row.updated != RowUpdate::UpperUpdated)
      all_upper_before = false;
  std::size_t fixture_first_lower = 0;
  for (const FixtureRow& row : fx->rows)
    if (row.index > 1 && row.lower.value() != fx->rows.front().lower.value()) {
      fixture_first_lower = row.index;
      break;
    }
  report.add(all_upper_before && first_lower == fixture_first_lower
                 ? FindingStatus::ExactMatch
                 : FindingStatus::Mismatch,
             loc + " first lower update",
             "row " + std::to_string(fixture_first_lower),
             "row " + std::to_string(first_lower));

  auto check_row = [&](std::size_t index, const char* what) {
    if (index < 1 || index > trace.rows.size() || index > fx->rows.size()) {
      report.add(FindingStatus::Mismatch, loc + " " + what, "row in range",
                 "row " + std::to_string(index) + " out of range");
      return;
    }
    const RawFraction& got = trace.rows[index - 1].upper;
    const RawFraction& want = fx->rows[index - 1].upper;
    report.add(want == got ? FindingStatus::ExactMatch : FindingStatus::Mismatch,
               loc + " " + what + " (row " + std::to_string(index) + ")",
               want.str(), got.str());
  };
  check_row(fx->pub_row, "published value");
  if (fx->opt_row) {
    check_row(*fx->opt_row, "first optimal value");
    bool terminated_there = trace.rows.size() == *fx->opt_row &&
                            trace.termination == Termination::OptimalUpperFound;
    report.add(terminated_there ? FindingStatus::ExactMatch : FindingStatus::Mismatch,
               loc + " termination", "optimal upper at row " + std::to_string(*fx->opt_row),
               std::string(to_string(trace.termination)) + " at row " +
                   std::to_string(trace.rows.size()));
  }
  return report;
}

inline Report verify_all(const Corpus& corpus) {
  Report report;
  report.merge(verify_section2(corpus));
  report.merge(verify_traces(corpus));
  report.merge(verify_chuquet(corpus));
  report.merge(verify_appendix3(corpus));
  return report;
}

// Plain-text rendering: summary counts plus one line per finding that is
// not an exact match.
inline std::string render_report_text(const Report& report, bool verbose = false) {
  std::string out;
  for (const Finding& f : report.findings) {
    if (!verbose && f.status == FindingStatus::ExactMatch) continue;
    out += "[";
    out += to_string(f.status);
    out += "] ";
    out += f.location;
    out += ": expected ";
    out += f.expected;
    out += ", computed ";
    out += f.computed;
    out += "\n";
  }
  out += std::to_string(report.findings.size()) + " checks, " +
         std::to_string(report.count(FindingStatus::ExactMatch)) + " exact, " +
         std::to_string(report.count(FindingStatus::MatchAfterReduction)) +
         " after reduction, " + std::to_string(report.count(FindingStatus::KnownErratum)) +
         " known errata, " + std::to_string(report.count(FindingStatus::Mismatch)) +
         " mismatches\n";
  return out;
}

inline std::string render_report_csv(const Report& report) {
  std::string out = "status,location,expected,computed\n";
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += "\"\"";
      else q += c;
    }
    q += "\"";
    return q;
  };
  for (const Finding& f : report.findings) {
    out += to_string(f.status);
    out += ",";
    out += quote(f.location);
    out += ",";
    out += quote(f.expected);
    out += ",";
    out += quote(f.computed);
    out += "\n";
  }
  return out;
}

}  // namespace ortega

#endif  // ORTEGA_CORPUS_HPP_
